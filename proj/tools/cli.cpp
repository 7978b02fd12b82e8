#include "cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hurwitz/bounds.hpp"
#include "hurwitz/constructions.hpp"
#include "hurwitz/enumeration.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/lattice.hpp"
#include "hurwitz/quaternion.hpp"
#include "hurwitz/selfcheck.hpp"

namespace hurwitz::cli {

namespace {

std::string real12(const Real& x) { return format_real(x, 12); }

std::string coords_str(const std::array<Integer, 4>& c) {
  std::ostringstream os;
  os << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
  return os.str();
}

int do_units(std::ostream& out) {
  const auto& units = hurwitz_units();
  out << "unit group of the Hurwitz order: " << units.size() << " elements\n";
  for (std::size_t i = 0; i < units.size(); ++i)
    out << std::setw(2) << i << "  coords{1,i,j,w}=" << coords_str(units[i].coords())
        << "  " << units[i].to_quaternion().str() << "\n";
  bool norms = true;
  for (const auto& u : units) norms = norms && u.norm() == 1;
  bool closed = true;
  for (const auto& u : units)
    for (const auto& v : units) {
      const HurwitzInteger p = u * v;
      bool found = false;
      for (const auto& w : units) found = found || w == p;
      closed = closed && found;
    }
  out << "all norms equal 1: " << (norms ? "yes" : "NO") << "\n";
  out << "closed under multiplication: " << (closed ? "yes" : "NO") << "\n";
  return norms && closed ? 0 : 1;
}

int do_bounds(int m_min, int m_max, const std::string& format,
              std::ostream& out) {
  const BoundTable table = make_bound_table(m_min, m_max);
  if (format == "csv")
    write_csv(table, out);
  else
    write_table(table, out);
  return 0;
}

void print_witness(const HurwitzLattice& lattice, const LatticeVector& v,
                   int index, std::ostream& out) {
  out << "witness " << index << ": z=(";
  for (std::size_t i = 0; i < v.z.size(); ++i)
    out << (i ? "," : "") << v.z[i];
  out << ") ambient=[";
  for (std::size_t c = 0; c < v.ambient.size(); ++c)
    out << (c ? "; " : "") << v.ambient[c].str();
  out << "] length=" << real12(lattice.length(v))
      << " norm_sq=" << format_rational(v.norm_sq) << "\n";
}

int do_analyze(const std::string& file, const EnumerationOptions& opts,
               std::ostream& out) {
  const HurwitzLattice lattice = HurwitzLattice::load_file(file);
  const MinimaReport rep = quaternionic_minima(lattice, opts);
  out << "m: " << lattice.rank() << "\n";
  out << "determinant: " << real12(lattice.determinant());
  if (cmp(lattice.scale(), Rational(1)) == 0)
    out << " (exact " << format_rational(lattice.skeleton_determinant()) << ")";
  out << "\n";
  out << "minima:";
  for (const Real& m : rep.minima) out << " " << real12(m);
  out << "\n";
  out << "minima product: " << real12(rep.product()) << "\n";
  const long n_min = vector_count_at(lattice, rep.norms_sq[0], opts);
  out << "minimal vectors: " << n_min
      << " (divisible by 24: " << (n_min % 24 == 0 ? "yes" : "no") << ")\n";
  out << "density: " << real12(lattice.density(rep.minima[0])) << "\n";
  return 0;
}

int do_minima(const std::string& file, const EnumerationOptions& opts,
              std::ostream& out) {
  const HurwitzLattice lattice = HurwitzLattice::load_file(file);
  const MinimaReport rep = quaternionic_minima(lattice, opts);
  out << "m: " << lattice.rank() << "\n";
  out << "minima:";
  for (const Real& m : rep.minima) out << " " << real12(m);
  out << "\n";
  out << "exact norms_sq:";
  for (const Rational& q : rep.norms_sq) out << " " << format_rational(q);
  out << "\n";
  for (std::size_t i = 0; i < rep.witnesses.size(); ++i)
    print_witness(lattice, rep.witnesses[i], static_cast<int>(i) + 1, out);
  const long n_min = vector_count_at(lattice, rep.norms_sq[0], opts);
  out << "minimal vectors: " << n_min
      << " (divisible by 24: " << (n_min % 24 == 0 ? "yes" : "no") << ")\n";
  return 0;
}

int do_rescale(const std::string& file, const std::string& out_file,
               const EnumerationOptions& opts, std::ostream& out) {
  const HurwitzLattice lattice = HurwitzLattice::load_file(file);
  const RescaleResult res = rescale_balanced(lattice, opts);
  out << "input determinant: " << real12(lattice.determinant()) << "\n";
  out << "input minima:";
  for (const Real& m : res.input_minima.minima) out << " " << real12(m);
  out << "\n";
  out << "minima product: " << real12(res.minima_product) << "\n";
  out << "target shortest length: " << real12(res.target_min) << "\n";
  out << "output determinant: " << real12(res.lattice.determinant()) << "\n";
  const MinimaReport after = quaternionic_minima(res.lattice, opts);
  out << "output minima:";
  for (const Real& m : after.minima) out << " " << real12(m);
  out << "\n";
  if (!out_file.empty()) {
    res.lattice.save_file(out_file);
    out << "lattice written: " << out_file << "\n";
  } else {
    res.lattice.save(out);
  }
  return 0;
}

int do_search_hlawka(int m, const std::string& radius_text,
                     const std::string& integral_text,
                     const std::string& height_text, bool primitive,
                     int samples, std::uint64_t seed,
                     const std::string& out_file,
                     const EnumerationOptions& opts, std::ostream& out) {
  Real radius;
  if (!radius_text.empty()) {
    radius = parse_decimal(radius_text);
  } else {
    const Real target = parse_decimal(integral_text);
    if (!(target > 0)) throw DomainError("target integral must be positive");
    radius = pow(target / ball_volume(4 * m).value(), Real(1) / (4 * m));
  }
  const TestFunction f = TestFunction::ball(radius);
  const AveragingSetup setup =
      height_text.empty()
          ? choose_averaging_setup(m, f, f.integral(m) / 100, opts)
          : make_averaging_setup(m, parse_rational(height_text));
  const HlawkaReport rep =
      hlawka_search(setup, f, samples, seed, primitive, opts);

  const bool success = rep.best_sum < rep.integral + rep.epsilon;
  nlohmann::json j;
  j["m"] = rep.m;
  j["seed"] = rep.seed;
  j["samples"] = rep.samples;
  j["primitive"] = rep.primitive_only;
  j["height"] = format_rational(rep.height);
  j["alpha"] = real12(rep.true_height);
  j["radius"] = real12(radius);
  j["integral"] = real12(rep.integral);
  j["epsilon"] = real12(rep.epsilon);
  j["prediction"] = real12(rep.prediction);
  j["mean"] = real12(rep.mean);
  j["stddev"] = real12(rep.stddev);
  j["sum"] = real12(rep.best_sum);
  nlohmann::json coords = nlohmann::json::array();
  for (const Rational& c : rep.best_coords) coords.push_back(format_rational(c));
  j["best_coords"] = std::move(coords);
  if (!out_file.empty() && success) {
    rep.best.result.save_file(out_file);
    j["lattice_file"] = out_file;
  } else {
    j["lattice_file"] = nullptr;
  }
  out << j.dump(2) << "\n";
  out << "audit: sum <= mean: " << (!(rep.best_sum > rep.mean) ? "yes" : "NO")
      << "\n";
  out << "audit: sum < integral + epsilon: " << (success ? "yes" : "NO")
      << "\n";
  return success ? 0 : 3;
}

int do_search_minima_product(int m, const std::string& radius_text,
                             const std::string& margin_text, int samples,
                             std::uint64_t seed, const std::string& out_file,
                             const EnumerationOptions& opts,
                             std::ostream& out) {
  Real r;
  if (!radius_text.empty()) {
    r = parse_decimal(radius_text);
  } else {
    const Real margin = parse_decimal(margin_text);
    if (!(margin > 0) || !(margin < 1))
      throw DomainError("margin must lie in (0, 1)");
    r = margin * rho_radius_threshold(m);
  }
  const MinimaProductReport rep =
      minima_product_search(m, r, samples, seed, opts);

  nlohmann::json j;
  j["m"] = rep.m;
  j["seed"] = rep.search.seed;
  j["samples"] = rep.search.samples;
  j["r"] = real12(rep.r);
  j["threshold_radius"] = real12(rep.threshold_radius);
  j["height"] = format_rational(rep.search.height);
  j["alpha"] = real12(rep.search.true_height);
  j["integral"] = real12(rep.search.integral);
  j["prediction"] = real12(rep.search.prediction);
  j["mean"] = real12(rep.search.mean);
  j["sum"] = real12(rep.search.best_sum);
  j["sum_below_six"] = rep.sum_below_six;
  nlohmann::json minima = nlohmann::json::array();
  for (const Real& x : rep.minima.minima) minima.push_back(real12(x));
  j["minima"] = std::move(minima);
  j["product"] = real12(rep.minima_product);
  j["product_target"] = real12(rep.product_target);
  j["product_exceeds_target"] = rep.product_exceeds_target;
  j["orbit_inequality"] = rep.orbit_inequality_ok;
  j["density"] = real12(rep.density);
  j["density_bound"] = real12(rep.density_bound);
  j["success"] = rep.success;
  if (!out_file.empty() && rep.success) {
    rep.search.best.result.save_file(out_file);
    j["lattice_file"] = out_file;
  } else {
    j["lattice_file"] = nullptr;
  }
  out << j.dump(2) << "\n";
  return rep.success ? 0 : 3;
}

int do_search_convex_body(int m, const std::string& body_name,
                          const std::string& margin_text, int samples,
                          std::uint64_t seed, const std::string& out_file,
                          const EnumerationOptions& opts, std::ostream& out) {
  const Real eps = parse_decimal(margin_text);
  const ConvexBody body = body_name == "coordinate-sum"
                              ? coordinate_sum_body(m, Real(1))
                              : ball_body(m, Real(1));
  const ConvexBodyReport rep =
      convex_body_search(body, m, eps, samples, seed, opts);

  nlohmann::json j;
  j["m"] = rep.m;
  j["seed"] = rep.seed;
  j["samples"] = rep.samples;
  j["body"] = rep.body_name;
  j["dilation"] = real12(rep.dilation);
  j["target_volume"] = real12(rep.target_volume);
  j["mean_primitive_count"] = real12(rep.mean_primitive_count);
  j["best_count"] = rep.best_count;
  j["found_at"] = rep.found_at;
  j["density"] = real12(rep.density);
  j["nominal_density"] = real12(rep.nominal_density);
  j["success"] = rep.success;
  if (!out_file.empty() && rep.success) {
    rep.best.result.save_file(out_file);
    j["lattice_file"] = out_file;
  } else {
    j["lattice_file"] = nullptr;
  }
  out << j.dump(2) << "\n";
  return rep.success ? 0 : 3;
}

int do_verify(const std::string& suite, std::ostream& out) {
  std::vector<CheckResult> results;
  if (suite == "quat")
    results = verify_quat();
  else if (suite == "lattice")
    results = verify_lattice();
  else if (suite == "minima")
    results = verify_minima();
  else if (suite == "construct")
    results = verify_construct();
  else if (suite == "bounds")
    results = verify_bounds();
  else
    results = verify_all();
  int passed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
      out << "ok   " << r.name << "\n";
    } else {
      out << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail)
          << "\n";
    }
  }
  out << "passed " << passed << "/" << results.size() << "\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hurwitz quaternion lattice toolkit"};
  app.require_subcommand(1);

  unsigned prec = 128;
  std::uint64_t seed = 1;
  std::string format = "table";
  std::uint64_t capacity = 10'000'000;
  app.add_option("--prec", prec, "working precision in bits")
      ->check(CLI::Range(24u, 1u << 20));
  app.add_option("--seed", seed, "random seed");
  app.add_option("--format", format, "output format for tables")
      ->check(CLI::IsMember({"table", "csv"}));
  app.add_option("--capacity", capacity, "enumeration vector budget");

  auto* units_cmd =
      app.add_subcommand("units", "list the 24 units and check closure");

  int m_min = 2, m_max = 8;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "emit the lower-bound comparison table");
  bounds_cmd->add_option("--m-min", m_min, "first quaternionic rank")
      ->check(CLI::Range(2, 1 << 20));
  bounds_cmd->add_option("--m-max", m_max, "last quaternionic rank")
      ->check(CLI::Range(2, 1 << 20));

  std::string analyze_file;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "determinant, minima and density");
  analyze_cmd->add_option("file", analyze_file, "lattice document")->required();

  std::string minima_file;
  auto* minima_cmd =
      app.add_subcommand("minima", "successive minima with witnesses");
  minima_cmd->add_option("file", minima_file, "lattice document")->required();

  std::string rescale_file, rescale_out;
  auto* rescale_cmd = app.add_subcommand(
      "rescale", "balanced determinant-one rescaling of a lattice");
  rescale_cmd->add_option("file", rescale_file, "lattice document")->required();
  rescale_cmd->add_option("-o,--output", rescale_out, "output lattice file");

  auto* search_cmd = app.add_subcommand("search", "randomized constructions");
  search_cmd->require_subcommand(1);

  int hl_m = 2, hl_samples = 10000;
  std::string hl_radius, hl_integral = "20", hl_height, hl_out;
  bool hl_primitive = false;
  auto* hlawka_cmd = search_cmd->add_subcommand(
      "hlawka", "minimize a ball-indicator lattice sum over lifts");
  hlawka_cmd->add_option("--m", hl_m, "quaternionic rank")
      ->check(CLI::Range(2, 64));
  auto* hl_r_opt =
      hlawka_cmd->add_option("--ball-radius", hl_radius, "support radius");
  hlawka_cmd
      ->add_option("--target-integral", hl_integral,
                   "choose the radius so the ball volume hits this")
      ->excludes(hl_r_opt);
  hlawka_cmd->add_option("--height", hl_height,
                         "pre-scale lift height as a rational");
  hlawka_cmd->add_flag("--primitive", hl_primitive,
                       "restrict sums to primitive vectors");
  hlawka_cmd->add_option("--samples", hl_samples, "number of random lifts")
      ->check(CLI::Range(2, 100000000));
  hlawka_cmd->add_option("-o,--output", hl_out, "witness lattice file");

  int mp_m = 2, mp_samples = 10000;
  std::string mp_radius, mp_margin = "0.95", mp_out;
  auto* mp_cmd = search_cmd->add_subcommand(
      "minima-product", "find a lattice with large minima product");
  mp_cmd->add_option("--m", mp_m, "quaternionic rank")->check(CLI::Range(2, 64));
  auto* mp_r_opt = mp_cmd->add_option("--radius", mp_radius, "rho radius");
  mp_cmd
      ->add_option("--margin", mp_margin,
                   "radius as a fraction of the threshold radius")
      ->excludes(mp_r_opt);
  mp_cmd->add_option("--samples", mp_samples, "number of random lifts")
      ->check(CLI::Range(2, 100000000));
  mp_cmd->add_option("-o,--output", mp_out, "witness lattice file");

  int cb_m = 2, cb_samples = 2000;
  std::string cb_body = "ball", cb_margin = "1", cb_out;
  auto* cb_cmd = search_cmd->add_subcommand(
      "convex-body", "find a lift avoiding a unit-invariant convex body");
  cb_cmd->add_option("--m", cb_m, "quaternionic rank")->check(CLI::Range(2, 64));
  cb_cmd->add_option("--body", cb_body, "body shape")
      ->check(CLI::IsMember({"ball", "coordinate-sum"}));
  cb_cmd->add_option("--margin-volume", cb_margin,
                     "volume margin eps in (0, 24)");
  cb_cmd->add_option("--samples", cb_samples, "number of random lifts")
      ->check(CLI::Range(1, 100000000));
  cb_cmd->add_option("-o,--output", cb_out, "witness lattice file");

  std::string suite = "all";
  auto* verify_cmd =
      app.add_subcommand("verify", "run the built-in property suites");
  verify_cmd->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember(
          {"quat", "lattice", "minima", "construct", "bounds", "all"}));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hurwitz-tool");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    set_precision_bits(prec);
    EnumerationOptions opts;
    opts.max_vectors = capacity;

    if (*units_cmd) return do_units(out);
    if (*bounds_cmd) {
      if (m_max < m_min) {
        err << "usage error: --m-max must be at least --m-min\n";
        return 2;
      }
      return do_bounds(m_min, m_max, format, out);
    }
    if (*analyze_cmd) return do_analyze(analyze_file, opts, out);
    if (*minima_cmd) return do_minima(minima_file, opts, out);
    if (*rescale_cmd) return do_rescale(rescale_file, rescale_out, opts, out);
    if (*search_cmd) {
      if (*hlawka_cmd)
        return do_search_hlawka(hl_m, hl_radius, hl_integral, hl_height,
                                hl_primitive, hl_samples, seed, hl_out, opts,
                                out);
      if (*mp_cmd)
        return do_search_minima_product(mp_m, mp_radius, mp_margin, mp_samples,
                                        seed, mp_out, opts, out);
      if (*cb_cmd)
        return do_search_convex_body(cb_m, cb_body, cb_margin, cb_samples, seed,
                                     cb_out, opts, out);
    }
    if (*verify_cmd) return do_verify(suite, out);
    err << "usage error: no subcommand selected\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hurwitz::cli
