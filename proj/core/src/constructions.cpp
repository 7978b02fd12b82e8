#include "hurwitz/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "hurwitz/bounds.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/rng.hpp"

namespace hurwitz {

// ---------------------------------------------------------------- test
// functions

TestFunction TestFunction::ball(Real radius) {
  if (!(radius > 0)) throw DomainError("ball radius must be positive");
  TestFunction f;
  f.kind_ = Kind::Ball;
  f.param_ = radius;
  f.support_ = std::move(radius);
  return f;
}

TestFunction TestFunction::rho(Real r, int m) {
  if (!(r > 0)) throw DomainError("rho radius must be positive");
  if (m < 1) throw DomainError("rho needs rank m >= 1");
  TestFunction f;
  f.kind_ = Kind::Rho;
  f.m_ = m;
  f.support_ = r * exp(Real(1) / (4 * m));
  f.param_ = std::move(r);
  return f;
}

TestFunction TestFunction::mobius_smoothed(const TestFunction& f, Real delta) {
  if (f.kind_ == Kind::MobiusSmoothed)
    throw DomainError("refusing to smooth an already smoothed function");
  if (!(delta > 0) || !(delta < f.support_radius()))
    throw DomainError("smoothing width must lie in (0, support radius)");
  TestFunction g;
  g.kind_ = Kind::MobiusSmoothed;
  g.m_ = f.m_;
  g.param_ = f.param_;
  g.support_ = f.support_;
  g.delta_ = std::move(delta);
  g.inner_ = std::make_shared<TestFunction>(f);
  return g;
}

Real TestFunction::sup_value() const {
  switch (kind_) {
    case Kind::Ball:
      return Real(1);
    case Kind::Rho:
      return Real(1) / 4;
    case Kind::MobiusSmoothed:
      return inner_->sup_value();
  }
  throw DomainError("unknown test function kind");
}

Real TestFunction::operator()(const Real& length) const {
  if (length < 0) throw DomainError("test functions take non-negative lengths");
  switch (kind_) {
    case Kind::Ball:
      return length <= param_ ? Real(1) : Real(0);
    case Kind::Rho:
      return rho_value(length, param_, m_);
    case Kind::MobiusSmoothed: {
      if (length < delta_) return inner_->sup_value();
      if (length > support_) return Real(0);
      const Real ratio = floor(support_ / length);
      const auto kmax = ratio.convert_to<unsigned long>();
      Real s = 0;
      for (unsigned long k = 1; k <= kmax; ++k) {
        const int mu = mobius(k);
        if (mu != 0) s += mu * (*inner_)(k * length);
      }
      return s;
    }
  }
  throw DomainError("unknown test function kind");
}

Real TestFunction::integral(int m) const {
  if (m < 1) throw DomainError("integral needs rank m >= 1");
  switch (kind_) {
    case Kind::Ball:
      return ball_volume(4 * m).value() * pow(param_, 4 * m);
    case Kind::Rho:
      if (m != m_)
        throw DomainError("rho integral requested at a different rank");
      return rho_integral(param_, m_);
    case Kind::MobiusSmoothed:
      throw DomainError("no closed-form integral for smoothed functions");
  }
  throw DomainError("unknown test function kind");
}

std::vector<Real> TestFunction::breakpoints() const {
  switch (kind_) {
    case Kind::Ball:
      return {param_};
    case Kind::Rho:
      return {param_ * exp(Real(1 - m_) / (4 * m_)), support_};
    case Kind::MobiusSmoothed: {
      std::vector<Real> pts = {delta_};
      for (const Real& b : inner_->breakpoints()) {
        const auto kmax = Real(floor(b / delta_)).convert_to<unsigned long>();
        for (unsigned long k = 1; k <= kmax; ++k) {
          const Real p = b / k;
          if (p > delta_ && p <= support_) pts.push_back(p);
        }
      }
      std::sort(pts.begin(), pts.end());
      return pts;
    }
  }
  throw DomainError("unknown test function kind");
}

Real rho_value(const Real& length, const Real& r, int m) {
  if (!(r > 0)) throw DomainError("rho radius must be positive");
  if (m < 1) throw DomainError("rho needs rank m >= 1");
  if (length < 0) throw DomainError("rho takes non-negative lengths");
  const Real inner = r * exp(Real(1 - m) / (4 * m));
  if (length <= inner) return Real(1) / 4;
  const Real outer = r * exp(Real(1) / (4 * m));
  if (length >= outer) return Real(0);
  return Real(1) / (4 * m) - log(length / r);
}

Real rho_integral(const Real& r, int m) {
  if (!(r > 0)) throw DomainError("rho radius must be positive");
  if (m < 1) throw DomainError("rho needs rank m >= 1");
  return pow(r, 4 * m) * ball_volume(4 * m).value() * real_e() *
         (1 - exp(Real(-m))) / (4 * m);
}

Real rho_radius_threshold(int m) {
  if (m < 1) throw DomainError("threshold radius needs m >= 1");
  const Real num = 24 * m * zeta(Real(4 * m));
  const Real den = real_e() * (1 - exp(Real(-m))) * ball_volume(4 * m).value();
  return pow(num / den, Real(1) / (4 * m));
}

Real max_smoothing_delta(const TestFunction& f, int m, const Real& eps) {
  if (m < 1) throw DomainError("max_smoothing_delta needs m >= 1");
  if (!(eps > 0)) throw DomainError("eps must be positive");
  return pow(eps / (2 * f.sup_value() * ball_volume(4 * m).value()),
             Real(1) / (4 * m));
}

// ------------------------------------------------------- orthogonalization

QuaternionR hermitian_inner(const std::vector<QuaternionR>& x,
                            const std::vector<QuaternionR>& y) {
  if (x.size() != y.size())
    throw DomainError("inner product needs vectors of equal length");
  QuaternionR s;
  for (std::size_t t = 0; t < x.size(); ++t) s = s + x[t] * y[t].conj();
  return s;
}

std::vector<std::vector<QuaternionR>> gram_schmidt(
    const std::vector<std::vector<QuaternionR>>& vectors) {
  std::vector<std::vector<QuaternionR>> out;
  if (vectors.empty()) return out;
  const std::size_t m = vectors[0].size();
  const Real tiny = ldexp(Real(1), -static_cast<int>(precision_bits() / 2));
  for (const auto& input : vectors) {
    if (input.size() != m)
      throw DomainError("gram_schmidt needs vectors of equal length");
    std::vector<QuaternionR> v = input;
    Real input_norm = 0;
    for (const auto& q : input) input_norm += q.norm_sq();
    for (const auto& b : out) {
      const QuaternionR c = hermitian_inner(v, b);
      for (std::size_t t = 0; t < m; ++t) v[t] = v[t] - c * b[t];
    }
    Real n2 = 0;
    for (const auto& q : v) n2 += q.norm_sq();
    if (!(n2 > input_norm * tiny * tiny))
      throw DegenerateLatticeError(
          "vectors are H-dependent within working precision");
    const Real inv = 1 / sqrt(n2);
    for (auto& q : v) q = inv * q;
    // Canonical phase: rotate the largest component to the positive reals.
    std::size_t pick = 0;
    Real best = -1;
    for (std::size_t t = 0; t < m; ++t) {
      const Real ns = v[t].norm_sq();
      if (ns > best) {
        best = ns;
        pick = t;
      }
    }
    const QuaternionR lead = v[pick];
    const QuaternionR lambda = (1 / sqrt(lead.norm_sq())) * lead.conj();
    for (auto& q : v) q = lambda * q;
    out.push_back(std::move(v));
  }
  return out;
}

// ------------------------------------------------------------- rescaling

RescaleResult rescale_balanced(const HurwitzLattice& lattice,
                               const EnumerationOptions& options) {
  const int m = lattice.rank();
  if (fabs(lattice.determinant() - 1) > ldexp(Real(1), -40))
    throw DomainError("balanced rescaling expects a determinant-one lattice");

  MinimaReport rep = quaternionic_minima(lattice, options);
  std::vector<std::vector<QuaternionR>> g(m);
  for (int t = 0; t < m; ++t) {
    g[t].resize(m);
    for (int comp = 0; comp < m; ++comp)
      g[t][comp] = lattice.scale() * to_realq(rep.witnesses[t].ambient[comp]);
  }
  const auto b = gram_schmidt(g);

  const Real alpha = rep.product();
  const Real target = pow(alpha, Real(1) / m);

  // Map sum_k x_k b_k to sum_k (x_k / min_k) b_k.  The map is applied to
  // the original basis rows (not the witnesses, which may generate a
  // proper submodule) and the image basis is snapped to dyadic rationals;
  // the global factor alpha^{1/m} rides on the scale.
  std::vector<std::vector<Quaternion>> snapped(m, std::vector<Quaternion>(m));
  for (int t = 0; t < m; ++t) {
    std::vector<QuaternionR> row(m);
    for (int comp = 0; comp < m; ++comp)
      row[comp] = lattice.scale() * to_realq(lattice.basis()[t][comp]);
    std::vector<QuaternionR> img(m);
    for (int k = 0; k < m; ++k) {
      const QuaternionR x = hermitian_inner(row, b[k]);
      const QuaternionR coeff = (1 / rep.minima[k]) * x;
      for (int comp = 0; comp < m; ++comp)
        img[comp] = img[comp] + coeff * b[k][comp];
    }
    for (int comp = 0; comp < m; ++comp)
      snapped[t][comp] =
          Quaternion(snap_dyadic(img[comp].a), snap_dyadic(img[comp].b),
                     snap_dyadic(img[comp].c), snap_dyadic(img[comp].d));
  }
  HurwitzLattice out(m, std::move(snapped), target, lattice.comment());
  return RescaleResult{std::move(out), std::move(rep), alpha, target};
}

// ------------------------------------------------------------------ lifts

LiftedLattice lift(const HurwitzLattice& base, const std::vector<Quaternion>& w,
                   const Rational& height) {
  const int mb = base.rank();
  if (static_cast<int>(w.size()) != mb)
    throw DomainError("translate w must have rank(base) components");
  if (sgn(height) <= 0) throw DomainError("lift height must be positive");
  const int m = mb + 1;
  std::vector<std::vector<Quaternion>> basis(m, std::vector<Quaternion>(m));
  for (int t = 0; t < mb; ++t)
    for (int comp = 0; comp < mb; ++comp) basis[t][comp] = base.basis()[t][comp];
  for (int comp = 0; comp < mb; ++comp) basis[mb][comp] = w[comp];
  basis[mb][mb] = Quaternion(height, 0, 0, 0);
  HurwitzLattice result(m, std::move(basis), base.scale());
  return LiftedLattice{base, w, height, std::move(result)};
}

AveragingSetup make_averaging_setup(int m, const Rational& height) {
  if (m < 2) throw DomainError("averaging setup needs m >= 2");
  if (sgn(height) <= 0) throw DomainError("height must be positive");
  // Scale c with c^{4m} = 2^m / height^4 makes every lift unimodular:
  // the skeleton determinant of a lift is height^4 2^{-m}.
  const Real a = to_real(height);
  const Real c = pow(ldexp(Real(1), m) / pow(a, 4), Real(1) / (4 * m));
  return AveragingSetup{m, HurwitzLattice::standard(m - 1).with_scale(c),
                        height, c * a};
}

AveragingSetup choose_averaging_setup(int m, const TestFunction& f,
                                      const Real& eps,
                                      const EnumerationOptions& options) {
  if (m < 2) throw DomainError("averaging setup needs m >= 2");
  if (!(eps > 0)) throw DomainError("eps must be positive");
  const Real target = f.integral(m);
  Rational a(1);
  for (int step = 0; step < 200; ++step) {
    AveragingSetup setup = make_averaging_setup(m, a);
    if (setup.base.scale() > f.support_radius()) {
      const Real pred = average_prediction(setup, f, options);
      if (pred <= target + eps) return setup;
    }
    a /= 2;
  }
  throw SupportError("no admissible height found after 200 halvings");
}

// -------------------------------------------------------------- sums and
// predictions

Real lattice_sum(const HurwitzLattice& lattice, const TestFunction& f,
                 bool primitive_only, const EnumerationOptions& options) {
  EnumerationOptions opts = options;
  opts.materialize = false;
  const auto vecs = short_vectors(lattice, f.support_radius(), opts);
  if (f.kind() == TestFunction::Kind::Ball) {
    // Every enumerated vector lies in the support ball, so the sum is a
    // plain count.
    long count = 0;
    for (const auto& v : vecs)
      if (!primitive_only || lattice.is_primitive(v)) ++count;
    return Real(count);
  }
  Real sum = 0;
  for (const auto& v : vecs) {
    if (primitive_only && !lattice.is_primitive(v)) continue;
    sum += f(lattice.length(v));
  }
  return sum;
}

namespace {

// Integral of f over the affine slice {(z, h_vec)} with |h_vec| = h, in
// ambient dimension 4m; d = 4(m-1) is the slice dimension.
Real slice_integral(const TestFunction& f, const Real& h, int d) {
  const Real R = f.support_radius();
  const Real rest = R * R - h * h;
  if (!(rest > 0)) return Real(0);
  const Real smax = sqrt(rest);
  if (f.kind() == TestFunction::Kind::Ball)
    return ball_volume(d).value() * pow(rest, d / 2);
  // Radial reduction: d V_d int_0^{smax} f(sqrt(s^2+h^2)) s^{d-1} ds,
  // split at the radial breakpoints.
  const auto integrand = [&](const Real& s) {
    return f(sqrt(s * s + h * h)) * pow(s, d - 1);
  };
  std::vector<Real> cuts = {Real(0)};
  for (const Real& b : f.breakpoints()) {
    const Real b2 = b * b - h * h;
    if (b2 > 0 && sqrt(b2) < smax) cuts.push_back(sqrt(b2));
  }
  cuts.push_back(smax);
  std::sort(cuts.begin(), cuts.end());
  Real integral = 0;
  const Real tol = Real("1e-18");
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    integral += adaptive_simpson(integrand, cuts[i], cuts[i + 1], tol);
  return d * ball_volume(d).value() * integral;
}

std::vector<Quaternion> sample_translate(SampleRng& rng, int m1,
                                         std::vector<Rational>* coords_out) {
  std::vector<Rational> coords(
      static_cast<std::size_t>(4) * static_cast<std::size_t>(m1));
  for (auto& c : coords) c = rng.next_unit_fraction();
  std::vector<Quaternion> w(m1);
  for (int t = 0; t < m1; ++t)
    w[t] = coords[4 * t] * Quaternion::one() +
           coords[4 * t + 1] * Quaternion::unit_i() +
           coords[4 * t + 2] * Quaternion::unit_j() +
           coords[4 * t + 3] * Quaternion::omega();
  if (coords_out) *coords_out = std::move(coords);
  return w;
}

}  // namespace

Real average_prediction(const AveragingSetup& setup, const TestFunction& f,
                        const EnumerationOptions& options) {
  if (f.kind() == TestFunction::Kind::MobiusSmoothed)
    throw DomainError("slice prediction needs a ball or rho function");
  if (f.kind() == TestFunction::Kind::Rho && f.rank() != setup.m)
    throw DomainError("rho rank does not match the setup");
  const int m = setup.m;
  const int d = 4 * (m - 1);
  const Real R = f.support_radius();
  const Real alpha = setup.true_height;
  if (!(alpha < R)) return Real(0);

  EnumerationOptions opts = options;
  opts.materialize = false;
  const auto lambdas =
      short_vectors(HurwitzLattice::standard(1), R / alpha, opts);
  std::map<long, long> shells;  // integer norm -> count
  for (const auto& v : lambdas)
    shells[static_cast<long>(v.norm_sq.get_num().get_si())] += 1;

  Real pred = 0;
  for (const auto& [norm, count] : shells) {
    const Real h = alpha * sqrt(Real(norm));
    pred += count * slice_integral(f, h, d);
  }
  return pred * pow(alpha, 4) / 2;
}

HlawkaReport hlawka_search(const AveragingSetup& setup, const TestFunction& f,
                           int samples, std::uint64_t seed, bool primitive_only,
                           const EnumerationOptions& options) {
  if (samples < 2) throw DomainError("the search needs at least two samples");
  const int m = setup.m;
  if (!(setup.base.scale() > f.support_radius()))
    throw SupportError(
        "base vectors enter the support of f; choose a smaller height");
  const Real integral = f.integral(m);
  const Real eps = integral / 100;
  Real pred = average_prediction(setup, f, options);
  if (primitive_only) pred /= zeta(Real(4 * m));

  Real sum = 0, sum_sq = 0, best_sum = 0;
  std::vector<Rational> best_coords;
  std::optional<LiftedLattice> best;
  for (int idx = 0; idx < samples; ++idx) {
    SampleRng rng(seed, static_cast<std::uint64_t>(idx));
    std::vector<Rational> coords;
    const std::vector<Quaternion> w = sample_translate(rng, m - 1, &coords);
    LiftedLattice lifted = lift(setup.base, w, setup.height);
    const Real s = lattice_sum(lifted.result, f, primitive_only, options);
    sum += s;
    sum_sq += s * s;
    if (!best || s < best_sum) {
      best_sum = s;
      best_coords = std::move(coords);
      best.emplace(std::move(lifted));
    }
  }
  const Real mean = sum / samples;
  Real var = (sum_sq - samples * mean * mean) / (samples - 1);
  if (var < 0) var = 0;
  return HlawkaReport{m,
                      seed,
                      samples,
                      primitive_only,
                      setup.height,
                      setup.true_height,
                      integral,
                      eps,
                      pred,
                      mean,
                      sqrt(var),
                      best_sum,
                      std::move(best_coords),
                      std::move(*best)};
}

MinimaProductReport minima_product_search(int m, const Real& r, int samples,
                                          std::uint64_t seed,
                                          const EnumerationOptions& options) {
  const Real threshold = rho_radius_threshold(m);
  if (!(r > 0) || !(r < threshold))
    throw DomainError(
        "the radius must stay strictly below the rho threshold radius");
  const TestFunction f = TestFunction::rho(r, m);
  AveragingSetup setup =
      choose_averaging_setup(m, f, f.integral(m) / 100, options);
  HlawkaReport search = hlawka_search(setup, f, samples, seed, true, options);

  const bool below = search.best_sum < 6;
  MinimaReport minima;
  Real product = 0;
  const Real target = pow(r, m);
  bool product_ok = false, orbit_ok = false;
  Real density = 0;
  if (below) {
    minima = quaternionic_minima(search.best.result, options);
    product = minima.product();
    product_ok = product > target;
    Real orbit = 0;
    for (const Real& len : minima.minima) orbit += f(len);
    orbit *= 24;
    // The 24 unit multiples of each witness all appear in the primitive
    // sum, so up to accumulation rounding the orbit total cannot exceed it.
    const Real slack = ldexp(Real(1) + fabs(search.best_sum), -90);
    orbit_ok = orbit <= search.best_sum + slack;
    density = pow(product, 4) * ball_volume(4 * m).value() /
              (pow(Real(2), 4 * m) * search.best.result.determinant());
  }
  const bool success = below && product_ok && orbit_ok;
  return MinimaProductReport{m,
                             r,
                             threshold,
                             std::move(search),
                             below,
                             std::move(minima),
                             product,
                             target,
                             product_ok,
                             orbit_ok,
                             density,
                             hurwitz_bound(m),
                             success};
}

// ----------------------------------------------------------- convex bodies

ConvexBody ball_body(int m, const Real& radius) {
  if (m < 1) throw DomainError("body rank must be at least 1");
  if (!(radius > 0)) throw DomainError("body radius must be positive");
  ConvexBody b;
  b.name = "ball";
  b.m = m;
  const Real r = radius;
  b.contains = [r](const std::vector<Quaternion>& x, const Real& scale) {
    Rational q = 0;
    for (const auto& comp : x) q += comp.norm_sq();
    const Real limit = (r / scale) * (r / scale);
    return cmp(limit, q) >= 0;
  };
  b.volume = ball_volume(4 * m).value() * pow(radius, 4 * m);
  b.support_radius = radius;
  return b;
}

ConvexBody coordinate_sum_body(int m, const Real& radius) {
  if (m < 1) throw DomainError("body rank must be at least 1");
  if (!(radius > 0)) throw DomainError("body radius must be positive");
  ConvexBody b;
  b.name = "coordinate-sum";
  b.m = m;
  const Real r = radius;
  b.contains = [r](const std::vector<Quaternion>& x, const Real& scale) {
    Real s = 0;
    for (const auto& comp : x) s += sqrt(to_real(comp.norm_sq()));
    return s <= r / scale;
  };
  // vol { sum |x_t| <= 1 } = 24^m V_4^m / (4m)!  (Dirichlet integral)
  Integer pow24 = 1;
  for (int t = 0; t < m; ++t) pow24 *= 24;
  Rational coeff(pow24, factorial(4 * m) * (Integer(1) << m));
  coeff.canonicalize();
  b.volume = to_real(coeff) * pow(real_pi(), 2 * m) * pow(radius, 4 * m);
  b.support_radius = radius;
  return b;
}

ConvexBody dilated_body(const ConvexBody& body, const Real& factor) {
  if (!(factor > 0)) throw DomainError("dilation factor must be positive");
  ConvexBody d;
  d.name = body.name;
  d.m = body.m;
  const auto inner = body.contains;
  const Real f = factor;
  d.contains = [inner, f](const std::vector<Quaternion>& x, const Real& scale) {
    return inner(x, scale / f);
  };
  d.volume = body.volume * pow(factor, 4 * body.m);
  d.support_radius = body.support_radius * factor;
  return d;
}

ConvexBodyReport convex_body_search(const ConvexBody& body, int m,
                                    const Real& eps, int samples,
                                    std::uint64_t seed,
                                    const EnumerationOptions& options) {
  if (m < 2) throw DomainError("the body search needs m >= 2");
  if (body.m != m) throw DomainError("body rank does not match m");
  if (samples < 1) throw DomainError("the search needs at least one sample");
  if (!(eps > 0) || !(eps < 24))
    throw DomainError("the volume margin eps must lie in (0, 24)");
  if (!(body.volume > 0) || !(body.support_radius > 0))
    throw DomainError("the body needs positive volume and support radius");

  const Real zeta_4m = zeta(Real(4 * m));
  const Real target_volume = (24 - eps) * zeta_4m;
  const Real tau = pow(target_volume / body.volume, Real(1) / (4 * m));
  const ConvexBody S = dilated_body(body, tau);
  const Real R = S.support_radius;

  // Unit-invariance and central-symmetry spot check on random rational
  // points; the membership test must not care which orbit member it sees.
  {
    SampleRng rng(seed, 0x696e76ULL);
    const long cap = static_cast<long>(R.convert_to<double>() * 2) + 1;
    const long span = 2 * cap * 4096;
    for (int trial = 0; trial < 64; ++trial) {
      std::vector<Quaternion> x(m);
      for (int t = 0; t < m; ++t) {
        std::array<Rational, 4> parts;
        for (auto& p : parts) {
          const long num = static_cast<long>(rng.below(span + 1)) - cap * 4096;
          Rational v(num, 4096);
          v.canonicalize();
          p = v;
        }
        x[t] = Quaternion(parts[0], parts[1], parts[2], parts[3]);
      }
      const Quaternion u =
          hurwitz_units()[rng.below(24)].to_quaternion();
      std::vector<Quaternion> ux(m);
      for (int t = 0; t < m; ++t) ux[t] = u * x[t];
      if (S.contains(x, Real(1)) != S.contains(ux, Real(1)))
        throw InvarianceError(
            "body membership is not invariant under the unit group");
    }
  }

  // Slice spacing: the base must clear the circumscribed ball, and the
  // spacing should cut the body into a handful of layers.
  Rational a(1);
  AveragingSetup setup = make_averaging_setup(m, a);
  for (int step = 0;
       step < 200 && !(setup.base.scale() > R && 4 * setup.true_height <= R);
       ++step) {
    a /= 2;
    setup = make_averaging_setup(m, a);
  }
  if (!(setup.base.scale() > R && 4 * setup.true_height <= R))
    throw SupportError("no admissible slice spacing found");

  EnumerationOptions opts = options;
  opts.materialize = false;
  long best_count = -1;
  int found_at = -1;
  std::optional<LiftedLattice> best;
  Real count_sum = 0;
  int done = 0;
  for (int idx = 0; idx < samples; ++idx) {
    SampleRng rng(seed, static_cast<std::uint64_t>(idx));
    const std::vector<Quaternion> w = sample_translate(rng, m - 1, nullptr);
    LiftedLattice lifted = lift(setup.base, w, setup.height);
    auto vecs = short_vectors(lifted.result, R, opts);
    long count = 0;
    for (auto& v : vecs) {
      if (!lifted.result.is_primitive(v)) continue;
      lifted.result.materialize(v);
      if (S.contains(v.ambient, lifted.result.scale())) ++count;
    }
    if (count % 24 != 0)
      throw InvarianceError(
          "a primitive count inside the body is not a multiple of 24");
    count_sum += count;
    ++done;
    if (best_count < 0 || count < best_count) {
      best_count = count;
      best.emplace(std::move(lifted));
    }
    if (count == 0) {
      found_at = idx;
      break;
    }
  }

  const bool success = best_count == 0;
  if (success) {
    // A body with no primitive points holds no lattice points at all
    // (any point divided by its content is a primitive member by
    // convexity); confirm it directly.
    auto vecs = short_vectors(best->result, R, opts);
    for (auto& v : vecs) {
      best->result.materialize(v);
      if (S.contains(v.ambient, best->result.scale()))
        throw Error("convexity check failed: imprimitive point inside");
    }
  }
  const Real mean = done > 0 ? count_sum / done : Real(0);
  return ConvexBodyReport{
      m,
      seed,
      samples,
      body.name,
      tau,
      target_volume,
      mean,
      best_count,
      found_at,
      success,
      std::move(*best),
      success ? target_volume / pow(Real(2), 4 * m) : Real(0),
      3 * zeta_4m / pow(Real(2), 4 * m - 3)};
}

// -------------------------------------------------------------- quadrature

namespace {

Real simpson_segment(const std::function<Real(const Real&)>& f, const Real& a,
                     const Real& fa, const Real& b, const Real& fb,
                     const Real& mid, const Real& fm, const Real& whole,
                     const Real& tol, int depth) {
  const Real lm = (a + mid) / 2, rm = (mid + b) / 2;
  const Real flm = f(lm), frm = f(rm);
  const Real left = (mid - a) / 6 * (fa + 4 * flm + fm);
  const Real right = (b - mid) / 6 * (fm + 4 * frm + fb);
  const Real diff = left + right - whole;
  if (depth <= 0 || fabs(diff) <= 15 * tol) return left + right + diff / 15;
  return simpson_segment(f, a, fa, mid, fm, lm, flm, left, tol / 2, depth - 1) +
         simpson_segment(f, mid, fm, b, fb, rm, frm, right, tol / 2, depth - 1);
}

}  // namespace

Real adaptive_simpson(const std::function<Real(const Real&)>& f, const Real& lo,
                      const Real& hi, const Real& tolerance) {
  if (!(tolerance > 0)) throw DomainError("quadrature tolerance must be positive");
  if (!(lo < hi)) return Real(0);
  const Real mid = (lo + hi) / 2;
  const Real fa = f(lo), fb = f(hi), fm = f(mid);
  const Real whole = (hi - lo) / 6 * (fa + 4 * fm + fb);
  return simpson_segment(f, lo, fa, hi, fb, mid, fm, whole, tolerance, 48);
}

}  // namespace hurwitz
