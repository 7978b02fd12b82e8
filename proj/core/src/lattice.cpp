#include "hurwitz/lattice.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hurwitz/bounds.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

const Quaternion& module_generator(int s) {
  static const std::array<Quaternion, 4> gens = {
      Quaternion::one(), Quaternion::unit_i(), Quaternion::unit_j(),
      Quaternion::omega()};
  return gens[s];
}

RationalMatrix build_generator_matrix(
    int m, const std::vector<std::vector<Quaternion>>& basis) {
  RationalMatrix gen(4 * m, 4 * m);
  for (int t = 0; t < m; ++t)
    for (int s = 0; s < 4; ++s) {
      std::vector<Quaternion> g(m);
      for (int comp = 0; comp < m; ++comp)
        g[comp] = module_generator(s) * basis[t][comp];
      const std::vector<Rational> col = embed(g);
      for (int r = 0; r < 4 * m; ++r) gen.at(r, 4 * t + s) = col[r];
    }
  return gen;
}

}  // namespace

HurwitzLattice::HurwitzLattice(int rank,
                               std::vector<std::vector<Quaternion>> basis,
                               Real scale, std::string comment)
    : m_(rank),
      basis_(std::move(basis)),
      scale_(std::move(scale)),
      comment_(std::move(comment)),
      gen_(1, 1),
      gram_(1, 1) {
  if (m_ < 1) throw DomainError("lattice rank must be at least 1");
  if (static_cast<int>(basis_.size()) != m_)
    throw DomainError("basis must contain exactly rank vectors");
  for (const auto& v : basis_)
    if (static_cast<int>(v.size()) != m_)
      throw DomainError("basis vectors must have exactly rank components");
  if (!(scale_ > 0)) throw DomainError("scale must be positive");

  gen_ = build_generator_matrix(m_, basis_);
  gram_ = gram_of_columns(gen_);
  skel_det_ = abs(hurwitz::determinant(gen_));
  if (skel_det_ == 0)
    throw DegenerateLatticeError("basis does not span the ambient space");
}

HurwitzLattice HurwitzLattice::standard(int rank) {
  if (rank < 1) throw DomainError("lattice rank must be at least 1");
  std::vector<std::vector<Quaternion>> basis(
      rank, std::vector<Quaternion>(rank));
  for (int t = 0; t < rank; ++t) basis[t][t] = Quaternion::one();
  return HurwitzLattice(rank, std::move(basis));
}

Real HurwitzLattice::determinant() const {
  return pow(scale_, 4 * m_) * to_real(skel_det_);
}

LatticeVector HurwitzLattice::vector_from_coords(std::vector<long> z) const {
  if (static_cast<int>(z.size()) != 4 * m_)
    throw DomainError("coordinate vector has wrong length");
  LatticeVector v;
  v.z = std::move(z);
  Rational n = 0;
  for (int i = 0; i < 4 * m_; ++i) {
    if (v.z[i] == 0) continue;
    for (int j = 0; j < 4 * m_; ++j) {
      if (v.z[j] == 0) continue;
      n += Rational(static_cast<long>(v.z[i]) * v.z[j]) * gram_.at(i, j);
    }
  }
  v.norm_sq = n;
  return v;
}

void HurwitzLattice::materialize(LatticeVector& v) const {
  v.coeffs.assign(m_, HurwitzInteger());
  for (int t = 0; t < m_; ++t)
    v.coeffs[t] =
        HurwitzInteger::from_coords(v.z[4 * t], v.z[4 * t + 1], v.z[4 * t + 2],
                                    v.z[4 * t + 3]);
  v.ambient.assign(m_, Quaternion());
  for (int comp = 0; comp < m_; ++comp) {
    Quaternion sum;
    for (int t = 0; t < m_; ++t)
      sum = sum + v.coeffs[t].to_quaternion() * basis_[t][comp];
    v.ambient[comp] = sum;
  }
}

Real HurwitzLattice::length(const LatticeVector& v) const {
  return scale_ * sqrt(to_real(v.norm_sq));
}

bool HurwitzLattice::is_primitive(const LatticeVector& v) const {
  long g = 0;
  for (long c : v.z) g = std::gcd(g, c);
  if (g == 0) throw DomainError("the zero vector is neither primitive nor not");
  return g == 1;
}

Real HurwitzLattice::density(const Real& min_length) const {
  const int n = 4 * m_;
  return pow(min_length, n) * ball_volume(n).value() /
         (pow(Real(2), n) * determinant());
}

HurwitzLattice HurwitzLattice::with_scale(Real new_scale) const {
  return HurwitzLattice(m_, basis_, std::move(new_scale), comment_);
}

HurwitzLattice HurwitzLattice::row_added(int t, int s,
                                         const HurwitzInteger& w) const {
  if (t < 0 || t >= m_ || s < 0 || s >= m_ || t == s)
    throw DomainError("row_added needs two distinct basis indices");
  auto basis = basis_;
  const Quaternion wq = w.to_quaternion();
  for (int comp = 0; comp < m_; ++comp)
    basis[t][comp] = basis[t][comp] + wq * basis[s][comp];
  return HurwitzLattice(m_, std::move(basis), scale_, comment_);
}

HurwitzLattice HurwitzLattice::row_unit_scaled(int t,
                                               const HurwitzInteger& u) const {
  if (t < 0 || t >= m_) throw DomainError("basis index out of range");
  if (!u.is_unit()) throw DomainError("row_unit_scaled needs a unit");
  auto basis = basis_;
  const Quaternion uq = u.to_quaternion();
  for (int comp = 0; comp < m_; ++comp)
    basis[t][comp] = uq * basis[t][comp];
  return HurwitzLattice(m_, std::move(basis), scale_, comment_);
}

HurwitzLattice HurwitzLattice::load(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("lattice file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("basis"))
    throw ParseError("lattice file needs at least the fields 'm' and 'basis'");
  if (!j["m"].is_number_integer() || j["m"].get<long>() < 1)
    throw ParseError("'m' must be a positive integer");
  const int m = j["m"].get<int>();

  const auto& jb = j["basis"];
  if (!jb.is_array() || static_cast<int>(jb.size()) != m)
    throw ParseError("'basis' must be an array of m vectors");
  std::vector<std::vector<Quaternion>> basis(m, std::vector<Quaternion>(m));
  for (int t = 0; t < m; ++t) {
    if (!jb[t].is_array() || static_cast<int>(jb[t].size()) != m)
      throw ParseError("each basis vector must have m components");
    for (int comp = 0; comp < m; ++comp) {
      const auto& jq = jb[t][comp];
      if (!jq.is_array() || jq.size() != 4)
        throw ParseError("each component must be an array of four rationals");
      std::array<Rational, 4> parts;
      for (int s = 0; s < 4; ++s) {
        if (!jq[s].is_string())
          throw ParseError("quaternion entries must be rational strings");
        parts[s] = parse_rational(jq[s].get<std::string>());
      }
      basis[t][comp] = Quaternion(parts[0], parts[1], parts[2], parts[3]);
    }
  }

  Real scale = 1;
  if (j.contains("scale")) {
    if (!j["scale"].is_string())
      throw ParseError("'scale' must be a decimal string");
    scale = parse_decimal(j["scale"].get<std::string>());
    if (!(scale > 0)) throw ParseError("'scale' must be positive");
  }
  std::string comment;
  if (j.contains("comment")) {
    if (!j["comment"].is_string()) throw ParseError("'comment' must be a string");
    comment = j["comment"].get<std::string>();
  }
  return HurwitzLattice(m, std::move(basis), std::move(scale),
                        std::move(comment));
}

HurwitzLattice HurwitzLattice::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lattice file: " + path);
  return load(in);
}

void HurwitzLattice::save(std::ostream& out) const {
  nlohmann::json j;
  j["m"] = m_;
  nlohmann::json jb = nlohmann::json::array();
  for (const auto& vec : basis_) {
    nlohmann::json jv = nlohmann::json::array();
    for (const auto& q : vec)
      jv.push_back({format_rational(q.a), format_rational(q.b),
                    format_rational(q.c), format_rational(q.d)});
    jb.push_back(std::move(jv));
  }
  j["basis"] = std::move(jb);
  j["scale"] = format_real(scale_, 40);
  if (!comment_.empty()) j["comment"] = comment_;
  out << j.dump(2) << "\n";
}

void HurwitzLattice::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write lattice file: " + path);
  save(out);
  if (!out) throw Error("failed while writing lattice file: " + path);
}

}  // namespace hurwitz
