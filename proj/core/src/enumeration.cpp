#include "hurwitz/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

struct IntegerGram {
  std::vector<std::vector<Integer>> entries;
  Integer denominator;
};

IntegerGram clear_denominators(const RationalMatrix& gram) {
  const std::size_t n = gram.rows();
  IntegerGram g;
  g.denominator = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(g.denominator.get_mpz_t(), g.denominator.get_mpz_t(),
              gram.at(i, j).get_den().get_mpz_t());
  g.entries.assign(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = gram.at(i, j) * g.denominator;
      g.entries[i][j] = scaled.get_num();
    }
  return g;
}

// Upper-triangular Cholesky factor of the Gram matrix in doubles: the
// search tree guide.  Exactness is restored by the rational check on
// every candidate.
std::vector<std::vector<double>> cholesky_upper(const RationalMatrix& gram) {
  const std::size_t n = gram.rows();
  std::vector<std::vector<double>> g(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = gram.at(i, j).get_d();
  std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = g[i][j];
      for (std::size_t k = 0; k < i; ++k) s -= r[k][i] * r[k][j];
      if (i == j) {
        if (s <= 0)
          throw DegenerateLatticeError(
              "Gram matrix is numerically not positive definite");
        r[i][i] = std::sqrt(s);
      } else {
        r[i][j] = s / r[i][i];
      }
    }
  }
  return r;
}

class Enumerator {
 public:
  Enumerator(const HurwitzLattice& lattice, const Real& radius,
             const EnumerationOptions& options)
      : lattice_(lattice),
        options_(options),
        n_(lattice.ambient_dim()),
        gram_int_(clear_denominators(lattice.gram())),
        r_(cholesky_upper(lattice.gram())) {
    if (!(radius > 0)) throw DomainError("enumeration radius must be positive");
    // Exact acceptance threshold (radius / scale)^2, and a padded double
    // bound for tree pruning.
    limit_sq_ = radius * radius / (lattice.scale() * lattice.scale());
    Real padded = limit_sq_ * (1 + ldexp(Real(1), -30));
    bound_ = std::nextafter(padded.convert_to<double>(),
                            std::numeric_limits<double>::infinity());
    x_.assign(n_, 0);
    partial_.assign(n_ + 1, 0.0);
  }

  std::vector<LatticeVector> run() {
    descend(static_cast<int>(n_) - 1);
    std::sort(found_.begin(), found_.end(),
              [](const LatticeVector& a, const LatticeVector& b) {
                const int c = cmp(a.norm_sq, b.norm_sq);
                if (c != 0) return c < 0;
                return a.z < b.z;
              });
    if (options_.materialize)
      for (LatticeVector& v : found_) lattice_.materialize(v);
    return std::move(found_);
  }

 private:
  static int cmp(const Rational& a, const Rational& b) {
    return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
  }

  void descend(int level) {
    if (level < 0) {
      accept();
      return;
    }
    const std::size_t i = level;
    // Center: x_i minimizing the level contribution given x_{i+1..}.
    double off = 0;
    for (std::size_t j = i + 1; j < n_; ++j) off += r_[i][j] * x_[j];
    const double center = -off / r_[i][i];
    const double room = bound_ - partial_[i + 1];
    if (room < 0) return;
    const double half_width = std::sqrt(room) / r_[i][i];
    const long lo = static_cast<long>(std::ceil(center - half_width - 1e-9));
    const long hi = static_cast<long>(std::floor(center + half_width + 1e-9));
    for (long v = lo; v <= hi; ++v) {
      x_[i] = v;
      const double y = r_[i][i] * (v - center);
      partial_[i] = partial_[i + 1] + y * y;
      if (partial_[i] <= bound_) descend(level - 1);
    }
    x_[i] = 0;
  }

  void accept() {
    bool zero = true;
    for (long v : x_)
      if (v != 0) {
        zero = false;
        break;
      }
    if (zero) return;
    // Exact squared length via the integer Gram form.
    Integer q = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (x_[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (x_[j] == 0) continue;
        q += x_[i] * x_[j] * gram_int_.entries[i][j];
      }
    }
    Rational norm_sq(q, gram_int_.denominator);
    norm_sq.canonicalize();
    if (mpfr_cmp_q(limit_sq_.backend().data(), norm_sq.get_mpq_t()) < 0)
      return;
    if (found_.size() >= options_.max_vectors)
      throw CapacityError(
          "enumeration exceeded its vector budget; raise max_vectors or "
          "shrink the radius");
    LatticeVector v;
    v.z = x_;
    v.norm_sq = std::move(norm_sq);
    found_.push_back(std::move(v));
  }

  const HurwitzLattice& lattice_;
  const EnumerationOptions& options_;
  std::size_t n_;
  IntegerGram gram_int_;
  std::vector<std::vector<double>> r_;
  Real limit_sq_;
  double bound_ = 0;
  std::vector<long> x_;
  std::vector<double> partial_;
  std::vector<LatticeVector> found_;
};

}  // namespace

std::vector<LatticeVector> short_vectors(const HurwitzLattice& lattice,
                                         const Real& radius,
                                         const EnumerationOptions& options) {
  Enumerator e(lattice, radius, options);
  return e.run();
}

bool h_independent(const std::vector<std::vector<Quaternion>>& vectors) {
  if (vectors.empty()) return true;
  const std::size_t m = vectors[0].size();
  for (const auto& v : vectors)
    if (v.size() != m)
      throw DomainError("h_independent needs vectors of equal length");
  const std::array<Quaternion, 4> basis = {
      Quaternion::one(), Quaternion::unit_i(), Quaternion::unit_j(),
      Quaternion::unit_k()};
  RationalMatrix rows(4 * vectors.size(), 4 * m);
  std::size_t r = 0;
  for (const auto& v : vectors)
    for (const Quaternion& u : basis) {
      std::vector<Quaternion> uv(m);
      for (std::size_t comp = 0; comp < m; ++comp) uv[comp] = u * v[comp];
      const std::vector<Rational> e = embed(uv);
      for (std::size_t c = 0; c < 4 * m; ++c) rows.at(r, c) = e[c];
      ++r;
    }
  return rank(rows) == 4 * vectors.size();
}

Real MinimaReport::product() const {
  Real p = 1;
  for (const Real& x : minima) p *= x;
  return p;
}

long vector_count_at(const HurwitzLattice& lattice, const Rational& norm_sq,
                     const EnumerationOptions& options) {
  if (sgn(norm_sq) <= 0)
    throw DomainError("vector_count_at needs a positive squared length");
  // Pad the radius a touch so sqrt rounding cannot drop boundary vectors;
  // the count itself compares exact rationals.
  const Real radius = lattice.scale() * sqrt(to_real(norm_sq)) *
                      (1 + ldexp(Real(1), -80));
  EnumerationOptions opts = options;
  opts.materialize = false;
  long count = 0;
  for (const auto& v : short_vectors(lattice, radius, opts))
    if (v.norm_sq == norm_sq) ++count;
  return count;
}

MinimaReport quaternionic_minima(const HurwitzLattice& lattice,
                                 const EnumerationOptions& options) {
  const int m = lattice.rank();
  // Minkowski-flavored starting radius det^{1/4m} * 2/sqrt(pi) *
  // ((2m)!)^{1/4m}; the first shortest vector always lies within it.
  Real radius = pow(lattice.determinant(), Real(1) / (4 * m)) *
                (2 / sqrt(real_pi())) *
                pow(to_real(factorial(2 * m)), Real(1) / (4 * m));
  const Real growth = pow(Real(2), Real(1) / 4);

  EnumerationOptions opts = options;
  opts.materialize = false;
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<LatticeVector> vecs = short_vectors(lattice, radius, opts);
    MinimaReport report;
    std::vector<std::vector<Quaternion>> kept;
    for (LatticeVector& v : vecs) {
      lattice.materialize(v);
      kept.push_back(v.ambient);
      if (!h_independent(kept)) {
        kept.pop_back();
        continue;
      }
      report.norms_sq.push_back(v.norm_sq);
      report.minima.push_back(lattice.length(v));
      report.witnesses.push_back(v);
      if (static_cast<int>(kept.size()) == m) return report;
    }
    radius *= growth;
  }
  throw CapacityError("successive minima search did not close in 200 rounds");
}

}  // namespace hurwitz
