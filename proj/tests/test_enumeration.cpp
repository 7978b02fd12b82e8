#include <doctest.h>

#include <map>

#include "hurwitz/enumeration.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/lattice.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

// Histogram of exact squared lengths of the returned vectors.
std::map<Rational, long> norm_histogram(const std::vector<LatticeVector>& vs) {
  std::map<Rational, long> h;
  for (const auto& v : vs) ++h[v.norm_sq];
  return h;
}

}  // namespace

TEST_CASE("rank-one counts match the box-scan oracle") {
  const HurwitzLattice lattice = HurwitzLattice::standard(1);
  const std::vector<long> expect = oracle::hurwitz_norm_counts(6);
  const auto found = short_vectors(lattice, sqrt(Real(6)) + Real("1e-25"));
  auto hist = norm_histogram(found);
  for (int n = 1; n <= 6; ++n)
    CHECK(hist[Rational(n)] == expect[n]);
  // Cross-check the two oracles against the classical divisor formula.
  for (int n = 1; n <= 6; ++n)
    CHECK(expect[n] == 24 * oracle::sigma_odd(n));
}

TEST_CASE("rank-two counts match the convolution oracle") {
  const HurwitzLattice lattice = HurwitzLattice::standard(2);
  const std::vector<long> expect = oracle::hurwitz_pair_norm_counts(3);
  const auto found = short_vectors(lattice, sqrt(Real(3)) + Real("1e-25"));
  auto hist = norm_histogram(found);
  for (int n = 1; n <= 3; ++n)
    CHECK(hist[Rational(n)] == expect[n]);
  CHECK(expect[1] == 48);
}

TEST_CASE("boundary membership is exact") {
  const HurwitzLattice lattice = HurwitzLattice::standard(1);
  // Radius exactly 1 keeps the 24 norm-1 vectors.
  CHECK(short_vectors(lattice, Real(1)).size() == 24);
  // Any radius below 1 drops them, however close.
  CHECK(short_vectors(lattice, Real(1) - ldexp(Real(1), -100)).empty());
  CHECK(vector_count_at(lattice, Rational(1)) == 24);
  CHECK(vector_count_at(lattice, Rational(2)) == 24);
  CHECK(vector_count_at(lattice, Rational(3)) == 96);
}

TEST_CASE("scale shrinks and grows the reach of a radius") {
  const HurwitzLattice half = HurwitzLattice::standard(1).with_scale(Real(1) / 2);
  // True lengths are halved: radius 1/2 already reaches the 24 short ones.
  CHECK(short_vectors(half, Real("0.5")).size() == 24);
  CHECK(short_vectors(half, Real("0.49")).empty());
}

TEST_CASE("results are sorted and symmetric") {
  const HurwitzLattice lattice = HurwitzLattice::standard(2);
  const auto vs = short_vectors(lattice, Real("1.5"));
  REQUIRE(!vs.empty());
  CHECK(vs.size() % 2 == 0);
  for (std::size_t i = 1; i < vs.size(); ++i)
    CHECK(vs[i - 1].norm_sq <= vs[i].norm_sq);
  // Every vector appears with its negative.
  for (const auto& v : vs) {
    std::vector<long> neg(v.z.size());
    for (std::size_t i = 0; i < v.z.size(); ++i) neg[i] = -v.z[i];
    bool found = false;
    for (const auto& w : vs) found = found || w.z == neg;
    CHECK(found);
  }
}

TEST_CASE("capacity is enforced") {
  const HurwitzLattice lattice = HurwitzLattice::standard(2);
  EnumerationOptions opts;
  opts.max_vectors = 10;
  CHECK_THROWS_AS(short_vectors(lattice, Real(2), opts), CapacityError);
}

TEST_CASE("h-independence over the quaternions") {
  using Q = Quaternion;
  // One and omega span the same quaternionic line.
  CHECK(h_independent({{Q::one(), Q()}}));
  CHECK_FALSE(h_independent({{Q::one(), Q()}, {Q::omega(), Q()}}));
  CHECK(h_independent({{Q::one(), Q()}, {Q(), Q::omega()}}));
  // A pair whose second vector is a left multiple of the first.
  const Q factor(Rational(1, 2), Rational(3), 0, Rational(-1));
  CHECK_FALSE(h_independent({{Q::one(), Q::unit_j()},
                             {factor, factor * Q::unit_j()}}));
  CHECK(h_independent({{Q::one(), Q::unit_j()}, {factor, Q::unit_i()}}));
  CHECK_FALSE(h_independent({{Q(), Q()}}));
}

TEST_CASE("successive minima of split diagonal modules") {
  // diag(1, 2): minima 1 and 2 with the expected witnesses.
  std::vector<std::vector<Quaternion>> basis(2, std::vector<Quaternion>(2));
  basis[0][0] = Quaternion::one();
  basis[1][1] = Quaternion(2, 0, 0, 0);
  const HurwitzLattice lattice(2, basis);
  const MinimaReport rep = quaternionic_minima(lattice);
  REQUIRE(rep.minima.size() == 2);
  CHECK(rep.norms_sq[0] == 1);
  CHECK(rep.norms_sq[1] == 4);
  CHECK(fabs(rep.minima[0] - 1) == 0);
  CHECK(fabs(rep.minima[1] - 2) == 0);
  CHECK(fabs(rep.product() - 2) == 0);
  REQUIRE(rep.witnesses.size() == 2);
  CHECK(rep.witnesses[0].ambient[1].is_zero());
  CHECK(!rep.witnesses[1].ambient[1].is_zero());
  CHECK(h_independent({rep.witnesses[0].ambient, rep.witnesses[1].ambient}));
}

TEST_CASE("minima of the standard modules and scaling") {
  for (int m = 1; m <= 3; ++m) {
    const MinimaReport rep = quaternionic_minima(HurwitzLattice::standard(m));
    REQUIRE(rep.minima.size() == static_cast<std::size_t>(m));
    for (const Rational& q : rep.norms_sq) CHECK(q == 1);
  }
  const Real s("0.75");
  const MinimaReport scaled =
      quaternionic_minima(HurwitzLattice::standard(2).with_scale(s));
  CHECK(fabs(scaled.minima[0] - s) < Real("1e-36"));
  CHECK(fabs(scaled.minima[1] - s) < Real("1e-36"));
}

TEST_CASE("minima witnesses are always h-independent") {
  // A deliberately skewed module.
  std::vector<std::vector<Quaternion>> basis(2, std::vector<Quaternion>(2));
  basis[0][0] = Quaternion::one();
  basis[1][0] = Quaternion(Rational(1, 2), Rational(1, 2), 0, 0);
  basis[1][1] = Quaternion(Rational(1, 3), 0, 0, 0);
  const HurwitzLattice lattice(2, basis);
  const MinimaReport rep = quaternionic_minima(lattice);
  REQUIRE(rep.witnesses.size() == 2);
  CHECK(h_independent({rep.witnesses[0].ambient, rep.witnesses[1].ambient}));
  CHECK(rep.minima[0] <= rep.minima[1]);
  // The first minimum is attained: nothing shorter exists.
  CHECK(short_vectors(lattice, rep.minima[0] * (1 - ldexp(Real(1), -40))).empty());
}
