#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/exact_matrix.hpp"
#include "hurwitz/rng.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

RationalMatrix random_matrix(SampleRng& rng, std::size_t n, std::size_t m) {
  RationalMatrix a(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a.at(i, j) = oracle::small_rational(rng, 4, 3);
  return a;
}

}  // namespace

TEST_CASE("determinant agrees with Laplace expansion on random matrices") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    SampleRng rng(777, trial);
    const std::size_t n = 1 + rng.below(5);
    const RationalMatrix a = random_matrix(rng, n, n);
    CHECK(determinant(a) == oracle::laplace_det(a));
  }
}

TEST_CASE("determinant of known matrices") {
  RationalMatrix a(2, 2);
  a.at(0, 0) = Rational(1, 2);
  a.at(0, 1) = Rational(1, 3);
  a.at(1, 0) = Rational(1, 5);
  a.at(1, 1) = Rational(1, 7);
  CHECK(determinant(a) == Rational(1, 14) - Rational(1, 15));

  RationalMatrix id(4, 4);
  for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
  CHECK(determinant(id) == 1);

  RationalMatrix sing(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sing.at(i, j) = i + j;
  CHECK(determinant(sing) == 0);

  RationalMatrix rect(2, 3);
  CHECK_THROWS_AS(determinant(rect), DomainError);
}

TEST_CASE("rank agrees with the nonzero-minor characterization") {
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    SampleRng rng(888, trial);
    const std::size_t n = 1 + rng.below(4);
    const std::size_t m = 1 + rng.below(4);
    RationalMatrix a = random_matrix(rng, n, m);
    // Occasionally force dependence by copying a row.
    if (n >= 2 && trial % 3 == 0)
      for (std::size_t j = 0; j < m; ++j) a.at(n - 1, j) = a.at(0, j) * 2;
    CHECK(rank(a) == oracle::minor_rank(a));
  }
  RationalMatrix z(3, 3);
  CHECK(rank(z) == 0);
}

TEST_CASE("gram_of_columns is A^T A") {
  SampleRng rng(12, 0);
  const RationalMatrix a = random_matrix(rng, 4, 3);
  const RationalMatrix g = gram_of_columns(a);
  REQUIRE(g.rows() == 3);
  REQUIRE(g.cols() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational expect = 0;
      for (std::size_t r = 0; r < 4; ++r) expect += a.at(r, i) * a.at(r, j);
      CHECK(g.at(i, j) == expect);
      CHECK(g.at(i, j) == g.at(j, i));
    }
}

TEST_CASE("transpose") {
  SampleRng rng(13, 0);
  const RationalMatrix a = random_matrix(rng, 3, 5);
  const RationalMatrix t = a.transposed();
  REQUIRE(t.rows() == 5);
  REQUIRE(t.cols() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(a.at(i, j) == t.at(j, i));
}
