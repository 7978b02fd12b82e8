#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hurwitz/bounds.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/numeric.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

// Reference decimals computed independently with 30-digit arithmetic.
const char* kZeta3 = "1.2020569031595942854";
const char* kZeta8 = "1.004077356197944339379";
const char* kHurwitz2 = "0.0800988398009476255342";
const char* kHurwitz3 = "0.006807129157479618295507";
const char* kBall8 = "0.05491048041707508105977";
const char* kRogers8 = "0.0230939607039338566142";
const char* kRatio2 = "1.458716791267408363087";
const char* kGauss2 = "0.541161616855569095758";
const char* kEisen2 = "0.811742425283353643637";
const char* kThreeOverE = "1.103638323514326964787";

bool close(const Real& x, const char* expect, const char* tol = "1e-18") {
  return fabs(x - Real(expect)) < Real(tol);
}

}  // namespace

TEST_CASE("bernoulli numbers match the classical list") {
  const auto b = bernoulli_numbers(13);
  CHECK(b[0] == 1);
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[4] == Rational(-1, 30));
  CHECK(b[5] == 0);
  CHECK(b[6] == Rational(1, 42));
  CHECK(b[8] == Rational(-1, 30));
  CHECK(b[10] == Rational(5, 66));
  CHECK(b[12] == Rational(-691, 2730));
}

TEST_CASE("zeta matches reference values") {
  const Real pi = real_pi();
  CHECK(fabs(zeta(Real(2)) - pi * pi / 6) < Real("1e-30"));
  CHECK(fabs(zeta(Real(4)) - pow(pi, 4) / 90) < Real("1e-30"));
  CHECK(fabs(zeta(Real(6)) - pow(pi, 6) / 945) < Real("1e-30"));
  CHECK(fabs(zeta(Real(8)) - pow(pi, 8) / 9450) < Real("1e-30"));
  CHECK(close(zeta(Real(8)), kZeta8));
  // Odd argument, only reachable through the series machinery.
  CHECK(close(zeta(Real(3)), kZeta3));
  // Non-integer argument stays between its integer neighbours.
  const Real z = zeta(Real("2.5"));
  CHECK(z < zeta(Real(2)));
  CHECK(z > zeta(Real(3)));
  CHECK_THROWS_AS(zeta(Real(1)), DomainError);
  CHECK_THROWS_AS(zeta(Real("0.5")), DomainError);
}

TEST_CASE("zeta_even agrees with zeta") {
  for (unsigned n = 2; n <= 20; n += 2)
    CHECK(fabs(zeta_even(n) - zeta(Real(n))) < Real("1e-30"));
  CHECK_THROWS_AS(zeta_even(3), DomainError);
  CHECK_THROWS_AS(zeta_even(0), DomainError);
}

TEST_CASE("mobius values and sieve") {
  const int expect[20] = {1, -1, -1, 0, -1, 1,  -1, 0, 0, 1,
                          -1, 0, -1, 1, 1,  0, -1, 0, -1, 0};
  for (int k = 1; k <= 20; ++k) CHECK(mobius(k) == expect[k - 1]);
  const auto mu = mobius_sieve(2000);
  REQUIRE(mu.size() == 2000);
  for (std::uint64_t k = 1; k <= 2000; ++k) CHECK(mu[k - 1] == mobius(k));
  CHECK(mobius(2 * 3 * 5 * 7) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(999983) == -1);  // a prime
  CHECK_THROWS_AS(mobius(0), DomainError);
}

TEST_CASE("divisor sums of mobius collapse to the unit spike") {
  const auto mu = mobius_sieve(400);
  for (int t = 1; t <= 400; ++t) {
    int s = 0;
    for (int k = 1; k <= t; ++k)
      if (t % k == 0) s += mu[k - 1];
    CHECK(s == (t == 1 ? 1 : 0));
  }
}

TEST_CASE("ball volumes, exact form and value") {
  const Real pi = real_pi();
  CHECK(ball_volume(0).value() == 1);
  CHECK(fabs(ball_volume(1).value() - 2) < Real("1e-30"));
  CHECK(fabs(ball_volume(2).value() - pi) < Real("1e-30"));
  CHECK(fabs(ball_volume(3).value() - 4 * pi / 3) < Real("1e-30"));
  CHECK(fabs(ball_volume(4).value() - pi * pi / 2) < Real("1e-30"));
  CHECK(fabs(ball_volume(5).value() - 8 * pi * pi / 15) < Real("1e-30"));
  CHECK(fabs(ball_volume(8).value() - pow(pi, 4) / 24) < Real("1e-30"));
  CHECK(fabs(ball_volume(9).value() - 32 * pow(pi, 4) / 945) < Real("1e-30"));
  CHECK(ball_volume(8).coefficient == Rational(1, 24));
  CHECK(ball_volume(8).pi_power == 4);
  CHECK(ball_volume(3).coefficient == Rational(4, 3));
  CHECK(ball_volume(3).pi_power == 1);
  CHECK_THROWS_AS(ball_volume(-1), DomainError);
}

TEST_CASE("packing bound formulas against frozen references") {
  CHECK(close(hurwitz_bound(2), kHurwitz2));
  CHECK(close(hurwitz_bound(3), kHurwitz3));
  CHECK(close(ball_bound(8), kBall8));
  CHECK(close(rogers_bound(8), kRogers8));
  CHECK(close(hurwitz_over_ball(2), kRatio2));
  CHECK(close(gaussian_bound(2), kGauss2));
  CHECK(close(eisenstein_bound(2), kEisen2));
  CHECK(fabs(saturated_bound(8) - Real(1) / 256) == 0);
  CHECK_THROWS_AS(hurwitz_bound(1), DomainError);
  CHECK_THROWS_AS(ball_bound(1), DomainError);
  CHECK_THROWS_AS(hurwitz_over_ball(1), DomainError);
}

TEST_CASE("ratio identity and limit") {
  for (int m : {2, 3, 5, 9, 16})
    CHECK(fabs(hurwitz_bound(m) / ball_bound(4 * m) - hurwitz_over_ball(m)) <
          Real("1e-25"));
  Real prev = hurwitz_over_ball(2);
  const Real limit(kThreeOverE);
  for (int m = 3; m <= 64; ++m) {
    const Real cur = hurwitz_over_ball(m);
    CHECK(cur < prev);
    CHECK(cur > limit);
    prev = cur;
  }
  CHECK(fabs(hurwitz_over_ball(50) - limit) < Real("1e-2"));
}

TEST_CASE("the averaging bound beats the general-dimension bounds") {
  for (int m = 2; m <= 12; ++m) {
    CHECK(hurwitz_bound(m) > ball_bound(4 * m));
    CHECK(hurwitz_bound(m) > rogers_bound(4 * m));
    CHECK(hurwitz_bound(m) > saturated_bound(4 * m));
  }
}

TEST_CASE("bound table shape and csv schema") {
  const BoundTable table = make_bound_table(2, 5);
  REQUIRE(table.rows.size() == 4);
  CHECK(table.rows[0].m == 2);
  CHECK(table.rows[0].dimension == 8);
  CHECK(table.rows[3].m == 5);
  CHECK(table.rows[3].dimension == 20);

  std::ostringstream csv;
  write_csv(table, csv);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "m,dimension,eq1,ball,rogers,saturated,eq1_over_ball");
  std::string row;
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    CHECK(std::count(row.begin(), row.end(), ',') == 6);
  }
  CHECK(rows == 4);

  // Deterministic output.
  std::ostringstream again;
  write_csv(table, again);
  CHECK(csv.str() == again.str());

  std::ostringstream pretty;
  write_table(table, pretty);
  CHECK(pretty.str().find("eq1_over_ball") != std::string::npos);

  CHECK_THROWS_AS(make_bound_table(1, 4), DomainError);
  CHECK_THROWS_AS(make_bound_table(3, 2), DomainError);
}
