#ifndef HURWITZ_BOUNDS_HPP
#define HURWITZ_BOUNDS_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz {

// B_0 .. B_{count-1} with B_1 = -1/2, by the defining recurrence.
std::vector<Rational> bernoulli_numbers(unsigned count);

// Riemann zeta for real s > 1, Euler-Maclaurin with a rigorous tail cut.
Real zeta(const Real& s);

// Closed form at positive even integers through Bernoulli numbers; kept
// as an independent cross-check of zeta().
Real zeta_even(unsigned n);

// Moebius function by trial division; supported for 1 <= k <= 10^8.
int mobius(std::uint64_t k);
// mu(1..n) by sieve.
std::vector<int> mobius_sieve(std::uint64_t n);

// Volume of the unit ball in dimension n, kept as an exact rational
// multiple of a power of pi.
struct BallVolume {
  Rational coefficient;
  int pi_power = 0;
  Real value() const;
};
BallVolume ball_volume(int n);

// Packing density guaranteed in dimension 4m by the module averaging
// argument: 3 m zeta(4m) / (2^{4m-3} e (1 - e^{-m})), for m >= 2.
Real hurwitz_bound(int m);
// Keith Ball's lower bound zeta(n) (n-1) / 2^{n-1} in dimension n.
Real ball_bound(int n);
// Rogers-style bound n zeta(n) / (2^{n-1} e (1 - e^{-n})).
Real rogers_bound(int n);
// Trivial bound 2^{-n} from a saturated packing.
Real saturated_bound(int n);
// hurwitz_bound(m) / ball_bound(4m) in closed form:
// 12 m / (e (4m - 1) (1 - e^{-m})); decreases in m toward the limit 3/e.
Real hurwitz_over_ball(int m);

// Analogous constructions over smaller rings, for dimension 2m:
// Gaussian integers give m zeta(2m) / 2^{2m-2}, Eisenstein integers
// 3 m zeta(2m) / 2^{2m-1}.
Real gaussian_bound(int m);
Real eisenstein_bound(int m);

struct BoundTable {
  struct Row {
    int m = 0;
    int dimension = 0;
    Real hurwitz, ball, rogers, saturated, ratio;
  };
  std::vector<Row> rows;
};

BoundTable make_bound_table(int m_min, int m_max);
// Columns: m,dimension,eq1,ball,rogers,saturated,eq1_over_ball with 12
// significant digits.
void write_csv(const BoundTable& table, std::ostream& out);
void write_table(const BoundTable& table, std::ostream& out);

}  // namespace hurwitz

#endif  // HURWITZ_BOUNDS_HPP
