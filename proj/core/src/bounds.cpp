#include "hurwitz/bounds.hpp"

#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::vector<Rational> bernoulli_numbers(unsigned count) {
  std::vector<Rational> b;
  b.reserve(count);
  for (unsigned n = 0; n < count; ++n) {
    if (n == 0) {
      b.emplace_back(1);
      continue;
    }
    // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j
    Rational s = 0;
    for (unsigned j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * b[j];
    Rational bn = -s / Rational(Integer(n + 1));
    bn.canonicalize();
    b.push_back(std::move(bn));
  }
  return b;
}

namespace {

// Shared Bernoulli cache for the zeta tail; copies out under a lock so
// the bound helpers stay safe to call concurrently.
Rational cached_bernoulli(unsigned n) {
  static std::vector<Rational> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() <= n) cache = bernoulli_numbers(n + 33);
  return cache[n];
}

}  // namespace

Real zeta(const Real& s) {
  if (!(s > 1)) throw DomainError("zeta is only evaluated for s > 1");
  constexpr unsigned kCut = 48;
  Real sum = 0;
  for (unsigned k = 1; k < kCut; ++k) sum += pow(Real(k), -s);
  const Real big_k(kCut);
  sum += pow(big_k, 1 - s) / (s - 1);
  sum += pow(big_k, -s) / 2;

  // Euler-Maclaurin tail: sum_j B_2j/(2j)! * s(s+1)..(s+2j-2) * K^{-s-2j+1}.
  // Terms fall fast until 2j approaches 2 pi K, far beyond the cutoff
  // needed for the working precision, so the first skipped term bounds
  // the error.
  const Real eps = ldexp(fabs(sum), -static_cast<int>(precision_bits()) - 8);
  Real rising = s;                     // s (s+1) ... (s+2j-2)
  Real kpow = pow(big_k, -s - 1);      // K^{-s-2j+1}
  for (unsigned j = 1; j <= 120; ++j) {
    Rational coeff = cached_bernoulli(2 * j) / Rational(factorial(2 * j));
    coeff.canonicalize();
    const Real term = to_real(coeff) * rising * kpow;
    sum += term;
    if (fabs(term) < eps) return sum;
    rising *= (s + Real(2 * j - 1)) * (s + Real(2 * j));
    kpow /= big_k * big_k;
  }
  throw DomainError("zeta tail failed to converge at this precision");
}

Real zeta_even(unsigned n) {
  if (n < 2 || n % 2 != 0)
    throw DomainError("zeta_even needs a positive even integer");
  // zeta(n) = (-1)^{n/2+1} B_n (2 pi)^n / (2 n!)
  Rational coeff = cached_bernoulli(n) / (2 * Rational(factorial(n)));
  coeff.canonicalize();
  if (n % 4 == 0) coeff = -coeff;
  return to_real(coeff) * pow(2 * real_pi(), static_cast<int>(n));
}

int mobius(std::uint64_t k) {
  if (k == 0) throw DomainError("mobius is undefined at 0");
  if (k > 100000000ULL)
    throw DomainError("mobius supports arguments up to 10^8");
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    ++factors;
  }
  if (k > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

std::vector<int> mobius_sieve(std::uint64_t n) {
  if (n == 0 || n > 100000000ULL)
    throw DomainError("mobius_sieve supports 1 <= n <= 10^8");
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::uint64_t p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return std::vector<int>(mu.begin() + 1, mu.end());
}

Real BallVolume::value() const {
  return to_real(coefficient) * pow(real_pi(), pi_power);
}

BallVolume ball_volume(int n) {
  if (n < 0) throw DomainError("ball volume needs a non-negative dimension");
  BallVolume v;
  if (n % 2 == 0) {
    const int k = n / 2;
    v.coefficient = Rational(Integer(1), factorial(k));
    v.pi_power = k;
  } else {
    const int k = (n - 1) / 2;
    // 2 k! 4^k / (2k+1)!
    Rational c(2 * factorial(k) * (Integer(1) << (2 * k)), factorial(2 * k + 1));
    c.canonicalize();
    v.coefficient = c;
    v.pi_power = k;
  }
  return v;
}

Real hurwitz_bound(int m) {
  if (m < 2) throw DomainError("the averaging bound needs m >= 2");
  const Real e = real_e();
  return 3 * m * zeta(Real(4 * m)) /
         (pow(Real(2), 4 * m - 3) * e * (1 - exp(Real(-m))));
}

Real ball_bound(int n) {
  if (n < 2) throw DomainError("ball_bound needs dimension >= 2");
  return zeta(Real(n)) * (n - 1) / pow(Real(2), n - 1);
}

Real rogers_bound(int n) {
  if (n < 2) throw DomainError("rogers_bound needs dimension >= 2");
  return n * zeta(Real(n)) /
         (pow(Real(2), n - 1) * real_e() * (1 - exp(Real(-n))));
}

Real saturated_bound(int n) {
  if (n < 1) throw DomainError("saturated_bound needs dimension >= 1");
  return pow(Real(2), -n);
}

Real hurwitz_over_ball(int m) {
  if (m < 2) throw DomainError("the ratio is defined for m >= 2");
  return 12 * m / (real_e() * (4 * m - 1) * (1 - exp(Real(-m))));
}

Real gaussian_bound(int m) {
  if (m < 2) throw DomainError("gaussian_bound needs m >= 2");
  return m * zeta(Real(2 * m)) / pow(Real(2), 2 * m - 2);
}

Real eisenstein_bound(int m) {
  if (m < 2) throw DomainError("eisenstein_bound needs m >= 2");
  return 3 * m * zeta(Real(2 * m)) / pow(Real(2), 2 * m - 1);
}

BoundTable make_bound_table(int m_min, int m_max) {
  if (m_min < 2 || m_max < m_min)
    throw DomainError("bound table needs 2 <= m_min <= m_max");
  BoundTable table;
  for (int m = m_min; m <= m_max; ++m) {
    BoundTable::Row row;
    row.m = m;
    row.dimension = 4 * m;
    row.hurwitz = hurwitz_bound(m);
    row.ball = ball_bound(4 * m);
    row.rogers = rogers_bound(4 * m);
    row.saturated = saturated_bound(4 * m);
    row.ratio = hurwitz_over_ball(m);
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_csv(const BoundTable& table, std::ostream& out) {
  out << "m,dimension,eq1,ball,rogers,saturated,eq1_over_ball\n";
  for (const auto& r : table.rows) {
    out << r.m << ',' << r.dimension << ',' << format_real(r.hurwitz) << ','
        << format_real(r.ball) << ',' << format_real(r.rogers) << ','
        << format_real(r.saturated) << ',' << format_real(r.ratio) << '\n';
  }
}

void write_table(const BoundTable& table, std::ostream& out) {
  out << std::left << std::setw(5) << "m" << std::setw(6) << "dim"
      << std::setw(20) << "eq1" << std::setw(20) << "ball" << std::setw(20)
      << "rogers" << std::setw(20) << "saturated" << std::setw(20)
      << "eq1_over_ball" << "\n";
  for (const auto& r : table.rows) {
    out << std::left << std::setw(5) << r.m << std::setw(6) << r.dimension
        << std::setw(20) << format_real(r.hurwitz) << std::setw(20)
        << format_real(r.ball) << std::setw(20) << format_real(r.rogers)
        << std::setw(20) << format_real(r.saturated) << std::setw(20)
        << format_real(r.ratio) << "\n";
  }
}

}  // namespace hurwitz
