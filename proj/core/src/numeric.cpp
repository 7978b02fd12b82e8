#include "hurwitz/numeric.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <vector>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {
unsigned g_precision_bits = 128;
}

void set_precision_bits(unsigned bits) {
  if (bits < 24 || bits > 1u << 20)
    throw DomainError("precision must lie between 24 and 2^20 bits");
  g_precision_bits = bits;
  // boost's default_precision is counted in decimal digits.
  unsigned digits10 =
      static_cast<unsigned>(std::ceil(bits * 0.30102999566398119)) + 2;
  Real::default_precision(digits10);
}

unsigned precision_bits() { return g_precision_bits; }

Real to_real(const Rational& q) {
  Real x;
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

Real to_real(const Integer& z) {
  Real x;
  mpfr_set_z(x.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return x;
}

Real real_pi() {
  Real x;
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

Real real_e() { return exp(Real(1)); }

int cmp(const Real& a, const Rational& b) {
  return mpfr_cmp_q(a.backend().data(), b.get_mpq_t());
}

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) throw ParseError("empty rational literal");
  const std::size_t slash = t.find('/');
  if (slash != std::string::npos && t.find('/', slash + 1) != std::string::npos)
    throw ParseError("rational literal has more than one '/': " + text);
  const std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  const std::string den =
      slash == std::string::npos ? std::string("1") : t.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw ParseError("malformed rational literal: " + text);
  Integer n(num), d(den);
  if (d == 0) throw ParseError("rational literal with zero denominator: " + text);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Real parse_decimal(const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) throw ParseError("empty decimal literal");
  Real x;
  if (mpfr_set_str(x.backend().data(), t.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("malformed decimal literal: " + text);
  return x;
}

std::string format_real(const Real& x, int significant) {
  if (significant < 1 || significant > 200)
    throw DomainError("significant digits out of range");
  char fmt[16];
  std::snprintf(fmt, sizeof(fmt), "%%.%dRg", significant);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, x.backend().data());
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

Rational snap_dyadic(const Real& x, int frac_bits) {
  Real shifted = ldexp(x, frac_bits);
  Integer n;
  mpfr_get_z(n.get_mpz_t(), shifted.backend().data(), MPFR_RNDN);
  Integer d = Integer(1) << frac_bits;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace hurwitz
