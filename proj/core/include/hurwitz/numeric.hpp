#ifndef HURWITZ_NUMERIC_HPP
#define HURWITZ_NUMERIC_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <string>

namespace hurwitz {

// Exact arithmetic lives in GMP; extended precision floating point in MPFR
// through boost.multiprecision with expression templates disabled so that
// Real behaves like a plain value type.
using Integer = mpz_class;
using Rational = mpq_class;
namespace bmp = boost::multiprecision;
using Real =
    bmp::number<bmp::mpfr_float_backend<0, bmp::allocate_dynamic>, bmp::et_off>;

// Mantissa size used for Real values created after the call.  The library
// default is 128 bits, well beyond any tolerance asserted here.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

Real to_real(const Rational& q);
Real to_real(const Integer& z);

Real real_pi();
Real real_e();

// Sign of a - b, computed without rounding b.
int cmp(const Real& a, const Rational& b);

// Parses "p" or "p/q" into a canonical rational.  Throws ParseError.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

// Parses a positive decimal literal such as "1.25" or "3e-2".
Real parse_decimal(const std::string& text);

// Round-to-nearest decimal with the given number of significant digits.
std::string format_real(const Real& x, int significant = 12);

// Nearest multiple of 2^-frac_bits, as an exact rational.
Rational snap_dyadic(const Real& x, int frac_bits = 96);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace hurwitz

#endif  // HURWITZ_NUMERIC_HPP
