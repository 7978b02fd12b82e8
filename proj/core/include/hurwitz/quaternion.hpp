#ifndef HURWITZ_QUATERNION_HPP
#define HURWITZ_QUATERNION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz {

// Quaternion a + b i + c j + d k over the rationals.
struct Quaternion {
  Rational a, b, c, d;

  Quaternion() : a(0), b(0), c(0), d(0) {}
  Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion unit_i() { return {0, 1, 0, 0}; }
  static Quaternion unit_j() { return {0, 0, 1, 0}; }
  static Quaternion unit_k() { return {0, 0, 0, 1}; }
  // (1 + i + j + k) / 2
  static Quaternion omega() {
    return {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  }

  Quaternion conj() const { return {a, -b, -c, -d}; }
  Rational norm_sq() const { return a * a + b * b + c * c + d * d; }
  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  Quaternion operator+(const Quaternion& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d};
  }
  Quaternion operator-(const Quaternion& o) const {
    return {a - o.a, b - o.b, c - o.c, d - o.d};
  }
  Quaternion operator*(const Quaternion& o) const {
    return {a * o.a - b * o.b - c * o.c - d * o.d,
            a * o.b + b * o.a + c * o.d - d * o.c,
            a * o.c - b * o.d + c * o.a + d * o.b,
            a * o.d + b * o.c - c * o.b + d * o.a};
  }
  bool operator==(const Quaternion& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const Quaternion& o) const { return !(*this == o); }

  std::string str() const;
};

inline Quaternion operator*(const Rational& s, const Quaternion& q) {
  return {s * q.a, s * q.b, s * q.c, s * q.d};
}

// Integer quaternion in the maximal order generated by 1, i, j and
// omega = (1+i+j+k)/2.  Components are stored doubled so that both the
// Lipschitz part and the half-integer coset live in plain integers; the
// invariant is that all four doubled components share one parity.
class HurwitzInteger {
 public:
  HurwitzInteger() : ta_(0), tb_(0), tc_(0), td_(0) {}

  // x + y i + z j + w omega with integer coordinates.
  static HurwitzInteger from_coords(const Integer& x, const Integer& y,
                                    const Integer& z, const Integer& w);
  // Doubled components (2a, 2b, 2c, 2d); throws DomainError on parity
  // mismatch.
  static HurwitzInteger from_doubled(const Integer& ta, const Integer& tb,
                                     const Integer& tc, const Integer& td);

  static HurwitzInteger one() { return from_coords(1, 0, 0, 0); }
  static HurwitzInteger unit_i() { return from_coords(0, 1, 0, 0); }
  static HurwitzInteger unit_j() { return from_coords(0, 0, 1, 0); }
  static HurwitzInteger omega() { return from_coords(0, 0, 0, 1); }

  // Coordinates with respect to the module basis {1, i, j, omega}.
  std::array<Integer, 4> coords() const;
  const Integer& doubled_a() const { return ta_; }
  const Integer& doubled_b() const { return tb_; }
  const Integer& doubled_c() const { return tc_; }
  const Integer& doubled_d() const { return td_; }

  Quaternion to_quaternion() const;

  HurwitzInteger conj() const;
  Integer norm() const;  // always a non-negative integer
  bool is_zero() const { return ta_ == 0 && tb_ == 0 && tc_ == 0 && td_ == 0; }
  bool is_unit() const { return norm() == 1; }

  HurwitzInteger operator-() const;
  HurwitzInteger operator+(const HurwitzInteger& o) const;
  HurwitzInteger operator-(const HurwitzInteger& o) const;
  HurwitzInteger operator*(const HurwitzInteger& o) const;
  bool operator==(const HurwitzInteger& o) const {
    return ta_ == o.ta_ && tb_ == o.tb_ && tc_ == o.tc_ && td_ == o.td_;
  }
  bool operator!=(const HurwitzInteger& o) const { return !(*this == o); }

 private:
  Integer ta_, tb_, tc_, td_;
};

// The 24 units, in a fixed deterministic order: +-1, +-i, +-j, +-k, then
// the sixteen (+-1 +- i +- j +- k) / 2 ordered by sign pattern.
const std::vector<HurwitzInteger>& hurwitz_units();

bool is_hurwitz(const Quaternion& q);
std::optional<HurwitzInteger> to_hurwitz(const Quaternion& q);

// Real embedding of a quaternion vector: component t contributes the four
// coordinates (a_t, b_t, c_t, d_t) at positions 4t .. 4t+3.
std::vector<Rational> embed(const std::vector<Quaternion>& v);

// Quaternion with extended-precision components, for orthogonalization.
struct QuaternionR {
  Real a, b, c, d;

  QuaternionR() : a(0), b(0), c(0), d(0) {}
  QuaternionR(Real a_, Real b_, Real c_, Real d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  QuaternionR conj() const { return {a, -b, -c, -d}; }
  Real norm_sq() const { return a * a + b * b + c * c + d * d; }

  QuaternionR operator+(const QuaternionR& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d};
  }
  QuaternionR operator-(const QuaternionR& o) const {
    return {a - o.a, b - o.b, c - o.c, d - o.d};
  }
  QuaternionR operator*(const QuaternionR& o) const {
    return {a * o.a - b * o.b - c * o.c - d * o.d,
            a * o.b + b * o.a + c * o.d - d * o.c,
            a * o.c - b * o.d + c * o.a + d * o.b,
            a * o.d + b * o.c - c * o.b + d * o.a};
  }
};

inline QuaternionR operator*(const Real& s, const QuaternionR& q) {
  return {s * q.a, s * q.b, s * q.c, s * q.d};
}

QuaternionR to_realq(const Quaternion& q);

}  // namespace hurwitz

#endif  // HURWITZ_QUATERNION_HPP
