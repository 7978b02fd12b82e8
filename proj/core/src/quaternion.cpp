#include "hurwitz/quaternion.hpp"

#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::string Quaternion::str() const {
  std::ostringstream os;
  os << format_rational(a) << " + " << format_rational(b) << "i + "
     << format_rational(c) << "j + " << format_rational(d) << "k";
  return os.str();
}

HurwitzInteger HurwitzInteger::from_coords(const Integer& x, const Integer& y,
                                           const Integer& z, const Integer& w) {
  HurwitzInteger h;
  h.ta_ = 2 * x + w;
  h.tb_ = 2 * y + w;
  h.tc_ = 2 * z + w;
  h.td_ = w;
  return h;
}

HurwitzInteger HurwitzInteger::from_doubled(const Integer& ta, const Integer& tb,
                                            const Integer& tc, const Integer& td) {
  const auto parity = [](const Integer& v) { return mpz_odd_p(v.get_mpz_t()); };
  const int p = parity(ta);
  if (parity(tb) != p || parity(tc) != p || parity(td) != p)
    throw DomainError("doubled components must share one parity");
  HurwitzInteger h;
  h.ta_ = ta;
  h.tb_ = tb;
  h.tc_ = tc;
  h.td_ = td;
  return h;
}

std::array<Integer, 4> HurwitzInteger::coords() const {
  // Invert ta = 2x + w, ..., td = w with w = 2d-part doubled.
  const Integer w = td_;
  return {(ta_ - w) / 2, (tb_ - w) / 2, (tc_ - w) / 2, w};
}

Quaternion HurwitzInteger::to_quaternion() const {
  auto half = [](const Integer& t) {
    Rational q(t, 2);
    q.canonicalize();
    return q;
  };
  return {half(ta_), half(tb_), half(tc_), half(td_)};
}

HurwitzInteger HurwitzInteger::conj() const {
  HurwitzInteger h;
  h.ta_ = ta_;
  h.tb_ = -tb_;
  h.tc_ = -tc_;
  h.td_ = -td_;
  return h;
}

Integer HurwitzInteger::norm() const {
  return (ta_ * ta_ + tb_ * tb_ + tc_ * tc_ + td_ * td_) / 4;
}

HurwitzInteger HurwitzInteger::operator-() const {
  HurwitzInteger h;
  h.ta_ = -ta_;
  h.tb_ = -tb_;
  h.tc_ = -tc_;
  h.td_ = -td_;
  return h;
}

HurwitzInteger HurwitzInteger::operator+(const HurwitzInteger& o) const {
  HurwitzInteger h;
  h.ta_ = ta_ + o.ta_;
  h.tb_ = tb_ + o.tb_;
  h.tc_ = tc_ + o.tc_;
  h.td_ = td_ + o.td_;
  return h;
}

HurwitzInteger HurwitzInteger::operator-(const HurwitzInteger& o) const {
  HurwitzInteger h;
  h.ta_ = ta_ - o.ta_;
  h.tb_ = tb_ - o.tb_;
  h.tc_ = tc_ - o.tc_;
  h.td_ = td_ - o.td_;
  return h;
}

HurwitzInteger HurwitzInteger::operator*(const HurwitzInteger& o) const {
  // With x = T/2 and y = U/2 the product is (T U) / 4, so its doubled
  // components are those of T U halved; the halves are exact because both
  // factors satisfy the parity invariant.
  const Integer pa = ta_ * o.ta_ - tb_ * o.tb_ - tc_ * o.tc_ - td_ * o.td_;
  const Integer pb = ta_ * o.tb_ + tb_ * o.ta_ + tc_ * o.td_ - td_ * o.tc_;
  const Integer pc = ta_ * o.tc_ - tb_ * o.td_ + tc_ * o.ta_ + td_ * o.tb_;
  const Integer pd = ta_ * o.td_ + tb_ * o.tc_ - tc_ * o.tb_ + td_ * o.ta_;
  HurwitzInteger h;
  h.ta_ = pa / 2;
  h.tb_ = pb / 2;
  h.tc_ = pc / 2;
  h.td_ = pd / 2;
  return h;
}

const std::vector<HurwitzInteger>& hurwitz_units() {
  static const std::vector<HurwitzInteger> units = [] {
    std::vector<HurwitzInteger> u;
    u.reserve(24);
    for (int s : {1, -1}) u.push_back(HurwitzInteger::from_coords(s, 0, 0, 0));
    for (int s : {1, -1}) u.push_back(HurwitzInteger::from_coords(0, s, 0, 0));
    for (int s : {1, -1}) u.push_back(HurwitzInteger::from_coords(0, 0, s, 0));
    for (int s : {1, -1})
      u.push_back(HurwitzInteger::from_doubled(0, 0, 0, 2 * s));
    for (int sa : {1, -1})
      for (int sb : {1, -1})
        for (int sc : {1, -1})
          for (int sd : {1, -1})
            u.push_back(HurwitzInteger::from_doubled(sa, sb, sc, sd));
    return u;
  }();
  return units;
}

bool is_hurwitz(const Quaternion& q) { return to_hurwitz(q).has_value(); }

std::optional<HurwitzInteger> to_hurwitz(const Quaternion& q) {
  Rational ta = 2 * q.a, tb = 2 * q.b, tc = 2 * q.c, td = 2 * q.d;
  if (ta.get_den() != 1 || tb.get_den() != 1 || tc.get_den() != 1 ||
      td.get_den() != 1)
    return std::nullopt;
  const auto parity = [](const Rational& v) {
    return mpz_odd_p(v.get_num().get_mpz_t());
  };
  const int p = parity(ta);
  if (parity(tb) != p || parity(tc) != p || parity(td) != p)
    return std::nullopt;
  return HurwitzInteger::from_doubled(ta.get_num(), tb.get_num(), tc.get_num(),
                                      td.get_num());
}

std::vector<Rational> embed(const std::vector<Quaternion>& v) {
  std::vector<Rational> out;
  out.reserve(4 * v.size());
  for (const Quaternion& q : v) {
    out.push_back(q.a);
    out.push_back(q.b);
    out.push_back(q.c);
    out.push_back(q.d);
  }
  return out;
}

QuaternionR to_realq(const Quaternion& q) {
  return {to_real(q.a), to_real(q.b), to_real(q.c), to_real(q.d)};
}

}  // namespace hurwitz
