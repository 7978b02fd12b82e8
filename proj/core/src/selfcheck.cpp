#include "hurwitz/selfcheck.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz/bounds.hpp"
#include "hurwitz/constructions.hpp"
#include "hurwitz/enumeration.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/lattice.hpp"
#include "hurwitz/quaternion.hpp"
#include "hurwitz/rng.hpp"

namespace hurwitz {

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, bool ok,
           const std::string& detail = "") {
  out.push_back({name, ok, ok ? "" : detail});
}

HurwitzInteger random_hurwitz(SampleRng& rng, long box) {
  const long span = 2 * box + 1;
  return HurwitzInteger::from_coords(
      static_cast<long>(rng.below(span)) - box,
      static_cast<long>(rng.below(span)) - box,
      static_cast<long>(rng.below(span)) - box,
      static_cast<long>(rng.below(span)) - box);
}

}  // namespace

std::vector<CheckResult> verify_quat() {
  std::vector<CheckResult> out;
  const auto& units = hurwitz_units();
  check(out, "quat/unit-count", units.size() == 24);

  bool norms = true;
  for (const auto& u : units) norms = norms && u.norm() == 1;
  check(out, "quat/unit-norms", norms);

  bool closed = true;
  for (const auto& u : units)
    for (const auto& v : units) {
      const HurwitzInteger p = u * v;
      bool found = false;
      for (const auto& w : units) found = found || w == p;
      closed = closed && found;
    }
  check(out, "quat/unit-closure", closed);

  // omega^2 = omega - 1
  const HurwitzInteger w = HurwitzInteger::omega();
  check(out, "quat/omega-relation", w * w == w - HurwitzInteger::one());

  SampleRng rng(20240901, 0);
  bool mult_norm = true, conj_rev = true, assoc = true;
  for (int trial = 0; trial < 64; ++trial) {
    const HurwitzInteger a = random_hurwitz(rng, 5);
    const HurwitzInteger b = random_hurwitz(rng, 5);
    const HurwitzInteger c = random_hurwitz(rng, 5);
    mult_norm = mult_norm && (a * b).norm() == a.norm() * b.norm();
    conj_rev = conj_rev && (a * b).conj() == b.conj() * a.conj();
    assoc = assoc && (a * b) * c == a * (b * c);
  }
  check(out, "quat/norm-multiplicative", mult_norm);
  check(out, "quat/conjugation-antihomomorphism", conj_rev);
  check(out, "quat/associativity", assoc);
  return out;
}

std::vector<CheckResult> verify_lattice() {
  std::vector<CheckResult> out;
  bool dets = true;
  for (int m = 1; m <= 4; ++m) {
    const HurwitzLattice L = HurwitzLattice::standard(m);
    dets = dets &&
           L.skeleton_determinant() == Rational(Integer(1), Integer(1) << m);
  }
  check(out, "lattice/standard-determinants", dets);

  SampleRng rng(20240902, 0);
  const HurwitzLattice L2 = HurwitzLattice::standard(2);
  bool unit_inv = true;
  for (int trial = 0; trial < 32; ++trial) {
    std::vector<long> z(8);
    for (auto& c : z) c = static_cast<long>(rng.below(7)) - 3;
    bool zero = true;
    for (long c : z) zero = zero && c == 0;
    if (zero) z[0] = 1;
    LatticeVector v = L2.vector_from_coords(z);
    L2.materialize(v);
    const Quaternion u = hurwitz_units()[rng.below(24)].to_quaternion();
    Rational rotated = 0;
    for (const auto& comp : v.ambient) rotated += (u * comp).norm_sq();
    unit_inv = unit_inv && rotated == v.norm_sq;
  }
  check(out, "lattice/unit-invariant-norms", unit_inv);

  bool elementary = true;
  HurwitzLattice L = HurwitzLattice::standard(3);
  for (int trial = 0; trial < 8; ++trial) {
    const int t = static_cast<int>(rng.below(3));
    int s = static_cast<int>(rng.below(3));
    if (s == t) s = (s + 1) % 3;
    L = L.row_added(t, s, random_hurwitz(rng, 2));
    elementary = elementary && L.skeleton_determinant() ==
                                   Rational(Integer(1), Integer(8));
  }
  check(out, "lattice/elementary-ops-preserve-det", elementary);

  std::stringstream buf;
  L.save(buf);
  const HurwitzLattice back = HurwitzLattice::load(buf);
  check(out, "lattice/save-load-round-trip",
        back.basis() == L.basis() && back.rank() == L.rank());

  LatticeVector prim = L2.vector_from_coords({1, 0, 0, 0, 0, 0, 0, 0});
  LatticeVector twice = L2.vector_from_coords({2, 0, 0, 0, 0, 0, 0, 0});
  check(out, "lattice/primitivity-basics",
        L2.is_primitive(prim) && !L2.is_primitive(twice));
  return out;
}

std::vector<CheckResult> verify_minima() {
  std::vector<CheckResult> out;
  const HurwitzLattice W = HurwitzLattice::standard(1);
  const MinimaReport r1 = quaternionic_minima(W);
  check(out, "minima/order-one-shortest",
        r1.minima.size() == 1 && r1.norms_sq[0] == 1);
  check(out, "minima/order-one-kissing", vector_count_at(W, Rational(1)) == 24);

  const HurwitzLattice W2 = HurwitzLattice::standard(2);
  const MinimaReport r2 = quaternionic_minima(W2);
  check(out, "minima/rank-two-minima",
        r2.norms_sq.size() == 2 && r2.norms_sq[0] == 1 && r2.norms_sq[1] == 1);
  std::vector<std::vector<Quaternion>> wit;
  for (const auto& v : r2.witnesses) wit.push_back(v.ambient);
  check(out, "minima/witnesses-independent", h_independent(wit));
  check(out, "minima/sorted",
        r2.minima.size() == 2 && !(r2.minima[1] < r2.minima[0]));
  return out;
}

std::vector<CheckResult> verify_construct() {
  std::vector<CheckResult> out;
  const Real tol40 = ldexp(Real(1), -40);

  // rho shape
  const Real r("1.1");
  const TestFunction f = TestFunction::rho(r, 2);
  check(out, "construct/rho-at-zero", fabs(f(Real(0)) - Real(1) / 4) < tol40);
  check(out, "construct/rho-at-r", fabs(f(r) - Real(1) / 8) < tol40);
  check(out, "construct/rho-support", f(f.support_radius() * 1.001) == 0);

  // lift determinant identity on a random exact instance
  SampleRng rng(20240903, 0);
  std::vector<std::vector<Quaternion>> basis(1, std::vector<Quaternion>(1));
  basis[0][0] = Quaternion(Rational(static_cast<long>(rng.below(5)) + 1, 2),
                           Rational(static_cast<long>(rng.below(5)), 3),
                           Rational(static_cast<long>(rng.below(5)), 2),
                           Rational(static_cast<long>(rng.below(5)), 5));
  const HurwitzLattice base(1, basis);
  const Rational height(3, 7);
  const LiftedLattice lifted =
      lift(base, {Quaternion(Rational(1, 3), 0, Rational(2, 5), 0)}, height);
  const Rational expected = height * height * height * height / 2 *
                            base.skeleton_determinant();
  check(out, "construct/lift-determinant-identity",
        lifted.result.skeleton_determinant() == abs(expected));

  // Gram-Schmidt orthonormality at working precision
  std::vector<std::vector<QuaternionR>> vecs(2, std::vector<QuaternionR>(2));
  vecs[0][0] = to_realq(Quaternion(1, Rational(1, 2), 0, Rational(1, 3)));
  vecs[0][1] = to_realq(Quaternion(0, 1, Rational(1, 5), 0));
  vecs[1][0] = to_realq(Quaternion(Rational(2, 3), 0, 1, 0));
  vecs[1][1] = to_realq(Quaternion(1, 1, 0, Rational(1, 7)));
  const auto ortho = gram_schmidt(vecs);
  Real err = 0;
  for (std::size_t i = 0; i < ortho.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const QuaternionR h = hermitian_inner(ortho[i], ortho[j]);
      const Real target = i == j ? 1 : 0;
      err = std::max(err, fabs(h.a - target));
      err = std::max(err, fabs(h.b) + fabs(h.c) + fabs(h.d));
    }
  check(out, "construct/gram-schmidt-orthonormal", err < tol40);

  // averaging setup keeps lifts unimodular
  const AveragingSetup setup = make_averaging_setup(2, Rational(1, 2));
  SampleRng rng2(20240904, 1);
  std::vector<Quaternion> w(1);
  w[0] = Quaternion(rng2.next_unit_fraction(), rng2.next_unit_fraction(),
                    rng2.next_unit_fraction(), rng2.next_unit_fraction());
  const Real det = lift(setup.base, w, setup.height).result.determinant();
  check(out, "construct/averaging-lift-unimodular", fabs(det - 1) < tol40);
  return out;
}

std::vector<CheckResult> verify_bounds() {
  std::vector<CheckResult> out;
  const Real tol = Real("1e-30");

  bool zeta_ok = true;
  for (unsigned n = 2; n <= 16; n += 2)
    zeta_ok = zeta_ok && fabs(zeta(Real(n)) - zeta_even(n)) < tol;
  check(out, "bounds/zeta-vs-bernoulli", zeta_ok);

  bool mobius_ok = true;
  const std::vector<int> mu = mobius_sieve(200);
  for (std::uint64_t t = 1; t <= 200; ++t) {
    int s = 0;
    for (std::uint64_t k = 1; k <= t; ++k)
      if (t % k == 0) s += mu[k - 1];
    mobius_ok = mobius_ok && s == (t == 1 ? 1 : 0) && mu[t - 1] == mobius(t);
  }
  check(out, "bounds/mobius-divisor-sums", mobius_ok);

  const Real pi = real_pi();
  bool vol_ok = fabs(ball_volume(2).value() - pi) < tol &&
                fabs(ball_volume(4).value() - pi * pi / 2) < tol &&
                fabs(ball_volume(8).value() - pow(pi, 4) / 24) < tol &&
                fabs(ball_volume(3).value() - 4 * pi / 3) < tol;
  check(out, "bounds/ball-volumes", vol_ok);

  // The ratio 12m/(e(4m-1)(1-e^{-m})) falls strictly toward its limit 3/e.
  bool ratio_ok = true;
  const Real limit = 3 / real_e();
  Real prev = 0;
  for (int m = 2; m <= 8; ++m) {
    const Real direct = hurwitz_bound(m) / ball_bound(4 * m);
    const Real closed = hurwitz_over_ball(m);
    ratio_ok = ratio_ok && fabs(direct - closed) < Real("1e-25");
    ratio_ok = ratio_ok && closed > limit;
    if (m > 2) ratio_ok = ratio_ok && closed < prev;
    prev = closed;
  }
  check(out, "bounds/ratio-closed-form", ratio_ok);
  return out;
}

std::vector<CheckResult> verify_all() {
  std::vector<CheckResult> out;
  for (const auto& part : {verify_quat(), verify_lattice(), verify_minima(),
                           verify_construct(), verify_bounds()})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace hurwitz
