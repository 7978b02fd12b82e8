#ifndef HURWITZ_CONSTRUCTIONS_HPP
#define HURWITZ_CONSTRUCTIONS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hurwitz/enumeration.hpp"
#include "hurwitz/lattice.hpp"
#include "hurwitz/numeric.hpp"
#include "hurwitz/quaternion.hpp"

namespace hurwitz {

// Radial test functions used by the averaging searches.  All of them have
// compact support and a known maximum; Ball and Rho additionally have
// closed-form integrals and slice integrals.
class TestFunction {
 public:
  enum class Kind { Ball, Rho, MobiusSmoothed };

  // Indicator of the ball of the given radius.
  static TestFunction ball(Real radius);
  // The logarithmic bump: 1/4 inside r e^{(1-m)/4m}, then
  // 1/(4m) - log(t/r), vanishing from r e^{1/4m} on.  Continuous, equal
  // to 1/4 at 0 and to 1/(4m) at t = r.
  static TestFunction rho(Real r, int m);
  // Moebius-smoothed companion: max(f) below delta, the alternating
  // divisor combination sum_k mu(k) f(k t) elsewhere.
  static TestFunction mobius_smoothed(const TestFunction& f, Real delta);

  Kind kind() const { return kind_; }
  // Rank parameter m baked into a Rho function (0 for Ball).
  int rank() const { return m_; }
  const Real& support_radius() const { return support_; }
  // Defining radius: R for Ball, r for Rho.
  const Real& parameter() const { return param_; }
  Real sup_value() const;

  Real operator()(const Real& length) const;
  // Integral over H^m (dimension 4m); closed form, so MobiusSmoothed is
  // not supported here.
  Real integral(int m) const;
  // Radii where the radial profile is not smooth; quadrature is split
  // there.
  std::vector<Real> breakpoints() const;

 private:
  TestFunction() = default;
  Kind kind_ = Kind::Ball;
  int m_ = 0;
  Real param_, support_, delta_;
  std::shared_ptr<const TestFunction> inner_;
};

Real rho_value(const Real& length, const Real& r, int m);
Real rho_integral(const Real& r, int m);
// The radius at which the integral of rho reaches 6 zeta(4m): below it
// the averaged primitive sum argument applies.
Real rho_radius_threshold(int m);
// Largest smoothing width delta with sup(f) delta^{4m} V_{4m} < eps / 2.
Real max_smoothing_delta(const TestFunction& f, int m, const Real& eps);

// Left quaternionic Gram-Schmidt.  The inner product is
// h(x, y) = sum_t x_t conj(y_t), linear in x under left scalar
// coefficients.  Output vectors are orthonormal; the phase is fixed by
// rotating the largest component to be positive real.  Throws
// DegenerateLatticeError when the input is H-dependent.
QuaternionR hermitian_inner(const std::vector<QuaternionR>& x,
                            const std::vector<QuaternionR>& y);
std::vector<std::vector<QuaternionR>> gram_schmidt(
    const std::vector<std::vector<QuaternionR>>& vectors);

// Balanced rescaling of a determinant-one lattice: an invertible
// quaternion-linear map stretches each orthogonalized direction by the
// reciprocal of the matching successive minimum, then the whole lattice
// by (prod minima)^{1/m}.  The result keeps determinant one while every
// nonzero vector reaches length at least (prod minima)^{1/m}.  The
// returned basis is snapped to dyadic rationals with 96 fractional bits;
// the snap moves lengths by less than 2^-80 relatively.
struct RescaleResult {
  HurwitzLattice lattice;
  MinimaReport input_minima;
  Real minima_product;   // alpha
  Real target_min;       // alpha^{1/m}
};
RescaleResult rescale_balanced(const HurwitzLattice& lattice,
                               const EnumerationOptions& options = {});

// Sublattice of W^m generated by W^{m-1} x {0} together with the single
// vector (w, height): the index-one step of the averaging construction.
// w and height are given in pre-scale (skeleton) units, so with a scaled
// base the true translate is scale * w and the true slice spacing is
// scale * height.
struct LiftedLattice {
  HurwitzLattice base;
  std::vector<Quaternion> w;
  Rational height;
  HurwitzLattice result;
};
LiftedLattice lift(const HurwitzLattice& base, const std::vector<Quaternion>& w,
                   const Rational& height);

// Base and height arranged so every lift has determinant exactly one:
// the standard W^{m-1} skeleton under the scale (2^m / height^4)^{1/4m}.
struct AveragingSetup {
  int m = 0;
  HurwitzLattice base;
  Rational height;      // pre-scale height a
  Real true_height;     // scale * a, the slice spacing alpha
};
AveragingSetup make_averaging_setup(int m, const Rational& height);
// Halves the height from 1 until the base clears the support of f and
// the slice-sum prediction is within eps of the integral.
AveragingSetup choose_averaging_setup(int m, const TestFunction& f,
                                      const Real& eps,
                                      const EnumerationOptions& options = {});

// Sum of f over the nonzero (optionally primitive) points of the lattice.
Real lattice_sum(const HurwitzLattice& lattice, const TestFunction& f,
                 bool primitive_only = false,
                 const EnumerationOptions& options = {});

// Expected lattice sum over the lift translate w: the slice-layer sum
// (alpha^4 / 2) sum_{lambda != 0} (integral of f over the affine slice at
// height alpha |lambda|), in closed form for Ball and by split quadrature
// for Rho.
Real average_prediction(const AveragingSetup& setup, const TestFunction& f,
                        const EnumerationOptions& options = {});

struct HlawkaReport {
  int m = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  bool primitive_only = false;
  Rational height;
  Real true_height;
  Real integral;      // integral of f
  Real epsilon;       // audit slack, 1% of the integral
  Real prediction;    // slice-layer prediction (divided by zeta(4m) when
                      // restricted to primitive points)
  Real mean, stddev, best_sum;
  std::vector<Rational> best_coords;  // the 4(m-1) coordinates of w
  LiftedLattice best;
};

// Monte Carlo minimization of the lattice sum over random translates w
// drawn as exact dyadic fractions.  The mean estimates the prediction and
// the minimum is at most the mean, which realizes the averaging argument
// constructively.
HlawkaReport hlawka_search(const AveragingSetup& setup, const TestFunction& f,
                           int samples, std::uint64_t seed,
                           bool primitive_only = false,
                           const EnumerationOptions& options = {});

struct MinimaProductReport {
  int m = 0;
  Real r;                   // requested radius
  Real threshold_radius;    // rho_radius_threshold(m)
  HlawkaReport search;
  bool sum_below_six = false;     // best primitive rho sum < 6
  MinimaReport minima;            // of the best lattice, when successful
  Real minima_product;
  Real product_target;            // r^m
  bool product_exceeds_target = false;
  bool orbit_inequality_ok = false;  // 24 sum_i rho(min_i) <= primitive sum
  Real density;             // packing density certified by the rescaled lattice
  Real density_bound;       // the m-th averaging bound, for comparison
  bool success = false;
};

// Runs the primitive rho search below the threshold radius and checks the
// chain: primitive sum < 6 forces prod minima > r^m, with the orbit
// inequality as the connecting step.
MinimaProductReport minima_product_search(int m, const Real& r, int samples,
                                          std::uint64_t seed,
                                          const EnumerationOptions& options = {});

// Centrally symmetric convex body given by an exact membership test on
// rational points (the scale factor is kept separate so the test stays
// exact), its volume, and the radius of a circumscribed ball.
struct ConvexBody {
  std::string name;
  int m = 0;  // ambient quaternionic rank
  std::function<bool(const std::vector<Quaternion>& point, const Real& scale)>
      contains;
  Real volume;
  Real support_radius;
};

ConvexBody ball_body(int m, const Real& radius);
// { x : sum_t |x_t| <= radius }, the quaternionic l^1 ball.
ConvexBody coordinate_sum_body(int m, const Real& radius);
ConvexBody dilated_body(const ConvexBody& body, const Real& factor);

struct ConvexBodyReport {
  int m = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  std::string body_name;
  Real dilation;            // factor bringing the volume to (24-eps) zeta(4m)
  Real target_volume;
  Real mean_primitive_count;
  long best_count = 0;
  int found_at = -1;        // sample index of the first empty body
  bool success = false;
  LiftedLattice best;
  Real density;             // target_volume / 2^{4m} on success
  Real nominal_density;     // 3 zeta(4m) / 2^{4m-3}
};

// Searches for a lift avoiding the dilated body entirely; unit-orbit
// counts are verified to be multiples of 24, and unit invariance of the
// membership test is spot-checked up front.
ConvexBodyReport convex_body_search(const ConvexBody& body, int m,
                                    const Real& eps, int samples,
                                    std::uint64_t seed,
                                    const EnumerationOptions& options = {});

// Plain adaptive Simpson quadrature on [lo, hi].
Real adaptive_simpson(const std::function<Real(const Real&)>& f, const Real& lo,
                      const Real& hi, const Real& tolerance);

}  // namespace hurwitz

#endif  // HURWITZ_CONSTRUCTIONS_HPP
