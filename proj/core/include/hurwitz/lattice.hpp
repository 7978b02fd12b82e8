#ifndef HURWITZ_LATTICE_HPP
#define HURWITZ_LATTICE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hurwitz/exact_matrix.hpp"
#include "hurwitz/numeric.hpp"
#include "hurwitz/quaternion.hpp"

namespace hurwitz {

// One lattice point.  `z` holds its 4m coordinates with respect to the
// integer generators omega_s * b_t of the module basis; `norm_sq` is the
// squared Euclidean length before the global scale factor.  The module
// coefficients and the ambient quaternion components are optional and
// filled by HurwitzLattice::materialize.
struct LatticeVector {
  std::vector<long> z;
  Rational norm_sq;
  std::vector<HurwitzInteger> coeffs;
  std::vector<Quaternion> ambient;
};

// Free rank-m module over the Hurwitz order sitting in H^m, stored as a
// rational basis plus one positive real scale factor.  The lattice it
// describes is { scale * sum_t c_t b_t : c_t Hurwitz integers }, viewed in
// R^{4m} through the coordinate embedding.
class HurwitzLattice {
 public:
  HurwitzLattice(int rank, std::vector<std::vector<Quaternion>> basis,
                 Real scale = Real(1), std::string comment = "");

  // The standard module W^m with the identity basis.
  static HurwitzLattice standard(int rank);

  int rank() const { return m_; }
  int ambient_dim() const { return 4 * m_; }
  const std::vector<std::vector<Quaternion>>& basis() const { return basis_; }
  const Real& scale() const { return scale_; }
  const std::string& comment() const { return comment_; }

  // 4m x 4m matrix whose column 4t+s is the embedding of omega_s * b_t,
  // omega_s running over {1, i, j, omega}.
  const RationalMatrix& generator_matrix() const { return gen_; }
  const RationalMatrix& gram() const { return gram_; }

  // |det| of the generator matrix (no scale), and with the scale applied.
  const Rational& skeleton_determinant() const { return skel_det_; }
  Real determinant() const;

  LatticeVector vector_from_coords(std::vector<long> z) const;
  void materialize(LatticeVector& v) const;
  Real length(const LatticeVector& v) const;

  // True when the coordinate vector is not a proper integer multiple of
  // another lattice point.  Throws DomainError for the zero vector.
  bool is_primitive(const LatticeVector& v) const;

  // Packing density attained if min_length is the shortest vector length.
  Real density(const Real& min_length) const;

  HurwitzLattice with_scale(Real new_scale) const;
  // Elementary module operation b_t += w * b_s (t != s); determinant is
  // unchanged.
  HurwitzLattice row_added(int t, int s, const HurwitzInteger& w) const;
  // Left-multiplies basis vector t by a unit; the lattice is unchanged as
  // a set, which makes this handy for equivalence tests.
  HurwitzLattice row_unit_scaled(int t, const HurwitzInteger& u) const;

  static HurwitzLattice load(std::istream& in);
  static HurwitzLattice load_file(const std::string& path);
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

 private:
  int m_;
  std::vector<std::vector<Quaternion>> basis_;
  Real scale_;
  std::string comment_;
  RationalMatrix gen_, gram_;
  Rational skel_det_;
};

}  // namespace hurwitz

#endif  // HURWITZ_LATTICE_HPP
