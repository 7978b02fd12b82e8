#ifndef HURWITZ_ENUMERATION_HPP
#define HURWITZ_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "hurwitz/lattice.hpp"

namespace hurwitz {

struct EnumerationOptions {
  // Hard cap on accepted vectors; CapacityError beyond it.
  std::uint64_t max_vectors = 10'000'000;
  // Fill module coefficients and ambient components of every result.
  bool materialize = false;
};

// All nonzero lattice vectors of length <= radius (true length, scale
// included).  Membership at the boundary is decided exactly on the
// rational Gram form; floating point only prunes the search tree, with a
// relative slack of 2^-30 so pruning never loses an admissible point.
// Results are sorted by (squared length, coordinate lex order) and come
// in +-v pairs.
std::vector<LatticeVector> short_vectors(const HurwitzLattice& lattice,
                                         const Real& radius,
                                         const EnumerationOptions& options = {});

// Whether quaternion vectors are left-independent over the quaternions:
// rank of the real matrix spanned by {u v : u in {1,i,j,k}} is 4*count.
bool h_independent(const std::vector<std::vector<Quaternion>>& vectors);

struct MinimaReport {
  // Successive minima lengths (scale applied), weakly increasing.
  std::vector<Real> minima;
  // Exact squared lengths before the scale factor.
  std::vector<Rational> norms_sq;
  // Attaining vectors, materialized.
  std::vector<LatticeVector> witnesses;
  Real product() const;  // product of the minima
};

// Quaternionic successive minima: greedily scans vectors in increasing
// length and keeps each one that stays H-independent from those already
// kept; the scan radius starts at a Minkowski-style determinant estimate
// and grows by 2^{1/4} until all rank() minima are found.
MinimaReport quaternionic_minima(const HurwitzLattice& lattice,
                                 const EnumerationOptions& options = {});

// Number of vectors whose pre-scale squared length equals norm_sq
// exactly (e.g. the minimal-vector count when norm_sq is the first
// minimum's squared length).
long vector_count_at(const HurwitzLattice& lattice, const Rational& norm_sq,
                     const EnumerationOptions& options = {});

}  // namespace hurwitz

#endif  // HURWITZ_ENUMERATION_HPP
