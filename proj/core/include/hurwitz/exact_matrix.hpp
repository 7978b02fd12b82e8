#ifndef HURWITZ_EXACT_MATRIX_HPP
#define HURWITZ_EXACT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hurwitz/numeric.hpp"

namespace hurwitz {

// Dense row-major rational matrix, just large enough for exact linear
// algebra on lattice bases (dimensions here stay below ~100).
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RationalMatrix transposed() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// A^T * A (the Gram matrix of the columns of A).
RationalMatrix gram_of_columns(const RationalMatrix& a);

// Exact determinant via fraction-free Bareiss elimination on an integer
// scaling of the rows.  Throws DomainError if the matrix is not square.
Rational determinant(const RationalMatrix& a);

// Exact rank via Gaussian elimination over the rationals.
std::size_t rank(const RationalMatrix& a);

}  // namespace hurwitz

#endif  // HURWITZ_EXACT_MATRIX_HPP
