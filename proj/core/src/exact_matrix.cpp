#include "hurwitz/exact_matrix.hpp"

#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz {

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix gram_of_columns(const RationalMatrix& a) {
  RationalMatrix g(a.cols(), a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) {
      Rational s = 0;
      for (std::size_t r = 0; r < a.rows(); ++r) s += a.at(r, i) * a.at(r, j);
      g.at(i, j) = s;
      if (i != j) g.at(j, i) = s;
    }
  return g;
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  // Scale each row to integers; track the denominator product separately.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Integer den_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = a.at(i, j) * l;
      m[i][j] = scaled.get_num();  // exact: l clears every denominator in row i
    }
    den_product *= l;
  }

  // Bareiss: every division below is exact.
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  Rational det(sign * m[n - 1][n - 1], den_product);
  det.canonicalize();
  return det;
}

std::size_t rank(const RationalMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a.at(i, j);

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace hurwitz
