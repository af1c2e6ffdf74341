#ifndef RAG_QMATRIX_HPP
#define RAG_QMATRIX_HPP

#include <vector>

#include "rag/rational.hpp"

namespace rag {

// Dense matrix of rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  // Exact rank by fraction-free (Bareiss) elimination on the cleared
  // integer matrix.
  size_t rank() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

inline size_t QMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // clear denominators row-wise
  std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_));
  for (size_t i = 0; i < rows_; ++i) {
    Integer den = 1;
    for (size_t j = 0; j < cols_; ++j) den = lcm(den, at(i, j).get_den());
    for (size_t j = 0; j < cols_; ++j)
      m[i][j] = at(i, j).get_num() * (den / at(i, j).get_den());
  }
  size_t rk = 0;
  Integer prev = 1;
  for (size_t col = 0; col < cols_ && rk < rows_; ++col) {
    size_t piv = rk;
    while (piv < rows_ && mpz_sgn(m[piv][col].get_mpz_t()) == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(m[rk], m[piv]);
    for (size_t i = rk + 1; i < rows_; ++i) {
      for (size_t j = col + 1; j < cols_; ++j)
        m[i][j] = (m[i][j] * m[rk][col] - m[i][col] * m[rk][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rk][col];
    ++rk;
  }
  return rk;
}

}  // namespace rag

#endif
