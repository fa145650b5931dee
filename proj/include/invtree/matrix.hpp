#pragma once

#include <vector>

#include "invtree/polynomial.hpp"
#include "invtree/tree.hpp"

namespace invtree {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static IntMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  BigInt& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const BigInt& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  bool is_symmetric() const;
  bool operator==(const IntMatrix& other) const = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix adjacency_matrix(const Graph& graph);

/// Determinant by Bareiss fraction-free elimination.
BigInt determinant(IntMatrix a);

/// Exact inverse by fraction-free Gauss-Jordan elimination on [A | I].
/// Throws Errc::singular when det A = 0 and std::domain_error when the
/// inverse is not integral (|det A| != 1).
IntMatrix exact_inverse(const IntMatrix& a);

/// det(tI - A) by the division-free Berkowitz algorithm.
IntPoly matrix_char_poly(const IntMatrix& a);

}  // namespace invtree
