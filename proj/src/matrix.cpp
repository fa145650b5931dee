#include "invtree/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "invtree/error.hpp"

namespace invtree {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntMatrix adjacency_matrix(const Graph& graph) {
  IntMatrix out(graph.order(), graph.order());
  for (const Edge& e : graph.edges()) {
    out(e.u, e.v) = 1;
    out(e.v, e.u) = 1;
  }
  return out;
}

namespace {

void divexact_checked(BigInt& x, const BigInt& d) {
  if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) {
    throw std::logic_error("fraction-free elimination produced an inexact division");
  }
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

// Row swap on the first pivot candidate; returns false if column k is zero
// from row k down.
bool pivot_first_nonzero(IntMatrix& m, int k, int& sign) {
  int p = k;
  while (p < m.rows() && m(p, k) == 0) ++p;
  if (p == m.rows()) return false;
  if (p != k) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(k, j));
    sign = -sign;
  }
  return true;
}

}  // namespace

BigInt determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (!pivot_first_nonzero(a, k, sign)) return 0;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        divexact_checked(a(i, j), prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix exact_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = a.rows();
  IntMatrix m(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = 1;
  }
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n; ++k) {
    if (!pivot_first_nonzero(m, k, sign)) {
      throw Error(Errc::singular, "matrix is singular");
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const BigInt factor = m(i, k);
      for (int j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        m(i, j) = m(k, k) * m(i, j) - factor * m(k, j);
        divexact_checked(m(i, j), prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  // Left block is now prev * I and the right block prev * A^{-1}.
  IntMatrix inverse(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BigInt x = m(i, n + j);
      if (!mpz_divisible_p(x.get_mpz_t(), prev.get_mpz_t())) {
        throw std::domain_error("inverse is not integral");
      }
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      inverse(i, j) = std::move(x);
    }
  }
  return inverse;
}

IntPoly matrix_char_poly(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char poly of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return IntPoly{1};
  // Coefficients highest degree first.
  std::vector<BigInt> p{1, -a(0, 0)};
  for (int r = 1; r < n; ++r) {
    std::vector<BigInt> q(r + 2);
    q[0] = 1;
    q[1] = -a(r, r);
    std::vector<BigInt> v(r);
    for (int i = 0; i < r; ++i) v[i] = a(i, r);
    for (int k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (int j = 0; j < r; ++j) dot += a(r, j) * v[j];
      q[k + 2] = -dot;
      std::vector<BigInt> next(r);
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) next[i] += a(i, j) * v[j];
      }
      v = std::move(next);
    }
    std::vector<BigInt> np(r + 2);
    for (int i = 0; i < r + 2; ++i) {
      for (int j = 0; j <= std::min(i, r); ++j) np[i] += q[i - j] * p[j];
    }
    p = std::move(np);
  }
  return IntPoly(std::vector<BigInt>(p.rbegin(), p.rend()));
}

}  // namespace invtree
