#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace invtree {

using BigInt = mpz_class;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, lowest degree first. The zero polynomial has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  /// c * t^k
  static IntPoly monomial(const BigInt& c, int k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of t^k (zero outside the stored range).
  BigInt coeff(int k) const;
  const BigInt& leading() const { return coeffs_.back(); }

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  IntPoly operator-() const;

  /// this * t^k
  IntPoly shifted(int k) const;

  BigInt evaluate(const BigInt& x) const;
  /// Sign (-1, 0, 1) of p(num / 2^exp), evaluated exactly.
  int sign_at_dyadic(const BigInt& num, unsigned long exp) const;
  double evaluate(double x) const;

  bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }

  /// e.g. "t^4 - 3t^2 + 1"
  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPoly power(const IntPoly& base, unsigned exponent);
IntPoly derivative(const IntPoly& p);

/// gcd of the coefficients, non-negative.
BigInt content(const IntPoly& p);
/// p / content(p), leading sign preserved.
IntPoly primitive_part(const IntPoly& p);

/// lc(b)^k * a mod b after k reduction steps, with the sign fixed so the
/// result is a positive multiple of the true remainder over Q.
IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Exact a / b in Z[t]; throws std::domain_error if b does not divide a.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (zero if both are zero).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Yun decomposition p = c * prod f_i^i with pairwise coprime squarefree
/// f_i. Entry i-1 holds f_i (constant 1 when absent).
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/// Sturm chain p, p', -rem(...), ... with each member made primitive by a
/// positive factor. p must be squarefree.
std::vector<IntPoly> sturm_sequence(const IntPoly& p);

/// Sign variations of the chain at num / 2^exp, zeros skipped.
int sign_variations(const std::vector<IntPoly>& chain, const BigInt& num, unsigned long exp);

}  // namespace invtree
