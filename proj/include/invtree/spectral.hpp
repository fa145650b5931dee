#pragma once

#include <compare>
#include <memory>
#include <vector>

#include "invtree/polynomial.hpp"
#include "invtree/tree.hpp"

namespace invtree {

inline constexpr double kDefaultTolerance = 1e-12;

/// A real root of a squarefree integer polynomial, certified to lie in the
/// dyadic interval (lo, hi] = (lo_num / 2^exp, hi_num / 2^exp]. When
/// lo == hi the root is exactly that dyadic number; otherwise poly(hi) != 0.
class RealRoot {
 public:
  RealRoot(std::shared_ptr<const IntPoly> squarefree, BigInt lo, BigInt hi, unsigned long exp,
           int multiplicity);

  const IntPoly& poly() const noexcept { return *poly_; }
  int multiplicity() const noexcept { return multiplicity_; }
  bool is_exact() const noexcept { return lo_ == hi_; }

  double lower() const;
  double upper() const;
  double midpoint() const;
  double width() const;

  /// Halves the interval (no-op once exact).
  void bisect();
  /// Bisects until width() <= width_limit.
  void refine_to(double width_limit);

  const BigInt& lo_num() const noexcept { return lo_; }
  const BigInt& hi_num() const noexcept { return hi_; }
  unsigned long exponent() const noexcept { return exp_; }

 private:
  std::shared_ptr<const IntPoly> poly_;
  BigInt lo_;
  BigInt hi_;
  unsigned long exp_;
  int sign_hi_ = 0;
  int multiplicity_;
};

/// All distinct real roots of p, ascending, each with its multiplicity,
/// isolated by Sturm sequences on the squarefree factors of p.
std::vector<RealRoot> real_roots(const IntPoly& p);

/// Certified three-way comparison. Intervals are refined until disjoint;
/// below 1e-12 width equality is decided by a common root of the gcd.
std::strong_ordering compare_roots(RealRoot& a, RealRoot& b);

/// Nondecreasing eigenvalues, each within tol of the true value.
struct Spectrum {
  std::vector<double> values;
  double tol = kDefaultTolerance;
};

Spectrum spectrum_of(const IntPoly& char_poly, double tol = kDefaultTolerance);
Spectrum spectrum(const Tree& tree, double tol = kDefaultTolerance);

/// lambda_n for a tree on 2n vertices (the n-th largest eigenvalue) as a
/// certified root. Throws Errc::odd_order.
RealRoot certified_median(const Tree& tree);
double median_eigenvalue(const Tree& tree);
std::strong_ordering compare_medians(const Tree& a, const Tree& b);

/// Eigenvalues of Y(K2,...,K2) from those of Y: theta +- sqrt(theta^2 + 4)
/// over 2, sorted.
Spectrum rooted_product_spectrum(const Tree& base, double tol = kDefaultTolerance);

/// t^n phi(Y, (t^2 - 1) / t) with the denominator cleared, n = order(Y).
IntPoly rooted_product_char_poly(const Tree& base);

/// 2 cos(pi j / (n + 1)), j = 1..n, ascending.
std::vector<double> path_eigenvalues(int n);

struct MedianBound {
  double median = 0.0;
  double bound = 0.0;
  bool holds = false;
};

/// lambda_n(T_{2n}) against 1 / (1 + sqrt 2); `holds` is decided from the
/// certified lower end of the median's interval.
MedianBound caterpillar_median_bound(int n);

/// Largest |values[i] + values[size-1-i]| (zero for a spectrum symmetric
/// about the origin).
double symmetry_defect(const Spectrum& s);

}  // namespace invtree
