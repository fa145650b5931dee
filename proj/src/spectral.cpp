#include "invtree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "invtree/charpoly.hpp"
#include "invtree/error.hpp"

namespace invtree {

namespace {

constexpr unsigned long kMaxExponent = 4096;

double dyadic_to_double(const BigInt& num, unsigned long exp) {
  mpq_class q(num);
  mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), exp);
  q.canonicalize();
  return q.get_d();
}

// sign of (a / 2^ea) - (b / 2^eb)
int compare_dyadic(const BigInt& a, unsigned long ea, const BigInt& b, unsigned long eb) {
  BigInt lhs = a, rhs = b;
  if (ea < eb) {
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), eb - ea);
  } else {
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), ea - eb);
  }
  return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

// Every root lies strictly inside (-B, B) for B = 1 + max |c_i / c_d|.
BigInt cauchy_bound(const IntPoly& p) {
  BigInt max_ratio = 0;
  const BigInt lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    BigInt r = abs(p.coeff(k));
    mpz_cdiv_q(r.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t());
    max_ratio = std::max(max_ratio, r);
  }
  return max_ratio + 1;
}

struct Pending {
  BigInt lo, hi;
  unsigned long exp;
  int count;
};

void isolate(const IntPoly& squarefree, int multiplicity, std::vector<RealRoot>& out) {
  auto poly = std::make_shared<const IntPoly>(squarefree);
  const auto chain = sturm_sequence(squarefree);
  auto variations = [&](const BigInt& x, unsigned long e) { return sign_variations(chain, x, e); };

  const BigInt bound = cauchy_bound(squarefree);
  std::vector<Pending> stack;
  stack.push_back({-bound, bound, 0, variations(-bound, 0) - variations(bound, 0)});
  while (!stack.empty()) {
    Pending iv = std::move(stack.back());
    stack.pop_back();
    if (iv.count == 0) continue;
    if (iv.count == 1) {
      if (poly->sign_at_dyadic(iv.hi, iv.exp) == 0) {
        out.emplace_back(poly, iv.hi, iv.hi, iv.exp, multiplicity);
      } else {
        out.emplace_back(poly, iv.lo, iv.hi, iv.exp, multiplicity);
      }
      continue;
    }
    if (iv.exp > kMaxExponent) throw std::logic_error("root isolation did not converge");
    const unsigned long e = iv.exp + 1;
    BigInt lo = iv.lo * 2, hi = iv.hi * 2, mid = iv.lo + iv.hi;
    const int left = variations(lo, e) - variations(mid, e);
    stack.push_back({mid, hi, e, iv.count - left});
    stack.push_back({lo, mid, e, left});
  }
}

}  // namespace

RealRoot::RealRoot(std::shared_ptr<const IntPoly> squarefree, BigInt lo, BigInt hi, unsigned long exp,
                   int multiplicity)
    : poly_(std::move(squarefree)), lo_(std::move(lo)), hi_(std::move(hi)), exp_(exp), multiplicity_(multiplicity) {
  sign_hi_ = poly_->sign_at_dyadic(hi_, exp_);
  if (sign_hi_ == 0) lo_ = hi_;
}

double RealRoot::lower() const { return dyadic_to_double(lo_, exp_); }
double RealRoot::upper() const { return dyadic_to_double(hi_, exp_); }
double RealRoot::midpoint() const { return dyadic_to_double(lo_ + hi_, exp_ + 1); }
double RealRoot::width() const { return dyadic_to_double(hi_ - lo_, exp_); }

void RealRoot::bisect() {
  if (is_exact()) return;
  BigInt mid = lo_ + hi_;
  lo_ *= 2;
  hi_ *= 2;
  ++exp_;
  const int s = poly_->sign_at_dyadic(mid, exp_);
  if (s == 0) {
    lo_ = mid;
    hi_ = std::move(mid);
    sign_hi_ = 0;
  } else if (s != sign_hi_) {
    lo_ = std::move(mid);  // sign change lies in (mid, hi]
  } else {
    hi_ = std::move(mid);
  }
}

void RealRoot::refine_to(double width_limit) {
  while (!is_exact() && width() > width_limit) {
    if (exp_ > kMaxExponent) throw std::logic_error("root refinement did not converge");
    bisect();
  }
}

std::vector<RealRoot> real_roots(const IntPoly& p) {
  std::vector<RealRoot> roots;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() > 0) isolate(factors[i], static_cast<int>(i) + 1, roots);
  }
  // Insertion sort: the comparator refines intervals in place.
  for (std::size_t i = 1; i < roots.size(); ++i) {
    for (std::size_t j = i; j > 0 && compare_roots(roots[j], roots[j - 1]) < 0; --j) {
      std::swap(roots[j], roots[j - 1]);
    }
  }
  return roots;
}

std::strong_ordering compare_roots(RealRoot& a, RealRoot& b) {
  for (;;) {
    // a < b once hi(a) <= lo(b), strictly when b sits exactly at lo(b).
    const int ab = compare_dyadic(a.hi_num(), a.exponent(), b.lo_num(), b.exponent());
    if (ab < 0 || (ab == 0 && !b.is_exact())) return std::strong_ordering::less;
    const int ba = compare_dyadic(b.hi_num(), b.exponent(), a.lo_num(), a.exponent());
    if (ba < 0 || (ba == 0 && !a.is_exact())) return std::strong_ordering::greater;
    if (a.is_exact() && b.is_exact()) return std::strong_ordering::equal;

    if (a.width() < kDefaultTolerance && b.width() < kDefaultTolerance) {
      // Any common root of the two polynomials inside both intervals is the
      // unique root of each.
      const IntPoly g = gcd(a.poly(), b.poly());
      if (g.degree() > 0) {
        const bool lo_from_a = compare_dyadic(a.lo_num(), a.exponent(), b.lo_num(), b.exponent()) >= 0;
        const bool hi_from_a = compare_dyadic(a.hi_num(), a.exponent(), b.hi_num(), b.exponent()) <= 0;
        const RealRoot& lo_src = lo_from_a ? a : b;
        const RealRoot& hi_src = hi_from_a ? a : b;
        const auto chain = sturm_sequence(g);
        int common;
        if (a.is_exact() || b.is_exact()) {
          const RealRoot& exact = a.is_exact() ? a : b;
          common = g.sign_at_dyadic(exact.hi_num(), exact.exponent()) == 0 ? 1 : 0;
        } else {
          common = sign_variations(chain, lo_src.lo_num(), lo_src.exponent()) -
                   sign_variations(chain, hi_src.hi_num(), hi_src.exponent());
        }
        if (common > 0) return std::strong_ordering::equal;
      }
    }
    if (a.exponent() > kMaxExponent || b.exponent() > kMaxExponent) {
      throw std::logic_error("root comparison did not converge");
    }
    if (a.width() >= b.width()) {
      a.bisect();
    } else {
      b.bisect();
    }
  }
}

Spectrum spectrum_of(const IntPoly& char_poly, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  Spectrum out;
  out.tol = tol;
  for (RealRoot& root : real_roots(char_poly)) {
    root.refine_to(tol);
    out.values.insert(out.values.end(), root.multiplicity(), root.midpoint());
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

Spectrum spectrum(const Tree& tree, double tol) { return spectrum_of(char_poly(tree), tol); }

RealRoot certified_median(const Tree& tree) {
  if (tree.order() % 2 != 0) {
    throw Error(Errc::odd_order, "median eigenvalue needs an even number of vertices");
  }
  // Ascending index n of 2n values is the n-th largest.
  const int target = tree.order() / 2;
  int seen = 0;
  for (RealRoot& root : real_roots(char_poly(tree))) {
    seen += root.multiplicity();
    if (seen > target) return root;
  }
  throw std::logic_error("characteristic polynomial has too few real roots");
}

double median_eigenvalue(const Tree& tree) {
  RealRoot root = certified_median(tree);
  root.refine_to(kDefaultTolerance);
  return root.midpoint();
}

std::strong_ordering compare_medians(const Tree& a, const Tree& b) {
  RealRoot ra = certified_median(a);
  RealRoot rb = certified_median(b);
  return compare_roots(ra, rb);
}

Spectrum rooted_product_spectrum(const Tree& base, double tol) {
  Spectrum theta = spectrum(base, tol);
  Spectrum out;
  out.tol = tol;
  for (double t : theta.values) {
    const double root = std::sqrt(t * t + 4.0);
    out.values.push_back((t + root) / 2.0);
    out.values.push_back((t - root) / 2.0);
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

IntPoly rooted_product_char_poly(const Tree& base) {
  const IntPoly phi = char_poly(base);
  const int n = base.order();
  const IntPoly shift{-1, 0, 1};  // t^2 - 1
  IntPoly out;
  for (int k = 0; k <= phi.degree(); ++k) {
    if (phi.coeff(k) == 0) continue;
    out += (power(shift, k) * phi.coeff(k)).shifted(n - k);
  }
  return out;
}

std::vector<double> path_eigenvalues(int n) {
  std::vector<double> out;
  for (int j = 1; j <= n; ++j) out.push_back(2.0 * std::cos(std::numbers::pi * j / (n + 1)));
  std::sort(out.begin(), out.end());
  return out;
}

MedianBound caterpillar_median_bound(int n) {
  RealRoot median = certified_median(elongated_caterpillar(n));
  median.refine_to(kDefaultTolerance);
  MedianBound out;
  out.median = median.midpoint();
  out.bound = 1.0 / (1.0 + std::numbers::sqrt2);
  // Margin far above the rounding error of the double constant.
  out.holds = median.lower() >= out.bound + 1e-15 || (median.is_exact() && median.lower() >= out.bound);
  return out;
}

double symmetry_defect(const Spectrum& s) {
  double worst = 0.0;
  const std::size_t n = s.values.size();
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(s.values[i] + s.values[n - 1 - i]));
  return worst;
}

}  // namespace invtree
