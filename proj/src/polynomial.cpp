#include "invtree/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace invtree {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const BigInt& c, int k) {
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = c;
  return IntPoly(std::move(coeffs));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[k];
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(k, 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(out));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at_dyadic(const BigInt& num, unsigned long exp) const {
  if (is_zero()) return 0;
  // 2^(exp*d) p(num/2^exp) = sum c_i num^i (2^exp)^(d-i), by homogeneous Horner.
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, exp);
  BigInt acc = coeffs_.back();
  BigInt weight = scale;
  for (int i = degree() - 1; i >= 0; --i) {
    acc = acc * num + coeffs_[i] * weight;
    weight *= scale;
  }
  return sgn(acc);
}

double IntPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k >= 1) out << var;
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

IntPoly power(const IntPoly& base, unsigned exponent) {
  IntPoly result{1};
  IntPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<BigInt> out(p.degree());
  for (int k = 1; k <= p.degree(); ++k) out[k - 1] = p.coeff(k) * k;
  return IntPoly(std::move(out));
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  std::vector<BigInt> out(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  IntPoly r = a;
  const BigInt lb = b.leading();
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    IntPoly term = b.shifted(r.degree() - b.degree()) * r.leading();
    r *= lb;
    r -= term;
    ++steps;
  }
  if (lb < 0 && steps % 2 == 1) r = -r;
  return r;
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<BigInt> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<BigInt> quot(a.degree() - b.degree() + 1);
  const BigInt& lb = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    BigInt& top = rem[k + b.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw std::domain_error("inexact polynomial division");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    quot[k] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.coeff(j);
  }
  for (const auto& c : rem) {
    if (c != 0) throw std::domain_error("inexact polynomial division");
  }
  return IntPoly(std::move(quot));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = primitive_part(signed_pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.is_zero() && x.leading() < 0) x = -x;
  return x;
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  std::vector<IntPoly> factors;
  if (p.degree() <= 0) return factors;
  IntPoly f = primitive_part(p);
  if (f.leading() < 0) f = -f;
  IntPoly df = derivative(f);
  IntPoly a = gcd(f, df);
  IntPoly b = exact_quotient(f, a);
  IntPoly c = exact_quotient(df, a);
  IntPoly d = c - derivative(b);
  while (b.degree() > 0) {
    a = gcd(b, d);
    factors.push_back(a);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
  }
  // Trailing constant factors carry no roots.
  while (!factors.empty() && factors.back().degree() <= 0) factors.pop_back();
  return factors;
}

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(primitive_part(p));
  IntPoly dp = derivative(p);
  if (dp.is_zero()) return chain;
  chain.push_back(primitive_part(dp));
  while (chain.back().degree() > 0) {
    IntPoly r = signed_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(primitive_part(-r));
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const BigInt& num, unsigned long exp) {
  int variations = 0;
  int last = 0;
  for (const auto& poly : chain) {
    int s = poly.sign_at_dyadic(num, exp);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace invtree
