#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fusionlab {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial over the integers, coefficients in ascending
// degree. The zero polynomial has an empty coefficient list.
class IntPolynomial {
public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

  // x - root
  static IntPolynomial linear(const BigInt& root) { return IntPolynomial(std::vector<BigInt>{-root, BigInt(1)}); }

  static IntPolynomial monomial(std::size_t degree) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = 1;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  const BigInt& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  bool is_constant() const { return coeffs_.size() <= 1; }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long long>(i);
    return IntPolynomial(std::move(d));
  }

  // gcd of the coefficients, nonnegative; zero for the zero polynomial.
  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    return boost::multiprecision::abs(g);
  }

  // Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    BigInt g = content();
    if (coeffs_.back() < 0) g = -g;
    std::vector<BigInt> c(coeffs_);
    for (auto& v : c) v /= g;
    return IntPolynomial(std::move(c));
  }

  // p(k x) * k^(deg - i) scaling: returns sum c_i k^(deg-i) x^i, i.e. the
  // monic polynomial whose roots are k times the roots of a monic p.
  IntPolynomial scale_roots(const BigInt& k) const {
    if (is_zero()) return {};
    std::vector<BigInt> c(coeffs_);
    BigInt power = 1;
    for (std::size_t i = c.size(); i-- > 0;) {
      c[i] *= power;
      power *= k;
    }
    return IntPolynomial(std::move(c));
  }

  IntPolynomial pow(unsigned exponent) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (exponent != 0) {
      if (exponent & 1U) result = result * base;
      exponent >>= 1U;
      if (exponent != 0) base = base * base;
    }
    return result;
  }

  // Division by (x - r) when r is a root. Returns false and leaves the
  // quotient untouched otherwise.
  bool divide_by_root(const BigInt& r, IntPolynomial& quotient) const {
    if (coeffs_.size() < 2) return false;
    std::vector<BigInt> q(coeffs_.size() - 1);
    BigInt carry = 0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) {
      carry = coeffs_[i] + carry * r;
      q[i - 1] = carry;
    }
    if (coeffs_[0] + carry * r != 0) return false;
    quotient = IntPolynomial(std::move(q));
    return true;
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
  }

  // Euclidean division by a divisor with leading coefficient +-1. Exact over Z.
  static std::pair<IntPolynomial, IntPolynomial> divmod_unit(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const BigInt& lead = b.leading();
    if (lead != 1 && lead != -1) throw std::domain_error("divisor leading coefficient must be a unit");
    if (a.degree() < b.degree()) return {IntPolynomial{}, a};
    std::vector<BigInt> rem(a.coeffs_);
    std::vector<BigInt> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
    const std::size_t db = b.coeffs_.size() - 1;
    for (std::size_t i = rem.size(); i-- > db;) {
      BigInt f = rem[i] * lead;  // lead is its own inverse
      if (f == 0) continue;
      quot[i - db] = f;
      for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs_[j];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  }

  // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
  static IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<BigInt> rem(a.coeffs_);
    const std::size_t db = b.coeffs_.size() - 1;
    const BigInt& lb = b.coeffs_.back();
    for (std::size_t i = rem.size(); i-- > db;) {
      BigInt f = rem[i];
      for (auto& v : rem) v *= lb;
      if (f != 0)
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs_[j];
      rem.resize(i);
    }
    return IntPolynomial(std::move(rem));
  }

  // Primitive gcd over Z[x] (positive leading coefficient); gcd(0,0) = 0.
  static IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      IntPolynomial r = pseudo_remainder(a, b);
      a = std::move(b);
      b = r.primitive_part();
    }
    return a.primitive_part();
  }

  // Monic squarefree part p / gcd(p, p'). Requires p monic.
  IntPolynomial squarefree_part() const {
    if (!is_monic()) throw std::domain_error("squarefree part requires a monic polynomial");
    if (degree() <= 1) return *this;
    IntPolynomial g = gcd(*this, derivative());
    return divmod_unit(*this, g).first;
  }

  // Yun decomposition of a monic polynomial: factors f_1, f_2, ... with
  // p = prod f_i^i, each f_i squarefree and monic (possibly 1).
  std::vector<IntPolynomial> squarefree_decomposition() const {
    if (!is_monic()) throw std::domain_error("squarefree decomposition requires a monic polynomial");
    std::vector<IntPolynomial> factors;
    if (degree() < 1) return factors;
    IntPolynomial a = *this;
    IntPolynomial b = a.derivative();
    IntPolynomial c = gcd(a, b);
    IntPolynomial w = divmod_unit(a, c).first;
    while (w.degree() > 0) {
      IntPolynomial y = gcd(w, c);
      factors.push_back(divmod_unit(w, y).first);
      w = y;
      c = divmod_unit(c, y).first;
    }
    return factors;
  }

  // Plain expanded form, e.g. "x^3-2*x+1".
  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = boost::multiprecision::abs(c);
      if (c < 0)
        out << "-";
      else if (!first)
        out << "+";
      first = false;
      if (i == 0 || mag != 1) {
        out << mag;
        if (i != 0) out << "*";
      }
      if (i >= 1) out << var;
      if (i >= 2) out << "^" << i;
    }
    return out.str();
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

namespace detail {

inline std::string power_suffix(std::size_t m) { return m > 1 ? "^" + std::to_string(m) : std::string(); }

inline std::string linear_factor(const BigInt& root) {
  if (root == 0) return "x";
  std::ostringstream out;
  out << "(x" << (root > 0 ? "-" : "+") << boost::multiprecision::abs(root) << ")";
  return out.str();
}

}  // namespace detail

// Integer roots in [-bound, bound] with multiplicity, plus the cofactor.
struct RootSplit {
  std::vector<std::pair<BigInt, std::size_t>> roots;  // ascending by root
  IntPolynomial residual;
};

// Extracts every integer root of p within [-bound, bound] to full multiplicity
// by repeated synthetic division. The zero root is handled first so that the
// remaining scan never meets a vanishing constant term.
inline RootSplit integer_roots(const IntPolynomial& p, long long bound) {
  if (p.is_zero()) throw std::domain_error("integer roots of the zero polynomial");
  if (bound < 0) throw std::invalid_argument("negative root bound");
  RootSplit split;
  IntPolynomial rest = p;
  std::size_t zeros = 0;
  while (rest.degree() > 0 && rest.coefficient(0) == 0) {
    std::vector<BigInt> c(rest.coefficients().begin() + 1, rest.coefficients().end());
    rest = IntPolynomial(std::move(c));
    ++zeros;
  }
  std::vector<std::pair<BigInt, std::size_t>> found;
  if (zeros != 0) found.emplace_back(BigInt(0), zeros);
  for (long long r = -bound; r <= bound; ++r) {
    if (r == 0 || rest.degree() < 1) continue;
    // An integer root of a monic integer polynomial divides its constant term.
    if (rest.is_monic() && rest.coefficient(0) % r != 0) continue;
    std::size_t mult = 0;
    IntPolynomial q;
    while (rest.divide_by_root(BigInt(r), q)) {
      rest = std::move(q);
      ++mult;
    }
    if (mult != 0) found.emplace_back(BigInt(r), mult);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  split.roots = std::move(found);
  split.residual = std::move(rest);
  return split;
}

// Product of (x - r)^m over the given roots.
inline IntPolynomial from_roots(const std::vector<std::pair<BigInt, std::size_t>>& roots) {
  IntPolynomial acc = IntPolynomial::constant(1);
  for (const auto& [r, m] : roots) acc = acc * IntPolynomial::linear(r).pow(static_cast<unsigned>(m));
  return acc;
}

// Human-readable factored form: integer-linear factors split off, the rest
// grouped by squarefree decomposition, e.g. "x*(x-2)*(x+2)*(x^2-12)".
inline std::string factored_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  if (!p.is_monic()) return p.to_string();
  long long bound = 0;
  {
    // Cauchy bound on root magnitude.
    BigInt maxc = 0;
    for (const auto& c : p.coefficients()) maxc = std::max(maxc, BigInt(boost::multiprecision::abs(c)));
    bound = maxc > 1000000 ? 1000000 : static_cast<long long>(maxc) + 1;
  }
  RootSplit split = integer_roots(p, bound);
  std::vector<std::string> parts;
  for (const auto& [r, m] : split.roots) parts.push_back(detail::linear_factor(r) + detail::power_suffix(m));
  if (split.residual.degree() > 0) {
    auto factors = split.residual.squarefree_decomposition();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() < 1) continue;
      parts.push_back("(" + factors[i].to_string() + ")" + detail::power_suffix(i + 1));
    }
  }
  if (parts.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += "*";
    out += parts[i];
  }
  return out;
}

}  // namespace fusionlab
