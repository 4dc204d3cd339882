#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fusionlab {

using Element = std::uint32_t;

// Images of 0..degree-1; composition is left to right: (a*b)(i) = b(a(i)).
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultElementCap = 10000;

class GroupTooLarge : public std::runtime_error {
public:
  explicit GroupTooLarge(std::size_t cap)
      : std::runtime_error("group closure exceeds element cap of " + std::to_string(cap)) {}
};

class InvalidPermutation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class WordError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline bool is_bijection(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) return false;
  std::vector<bool> seen(degree, false);
  for (auto v : p) {
    if (v >= degree || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Parses disjoint-cycle notation with 1-based single-digit or comma separated
// points, e.g. "(12)(34)" or "(1,10,3)". "()" and "1" denote the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  if (text == "1" || text == "()" || text.empty()) return p;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidPermutation("expected '(' in cycle notation: " + std::string(text));
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw InvalidPermutation("unterminated cycle: " + std::string(text));
    std::string_view body = text.substr(i + 1, close - i - 1);
    std::vector<std::uint32_t> pts;
    if (body.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        std::string tok(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        pts.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else {
      for (char ch : body) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw InvalidPermutation("bad cycle point: " + std::string(text));
        pts.push_back(static_cast<std::uint32_t>(ch - '0'));
      }
    }
    for (std::size_t k = 0; k < pts.size(); ++k) {
      std::uint32_t from = pts[k], to = pts[(k + 1) % pts.size()];
      if (from == 0 || from > degree || to == 0 || to > degree)
        throw InvalidPermutation("cycle point out of range: " + std::string(text));
      p[from - 1] = to - 1;
    }
    i = close + 1;
  }
  if (!is_bijection(p, degree)) throw InvalidPermutation("cycles are not disjoint: " + std::string(text));
  return p;
}

// A finite group as an exact Cayley table. Element 0 is the identity. The
// faithful permutation model used to build it is kept so that elements can be
// named by cycles or by words in the named generators.
class FiniteGroup {
public:
  FiniteGroup() = default;

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<Element>& inverses() const { return inverse_; }

  // row-major; table()[a * order() + b] == a * b
  const std::vector<Element>& table() const { return table_; }

  std::size_t degree() const { return degree_; }
  const Permutation& permutation(Element a) const { return elements_[a]; }

  std::optional<Element> find(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<std::string>& generator_names() const { return generator_names_; }
  const std::vector<Element>& generators() const { return generators_; }

  Element power(Element a, long long k) const {
    if (k < 0) {
      a = inverse(a);
      k = -k;
    }
    Element result = 0;
    while (k-- > 0) result = mul(result, a);
    return result;
  }

  // Evaluates a word like "x^2y^-1z" or "xy^2z" over the named generators;
  // concatenation is the group product, "1" is the identity.
  Element word(std::string_view text) const {
    Element acc = 0;
    if (text == "1" || text == "e") return acc;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t best = 0;
      std::size_t gen = 0;
      for (std::size_t g = 0; g < generator_names_.size(); ++g) {
        const auto& nm = generator_names_[g];
        if (nm.size() > best && text.substr(i, nm.size()) == nm) {
          best = nm.size();
          gen = g;
        }
      }
      if (best == 0) throw WordError("unknown generator in word '" + std::string(text) + "'");
      i += best;
      long long exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t start = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && text[start] == '-'))
          throw WordError("missing exponent in word '" + std::string(text) + "'");
        exponent = std::stoll(std::string(text.substr(start, i - start)));
      }
      acc = mul(acc, power(generators_[gen], exponent));
    }
    return acc;
  }

  std::vector<std::size_t> element_orders() const {
    std::vector<std::size_t> orders(order_, 0);
    for (Element a = 0; a < order_; ++a) {
      std::size_t k = 1;
      Element x = a;
      while (x != 0) {
        x = mul(x, a);
        ++k;
      }
      orders[a] = k;
    }
    return orders;
  }

  std::size_t exponent() const {
    std::size_t e = 1;
    for (auto o : element_orders()) e = std::lcm(e, o);
    return e;
  }

  bool is_abelian() const {
    for (Element a = 0; a < order_; ++a)
      for (Element b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  // Identity, inverse and Latin-square laws; associativity when order <= assoc_limit.
  std::vector<std::string> validate(std::size_t assoc_limit = 64) const {
    std::vector<std::string> problems;
    const std::size_t n = order_;
    for (Element a = 0; a < n; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a) problems.push_back("identity law fails at " + std::to_string(a));
      if (mul(a, inverse(a)) != 0) problems.push_back("inverse law fails at " + std::to_string(a));
    }
    for (Element a = 0; a < n; ++a) {
      std::vector<bool> row(n, false), col(n, false);
      for (Element b = 0; b < n; ++b) {
        row[mul(a, b)] = true;
        col[mul(b, a)] = true;
      }
      if (std::find(row.begin(), row.end(), false) != row.end()) problems.push_back("row " + std::to_string(a) + " is not a permutation");
      if (std::find(col.begin(), col.end(), false) != col.end()) problems.push_back("column " + std::to_string(a) + " is not a permutation");
    }
    if (n <= assoc_limit) {
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
              problems.push_back("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
              return problems;
            }
    }
    return problems;
  }

  friend FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                                 std::vector<std::string> names, std::size_t cap);
  friend FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap);

private:
  void build_table() {
    const std::size_t n = elements_.size();
    order_ = n;
    table_.assign(n * n, 0);
    inverse_.assign(n, 0);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        Element c = index_.at(compose(elements_[a], elements_[b]));
        table_[a * n + b] = c;
        if (c == 0) inverse_[a] = b;
      }
  }

  std::size_t order_ = 0;
  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Permutation> elements_;
  std::map<Permutation, Element> index_;
  std::vector<std::string> generator_names_;
  std::vector<Element> generators_;
};

// Closure of the generators under composition, in breadth-first order from the
// identity: each discovered element is multiplied on the right by every
// generator in list order.
inline FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                               std::vector<std::string> names = {},
                                               std::size_t cap = kDefaultElementCap) {
  if (degree == 0) throw InvalidPermutation("degree must be positive");
  for (const auto& g : generators)
    if (!is_bijection(g, degree)) throw InvalidPermutation("generator is not a bijection on the given degree");
  if (!names.empty() && names.size() != generators.size())
    throw std::invalid_argument("generator name count does not match generator count");

  FiniteGroup group;
  group.degree_ = degree;
  group.elements_.push_back(identity_permutation(degree));
  group.index_.emplace(group.elements_.front(), 0);
  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = compose(group.elements_[head], gen);
      if (group.index_.count(next) != 0) continue;
      if (group.elements_.size() >= cap) throw GroupTooLarge(cap);
      group.index_.emplace(next, static_cast<Element>(group.elements_.size()));
      group.elements_.push_back(std::move(next));
    }
  }
  group.build_table();
  for (const auto& gen : generators) group.generators_.push_back(group.index_.at(gen));
  group.generator_names_ = std::move(names);
  return group;
}

// Componentwise product. The pair (g, h) gets index g * |H| + h, so (0, 0) is 0.
// The permutation model acts on the disjoint union of the two point sets.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap = kDefaultElementCap) {
  if (g.order() * h.order() > cap) throw GroupTooLarge(cap);
  FiniteGroup p;
  p.degree_ = g.degree() + h.degree();
  const std::size_t nh = h.order();
  p.elements_.reserve(g.order() * nh);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < nh; ++b) {
      Permutation perm(g.permutation(a));
      for (auto v : h.permutation(b)) perm.push_back(static_cast<std::uint32_t>(v + g.degree()));
      p.index_.emplace(perm, static_cast<Element>(p.elements_.size()));
      p.elements_.push_back(std::move(perm));
    }
  p.order_ = p.elements_.size();
  p.table_.resize(p.order_ * p.order_);
  p.inverse_.resize(p.order_);
  for (Element a = 0; a < p.order_; ++a) {
    Element ga = a / nh, ha = a % nh;
    p.inverse_[a] = g.inverse(ga) * nh + h.inverse(ha);
    for (Element b = 0; b < p.order_; ++b) {
      Element gb = b / nh, hb = b % nh;
      p.table_[a * p.order_ + b] = g.mul(ga, gb) * nh + h.mul(ha, hb);
    }
  }
  std::vector<std::string> names = g.generator_names();
  bool named = !g.generator_names().empty() && !h.generator_names().empty();
  for (const auto& nm : h.generator_names())
    if (std::find(names.begin(), names.end(), nm) != names.end()) named = false;
  if (named) {
    for (const auto& nm : h.generator_names()) names.push_back(nm);
    for (auto e : g.generators()) p.generators_.push_back(e * nh);
    for (auto e : h.generators()) p.generators_.push_back(e);
    p.generator_names_ = std::move(names);
  }
  p.name_ = g.name() + "x" + h.name();
  return p;
}

inline std::vector<std::size_t> element_orders(const FiniteGroup& g) { return g.element_orders(); }

// Number of elements of each order, ascending by order.
inline std::map<std::size_t, std::size_t> order_census(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> census;
  for (auto o : g.element_orders()) ++census[o];
  return census;
}

}  // namespace fusionlab
