#pragma once

#include "fusionlab/group.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fusionlab {

using ClassId = std::uint32_t;
using Point = std::uint32_t;

class AdjacencyMatrix {
public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t dimension() const { return n_; }
  std::uint8_t operator()(std::size_t x, std::size_t y) const { return entries_[x * n_ + y]; }
  void set(std::size_t x, std::size_t y, std::uint8_t v) { entries_[x * n_ + y] = v; }
  const std::vector<std::uint8_t>& entries() const { return entries_; }

  std::size_t row_sum(std::size_t x) const {
    std::size_t s = 0;
    for (std::size_t y = 0; y < n_; ++y) s += entries_[x * n_ + y];
    return s;
  }

  // Common row sum, or nullopt when rows differ.
  std::optional<std::size_t> valency() const {
    if (n_ == 0) return 0;
    std::size_t k = row_sum(0);
    for (std::size_t x = 1; x < n_; ++x)
      if (row_sum(x) != k) return std::nullopt;
    return k;
  }

  std::size_t ones() const {
    std::size_t s = 0;
    for (auto v : entries_) s += v;
    return s;
  }

  bool is_symmetric() const {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = x + 1; y < n_; ++y)
        if ((*this)(x, y) != (*this)(y, x)) return false;
    return true;
  }

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> entries_;
};

struct AxiomViolation {
  enum class Kind { Malformed, Axiom1, Axiom2, Axiom3 };
  Kind kind;
  std::string message;
  // Axiom3: s, t, u and the two pairs (x1,y1), (x2,y2) with differing counts.
  std::vector<std::size_t> witness;
};

class SchemeError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Dense table a[s][t][u], row-major in (s, t, u).
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t r) : r_(r), data_(r * r * r, 0) {}
  std::uint32_t operator()(std::size_t s, std::size_t t, std::size_t u) const { return data_[(s * r_ + t) * r_ + u]; }
  std::uint32_t& at(std::size_t s, std::size_t t, std::size_t u) { return data_[(s * r_ + t) * r_ + u]; }
  std::size_t rank() const { return r_; }

private:
  std::size_t r_ = 0;
  std::vector<std::uint32_t> data_;
};

// An association scheme stored as its color matrix: color(x, y) is the class
// containing (x, y), class 0 is the diagonal. Instances are immutable; the
// structure-constant table is computed once on first use and shared by copies.
class AssociationScheme {
public:
  AssociationScheme() = default;

  std::size_t size() const { return n_; }
  std::size_t rank() const { return r_; }
  ClassId color(std::size_t x, std::size_t y) const { return color_[x * n_ + y]; }
  const std::vector<std::uint16_t>& colors() const { return color_; }
  ClassId star(ClassId s) const { return star_[s]; }
  const std::vector<ClassId>& stars() const { return star_; }
  std::size_t valency(ClassId s) const { return valency_[s]; }
  const std::vector<std::size_t>& valencies() const { return valency_; }

  bool is_thin() const {
    return std::all_of(valency_.begin(), valency_.end(), [](std::size_t v) { return v == 1; });
  }

  bool is_symmetric() const {
    for (ClassId s = 0; s < r_; ++s)
      if (star_[s] != s) return false;
    return true;
  }

  const StructureConstants& constants() const {
    std::call_once(cache_->once, [this] { cache_->table = compute_constants(); });
    return cache_->table;
  }

  // For a thin scheme, product(s, t) is the unique u with a_stu = 1.
  const std::vector<ClassId>& thin_products() const {
    if (!is_thin()) throw SchemeError("thin products requested for a non-thin scheme");
    std::call_once(cache_->thin_once, [this] {
      cache_->products.assign(r_ * r_, 0);
      // With x = 0, the point z with color(0, z) = s is unique, and so is y.
      std::vector<Point> point_of(r_);
      for (Point z = 0; z < n_; ++z) point_of[color(0, z)] = z;
      for (ClassId s = 0; s < r_; ++s)
        for (ClassId t = 0; t < r_; ++t) {
          Point z = point_of[s];
          Point y = 0;
          for (Point w = 0; w < n_; ++w)
            if (color(z, w) == t) y = w;
          cache_->products[s * r_ + t] = color(0, y);
        }
    });
    return cache_->products;
  }

  // Points grouped by class in row x: points(x, s) = { y : color(x, y) = s }.
  std::vector<Point> neighbours(Point x, ClassId s) const {
    std::vector<Point> out;
    for (Point y = 0; y < n_; ++y)
      if (color(x, y) == s) out.push_back(y);
    return out;
  }

  friend std::variant<AssociationScheme, std::vector<AxiomViolation>> validate(std::size_t n,
                                                                             std::vector<std::uint16_t> color);
  friend AssociationScheme scheme_from_group(const FiniteGroup& g);

private:
  struct Cache {
    std::once_flag once;
    std::once_flag thin_once;
    StructureConstants table;
    std::vector<ClassId> products;
  };

  // One representative pair per class u; counts every (s, t) in a single pass over z.
  StructureConstants compute_constants() const {
    StructureConstants a(r_);
    std::vector<bool> done(r_, false);
    for (Point x = 0; x < n_; ++x)
      for (Point y = 0; y < n_; ++y) {
        ClassId u = color(x, y);
        if (done[u]) continue;
        done[u] = true;
        for (Point z = 0; z < n_; ++z) ++a.at(color(x, z), color(z, y), u);
      }
    return a;
  }

  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<std::uint16_t> color_;
  std::vector<ClassId> star_;
  std::vector<std::size_t> valency_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

inline std::string describe(const AxiomViolation& v) {
  static const char* names[] = {"malformed", "axiom 1", "axiom 2", "axiom 3"};
  return std::string(names[static_cast<int>(v.kind)]) + ": " + v.message;
}

// Checks the three scheme axioms exhaustively over all pairs. On success the
// returned scheme carries rank, transpose map and valencies.
inline std::variant<AssociationScheme, std::vector<AxiomViolation>> validate(std::size_t n,
                                                                           std::vector<std::uint16_t> color) {
  using Kind = AxiomViolation::Kind;
  std::vector<AxiomViolation> out;
  if (n == 0 || color.size() != n * n) {
    out.push_back({Kind::Malformed, "color matrix must be a nonempty n x n array", {}});
    return out;
  }
  std::size_t r = 0;
  for (auto c : color) r = std::max<std::size_t>(r, c + 1U);
  std::vector<std::size_t> seen(r, 0);
  for (auto c : color) ++seen[c];
  for (std::size_t s = 0; s < r; ++s)
    if (seen[s] == 0) out.push_back({Kind::Malformed, "class " + std::to_string(s) + " is empty", {s}});
  if (!out.empty()) return out;

  auto at = [&](std::size_t x, std::size_t y) -> ClassId { return color[x * n + y]; };

  for (std::size_t x = 0; x < n; ++x) {
    if (at(x, x) != 0) out.push_back({Kind::Axiom1, "diagonal entry (" + std::to_string(x) + "," + std::to_string(x) + ") is not class 0", {x, x}});
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && at(x, y) == 0)
        out.push_back({Kind::Axiom1, "off-diagonal pair (" + std::to_string(x) + "," + std::to_string(y) + ") lies in class 0", {x, y}});
  }
  if (!out.empty()) return out;

  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> star(r, none);
  std::vector<std::pair<std::size_t, std::size_t>> first(r, {none, none});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ClassId s = at(x, y);
      if (star[s] == none) {
        star[s] = at(y, x);
        first[s] = {x, y};
      } else if (star[s] != at(y, x)) {
        out.push_back({Kind::Axiom2,
                       "transposes of class " + std::to_string(s) + " meet classes " + std::to_string(star[s]) + " and " + std::to_string(at(y, x)),
                       {s, first[s].first, first[s].second, x, y}});
      }
    }
  if (!out.empty()) return out;

  // Representative counts per class, then every pair is compared against them.
  std::vector<std::vector<std::uint32_t>> rep(r);
  for (std::size_t u = 0; u < r; ++u) {
    rep[u].assign(r * r, 0);
    auto [x, y] = first[u];
    for (std::size_t z = 0; z < n; ++z) ++rep[u][at(x, z) * r + at(z, y)];
  }
  std::vector<std::uint32_t> cnt(r * r, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ClassId u = at(x, y);
      for (std::size_t z = 0; z < n; ++z) ++cnt[at(x, z) * r + at(z, y)];
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t key = at(x, z) * r + at(z, y);
        if (cnt[key] != rep[u][key] && out.size() < 16) {
          std::size_t s = key / r, t = key % r;
          std::ostringstream msg;
          msg << "a(" << s << "," << t << "," << u << ") is " << rep[u][key] << " at (" << first[u].first << "," << first[u].second
              << ") but " << cnt[key] << " at (" << x << "," << y << ")";
          out.push_back({Kind::Axiom3, msg.str(), {s, t, u, first[u].first, first[u].second, x, y}});
          cnt[key] = rep[u][key];
        }
      }
      for (std::size_t z = 0; z < n; ++z) cnt[at(x, z) * r + at(z, y)] = 0;
    }
  if (!out.empty()) return out;

  AssociationScheme scheme;
  scheme.n_ = n;
  scheme.r_ = r;
  scheme.color_ = std::move(color);
  scheme.star_.assign(star.begin(), star.end());
  scheme.valency_.assign(r, 0);
  for (std::size_t y = 0; y < n; ++y) ++scheme.valency_[scheme.color(0, y)];
  return scheme;
}

// Validation for internal constructions, where a failure indicates a bug.
inline AssociationScheme validate_or_throw(std::size_t n, std::vector<std::uint16_t> color) {
  auto result = validate(n, std::move(color));
  if (auto* violations = std::get_if<std::vector<AxiomViolation>>(&result))
    throw SchemeError("internal scheme construction failed validation: " + describe(violations->front()));
  return std::get<AssociationScheme>(std::move(result));
}

// Thin scheme of the regular action: (a, b) lies in class a^-1 b.
inline AssociationScheme scheme_from_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 65535) throw SchemeError("group too large for a 16-bit color matrix");
  AssociationScheme scheme;
  scheme.n_ = n;
  scheme.r_ = n;
  scheme.color_.resize(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) scheme.color_[a * n + b] = static_cast<std::uint16_t>(g.mul(g.inverse(a), b));
  scheme.star_.assign(g.inverses().begin(), g.inverses().end());
  scheme.valency_.assign(n, 1);
  return scheme;
}

inline AdjacencyMatrix adjacency(const AssociationScheme& scheme, const std::vector<ClassId>& classes) {
  if (classes.empty()) throw std::invalid_argument("adjacency of an empty class set");
  std::vector<bool> member(scheme.rank(), false);
  for (auto c : classes) {
    if (c >= scheme.rank()) throw std::out_of_range("class index out of range");
    member[c] = true;
  }
  const std::size_t n = scheme.size();
  AdjacencyMatrix a(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (member[scheme.color(x, y)]) a.set(x, y, 1);
  return a;
}

struct ClosedSubset {
  std::vector<ClassId> members;               // sorted, contains 0
  std::vector<std::vector<Point>> blocks;     // sorted by minimum point
  std::vector<std::size_t> block_of;          // point -> block index

  std::size_t block_size() const { return blocks.front().size(); }
};

struct ClosureCheck {
  std::optional<ClosedSubset> closed;
  std::optional<std::array<ClassId, 3>> witness;  // (s, t, u) with a_stu > 0, u outside T
  explicit operator bool() const { return closed.has_value(); }
};

inline ClosureCheck is_closed(const AssociationScheme& scheme, std::vector<ClassId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw std::invalid_argument("closed subset candidates must contain class 0");
  if (members.back() >= scheme.rank()) throw std::out_of_range("class index out of range");
  const std::size_t r = scheme.rank();
  std::vector<bool> in(r, false);
  for (auto c : members) in[c] = true;
  ClosureCheck result;
  const auto& a = scheme.constants();
  for (auto s : members)
    for (auto t : members)
      for (ClassId u = 0; u < r; ++u)
        if (!in[u] && a(s, t, u) > 0) {
          result.witness = std::array<ClassId, 3>{s, t, u};
          return result;
        }
  ClosedSubset closed;
  closed.members = std::move(members);
  const std::size_t n = scheme.size();
  const std::size_t none = static_cast<std::size_t>(-1);
  closed.block_of.assign(n, none);
  for (Point x = 0; x < n; ++x) {
    if (closed.block_of[x] != none) continue;
    std::vector<Point> block;
    for (Point y = 0; y < n; ++y)
      if (in[scheme.color(x, y)]) block.push_back(y);
    for (auto y : block) closed.block_of[y] = closed.blocks.size();
    closed.blocks.push_back(std::move(block));
  }
  result.closed = std::move(closed);
  return result;
}

namespace detail {

// Dense renumbering of a set of original class keys by their minimum class.
inline std::vector<std::uint16_t> renumber_by_min(const std::vector<ClassId>& keys) {
  std::vector<ClassId> sorted(keys);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint16_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<std::uint16_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return out;
}

}  // namespace detail

// Restriction of the classes of T to the block containing x.
inline AssociationScheme subscheme(const AssociationScheme& scheme, Point x, const ClosedSubset& closed) {
  if (x >= scheme.size()) throw std::out_of_range("point out of range");
  const auto& block = closed.blocks[closed.block_of[x]];
  const std::size_t m = block.size();
  std::vector<ClassId> keys(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) keys[i * m + j] = scheme.color(block[i], block[j]);
  return validate_or_throw(m, detail::renumber_by_min(keys));
}

// Scheme on the blocks of T; the class of (xT, yT) is the set of original
// classes meeting xT x yT, labelled by its minimum class.
inline AssociationScheme quotient(const AssociationScheme& scheme, const ClosedSubset& closed) {
  const std::size_t m = closed.blocks.size();
  std::vector<ClassId> keys(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ClassId best = static_cast<ClassId>(scheme.rank());
      for (auto x : closed.blocks[i])
        for (auto y : closed.blocks[j]) best = std::min(best, scheme.color(x, y));
      keys[i * m + j] = best;
    }
  return validate_or_throw(m, detail::renumber_by_min(keys));
}

// Original classes s whose image in the factor scheme is the given quotient class.
inline std::vector<ClassId> quotient_preimage(const AssociationScheme& scheme, const ClosedSubset& closed,
                                              const AssociationScheme& factor, ClassId quotient_class) {
  std::vector<bool> hit(scheme.rank(), false);
  const std::size_t m = closed.blocks.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (factor.color(i, j) == quotient_class)
        for (auto x : closed.blocks[i])
          for (auto y : closed.blocks[j]) hit[scheme.color(x, y)] = true;
  std::vector<ClassId> out;
  for (ClassId s = 0; s < scheme.rank(); ++s)
    if (hit[s]) out.push_back(s);
  return out;
}

// Original classes restricted to form each class of the subscheme on xT.
inline std::vector<ClassId> subscheme_preimage(const AssociationScheme& scheme, Point x, const ClosedSubset& closed,
                                               const AssociationScheme& sub, ClassId sub_class) {
  const auto& block = closed.blocks[closed.block_of[x]];
  std::vector<bool> hit(scheme.rank(), false);
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = 0; j < block.size(); ++j)
      if (sub.color(i, j) == sub_class) hit[scheme.color(block[i], block[j])] = true;
  std::vector<ClassId> out;
  for (ClassId s = 0; s < scheme.rank(); ++s)
    if (hit[s]) out.push_back(s);
  return out;
}

}  // namespace fusionlab
