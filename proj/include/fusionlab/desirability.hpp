#pragma once

#include "fusionlab/catalog.hpp"
#include "fusionlab/fusion.hpp"
#include "fusionlab/graph.hpp"
#include "fusionlab/integrality.hpp"
#include "fusionlab/scheme.hpp"
#include "fusionlab/witnesses.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fusionlab {

class BlockNotInPartition : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_cycle_integral_order(std::size_t order) {
  return order == 1 || order == 2 || order == 3 || order == 4 || order == 6;
}

struct OrderFilterResult {
  bool pass = true;
  Element element = 0;  // first element (by index) with an excluded order
  std::size_t order = 1;
  explicit operator bool() const { return pass; }
};

// Element orders outside {1,2,3,4,6} rule a group out: the symmetrized class
// of such an element is a union of cycles of that length.
inline OrderFilterResult order_filter(const FiniteGroup& g) {
  auto orders = g.element_orders();
  for (Element a = 0; a < orders.size(); ++a)
    if (!is_cycle_integral_order(orders[a])) return {false, a, orders[a]};
  return {};
}

struct Witness {
  FusionPartition partition;
  std::vector<ClassId> failing_block;
  IntegralityCertificate certificate;
};

struct DesirabilityVerdict {
  enum class Kind { Desirable, Undesirable, Unknown };
  Kind kind = Kind::Unknown;
  std::size_t fusions_examined = 0;  // symmetric fusions whose classes were all tested
  std::size_t nodes_examined = 0;    // search nodes spent
  std::optional<Witness> witness;
  std::optional<OrderFilterResult> order_violation;
  std::string reason;
};

inline const char* to_string(DesirabilityVerdict::Kind k) {
  switch (k) {
    case DesirabilityVerdict::Kind::Desirable:
      return "desirable";
    case DesirabilityVerdict::Kind::Undesirable:
      return "undesirable";
    case DesirabilityVerdict::Kind::Unknown:
      break;
  }
  return "unknown";
}

inline std::size_t fused_valency(const AssociationScheme& scheme, const std::vector<ClassId>& block) {
  std::size_t k = 0;
  for (auto s : block) k += scheme.valency(s);
  return k;
}

inline IntegralityCertificate block_certificate(const AssociationScheme& scheme, const std::vector<ClassId>& block) {
  return is_integral(adjacency(scheme, block), fused_valency(scheme, block));
}

namespace detail {

// Integrality verdicts per fused block; the same block recurs across many fusions.
class BlockCache {
public:
  explicit BlockCache(const AssociationScheme& scheme) : scheme_(scheme) {}

  IntegralityCertificate get(const std::vector<ClassId>& block) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(block);
      if (it != cache_.end()) return it->second;
    }
    auto cert = block_certificate(scheme_, block);
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(block, std::move(cert)).first->second;
  }

private:
  const AssociationScheme& scheme_;
  std::mutex mutex_;
  std::map<std::vector<ClassId>, IntegralityCertificate> cache_;
};

// Non-diagonal blocks, smallest first, ties by position.
inline std::vector<std::size_t> test_order(const FusionPartition& p) {
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i < p.blocks.size(); ++i) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return p.blocks[a].size() < p.blocks[b].size(); });
  return order;
}

}  // namespace detail

// Every symmetric fusion is tested class by class; the first non-integral
// fused class (in sequential search order) becomes the witness.
inline DesirabilityVerdict check_scheme_desirable(const AssociationScheme& scheme, const FusionBudget& budget = {}) {
  DesirabilityVerdict verdict;
  detail::BlockCache cache(scheme);
  std::mutex mutex;
  std::map<std::size_t, Witness> found;  // by task index
  std::size_t tested = 0;
  auto outcome = search_symmetric_fusions(scheme, budget, [&](const FusionPartition& p, std::size_t task) {
    for (auto i : detail::test_order(p)) {
      auto cert = cache.get(p.blocks[i]);
      if (!cert.integral) {
        std::lock_guard<std::mutex> lock(mutex);
        if (found.count(task) == 0) found.emplace(task, Witness{p, p.blocks[i], std::move(cert)});
        return true;
      }
    }
    std::lock_guard<std::mutex> lock(mutex);
    ++tested;
    return false;
  });
  verdict.nodes_examined = outcome.examined;
  if (!found.empty()) {
    verdict.kind = DesirabilityVerdict::Kind::Undesirable;
    verdict.witness = std::move(found.begin()->second);
    verdict.reason = "non-integral symmetric fusion";
  } else if (outcome.complete) {
    verdict.kind = DesirabilityVerdict::Kind::Desirable;
    verdict.fusions_examined = tested;
    verdict.reason = "all symmetric fusions integral";
  } else {
    verdict.kind = DesirabilityVerdict::Kind::Unknown;
    verdict.fusions_examined = tested;
    verdict.reason = "budget exhausted";
  }
  return verdict;
}

// Symmetrization of <a> lifted to the whole group: {1}, the pairs
// {a^k, a^-k}, and everything outside <a> as one block. Each pair's relation
// is a disjoint union of |G|/ord(a) cycles of length ord(a).
inline FusionPartition cyclic_subgroup_fusion(const FiniteGroup& g, Element a) {
  std::vector<bool> in_subgroup(g.order(), false);
  std::vector<std::vector<ClassId>> blocks{{0}};
  in_subgroup[0] = true;
  for (Element p = a; p != 0; p = g.mul(p, a)) {
    in_subgroup[p] = true;
    auto q = g.inverse(p);
    if (p < q)
      blocks.push_back({p, q});
    else if (p == q)
      blocks.push_back({p});
  }
  std::vector<ClassId> rest;
  for (Element b = 0; b < g.order(); ++b)
    if (!in_subgroup[b]) rest.push_back(b);
  if (!rest.empty()) blocks.push_back(std::move(rest));
  return FusionPartition(std::move(blocks));
}

// Positive verdicts are only claimed up to this order unless the caller raises it.
inline constexpr std::size_t kDefaultClaimLimit = 16;

inline DesirabilityVerdict check_desirable(const FiniteGroup& g, const FusionBudget& budget = {},
                                           std::size_t claim_limit = kDefaultClaimLimit) {
  auto scheme = scheme_from_group(g);
  if (auto filter = order_filter(g); !filter) {
    DesirabilityVerdict verdict;
    verdict.kind = DesirabilityVerdict::Kind::Undesirable;
    verdict.order_violation = filter;
    auto p = cyclic_subgroup_fusion(g, filter.element);
    auto block = p.blocks[p.block_index(scheme.rank())[filter.element]];
    verdict.witness = Witness{p, block, block_certificate(scheme, block)};
    verdict.reason = "element of order " + std::to_string(filter.order);
    return verdict;
  }
  auto verdict = check_scheme_desirable(scheme, budget);
  if (verdict.kind == DesirabilityVerdict::Kind::Desirable && g.order() > claim_limit) {
    verdict.kind = DesirabilityVerdict::Kind::Unknown;
    verdict.reason = "no witness among " + std::to_string(verdict.fusions_examined) + " symmetric fusions; order " +
                     std::to_string(g.order()) + " is above the claim limit " + std::to_string(claim_limit);
  }
  return verdict;
}

// Fusion test through matrix products: the transpose of every block matrix is
// a block matrix, and each product A_i A_j is constant on the support of every
// block matrix. Independent of the structure-constant table.
inline bool matrix_fusion_check(const AssociationScheme& scheme, const FusionPartition& p) {
  if (!partition_problem(p, scheme.rank()).empty()) return false;
  const std::size_t n = scheme.size();
  auto idx = p.block_index(scheme.rank());
  std::vector<std::size_t> block_at(n * n);
  for (std::size_t i = 0; i < n * n; ++i) block_at[i] = idx[scheme.colors()[i]];
  if (block_at[0] != 0) return false;
  const std::size_t b = p.blocks.size();
  for (std::size_t x = 0; x < n; ++x)
    if (block_at[x * n + x] != 0) return false;
  // transpose map between blocks
  std::vector<std::size_t> transpose(b, b);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto bi = block_at[x * n + y], bj = block_at[y * n + x];
      if (transpose[bi] == b) transpose[bi] = bj;
      if (transpose[bi] != bj) return false;
    }
  std::vector<std::vector<std::size_t>> support(b);
  for (std::size_t i = 0; i < n * n; ++i) support[block_at[i]].push_back(i);
  std::vector<long long> prod(n * n);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z) {
          if (block_at[x * n + z] != i) continue;
          for (std::size_t y = 0; y < n; ++y)
            if (block_at[z * n + y] == j) ++prod[x * n + y];
        }
      for (const auto& sup : support)
        for (auto e : sup)
          if (prod[e] != prod[sup.front()]) return false;
    }
  return true;
}

// Re-derives a witness from scratch: matrix-product fusion check, symmetry,
// the characteristic polynomial of the fused class and the certificate identity.
inline bool recheck_witness(const AssociationScheme& scheme, const Witness& w) {
  if (!matrix_fusion_check(scheme, w.partition) || !is_symmetric_partition(scheme, w.partition)) return false;
  if (std::find(w.partition.blocks.begin(), w.partition.blocks.end(), w.failing_block) == w.partition.blocks.end()) return false;
  auto k = fused_valency(scheme, w.failing_block);
  auto recomputed = char_poly(adjacency(scheme, w.failing_block));
  return recomputed == w.certificate.char_poly && w.certificate.verify(static_cast<long long>(k)) && !w.certificate.integral;
}

struct WitnessReport {
  std::string group;
  FusionPartition partition;
  std::vector<ClassId> failing_block;
  std::size_t valency = 0;
  IntPolynomial char_poly;
  IntPolynomial min_poly;
  IntPolynomial residual;
  std::vector<std::pair<BigInt, std::size_t>> eigenvalues;
  bool non_integral = false;
};

inline WitnessReport verify_witness(const FiniteGroup& g, FusionPartition p, std::vector<ClassId> block) {
  auto scheme = scheme_from_group(g);
  p.canonicalize();
  std::sort(block.begin(), block.end());
  if (!is_valid_fusion(scheme, p)) throw InvalidFusion("partition is not a fusion of the group scheme");
  if (!is_symmetric_partition(scheme, p)) throw InvalidFusion("partition is not symmetric");
  if (std::find(p.blocks.begin(), p.blocks.end(), block) == p.blocks.end()) throw BlockNotInPartition("block is not part of the partition");
  WitnessReport r;
  r.group = g.name();
  r.valency = fused_valency(scheme, block);
  auto a = adjacency(scheme, block);
  auto cert = is_integral(a, r.valency);
  r.char_poly = cert.char_poly;
  r.min_poly = min_poly_symmetric(cert.char_poly);
  r.residual = cert.residual;
  r.eigenvalues = cert.eigenvalues;
  r.non_integral = !cert.integral;
  r.partition = std::move(p);
  r.failing_block = std::move(block);
  return r;
}

// Resolves a fixture against its catalog group. When the listed blocks are not
// a valid symmetric fusion, searches the symmetric fusions for one containing
// the listed failing block (with the quoted minimal polynomial, if any), and
// failing that for any block with the quoted minimal polynomial.
inline ResolvedWitness resolve_witness(const WitnessFixture& w, const FiniteGroup& g, const FusionBudget& budget = {}) {
  auto scheme = scheme_from_group(g);
  ResolvedWitness out;
  for (const auto& name : w.failing_block) out.failing_block.push_back(resolve_element(g, name, w.notation));
  std::sort(out.failing_block.begin(), out.failing_block.end());
  FusionPartition listed(resolve_blocks(g, w));
  auto problem = partition_problem(listed, scheme.rank());
  if (problem.empty() && is_valid_fusion(scheme, listed) && is_symmetric_partition(scheme, listed)) {
    out.partition = std::move(listed);
    out.source = ResolvedWitness::Source::Verbatim;
    return out;
  }
  out.note = problem.empty() ? "listed blocks are not a symmetric fusion" : "listed blocks are not a partition: " + problem;
  auto matches = [&](const std::vector<ClassId>& block) {
    if (!w.expected_min_poly) return !block_certificate(scheme, block).integral;
    return min_poly_symmetric(char_poly(adjacency(scheme, block))) == *w.expected_min_poly;
  };
  for (int pass = 0; pass < 2; ++pass) {
    std::mutex mutex;
    std::map<std::size_t, ResolvedWitness> hits;
    search_symmetric_fusions(scheme, budget, [&](const FusionPartition& p, std::size_t task) {
      for (const auto& block : p.blocks) {
        if (block.front() == 0) continue;
        if (pass == 0 && block != out.failing_block) continue;
        if (!matches(block)) continue;
        std::lock_guard<std::mutex> lock(mutex);
        hits.emplace(task, ResolvedWitness{p, block, ResolvedWitness::Source::Searched, {}});
        return true;
      }
      return false;
    });
    if (!hits.empty()) {
      auto found = std::move(hits.begin()->second);
      found.note = out.note + (pass == 0 ? "; recovered a fusion containing the listed block" : "; recovered a fusion with a matching block");
      return found;
    }
  }
  throw InvalidFusion("witness " + w.id + ": no symmetric fusion reproduces the listed witness");
}

struct SuiteItem {
  std::string name;
  std::string group;
  std::string kind;  // "negative", "positive" or "census"
  bool passed = false;
  std::string expected;
  std::string actual;
  std::string detail;
  double elapsed_ms = 0.0;
};

struct SuiteReport {
  std::vector<SuiteItem> items;
  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const auto& i) { return i.passed; }));
  }
  bool all_passed() const { return passed() == items.size(); }
};

namespace detail {

inline bool divisible(const IntPolynomial& p, const IntPolynomial& d) { return IntPolynomial::divmod_unit(p, d).second.is_zero(); }

// Structural claims about each stored witness relation.
inline std::pair<bool, std::string> structural_claim(const std::string& id, const AdjacencyMatrix& a, const WitnessReport& r) {
  const IntPolynomial x2m2{-2, 0, 1}, x2m3{-3, 0, 1}, x2m5{-5, 0, 1};
  if (id == "3.1") {
    bool ok = cycle_lengths(a) == std::vector<std::size_t>{8} && divisible(r.residual, x2m2);
    return {ok, "8-cycle, residual divisible by x^2-2"};
  }
  if (id == "3.2") {
    std::vector<std::pair<BigInt, std::size_t>> roots{{BigInt(-1), 5}, {BigInt(5), 1}};
    bool ok = r.valency == 5 && r.eigenvalues == roots && r.residual == x2m5.pow(3);
    return {ok, "valency 5, integer roots {5, -1^5}, residual (x^2-5)^3"};
  }
  if (id == "3.3" || id == "3.4") {
    IntersectionArray pappus{{3, 2, 2, 1}, {1, 1, 2, 3}};
    bool ok = a.dimension() == 18 && r.valency == 3 && is_bipartite(a) && divisible(r.residual, x2m3) && intersection_array(a) == pappus;
    return {ok, "bipartite, 18 vertices, valency 3, intersection array {3,2,2,1;1,1,2,3}, residual divisible by x^2-3"};
  }
  if (id == "3.5") {
    bool ok = cycle_lengths(a) == std::vector<std::size_t>{12, 12} && divisible(r.residual, x2m3);
    return {ok, "two disjoint 12-cycles, residual divisible by x^2-3"};
  }
  if (id == "3.6") return {r.min_poly == dicyclic_witness_min_poly(), "minimal polynomial x(x^2-4)(x^2-16)(x^2-12)"};
  if (id == "3.7") return {r.min_poly == heisenberg_witness_min_poly(), "minimal polynomial x(x+3)(x-6)(x^3-9x-9)"};
  return {false, "unknown witness"};
}

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

inline SuiteItem run_witness_item(const WitnessFixture& w, const FusionBudget& budget = {}) {
  SuiteItem item;
  item.name = "witness " + w.id + " " + w.group_key;
  item.group = w.group_key;
  item.kind = "negative";
  item.expected = "non-integral witness (" + w.claim + ")";
  item.elapsed_ms = detail::time_ms([&] {
    try {
      auto g = catalog(w.group_key);
      auto resolved = resolve_witness(w, g, budget);
      auto report = verify_witness(g, resolved.partition, resolved.failing_block);
      auto scheme = scheme_from_group(g);
      auto a = adjacency(scheme, report.failing_block);
      auto [claim_ok, claim] = detail::structural_claim(w.id, a, report);
      bool rechecked = recheck_witness(scheme, Witness{report.partition, report.failing_block, block_certificate(scheme, report.failing_block)});
      item.passed = report.non_integral && claim_ok && rechecked;
      item.actual = std::string(report.non_integral ? "non-integral" : "integral") + ", min poly " + factored_string(report.min_poly);
      item.detail = claim + (claim_ok ? " [ok]" : " [FAILED]") + (rechecked ? "" : "; recheck FAILED");
      if (resolved.source == ResolvedWitness::Source::Searched) item.detail += "; " + resolved.note;
    } catch (const std::exception& e) {
      item.passed = false;
      item.actual = std::string("error: ") + e.what();
    }
  });
  return item;
}

inline SuiteItem run_verdict_item(const std::string& key, const std::string& kind, DesirabilityVerdict::Kind expected,
                                  const FusionBudget& budget = {}) {
  SuiteItem item;
  item.name = (kind == "census" ? "order census " : "desirable ") + key;
  item.group = key;
  item.kind = kind;
  item.expected = to_string(expected);
  item.elapsed_ms = detail::time_ms([&] {
    auto verdict = check_desirable(catalog(key), budget);
    item.actual = to_string(verdict.kind);
    item.passed = verdict.kind == expected;
    if (verdict.kind == DesirabilityVerdict::Kind::Desirable)
      item.detail = std::to_string(verdict.fusions_examined) + " symmetric fusions, all integral";
    else if (verdict.witness)
      item.detail = "witness block of size " + std::to_string(verdict.witness->failing_block.size()) + ", residual " +
                    factored_string(verdict.witness->certificate.residual);
    else
      item.detail = verdict.reason;
  });
  return item;
}

// Abelian groups of exponent dividing 4 or 6 up to order 16, Q8, Q8 x C2, S3,
// S3 x C2 and C3:C4.
inline const std::vector<std::string>& positive_suite_keys() {
  static const std::vector<std::string> keys{"C1",   "C2",    "C3",   "C4",      "C2^2", "C6", "C2xC4", "C2^3", "C3^2",
                                             "C2xC6", "C4^2", "C2^2xC4", "C2^4", "Q8", "Q8xC2", "S3",   "S3xC2", "C3:C4"};
  return keys;
}

// Every group of order 6 and 12 with its known verdict.
inline const std::vector<std::pair<std::string, DesirabilityVerdict::Kind>>& census_suite() {
  using K = DesirabilityVerdict::Kind;
  static const std::vector<std::pair<std::string, K>> items{{"C6", K::Desirable},     {"S3", K::Desirable},     {"C12", K::Undesirable},
                                                            {"C2xC6", K::Desirable},  {"A4", K::Undesirable},   {"D12", K::Desirable},
                                                            {"C3:C4", K::Desirable}};
  return items;
}

inline SuiteReport regression_suite(const FusionBudget& budget = {}) {
  SuiteReport report;
  for (const auto& w : witness_fixtures()) report.items.push_back(run_witness_item(w, budget));
  for (const auto& key : positive_suite_keys())
    report.items.push_back(run_verdict_item(key, "positive", DesirabilityVerdict::Kind::Desirable, budget));
  for (const auto& [key, expected] : census_suite()) report.items.push_back(run_verdict_item(key, "census", expected, budget));
  return report;
}

}  // namespace fusionlab
