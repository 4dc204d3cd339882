#pragma once

#include "fusionlab/scheme.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace fusionlab {

class InvalidFusion : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A partition of the class set {0..r-1}; {0} is always a block of its own.
// Canonical form keeps blocks sorted internally and ordered by minimum.
struct FusionPartition {
  std::vector<std::vector<ClassId>> blocks;

  FusionPartition() = default;
  explicit FusionPartition(std::vector<std::vector<ClassId>> b) : blocks(std::move(b)) { canonicalize(); }

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  }

  std::size_t size() const { return blocks.size(); }

  // Index of the block holding each class.
  std::vector<std::size_t> block_index(std::size_t rank) const {
    std::vector<std::size_t> idx(rank, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (auto c : blocks[i]) idx[c] = i;
    return idx;
  }

  friend bool operator==(const FusionPartition&, const FusionPartition&) = default;
  friend bool operator<(const FusionPartition& a, const FusionPartition& b) { return a.blocks < b.blocks; }
};

inline FusionPartition identity_partition(const AssociationScheme& scheme) {
  std::vector<std::vector<ClassId>> blocks;
  for (ClassId s = 0; s < scheme.rank(); ++s) blocks.push_back({s});
  return FusionPartition(std::move(blocks));
}

// Checks that p is a partition of 0..rank-1 with {0} isolated. Returns a
// description of the first problem, or an empty string.
inline std::string partition_problem(const FusionPartition& p, std::size_t rank) {
  std::vector<int> seen(rank, 0);
  for (const auto& b : p.blocks) {
    if (b.empty()) return "empty block";
    for (auto c : b) {
      if (c >= rank) return "class " + std::to_string(c) + " out of range";
      if (seen[c]++ != 0) return "class " + std::to_string(c) + " appears twice";
    }
  }
  for (std::size_t c = 0; c < rank; ++c)
    if (seen[c] == 0) return "class " + std::to_string(c) + " missing";
  if (p.blocks.empty() || p.blocks.front() != std::vector<ClassId>{0}) return "diagonal class 0 is not a block of its own";
  return {};
}

// "0|1,2|3": blocks ordered by minimum, elements ascending.
inline std::string canonical_form(FusionPartition p) {
  p.canonicalize();
  std::string key;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i != 0) key += '|';
    for (std::size_t j = 0; j < p.blocks[i].size(); ++j) {
      if (j != 0) key += ',';
      key += std::to_string(p.blocks[i][j]);
    }
  }
  return key;
}

// Pairs each class with its transpose.
inline FusionPartition symmetrization(const AssociationScheme& scheme) {
  std::vector<std::vector<ClassId>> blocks;
  for (ClassId s = 0; s < scheme.rank(); ++s) {
    ClassId t = scheme.star(s);
    if (t < s) continue;
    if (t == s)
      blocks.push_back({s});
    else
      blocks.push_back({s, t});
  }
  return FusionPartition(std::move(blocks));
}

inline bool is_symmetric_partition(const AssociationScheme& scheme, const FusionPartition& p) {
  auto idx = p.block_index(scheme.rank());
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (auto s : p.blocks[i])
      if (idx[scheme.star(s)] != i) return false;
  return true;
}

struct FusionCheck {
  bool valid = false;
  std::string reason;
  // (i, j, u1, u2): blocks i, j whose summed constants differ at u1 and u2.
  std::optional<std::array<std::size_t, 4>> witness;
  explicit operator bool() const { return valid; }
};

namespace detail {

// Summed structure constants c(u) = sum over s in B_i, t in B_j of a_stu.
class PairSums {
public:
  explicit PairSums(const AssociationScheme& scheme) : scheme_(scheme), thin_(scheme.is_thin()), r_(scheme.rank()) {
    if (thin_)
      products_ = &scheme.thin_products();
    else
      constants_ = &scheme.constants();
  }

  void compute(const std::vector<ClassId>& bi, const std::vector<ClassId>& bj, std::vector<std::uint32_t>& out) const {
    out.assign(r_, 0);
    if (thin_) {
      for (auto s : bi) {
        const ClassId* row = products_->data() + static_cast<std::size_t>(s) * r_;
        for (auto t : bj) ++out[row[t]];
      }
    } else {
      for (auto s : bi)
        for (auto t : bj)
          for (std::size_t u = 0; u < r_; ++u) out[u] += (*constants_)(s, t, u);
    }
  }

  std::size_t rank() const { return r_; }

private:
  const AssociationScheme& scheme_;
  bool thin_;
  std::size_t r_;
  const std::vector<ClassId>* products_ = nullptr;
  const StructureConstants* constants_ = nullptr;
};

}  // namespace detail

// A partition fuses to a scheme iff the transpose of every block is a block
// and, for all blocks B_i, B_j, B_k, the sum of a_stu over s in B_i, t in B_j
// takes one value for every u in B_k.
inline FusionCheck is_valid_fusion(const AssociationScheme& scheme, const FusionPartition& p) {
  FusionCheck out;
  if (auto problem = partition_problem(p, scheme.rank()); !problem.empty()) {
    out.reason = problem;
    return out;
  }
  auto idx = p.block_index(scheme.rank());
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    std::size_t target = idx[scheme.star(p.blocks[i].front())];
    for (auto s : p.blocks[i])
      if (idx[scheme.star(s)] != target || p.blocks[target].size() != p.blocks[i].size()) {
        out.reason = "transpose of block " + std::to_string(i) + " is not a block";
        return out;
      }
  }
  detail::PairSums sums(scheme);
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (std::size_t j = 0; j < p.blocks.size(); ++j) {
      sums.compute(p.blocks[i], p.blocks[j], c);
      for (const auto& bk : p.blocks)
        for (auto u : bk)
          if (c[u] != c[bk.front()]) {
            out.reason = "summed constants of blocks " + std::to_string(i) + " and " + std::to_string(j) + " differ on classes " +
                         std::to_string(bk.front()) + " and " + std::to_string(u);
            out.witness = std::array<std::size_t, 4>{i, j, bk.front(), u};
            return out;
          }
    }
  out.valid = true;
  return out;
}

// Relabels the color matrix by block index.
inline AssociationScheme fuse(const AssociationScheme& scheme, const FusionPartition& p) {
  auto check = is_valid_fusion(scheme, p);
  if (!check) throw InvalidFusion("not a fusion: " + check.reason);
  FusionPartition canon = p;
  canon.canonicalize();
  auto idx = canon.block_index(scheme.rank());
  std::vector<std::uint16_t> color(scheme.colors().size());
  for (std::size_t i = 0; i < color.size(); ++i) color[i] = static_cast<std::uint16_t>(idx[scheme.colors()[i]]);
  return validate_or_throw(scheme.size(), std::move(color));
}

struct FusionBudget {
  std::size_t max_partitions = 50'000'000;  // search nodes (completed blocks) examined
  double time_limit_seconds = 600.0;
  std::size_t threads = 1;
};

struct SearchOutcome {
  bool complete = false;      // whole space searched, no visitor stop, budget intact
  bool exhausted = false;     // budget ran out
  bool stopped = false;       // visitor requested a stop
  std::size_t examined = 0;   // completed-block nodes checked
  std::size_t leaves = 0;     // valid fusions reached
};

// Called for each valid symmetric fusion with the index of the top-level task
// that produced it. Returning true stops the search: tasks with a larger index
// are abandoned while smaller ones finish, so the earliest stop is the one a
// sequential run would hit first. May be invoked concurrently.
using FusionVisitor = std::function<bool(const FusionPartition&, std::size_t task)>;

namespace detail {

// Depth-first search over set partitions of the symmetrization atoms, built
// one block at a time: each new block holds the smallest unassigned atom plus
// a subset of the atoms agreeing with it on every summed-constant vector
// already fixed. When a block is completed, the sums of its pairs with every
// completed block must be constant on each completed block and on each
// unassigned atom; otherwise the branch is cut.
class FusionSearch {
public:
  FusionSearch(const AssociationScheme& scheme, const FusionBudget& budget, FusionVisitor visitor)
      : scheme_(scheme), budget_(budget), visitor_(std::move(visitor)), sums_(scheme) {
    auto sym = symmetrization(scheme);
    for (std::size_t i = 1; i < sym.blocks.size(); ++i) atoms_.push_back(sym.blocks[i]);
    if (atoms_.size() > 64) throw std::length_error("fusion search supports at most 64 symmetrization atoms");
  }

  std::size_t atom_count() const { return atoms_.size(); }

  SearchOutcome run() {
    start_ = std::chrono::steady_clock::now();
    SearchOutcome outcome;
    if (atoms_.empty()) {
      FusionPartition trivial(std::vector<std::vector<ClassId>>{{0}});
      ++leaves_;
      if (visitor_(trivial, 0)) stopped_ = true;
    } else {
      task_count_ = std::uint64_t{1} << (atoms_.size() - 1);
      std::size_t width = std::max<std::size_t>(1, budget_.threads);
      if (width == 1 || task_count_ == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < width; ++w) pool.emplace_back([this] { worker(); });
        for (auto& t : pool) t.join();
      }
    }
    if (error_) std::rethrow_exception(error_);
    outcome.exhausted = exhausted_.load();
    outcome.stopped = stopped_.load();
    outcome.complete = !outcome.exhausted && !outcome.stopped;
    outcome.examined = examined_.load();
    outcome.leaves = leaves_.load();
    return outcome;
  }

private:
  struct State {
    std::uint64_t unassigned = 0;
    std::vector<std::vector<ClassId>> blocks;       // completed non-diagonal blocks
    std::vector<std::vector<std::uint32_t>> fixed;  // summed-constant vectors of completed pairs
    std::vector<std::uint32_t> scratch;
    std::uint64_t task = 0;
  };

  void worker() {
    try {
      State st;
      for (;;) {
        std::uint64_t task = next_task_.fetch_add(1);
        if (task >= task_count_ || halted(task)) return;
        st.unassigned = (atoms_.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << atoms_.size()) - 1));
        st.blocks.clear();
        st.fixed.clear();
        st.task = task;
        // Task bits select which of atoms 1..m-1 join atom 0 in the first block.
        std::uint64_t chosen = 1;
        for (std::size_t i = 1; i < atoms_.size(); ++i)
          if ((task >> (i - 1)) & 1U) chosen |= std::uint64_t{1} << i;
        complete_block(st, chosen);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex_);
      if (!error_) error_ = std::current_exception();
      exhausted_ = true;
    }
  }

  bool halted(std::uint64_t task) const { return exhausted_.load(std::memory_order_relaxed) || task > stop_task_.load(std::memory_order_relaxed); }

  bool over_budget() {
    std::size_t n = examined_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_.max_partitions) {
      exhausted_ = true;
      return true;
    }
    if ((n & 1023U) == 0) {
      double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (elapsed > budget_.time_limit_seconds) {
        exhausted_ = true;
        return true;
      }
    }
    return false;
  }

  std::vector<ClassId> classes_of(std::uint64_t mask) const {
    std::vector<ClassId> out;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if ((mask >> i) & 1U) out.insert(out.end(), atoms_[i].begin(), atoms_[i].end());
    std::sort(out.begin(), out.end());
    return out;
  }

  bool constant_on(const std::vector<std::uint32_t>& c, const std::vector<ClassId>& classes) const {
    for (auto u : classes)
      if (c[u] != c[classes.front()]) return false;
    return true;
  }

  bool admissible(State& st, const std::vector<std::uint32_t>& c) const {
    for (const auto& b : st.blocks)
      if (!constant_on(c, b)) return false;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (((st.unassigned >> i) & 1U) && !constant_on(c, atoms_[i])) return false;
    return true;
  }

  // Adds the block given by the atom mask, checks the new pairs and recurses.
  void complete_block(State& st, std::uint64_t mask) {
    if (halted(st.task) || over_budget()) return;
    const std::size_t fixed_before = st.fixed.size();
    st.unassigned &= ~mask;
    st.blocks.push_back(classes_of(mask));
    const auto& nb = st.blocks.back();
    bool ok = true;
    for (std::size_t i = 0; i < st.blocks.size() && ok; ++i) {
      for (int dir = 0; dir < 2 && ok; ++dir) {
        if (dir == 1 && i + 1 == st.blocks.size()) break;
        if (dir == 0)
          sums_.compute(st.blocks[i], nb, st.scratch);
        else
          sums_.compute(nb, st.blocks[i], st.scratch);
        if (!admissible(st, st.scratch))
          ok = false;
        else
          st.fixed.push_back(st.scratch);
      }
    }
    if (ok) {
      if (st.unassigned == 0)
        emit(st);
      else
        next_block(st);
    }
    st.fixed.resize(fixed_before);
    st.blocks.pop_back();
    st.unassigned |= mask;
  }

  void next_block(State& st) {
    std::size_t first = static_cast<std::size_t>(__builtin_ctzll(st.unassigned));
    ClassId rep = atoms_[first].front();
    std::vector<std::size_t> candidates;
    for (std::size_t i = first + 1; i < atoms_.size(); ++i) {
      if (!((st.unassigned >> i) & 1U)) continue;
      ClassId other = atoms_[i].front();
      bool agree = true;
      for (const auto& c : st.fixed)
        if (c[rep] != c[other]) {
          agree = false;
          break;
        }
      if (agree) candidates.push_back(i);
    }
    choose(st, candidates, 0, std::uint64_t{1} << first);
  }

  // Include/exclude each candidate in order; exclusion first.
  void choose(State& st, const std::vector<std::size_t>& candidates, std::size_t pos, std::uint64_t mask) {
    if (halted(st.task)) return;
    if (pos == candidates.size()) {
      complete_block(st, mask);
      return;
    }
    choose(st, candidates, pos + 1, mask);
    choose(st, candidates, pos + 1, mask | (std::uint64_t{1} << candidates[pos]));
  }

  void emit(State& st) {
    std::vector<std::vector<ClassId>> blocks;
    blocks.reserve(st.blocks.size() + 1);
    blocks.push_back({0});
    for (const auto& b : st.blocks) blocks.push_back(b);
    FusionPartition p(std::move(blocks));
    if (!is_valid_fusion(scheme_, p)) throw std::logic_error("pruned search produced an invalid fusion: " + canonical_form(p));
    ++leaves_;
    if (visitor_(p, static_cast<std::size_t>(st.task))) {
      stopped_ = true;
      std::uint64_t cur = stop_task_.load();
      while (st.task < cur && !stop_task_.compare_exchange_weak(cur, st.task)) {
      }
    }
  }

  const AssociationScheme& scheme_;
  FusionBudget budget_;
  FusionVisitor visitor_;
  PairSums sums_;
  std::vector<std::vector<ClassId>> atoms_;
  std::uint64_t task_count_ = 0;
  std::atomic<std::uint64_t> next_task_{0};
  std::atomic<std::uint64_t> stop_task_{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<std::size_t> examined_{0};
  std::atomic<std::size_t> leaves_{0};
  std::atomic<bool> exhausted_{false};
  std::atomic<bool> stopped_{false};
  std::chrono::steady_clock::time_point start_;
  std::mutex error_mutex_;
  std::exception_ptr error_;
};

}  // namespace detail

inline SearchOutcome search_symmetric_fusions(const AssociationScheme& scheme, const FusionBudget& budget, FusionVisitor visitor) {
  detail::FusionSearch search(scheme, budget, std::move(visitor));
  return search.run();
}

struct FusionEnumeration {
  std::vector<FusionPartition> partitions;  // sorted lexicographically by canonical block list
  bool complete = false;
  std::size_t examined = 0;
};

inline FusionEnumeration enumerate_symmetric_fusions(const AssociationScheme& scheme, const FusionBudget& budget = {}) {
  FusionEnumeration result;
  std::mutex mutex;
  auto outcome = search_symmetric_fusions(scheme, budget, [&](const FusionPartition& p, std::size_t) {
    std::lock_guard<std::mutex> lock(mutex);
    result.partitions.push_back(p);
    return false;
  });
  std::sort(result.partitions.begin(), result.partitions.end());
  result.complete = outcome.complete;
  result.examined = outcome.examined;
  return result;
}

}  // namespace fusionlab
