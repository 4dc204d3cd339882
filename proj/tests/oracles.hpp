#pragma once

// Slow, independent reference computations used only by the tests.

#include "fusionlab/group.hpp"
#include "fusionlab/polynomial.hpp"
#include "fusionlab/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using fusionlab::BigInt;
using fusionlab::IntPolynomial;

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
// Every division is exact for integer matrices.
inline IntPolynomial faddeev_leverrier(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0)), am(n, std::vector<BigInt>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        am[i][j] = s;
      }
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / static_cast<long long>(k);
    m = am;
  }
  return IntPolynomial(c);
}

// det(xI - A) by cofactor expansion along the first row, with polynomial entries.
inline IntPolynomial cofactor_char_poly(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  std::function<IntPolynomial(const std::vector<std::size_t>&, const std::vector<std::size_t>&)> det =
      [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
        if (rows.empty()) return IntPolynomial::constant(1);
        IntPolynomial total;
        auto r = rows.front();
        std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
        for (std::size_t k = 0; k < cols.size(); ++k) {
          auto c = cols[k];
          IntPolynomial entry = r == c ? IntPolynomial{-a[r][c], 1} : IntPolynomial::constant(-a[r][c]);
          if (entry.is_zero()) continue;
          std::vector<std::size_t> sub = cols;
          sub.erase(sub.begin() + static_cast<long>(k));
          auto term = entry * det(rest, sub);
          total = (k % 2 == 0) ? total + term : total - term;
        }
        return total;
      };
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return det(idx, idx);
}

inline std::vector<std::vector<long long>> to_rows(const fusionlab::AdjacencyMatrix& m) {
  std::vector<std::vector<long long>> r(m.dimension(), std::vector<long long>(m.dimension()));
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = 0; j < m.dimension(); ++j) r[i][j] = m(i, j);
  return r;
}

// Symmetric Schur partitions of a group, straight from the multiplication table:
// every block is closed under inversion and each product of block sums is
// constant on every block. Blocks are element sets; {identity} is block 0.
inline bool is_schur_partition(const fusionlab::FiniteGroup& g, const std::vector<std::vector<fusionlab::Element>>& blocks) {
  const std::size_t n = g.order();
  std::vector<std::size_t> where(n, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto e : blocks[b]) where[e] = b;
  for (auto w : where)
    if (w == blocks.size()) return false;
  for (const auto& b : blocks)
    for (auto e : b)
      if (where[g.inverse(e)] != where[e]) return false;
  std::vector<long long> count(n);
  for (const auto& bi : blocks)
    for (const auto& bj : blocks) {
      std::fill(count.begin(), count.end(), 0);
      for (auto a : bi)
        for (auto b : bj) ++count[g.mul(a, b)];
      for (const auto& bk : blocks)
        for (auto e : bk)
          if (count[e] != count[bk.front()]) return false;
    }
  return true;
}

// All symmetric Schur partitions containing {identity}, by filtering every set
// partition of the inverse-pair atoms. Each result is a sorted list of sorted
// blocks, identity block first.
inline std::set<std::vector<std::vector<fusionlab::Element>>> brute_force_fusions(const fusionlab::FiniteGroup& g) {
  std::vector<std::vector<fusionlab::Element>> atoms;
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  for (fusionlab::Element a = 1; a < g.order(); ++a) {
    if (seen[a]) continue;
    auto b = g.inverse(a);
    seen[a] = seen[b] = true;
    atoms.push_back(a == b ? std::vector<fusionlab::Element>{a} : std::vector<fusionlab::Element>{std::min(a, b), std::max(a, b)});
  }
  std::set<std::vector<std::vector<fusionlab::Element>>> out;
  std::vector<std::size_t> rgs(atoms.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == atoms.size()) {
      std::vector<std::vector<fusionlab::Element>> blocks(used + 1);
      blocks[0] = {0};
      for (std::size_t k = 0; k < atoms.size(); ++k)
        for (auto e : atoms[k]) blocks[rgs[k] + 1].push_back(e);
      for (auto& b : blocks) std::sort(b.begin(), b.end());
      if (is_schur_partition(g, blocks)) {
        std::sort(blocks.begin(), blocks.end());
        out.insert(blocks);
      }
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  if (atoms.empty()) {
    out.insert(std::vector<std::vector<fusionlab::Element>>{std::vector<fusionlab::Element>{0}});
    return out;
  }
  rec(0, 0);
  return out;
}

inline std::size_t inverse_pair_atoms(const fusionlab::FiniteGroup& g) {
  std::size_t count = 0;
  for (fusionlab::Element a = 1; a < g.order(); ++a)
    if (g.inverse(a) >= a) ++count;
  return count;
}

}  // namespace oracle
