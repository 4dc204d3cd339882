#pragma once

#include "fusionlab/scheme.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <vector>

namespace fusionlab {

// Connected components of the underlying undirected graph, each sorted.
inline std::vector<std::vector<std::size_t>> components(const AdjacencyMatrix& a) {
  const std::size_t n = a.dimension();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      comp.push_back(x);
      for (std::size_t y = 0; y < n; ++y)
        if ((a(x, y) || a(y, x)) && !seen[y]) {
          seen[y] = true;
          q.push(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_bipartite(const AdjacencyMatrix& a) {
  const std::size_t n = a.dimension();
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (std::size_t y = 0; y < n; ++y) {
        if (!a(x, y)) continue;
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          q.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Lengths of the cycles when the graph is a symmetric 2-regular loopless
// graph; empty otherwise.
inline std::vector<std::size_t> cycle_lengths(const AdjacencyMatrix& a) {
  if (!a.is_symmetric() || a.valency() != std::optional<std::size_t>(2)) return {};
  for (std::size_t x = 0; x < a.dimension(); ++x)
    if (a(x, x)) return {};
  std::vector<std::size_t> lengths;
  for (const auto& c : components(a)) lengths.push_back(c.size());
  return lengths;
}

struct IntersectionArray {
  std::vector<std::size_t> b;  // b_0 .. b_{d-1}
  std::vector<std::size_t> c;  // c_1 .. c_d
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

// Intersection array of a connected distance-regular graph, or nullopt when
// the graph is disconnected or not distance-regular.
inline std::optional<IntersectionArray> intersection_array(const AdjacencyMatrix& a) {
  const std::size_t n = a.dimension();
  const std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, inf));
  std::size_t diameter = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (std::size_t y = 0; y < n; ++y)
        if (a(x, y) && dist[s][y] == inf) {
          dist[s][y] = dist[s][x] + 1;
          q.push(y);
        }
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (dist[s][y] == inf) return std::nullopt;
      diameter = std::max(diameter, dist[s][y]);
    }
  }
  std::vector<std::size_t> b(diameter + 1, inf), c(diameter + 1, inf);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t i = dist[x][y];
      std::size_t up = 0, down = 0;
      for (std::size_t z = 0; z < n; ++z) {
        if (!a(y, z)) continue;
        if (dist[x][z] + 1 == i) ++down;
        if (dist[x][z] == i + 1) ++up;
      }
      if ((b[i] != inf && b[i] != up) || (c[i] != inf && c[i] != down)) return std::nullopt;
      b[i] = up;
      c[i] = down;
    }
  IntersectionArray out;
  out.b.assign(b.begin(), b.end() - 1);
  out.c.assign(c.begin() + 1, c.end());
  return out;
}

}  // namespace fusionlab
