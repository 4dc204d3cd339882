#pragma once

#include "fusionlab/group.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionlab {

class CatalogMiss : public std::out_of_range {
public:
  explicit CatalogMiss(const std::string& key) : std::out_of_range("unknown group key: " + key) {}
};

struct GroupCatalogEntry {
  std::string key;
  std::string description;
  std::size_t order;
  std::size_t exponent;
  std::function<FiniteGroup()> build;
};

namespace groups {

inline Permutation cycle_on(std::size_t degree, std::initializer_list<std::uint32_t> points) {
  Permutation p = identity_permutation(degree);
  std::vector<std::uint32_t> pts(points);
  for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

inline FiniteGroup named(FiniteGroup g, std::string name) {
  g.set_name(std::move(name));
  return g;
}

inline FiniteGroup cyclic(std::size_t n) {
  Permutation gen(n);
  for (std::size_t i = 0; i < n; ++i) gen[i] = static_cast<std::uint32_t>((i + 1) % n);
  return named(from_permutation_generators(n, {gen}, {"g"}), "C" + std::to_string(n));
}

inline FiniteGroup trivial() { return cyclic(1); }

// Product of cyclic factors, e.g. {2, 2, 4}; factor generators are unnamed.
inline FiniteGroup abelian(const std::vector<std::size_t>& factors) {
  FiniteGroup g = trivial();
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    g = i == 0 ? cyclic(factors[i]) : direct_product(g, cyclic(factors[i]));
    name += (i == 0 ? "" : "x") + std::string("C") + std::to_string(factors[i]);
  }
  return named(std::move(g), name.empty() ? "C1" : name);
}

inline FiniteGroup symmetric(std::size_t n) {
  if (n == 1) return named(trivial(), "S1");
  std::vector<Permutation> gens{cycle_on(n, {0, 1})};
  if (n > 2) {
    Permutation c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens.insert(gens.begin(), c);
  }
  return named(from_permutation_generators(n, gens), "S" + std::to_string(n));
}

// x = rotation of the k-gon, y = reflection; x^k = y^2 = 1, yxy = x^-1.
inline FiniteGroup dihedral(std::size_t order) {
  const std::size_t k = order / 2;
  Permutation rot(k), refl(k);
  for (std::size_t i = 0; i < k; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % k);
    refl[i] = static_cast<std::uint32_t>((k - i) % k);
  }
  return named(from_permutation_generators(k, {rot, refl}, {"x", "y"}), "D" + std::to_string(order));
}

// Regular representation of Q8 on the points 1,-1,i,-i,j,-j,k,-k.
inline FiniteGroup quaternion() {
  Permutation i{2, 3, 1, 0, 6, 7, 5, 4};
  Permutation j{4, 5, 7, 6, 1, 0, 2, 3};
  return named(from_permutation_generators(8, {i, j}, {"i", "j"}), "Q8");
}

inline FiniteGroup alternating4() {
  return named(from_permutation_generators(4, {parse_cycles("(123)", 4), parse_cycles("(12)(34)", 4)}), "A4");
}

// <x, y | x^3 = y^4 = 1, y^-1 x y = x^-1> inside S3 x C4.
inline FiniteGroup dicyclic12() {
  Permutation x = cycle_on(7, {0, 1, 2});
  Permutation y = compose(cycle_on(7, {1, 2}), cycle_on(7, {3, 4, 5, 6}));
  return named(from_permutation_generators(7, {x, y}, {"x", "y"}), "C3:C4");
}

// <x, y, z | x^3 = y^3 = [x,y] = zxzx = zyzy = z^2 = 1>
inline FiniteGroup generalized_dihedral9() {
  Permutation x = cycle_on(6, {0, 1, 2});
  Permutation y = cycle_on(6, {3, 4, 5});
  Permutation z = compose(cycle_on(6, {1, 2}), cycle_on(6, {4, 5}));
  return named(from_permutation_generators(6, {x, y, z}, {"x", "y", "z"}), "C3^2:C2");
}

// <x, y, z | x^3 = y^3 = [x,y] = [z,x] = zyzy = z^2 = 1>
inline FiniteGroup s3_times_c3() {
  Permutation x = cycle_on(6, {0, 1, 2});
  Permutation y = cycle_on(6, {3, 4, 5});
  Permutation z = cycle_on(6, {4, 5});
  return named(from_permutation_generators(6, {x, y, z}, {"x", "y", "z"}), "S3xC3");
}

// <x> x <y> x <s, t> with |x| = |y| = |t| = 2, |s| = 3.
inline FiniteGroup c2c2_times_s3() {
  Permutation x = cycle_on(7, {0, 1});
  Permutation y = cycle_on(7, {2, 3});
  Permutation s = cycle_on(7, {4, 5, 6});
  Permutation t = cycle_on(7, {5, 6});
  return named(from_permutation_generators(7, {x, y, s, t}, {"x", "y", "s", "t"}), "C2^2xS3");
}

// (C3:C4) x C2 with |x| = 2 central, |y| = 4, |z| = 3 and y^-1 z y = z^-1.
inline FiniteGroup dicyclic12_times_c2() {
  Permutation x = cycle_on(9, {7, 8});
  Permutation y = compose(cycle_on(9, {1, 2}), cycle_on(9, {3, 4, 5, 6}));
  Permutation z = cycle_on(9, {0, 1, 2});
  return named(from_permutation_generators(9, {x, y, z}, {"x", "y", "z"}), "C3:C4xC2");
}

// (<x> x <y>) : <z>, all of order 3, zx = xz, z^-1 y z = xy. Affine maps of
// F3^2 on the point u + 3v: x(u,v) = (u+1,v), y(u,v) = (u,v+1), z(u,v) = (u+v,v).
inline FiniteGroup heisenberg27() {
  Permutation x(9), y(9), z(9);
  for (std::uint32_t v = 0; v < 3; ++v)
    for (std::uint32_t u = 0; u < 3; ++u) {
      std::uint32_t p = u + 3 * v;
      x[p] = (u + 1) % 3 + 3 * v;
      y[p] = u + 3 * ((v + 1) % 3);
      z[p] = (u + v) % 3 + 3 * v;
    }
  return named(from_permutation_generators(9, {x, y, z}, {"x", "y", "z"}), "Heis27");
}

// SL(2,3) acting on the eight nonzero vectors of F3^2.
inline FiniteGroup sl23() {
  std::vector<std::array<int, 2>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != 0 || b != 0) vecs.push_back({a, b});
  auto index_of = [&](int a, int b) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (vecs[i][0] == a && vecs[i][1] == b) return static_cast<std::uint32_t>(i);
    throw std::logic_error("vector not found");
  };
  auto act = [&](int m00, int m01, int m10, int m11) {
    Permutation p(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      int a = vecs[i][0], b = vecs[i][1];
      p[i] = index_of(((m00 * a + m01 * b) % 3 + 3) % 3, ((m10 * a + m11 * b) % 3 + 3) % 3);
    }
    return p;
  };
  return named(from_permutation_generators(8, {act(1, 1, 0, 1), act(0, 2, 1, 0)}, {"a", "b"}), "SL(2,3)");
}

}  // namespace groups

// Registry of the named groups. Keys use "x" for direct products, "^" for
// powers and ":" for semidirect products.
inline const std::vector<GroupCatalogEntry>& catalog_entries() {
  using namespace groups;
  static const std::vector<GroupCatalogEntry> entries = [] {
    std::vector<GroupCatalogEntry> e;
    for (std::size_t n = 1; n <= 16; ++n)
      e.push_back({"C" + std::to_string(n), "cyclic group of order " + std::to_string(n), n, n, [n] { return cyclic(n); }});
    auto ab = [&](std::string key, std::vector<std::size_t> f, std::size_t exp) {
      std::size_t order = 1;
      for (auto v : f) order *= v;
      e.push_back({key, "abelian group " + key, order, exp, [f, key] { return named(abelian(f), key); }});
    };
    ab("C2^2", {2, 2}, 2);
    ab("C2^3", {2, 2, 2}, 2);
    ab("C2^4", {2, 2, 2, 2}, 2);
    ab("C2xC4", {2, 4}, 4);
    ab("C2^2xC4", {2, 2, 4}, 4);
    ab("C4^2", {4, 4}, 4);
    ab("C3^2", {3, 3}, 3);
    ab("C2xC6", {2, 6}, 6);
    ab("C3xC6", {3, 6}, 6);
    e.push_back({"S3", "symmetric group of degree 3", 6, 6, [] { return symmetric(3); }});
    e.push_back({"S4", "symmetric group of degree 4", 24, 12, [] { return symmetric(4); }});
    e.push_back({"A4", "alternating group of degree 4", 12, 6, [] { return alternating4(); }});
    e.push_back({"D8", "dihedral group of order 8", 8, 4, [] { return dihedral(8); }});
    e.push_back({"D12", "dihedral group of order 12", 12, 6, [] { return dihedral(12); }});
    e.push_back({"Q8", "quaternion group", 8, 4, [] { return quaternion(); }});
    e.push_back({"Q8xC2", "quaternion group times C2", 16, 4,
                 [] { return named(direct_product(quaternion(), cyclic(2)), "Q8xC2"); }});
    e.push_back({"S3xC2", "S3 times C2", 12, 6, [] { return named(direct_product(symmetric(3), cyclic(2)), "S3xC2"); }});
    e.push_back({"C3:C4", "dicyclic group <x,y | x^3=y^4=1, y^-1xy=x^-1>", 12, 12, [] { return dicyclic12(); }});
    e.push_back({"C3^2:C2", "(C3xC3):C2 by inversion", 18, 6, [] { return generalized_dihedral9(); }});
    e.push_back({"S3xC3", "S3 times C3", 18, 6, [] { return s3_times_c3(); }});
    e.push_back({"C2^2xS3", "C2 x C2 x S3", 24, 6, [] { return c2c2_times_s3(); }});
    e.push_back({"C3:C4xC2", "(C3:C4) x C2", 24, 12, [] { return dicyclic12_times_c2(); }});
    e.push_back({"Heis27", "non-abelian group of order 27 and exponent 3", 27, 3, [] { return heisenberg27(); }});
    e.push_back({"SL(2,3)", "special linear group SL(2,3)", 24, 12, [] { return sl23(); }});
    e.push_back({"C2xA4", "C2 times A4", 24, 6, [] { return named(direct_product(cyclic(2), alternating4()), "C2xA4"); }});
    e.push_back({"D12xC2", "D12 times C2", 24, 6, [] { return named(direct_product(dihedral(12), cyclic(2)), "D12xC2"); }});
    return e;
  }();
  return entries;
}

inline const GroupCatalogEntry& catalog_entry(const std::string& key) {
  for (const auto& entry : catalog_entries())
    if (entry.key == key) return entry;
  throw CatalogMiss(key);
}

inline FiniteGroup catalog(const std::string& key) {
  const auto& entry = catalog_entry(key);
  FiniteGroup g = entry.build();
  g.set_name(entry.key);
  return g;
}

inline std::vector<std::string> catalog_keys() {
  std::vector<std::string> keys;
  for (const auto& entry : catalog_entries()) keys.push_back(entry.key);
  return keys;
}

}  // namespace fusionlab
