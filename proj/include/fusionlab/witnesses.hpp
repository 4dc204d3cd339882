#pragma once

#include "fusionlab/catalog.hpp"
#include "fusionlab/fusion.hpp"
#include "fusionlab/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionlab {

// A symmetric fusion of a group scheme that exhibits a non-integral fused
// relation, written in the generator names of the catalog entry.
struct WitnessFixture {
  std::string id;  // "3.1" .. "3.7"
  std::string group_key;
  enum class Notation { Words, Cycles } notation = Notation::Words;
  std::vector<std::vector<std::string>> blocks;
  std::vector<std::string> failing_block;
  std::optional<IntPolynomial> expected_min_poly;
  std::string claim;
};

namespace detail {

inline std::vector<std::string> left_multiply(const std::string& prefix, const std::vector<std::string>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w == "1" ? prefix : prefix + w);
  return out;
}

inline void append_with_coset(std::vector<std::vector<std::string>>& blocks, const std::vector<std::vector<std::string>>& part,
                              const std::string& prefix) {
  for (const auto& b : part) blocks.push_back(b);
  for (const auto& b : part) blocks.push_back(left_multiply(prefix, b));
}

}  // namespace detail

// lambda (lambda^2-4)(lambda^2-16)(lambda^2-12)
inline IntPolynomial dicyclic_witness_min_poly() {
  return IntPolynomial{0, 1} * IntPolynomial{-4, 0, 1} * IntPolynomial{-16, 0, 1} * IntPolynomial{-12, 0, 1};
}

// lambda (lambda+3)(lambda-6)(lambda^3-9 lambda-9)
inline IntPolynomial heisenberg_witness_min_poly() {
  return IntPolynomial{0, 1} * IntPolynomial{3, 1} * IntPolynomial{-6, 1} * IntPolynomial{-9, -9, 0, 1};
}

inline const std::vector<WitnessFixture>& witness_fixtures() {
  static const std::vector<WitnessFixture> fixtures = [] {
    std::vector<WitnessFixture> f;
    using N = WitnessFixture::Notation;

    f.push_back({"3.1", "D8", N::Words,
                 {{"1"}, {"x^2"}, {"x", "x^3"}, {"y", "yx"}, {"yx^2", "yx^3"}},
                 {"y", "yx"}, std::nullopt, "octagon"});

    f.push_back({"3.2", "A4", N::Cycles,
                 {{"()"}, {"(12)(34)"}, {"(13)(24)", "(123)", "(132)", "(124)", "(142)"},
                  {"(14)(23)", "(134)", "(143)", "(234)", "(243)"}},
                 {"(13)(24)", "(123)", "(132)", "(124)", "(142)"}, std::nullopt, "icosahedron"});

    f.push_back({"3.3", "C3^2:C2", N::Words,
                 {{"1"}, {"x", "x^2"}, {"y", "xy", "x^2y", "y^2", "xy^2", "x^2y^2"}, {"z", "yz", "xy^2z"},
                  {"xz", "x^2z", "y^2z", "xyz", "x^2yz", "x^2y^2z"}},
                 {"z", "yz", "xy^2z"}, std::nullopt, "distance-regular graph {3,2,2,1;1,1,2,3}"});

    f.push_back({"3.4", "S3xC3", N::Words,
                 {{"1"}, {"y", "y^2"}, {"x", "xy", "xy^2", "x^2", "x^2y", "x^2y^2"}, {"z", "xyz", "x^2yz"},
                  {"yz", "y^2z", "xz", "xy^2z", "x^2z", "x^2y^2z"}},
                 {"z", "xyz", "x^2yz"}, std::nullopt, "distance-regular graph {3,2,2,1;1,1,2,3}"});

    {
      // P and its translate xP; s and t stand for the 3-cycle and the transposition of S3.
      std::vector<std::vector<std::string>> p{{"1"}, {"xy"}, {"s", "s^2"}, {"xt", "yst"}, {"xys", "xys^2"}, {"xs^2t", "ys^2t"}, {"xst", "yt"}};
      std::vector<std::vector<std::string>> blocks;
      detail::append_with_coset(blocks, p, "x");
      f.push_back({"3.5", "C2^2xS3", N::Words, blocks, {"xt", "yst"}, std::nullopt, "two disjoint 12-gons"});
    }

    {
      std::vector<std::string> sub{"1", "x", "y^2", "xy^2"};
      std::vector<std::vector<std::string>> blocks;
      for (const auto& a : sub) blocks.push_back({a});
      for (const auto& a : sub) blocks.push_back({a == "1" ? "z" : a + "z", a == "1" ? "z^2" : a + "z^2"});
      blocks.push_back({"y", "xy", "y^3", "xy^3"});
      std::vector<std::string> t{"zy", "zy^3", "xz^2y^3", "z^2xy"};
      blocks.push_back(t);
      blocks.push_back(detail::left_multiply("x", t));
      f.push_back({"3.6", "C3:C4xC2", N::Words, blocks, t, dicyclic_witness_min_poly(), "minimal polynomial"});
    }

    // Listed as printed: H3 repeats yz from H1 and contains "y^2z^2z", so the
    // verbatim cosets are not a partition and resolution falls back to a search.
    f.push_back({"3.7", "Heis27", N::Words,
                 {{"1"}, {"x", "x^2"}, {"y", "y^2", "xy", "xy^2", "x^2y", "x^2y^2"},
                  {"z", "z^2", "yz", "x^2y^2z^2", "x^2y^2z", "x^2yz^2"},
                  {"xz", "x^2z^2", "xyz", "xy^2z^2", "y^2z", "xyz^2"},
                  {"x^2z", "xz^2", "x^2yz", "y^2z^2z", "xy^2z", "yz"}},
                 {"z", "z^2", "yz", "x^2y^2z^2", "x^2y^2z", "x^2yz^2"}, heisenberg_witness_min_poly(), "minimal polynomial"});
    return f;
  }();
  return fixtures;
}

inline const WitnessFixture& witness_fixture(const std::string& id) {
  for (const auto& w : witness_fixtures())
    if (w.id == id) return w;
  throw std::out_of_range("no witness fixture " + id);
}

inline Element resolve_element(const FiniteGroup& g, const std::string& name, WitnessFixture::Notation notation) {
  if (notation == WitnessFixture::Notation::Words) return g.word(name);
  auto e = g.find(parse_cycles(name, g.degree()));
  if (!e) throw WordError("permutation " + name + " is not in " + g.name());
  return *e;
}

struct ResolvedWitness {
  FusionPartition partition;
  std::vector<ClassId> failing_block;
  enum class Source { Verbatim, Searched } source = Source::Verbatim;
  std::string note;
};

// Element lists exactly as written; no validity checks.
inline std::vector<std::vector<ClassId>> resolve_blocks(const FiniteGroup& g, const WitnessFixture& w) {
  std::vector<std::vector<ClassId>> blocks;
  for (const auto& b : w.blocks) {
    std::vector<ClassId> out;
    for (const auto& name : b) out.push_back(resolve_element(g, name, w.notation));
    blocks.push_back(std::move(out));
  }
  return blocks;
}

}  // namespace fusionlab
