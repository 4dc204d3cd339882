#include "fusionlab/catalog.hpp"
#include "fusionlab/fusion.hpp"
#include "fusionlab/integrality.hpp"
#include "fusionlab/witnesses.hpp"
#include "numeric_oracle.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace fusionlab;

namespace {

AdjacencyMatrix cycle(std::size_t n) {
  AdjacencyMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.set(i, (i + 1) % n, 1);
    a.set((i + 1) % n, i, 1);
  }
  return a;
}

AdjacencyMatrix random_matrix(std::mt19937& rng, std::size_t n, bool symmetric, double density) {
  std::bernoulli_distribution bit(density);
  AdjacencyMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
      std::uint8_t v = bit(rng) ? 1 : 0;
      if (symmetric && i == j) v = 0;
      a.set(i, j, v);
      if (symmetric) a.set(j, i, v);
    }
  return a;
}

// Symmetrized generator class of C_n.
AdjacencyMatrix cyclic_generator_class(std::size_t n) {
  auto g = groups::cyclic(n);
  auto s = scheme_from_group(g);
  auto gen = g.word("g");
  return adjacency(s, {gen, g.inverse(gen)});
}

}  // namespace

TEST(CharPoly, OneByOneZero) { EXPECT_EQ(char_poly(AdjacencyMatrix(1)), (IntPolynomial{0, 1})); }

TEST(CharPoly, Pentagon) {
  auto p = char_poly(cycle(5));
  EXPECT_EQ(p, (IntPolynomial{-2, 5, 0, -5, 0, 1}));
  EXPECT_EQ(p.evaluate(BigInt(2)), 0);
  auto cert = is_integral(cycle(5), 2);
  ASSERT_EQ(cert.eigenvalues.size(), 1u);
  EXPECT_EQ(cert.eigenvalues[0].first, 2);
  EXPECT_FALSE(cert.integral);
}

TEST(CharPoly, OctagonHasDoubleRootTwoFactor) {
  auto p = char_poly(cycle(8));
  auto [q, r] = IntPolynomial::divmod_unit(p, IntPolynomial{-2, 0, 1}.pow(2));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q, IntPolynomial::linear(2) * IntPolynomial::linear(-2) * IntPolynomial::monomial(2));
}

TEST(CharPoly, MatchesFaddeevLeVerrierOnRandomMatrices) {
  std::mt19937 rng(2024);
  for (std::size_t n = 1; n <= 14; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      auto a = random_matrix(rng, n, trial % 2 == 0, 0.2 + 0.1 * trial);
      EXPECT_EQ(char_poly(a), oracle::faddeev_leverrier(oracle::to_rows(a))) << "n=" << n;
    }
}

TEST(CharPoly, MatchesCofactorExpansionOnSmallMatrices) {
  std::mt19937 rng(99);
  for (std::size_t n = 1; n <= 7; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      auto a = random_matrix(rng, n, false, 0.5);
      EXPECT_EQ(char_poly(a), oracle::cofactor_char_poly(oracle::to_rows(a)));
    }
}

TEST(CharPoly, TraceIdentities) {
  for (const auto& key : {"S3", "D8", "A4", "C3:C4", "Q8xC2"}) {
    auto s = scheme_from_group(catalog(key));
    auto sym = symmetrization(s);
    for (std::size_t b = 1; b < sym.size(); ++b) {
      auto a = adjacency(s, sym.blocks[b]);
      auto p = char_poly(a);
      const auto n = a.dimension();
      EXPECT_EQ(p.coefficient(n - 1), 0);
      std::size_t ones = 0;
      for (auto e : a.entries()) ones += e;
      // coefficient of x^{n-2} is -(1/2) tr(A^2) when tr A = 0
      EXPECT_EQ(p.coefficient(n - 2) * -2, BigInt(ones));
      auto cert = is_integral(a, sym.blocks[b].size());
      if (cert.integral) {
        BigInt sq = 0;
        for (const auto& [r, m] : cert.eigenvalues) sq += r * r * m;
        EXPECT_EQ(sq, BigInt(ones));
      }
    }
  }
}

TEST(CharPoly, RejectsOversizedInput) { EXPECT_THROW(char_poly(AdjacencyMatrix(kMaxCharPolyDimension + 1)), std::length_error); }

TEST(MinimalPolynomial, SquarefreePart) {
  EXPECT_EQ(min_poly_symmetric(IntPolynomial{1, -2, 1}), (IntPolynomial{-1, 1}));
  AdjacencyMatrix directed(3);
  directed.set(0, 1, 1);
  EXPECT_THROW(minimal_polynomial(directed), std::invalid_argument);
}

TEST(MinimalPolynomial, QuotedWitnessOfOrderTwentyFour) {
  auto g = catalog("C3:C4xC2");
  const auto& w = witness_fixture("3.6");
  std::vector<ClassId> block;
  for (const auto& name : w.failing_block) block.push_back(g.word(name));
  EXPECT_EQ(minimal_polynomial(adjacency(scheme_from_group(g), block)), dicyclic_witness_min_poly());
}

TEST(Integrality, IdentityAndHexagon) {
  AdjacencyMatrix id(4);
  for (std::size_t i = 0; i < 4; ++i) id.set(i, i, 1);
  auto c = is_integral(id);
  EXPECT_TRUE(c.integral);
  ASSERT_EQ(c.eigenvalues.size(), 1u);
  EXPECT_EQ(c.eigenvalues[0].second, 4u);

  auto h = is_integral(cycle(6));
  EXPECT_TRUE(h.integral);
  std::vector<std::pair<BigInt, std::size_t>> spectrum{{-2, 1}, {-1, 2}, {1, 2}, {2, 1}};
  EXPECT_EQ(h.eigenvalues, spectrum);
}

TEST(Integrality, OctagonResidual) {
  auto c = is_integral(cycle(8));
  EXPECT_FALSE(c.integral);
  EXPECT_TRUE(IntPolynomial::divmod_unit(c.residual, IntPolynomial{-2, 0, 1}).second.is_zero());
  EXPECT_TRUE(c.verify(2));
}

TEST(Integrality, CycleLaw) {
  for (std::size_t n = 2; n <= 16; ++n) {
    bool expected = n == 2 || n == 3 || n == 4 || n == 6;
    EXPECT_EQ(is_integral(cyclic_generator_class(n)).integral, expected) << "n=" << n;
  }
}

TEST(Integrality, AgreesWithNumericEigensolver) {
  std::mt19937 rng(5);
  std::vector<AdjacencyMatrix> cases;
  for (std::size_t n = 2; n <= 12; ++n) cases.push_back(cycle(n));
  for (const auto& key : {"S3", "D8", "Q8", "A4", "C3:C4", "C2xC6"}) {
    auto s = scheme_from_group(catalog(key));
    for (const auto& p : enumerate_symmetric_fusions(s).partitions)
      for (std::size_t b = 1; b < p.size(); ++b) cases.push_back(adjacency(s, p.blocks[b]));
  }
  for (const auto& a : cases) {
    auto k = a.valency();
    ASSERT_TRUE(k);
    auto cert = is_integral(a, *k);
    auto numeric = oracle::symmetric_eigenvalues(a);
    // integer roots found exactly are exactly the numerically integral eigenvalues
    std::vector<long long> exact, approx;
    for (const auto& [r, m] : cert.eigenvalues)
      for (std::size_t i = 0; i < m; ++i) exact.push_back(r.convert_to<long long>());
    for (double v : numeric)
      if (std::abs(v - std::round(v)) < 1e-6) approx.push_back(std::llround(v));
    std::sort(approx.begin(), approx.end());
    EXPECT_EQ(exact, approx);
    for (double v : numeric) EXPECT_LE(std::abs(v), static_cast<double>(*k) + 1e-6);
  }
}

TEST(Integrality, ReconstructionIdentityHoldsOnEveryCall) {
  auto before_checks = integrality_stats().checks.load();
  auto before_failures = integrality_stats().failures.load();
  for (std::size_t n = 2; n <= 16; ++n) is_integral(cyclic_generator_class(n));
  EXPECT_EQ(integrality_stats().checks.load() - before_checks, 15u);
  EXPECT_EQ(integrality_stats().failures.load(), before_failures);
}

TEST(SchemeIntegral, RankTwoSchemesAreIntegral) {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<std::uint16_t> color(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) color[i * n + i] = 0;
    EXPECT_TRUE(scheme_integral(validate_or_throw(n, color)).integral);
  }
}

TEST(SchemeIntegral, PentagonIsNot) {
  auto s = scheme_from_group(catalog("C5"));
  auto r = scheme_integral(fuse(s, symmetrization(s)));
  EXPECT_FALSE(r.integral);
}

TEST(SchemeIntegral, OrderEighteenWitnessFailsOnValencyThreeClass) {
  auto g = catalog("S3xC3");
  auto fused = fuse(scheme_from_group(g), FusionPartition(resolve_blocks(g, witness_fixture("3.4"))));
  auto r = scheme_integral(fused);
  ASSERT_FALSE(r.integral);
  EXPECT_EQ(fused.valency(*r.failing_class), 3u);
}
