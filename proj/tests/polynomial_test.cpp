#include "fusionlab/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fusionlab;

TEST(Polynomial, TrimsAndReportsDegree) {
  IntPolynomial p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
  EXPECT_TRUE((IntPolynomial{0, 0}.is_zero()));
  EXPECT_EQ(IntPolynomial::linear(3), (IntPolynomial{-3, 1}));
}

TEST(Polynomial, PrintsExpandedAndFactored) {
  IntPolynomial p{1, -2, 0, 1};
  EXPECT_EQ(p.to_string(), "x^3-2*x+1");
  auto q = IntPolynomial{0, 1} * IntPolynomial{-4, 0, 1} * IntPolynomial{-16, 0, 1} * IntPolynomial{-12, 0, 1};
  EXPECT_EQ(factored_string(q), "(x+4)*(x+2)*x*(x-2)*(x-4)*(x^2-12)");
  EXPECT_EQ(factored_string(IntPolynomial{-2, 0, 1}.pow(3)), "(x^2-2)^3");
}

TEST(Polynomial, ArithmeticAgreesWithEvaluation) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BigInt> a(4), b(3);
    for (auto& c : a) c = coef(rng);
    for (auto& c : b) c = coef(rng);
    IntPolynomial p(a), q(b);
    for (int x = -3; x <= 3; ++x) {
      EXPECT_EQ((p * q).evaluate(BigInt(x)), p.evaluate(BigInt(x)) * q.evaluate(BigInt(x)));
      EXPECT_EQ((p + q).evaluate(BigInt(x)), p.evaluate(BigInt(x)) + q.evaluate(BigInt(x)));
      EXPECT_EQ((p - q).evaluate(BigInt(x)), p.evaluate(BigInt(x)) - q.evaluate(BigInt(x)));
    }
  }
}

TEST(Polynomial, DivisionByUnitLeadingDivisor) {
  auto a = IntPolynomial{-2, 0, 1} * IntPolynomial{1, 1, 1} + IntPolynomial{3, 1};
  auto [q, r] = IntPolynomial::divmod_unit(a, IntPolynomial{-2, 0, 1});
  EXPECT_EQ(q, (IntPolynomial{1, 1, 1}));
  EXPECT_EQ(r, (IntPolynomial{3, 1}));
}

TEST(Polynomial, GcdIsPrimitive) {
  auto common = IntPolynomial{-3, 0, 1};
  auto g = IntPolynomial::gcd(common * IntPolynomial{2, 2}, common * IntPolynomial{5, 0, 3});
  EXPECT_EQ(g, common);
}

TEST(Polynomial, SquarefreePart) {
  EXPECT_EQ((IntPolynomial{1, -2, 1}.squarefree_part()), (IntPolynomial{-1, 1}));
  auto p = IntPolynomial{0, 1}.pow(3) * IntPolynomial{-5, 0, 1}.pow(2) * IntPolynomial{4, 1};
  EXPECT_EQ(p.squarefree_part(), (IntPolynomial{0, 1} * IntPolynomial{-5, 0, 1} * IntPolynomial{4, 1}));
}

TEST(Polynomial, SquarefreeDecompositionRebuildsInput) {
  auto p = IntPolynomial{-1, 1} * IntPolynomial{2, 1}.pow(2) * IntPolynomial{-3, 0, 1}.pow(3);
  IntPolynomial back = IntPolynomial::constant(1);
  auto parts = p.squarefree_decomposition();
  for (std::size_t i = 0; i < parts.size(); ++i) back = back * parts[i].pow(static_cast<unsigned>(i + 1));
  EXPECT_EQ(back, p);
}

TEST(IntegerRoots, UnitRoots) {
  auto s = integer_roots(IntPolynomial{-1, 0, 1}, 1);
  ASSERT_EQ(s.roots.size(), 2u);
  EXPECT_EQ(s.roots[0], (std::pair<BigInt, std::size_t>{-1, 1}));
  EXPECT_EQ(s.roots[1], (std::pair<BigInt, std::size_t>{1, 1}));
  EXPECT_EQ(s.residual, IntPolynomial::constant(1));
}

TEST(IntegerRoots, IrrationalPairStaysInResidual) {
  auto s = integer_roots(IntPolynomial{-2, 0, 1}, 2);
  EXPECT_TRUE(s.roots.empty());
  EXPECT_EQ(s.residual, (IntPolynomial{-2, 0, 1}));
}

TEST(IntegerRoots, IcosahedronSpectrum) {
  auto p = IntPolynomial::linear(5) * IntPolynomial::linear(-1).pow(5) * IntPolynomial{-5, 0, 1}.pow(3);
  auto s = integer_roots(p, 5);
  std::vector<std::pair<BigInt, std::size_t>> roots{{-1, 5}, {5, 1}};
  EXPECT_EQ(s.roots, roots);
  EXPECT_EQ(s.residual, IntPolynomial({-5, 0, 1}).pow(3));
}

TEST(IntegerRoots, RootsOutsideBoundStay) {
  auto s = integer_roots(IntPolynomial::linear(7) * IntPolynomial::linear(1), 3);
  ASSERT_EQ(s.roots.size(), 1u);
  EXPECT_EQ(s.residual, IntPolynomial::linear(7));
}

TEST(IntegerRoots, ReconstructsLargeProduct) {
  std::vector<BigInt> roots;
  for (int r = -6; r <= 6; ++r) roots.push_back(r);
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& r : roots) p = p * IntPolynomial::linear(r).pow(3);
  auto s = integer_roots(p, 6);
  EXPECT_EQ(s.roots.size(), roots.size());
  EXPECT_EQ(from_roots(s.roots) * s.residual, p);
}

TEST(Polynomial, ScaleRoots) {
  // roots 1, -2 scaled by 3 -> 3, -6
  auto p = IntPolynomial::linear(1) * IntPolynomial::linear(-2);
  EXPECT_EQ(p.scale_roots(3), IntPolynomial::linear(3) * IntPolynomial::linear(-6));
}
