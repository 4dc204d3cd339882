#pragma once

#include "fusionlab/polynomial.hpp"
#include "fusionlab/scheme.hpp"

#include <atomic>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fusionlab {

inline constexpr std::size_t kMaxCharPolyDimension = 4096;

// det(xI - A) by Berkowitz's division-free recurrence. Each leading principal
// block extends the previous polynomial through a Toeplitz column built from
// R M^j C; with 0/1 entries the matrix-vector steps are pure additions.
inline IntPolynomial char_poly(const AdjacencyMatrix& a) {
  const std::size_t n = a.dimension();
  if (n > kMaxCharPolyDimension) throw std::length_error("characteristic polynomial dimension exceeds 4096");
  if (n == 0) return IntPolynomial::constant(1);

  // Ones strictly left of the diagonal per row, and above it per column, are
  // all that M, R and C touch; keep the full row lists and filter by k.
  std::vector<std::vector<std::size_t>> row_cols(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) row_cols[i].push_back(j);

  std::vector<BigInt> vect{BigInt(1)};  // descending coefficients
  std::vector<BigInt> v, w, t;
  for (std::size_t k = 0; k < n; ++k) {
    t.assign(k + 2, BigInt(0));
    t[0] = 1;
    t[1] = -BigInt(a(k, k));
    // v = C = column k restricted to rows < k
    v.assign(k, BigInt(0));
    for (std::size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (std::size_t j = 0; j < k; ++j) {
      BigInt dot = 0;
      for (auto c : row_cols[k]) {
        if (c >= k) break;
        dot += v[c];
      }
      t[j + 2] = -dot;
      if (j + 1 == k) break;
      w.assign(k, BigInt(0));
      for (std::size_t i = 0; i < k; ++i)
        for (auto c : row_cols[i]) {
          if (c >= k) break;
          w[i] += v[c];
        }
      v.swap(w);
    }
    std::vector<BigInt> next(k + 2, BigInt(0));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j)
        if (t[i - j] != 0 && vect[j] != 0) next[i] += t[i - j] * vect[j];
    vect.swap(next);
  }
  std::vector<BigInt> ascending(vect.rbegin(), vect.rend());
  return IntPolynomial(std::move(ascending));
}

// Squarefree part of the characteristic polynomial of a diagonalizable
// (here: symmetric) matrix, which is its minimal polynomial.
inline IntPolynomial min_poly_symmetric(const IntPolynomial& p) { return p.squarefree_part(); }

inline IntPolynomial minimal_polynomial(const AdjacencyMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("minimal polynomial is only computed for symmetric matrices");
  return min_poly_symmetric(char_poly(a));
}

struct IntegralityCertificate {
  bool integral = false;
  IntPolynomial char_poly;
  std::vector<std::pair<BigInt, std::size_t>> eigenvalues;  // integer eigenvalues, ascending
  IntPolynomial residual;                                   // constant 1 iff integral

  // prod (x - r)^m * residual == char_poly, and the residual has no integer root in range.
  bool verify(long long bound) const {
    if (!(from_roots(eigenvalues) * residual == char_poly)) return false;
    if (integral != (residual == IntPolynomial::constant(1))) return false;
    for (long long r = -bound; r <= bound; ++r)
      if (residual.degree() > 0 && residual.evaluate(BigInt(r)) == 0) return false;
    return true;
  }
};

struct IntegralityStats {
  std::atomic<std::size_t> checks{0};
  std::atomic<std::size_t> failures{0};
};

// Reconstruction-identity counters over every is_integral call in the process.
inline IntegralityStats& integrality_stats() {
  static IntegralityStats stats;
  return stats;
}

class CertificateError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline IntegralityCertificate certify(IntPolynomial p, std::size_t valency) {
  RootSplit split = integer_roots(p, static_cast<long long>(valency));
  IntegralityCertificate cert;
  cert.char_poly = std::move(p);
  cert.eigenvalues = std::move(split.roots);
  cert.residual = std::move(split.residual);
  cert.integral = cert.residual == IntPolynomial::constant(1);
  auto& stats = integrality_stats();
  ++stats.checks;
  if (!(from_roots(cert.eigenvalues) * cert.residual == cert.char_poly)) {
    ++stats.failures;
    throw CertificateError("integrality certificate fails the reconstruction identity");
  }
  return cert;
}

// Integer spectrum test for a 0/1 matrix with constant row sum; all
// eigenvalues lie in [-valency, valency].
inline IntegralityCertificate is_integral(const AdjacencyMatrix& a, std::size_t valency) {
  return certify(char_poly(a), valency);
}

inline IntegralityCertificate is_integral(const AdjacencyMatrix& a) {
  auto k = a.valency();
  if (!k) throw std::invalid_argument("matrix rows do not have a common sum");
  return is_integral(a, *k);
}

struct SchemeIntegrality {
  bool integral = true;
  std::optional<ClassId> failing_class;
  std::vector<IntegralityCertificate> certificates;  // one per class
};

inline SchemeIntegrality scheme_integral(const AssociationScheme& scheme) {
  SchemeIntegrality out;
  for (ClassId s = 0; s < scheme.rank(); ++s) {
    out.certificates.push_back(is_integral(adjacency(scheme, {s}), scheme.valency(s)));
    if (!out.certificates.back().integral && out.integral) {
      out.integral = false;
      out.failing_class = s;
    }
  }
  return out;
}

}  // namespace fusionlab
