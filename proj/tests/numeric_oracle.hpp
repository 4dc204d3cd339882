#pragma once

// Floating-point eigenvalues, for cross-checking exact spectra in tests.

#include "fusionlab/scheme.hpp"

#include <Eigen/Dense>

#include <vector>

namespace oracle {

inline std::vector<double> symmetric_eigenvalues(const fusionlab::AdjacencyMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dimension());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return v;
}

}  // namespace oracle
