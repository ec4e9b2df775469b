#pragma once

#include <Eigen/Dense>
#include <vector>

namespace sst {

/// Eigenvalues of a real symmetric matrix grouped into clusters of width tol.
struct EigenCluster {
  double value;             // mean of the member eigenvalues
  Eigen::MatrixXd vectors;  // orthonormal columns spanning the eigenspace
  Eigen::MatrixXd projector() const { return vectors * vectors.transpose(); }
};

struct ClusteredSpectrum {
  std::vector<EigenCluster> clusters;  // ascending
  /// Two neighbouring clusters sit within 10 tol of each other.
  bool ambiguous = false;
};

ClusteredSpectrum clustered_spectrum(const Eigen::MatrixXd& symmetric, double tol);

/// Roots of a polynomial given by coefficients low to high, via the companion matrix.
std::vector<double> real_roots(const std::vector<double>& coeffs, double imag_tol = 1e-9);

}  // namespace sst
