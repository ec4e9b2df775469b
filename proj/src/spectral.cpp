#include "sst/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace sst {

ClusteredSpectrum clustered_spectrum(const Eigen::MatrixXd& symmetric, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetric);
  const Eigen::VectorXd& vals = es.eigenvalues();
  const Eigen::MatrixXd& vecs = es.eigenvectors();
  ClusteredSpectrum out;
  Eigen::Index start = 0;
  const Eigen::Index n = vals.size();
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i < n && vals(i) - vals(i - 1) <= tol) continue;
    EigenCluster c;
    c.value = vals.segment(start, i - start).mean();
    c.vectors = vecs.middleCols(start, i - start);
    if (!out.clusters.empty() && vals(start) - vals(start - 1) <= 10 * tol) out.ambiguous = true;
    out.clusters.push_back(std::move(c));
    start = i;
  }
  return out;
}

std::vector<double> real_roots(const std::vector<double>& coeffs, double imag_tol) {
  std::vector<double> c(coeffs);
  while (!c.empty() && c.back() == 0) c.pop_back();
  const auto d = static_cast<Eigen::Index>(c.size()) - 1;
  if (d < 1) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 1; i < d; ++i) comp(i, i - 1) = 1;
  for (Eigen::Index i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  std::vector<double> roots;
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto z = es.eigenvalues()(i);
    if (std::abs(z.imag()) <= imag_tol) roots.push_back(z.real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace sst
