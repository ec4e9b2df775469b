#include "sst/cospec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sst/errors.hpp"
#include "sst/resolvent.hpp"
#include "sst/spectral.hpp"

namespace sst {

namespace {

RatPoly reduced_denominator(const RatFun& f) {
  if (f.num().is_zero()) return RatPoly::constant(1);
  return exact_div(f.den(), gcd(f.num(), f.den())).monic();
}

bool divides(const RatPoly& f, const RatPoly& g) { return divrem(g, f).remainder.is_zero(); }

Eigen::MatrixXd orthonormal_columns(const std::vector<RatVector>& W) {
  std::vector<RatVector> o = orthogonalize(W);
  Eigen::MatrixXd q(static_cast<Eigen::Index>(o.front().size()), static_cast<Eigen::Index>(o.size()));
  for (std::size_t j = 0; j < o.size(); ++j) {
    const std::vector<double> u = unit_vector(o[j]);
    for (std::size_t i = 0; i < u.size(); ++i) q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = u[i];
  }
  return q;
}

// theta / pi as p / q with q <= qmax, if it is that close to a rational.
// An eigenvalue cos(p pi / q) of an N x N rational matrix has degree phi(2q)/2 <= N, and
// phi(n) >= sqrt(n/2), so q <= 4 N^2.
std::optional<std::pair<long, long>> rational_angle(double theta, long qmax, double eps = 1e-8) {
  const double r = theta / std::numbers::pi;
  for (long q = 1; q <= qmax; ++q) {
    const double p = std::round(r * static_cast<double>(q));
    if (std::abs(r * static_cast<double>(q) - p) <= eps * static_cast<double>(q)) {
      return std::pair<long, long>{static_cast<long>(p), q};
    }
  }
  return std::nullopt;
}

// Smallest t with t theta/pi an odd integer for all angles and t = 0 mod 4, or an even
// integer for all angles and t = 2 mod 4.
std::optional<int> twin_time(const std::vector<std::pair<long, long>>& angles) {
  long l = 1;
  for (const auto& [p, q] : angles) {
    l = std::lcm(l, q);
    if (l > (1L << 24)) return std::nullopt;
  }
  for (long t = 1; t <= 8 * l; ++t) {
    if (t % 2) continue;
    bool all_odd = true;
    bool all_even = true;
    for (const auto& [p, q] : angles) {
      if ((t * p) % q != 0) {
        all_odd = all_even = false;
        break;
      }
      const long k = t * p / q;
      (k % 2 ? all_even : all_odd) = false;
    }
    if ((t % 4 == 0 && all_odd) || (t % 4 == 2 && all_even)) return static_cast<int>(t);
  }
  return std::nullopt;
}

}  // namespace

bool cospectral(const HermitianReduction& red, const std::vector<int>& S, const std::vector<int>& T) {
  if (S.size() != T.size()) throw InputError("|S| != |T|");
  return psi(red, S) == psi(red, T);
}

std::optional<SupportSplit> strong_cospectral_exact(const HermitianReduction& red, const std::vector<int>& S,
                                                    const std::vector<int>& T) {
  const RatFun ps = psi(red, S);
  if (!(ps == psi(red, T))) return std::nullopt;
  const RatFun pst = psi(red, S, T);
  const RatPoly g_plus = reduced_denominator(ps - pst);   // poles where the components differ
  const RatPoly g_minus = reduced_denominator(ps + pst);  // poles where the components agree
  SupportSplit split;
  split.support_factors = pole_support(ps);
  for (const auto& f : split.support_factors) {
    const bool in_plus = divides(f, g_minus);
    const bool in_minus = divides(f, g_plus);
    if (in_plus == in_minus) return std::nullopt;
    (in_plus ? split.plus_factors : split.minus_factors).push_back(f);
  }
  return split;
}

NumericSplit strong_cospectral_numeric(const BlowUp& blowup, const std::vector<RatVector>& W, double tol,
                                       const std::vector<int>& map) {
  if (W.empty()) throw InputError("subspace W is empty");
  if (blowup.deg_a != blowup.deg_b) throw InputError("deg(a) != deg(b)");
  if (tol <= 0) throw InputError("tolerance must be positive");
  const Eigen::Index da = blowup.deg_a;
  const Eigen::MatrixXd qa = orthonormal_columns(W);
  if (qa.rows() != da) throw InputError("subspace vectors must have length deg(a)");
  Eigen::MatrixXd qb(da, qa.cols());
  for (Eigen::Index j = 0; j < da; ++j) qb.row(map.empty() ? j : map.at(j)) = qa.row(j);

  NumericSplit out;
  const ClusteredSpectrum spec = clustered_spectrum(blowup.symmetric(), tol);
  if (spec.ambiguous) {
    out.status = SplitStatus::Indeterminate;
    out.detail = "eigenvalue clusters closer than 10 tol";
    return out;
  }
  const Eigen::Index c = 2 * da;
  for (const auto& cl : spec.clusters) {
    const Eigen::MatrixXd e = cl.projector();
    const Eigen::MatrixXd xa = qa.transpose() * e.block(0, 0, da, c);
    const Eigen::MatrixXd xb = qb.transpose() * e.block(da, 0, da, c);
    if (xa.cwiseAbs().maxCoeff() <= tol && xb.cwiseAbs().maxCoeff() <= tol) continue;
    Eigen::Index r = 0, k = 0;
    xa.cwiseAbs().maxCoeff(&r, &k);
    const double sign = xb(r, k) / xa(r, k) >= 0 ? 1.0 : -1.0;
    if ((xa - sign * xb).cwiseAbs().maxCoeff() > tol) {
      out.status = SplitStatus::NotStrong;
      out.detail = "components at eigenvalue " + std::to_string(cl.value) + " are not proportional";
      return out;
    }
    (sign > 0 ? out.plus : out.minus).push_back(cl.value);
  }
  out.status = SplitStatus::Split;
  return out;
}

std::vector<double> numeric_support(const HermitianReduction& red, const std::vector<int>& S, double tol) {
  std::vector<double> out;
  for (const auto& cl : clustered_spectrum(red.symmetric(), tol).clusters) {
    const Eigen::MatrixXd e = cl.projector();
    double norm = 0;
    for (int s : S) norm += e.col(s).squaredNorm();
    if (std::sqrt(norm) > tol) out.push_back(cl.value);
  }
  return out;
}

std::vector<double> support_roots(const std::vector<RatPoly>& factors) {
  std::vector<double> out;
  for (const auto& f : factors) {
    std::vector<double> c;
    for (const auto& x : f.coeffs()) c.push_back(x.get_d());
    for (double r : real_roots(c)) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<TwinTransfer> twin_transfer_check(const CoinAssignment& coins, int a, int b,
                                                const std::vector<RatVector>& W, double tol) {
  const Graph& g = coins.graph();
  if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count() || a == b) {
    throw InputError("marked vertices must be distinct and in range");
  }
  const auto na = g.neighbors(a);
  const auto nb = g.neighbors(b);
  if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) throw InputError("a and b are not twins");
  if (!(coins.coin(a) == coins.coin(b))) throw InputError("C_a != C_b");
  if (W.empty()) throw InputError("subspace W is empty");
  for (const auto& w : W) {
    if (static_cast<int>(w.size()) != g.degree(a) || !coins.coin(a).fixes(w)) {
      throw InputError("W is not fixed by the coin at a");
    }
  }
  const BlowUp bu = build_blowup(coins, a, b);
  const Eigen::MatrixXd q = orthonormal_columns(W);
  const int deg = g.degree(a);

  TwinTransfer out{};
  out.exact_kernel = true;
  for (const auto& w : W) {
    for (int v = 0; v < g.vertex_count() && out.exact_kernel; ++v) {
      if (v == a || v == b) continue;
      Rational s = 0;
      for (int j = 0; j < deg; ++j)
        if (g.adjacent(na[j], v)) s += w[j];
      if (s != 0) out.exact_kernel = false;
    }
  }

  const Eigen::MatrixXd gs = bu.symmetric();
  if (!out.exact_kernel) {
    // Orthogonality of W to col([A1 A2] Delta^-1/2 E_0[rest, rest]).
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gs, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double cutoff = tol * std::max(1.0, sv(0));
    std::vector<Eigen::Index> null;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) <= cutoff) null.push_back(i);
    const Eigen::Index r = static_cast<Eigen::Index>(bu.rest.size());
    const Eigen::Index c = static_cast<Eigen::Index>(bu.clone_count());
    Eigen::MatrixXd z(gs.rows(), static_cast<Eigen::Index>(null.size()));
    for (std::size_t k = 0; k < null.size(); ++k) z.col(static_cast<Eigen::Index>(k)) = svd.matrixV().col(null[k]);
    const Eigen::MatrixXd e0 = (z * z.transpose()).block(c, c, r, r);
    Eigen::MatrixXd a12 = Eigen::MatrixXd::Zero(deg, r);
    for (int j = 0; j < deg; ++j)
      for (Eigen::Index k = 0; k < r; ++k) {
        const int v = bu.rest[static_cast<std::size_t>(k)];
        if (g.adjacent(na[j], v)) a12(j, k) = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
      }
    if ((q.transpose() * a12 * e0).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  }

  std::vector<std::pair<long, long>> angles;
  std::optional<int> delta;
  if (out.exact_kernel) {
    for (int j = 0; j < deg; ++j) {
      bool used = false;
      for (const auto& w : W) used = used || w[j] != 0;
      if (!used) continue;
      const int d = g.degree(na[j]);
      if (delta && *delta != d) {
        delta.reset();
        break;
      }
      delta = d;
    }
  }
  if (delta) {
    out.c_squared = Rational(2, *delta);
    out.c_squared->canonicalize();
    const double c = std::sqrt(2.0 / *delta);
    out.support = {-c, c};
    const Rational& c2 = *out.c_squared;
    if (c2 == 1) angles = {{0, 1}, {1, 1}};
    else if (c2 == Rational(1, 2)) angles = {{1, 4}, {3, 4}};
    else if (c2 == Rational(1, 4)) angles = {{1, 3}, {2, 3}};
    else if (c2 == Rational(3, 4)) angles = {{1, 6}, {5, 6}};
    else return std::nullopt;
  } else {
    for (const auto& cl : clustered_spectrum(gs, 1e-7).clusters) {
      if (std::abs(cl.value) <= 1e-7) continue;
      const Eigen::MatrixXd e = cl.projector();
      if ((q.transpose() * e.block(0, 0, deg, deg)).cwiseAbs().maxCoeff() <= 1e-7) continue;
      out.support.push_back(cl.value);
      auto ang = rational_angle(std::acos(std::clamp(cl.value, -1.0, 1.0)), 4 * gs.rows() * gs.rows());
      if (!ang) return std::nullopt;
      angles.push_back(*ang);
    }
  }
  const auto t = twin_time(angles);
  if (!t) return std::nullopt;
  out.time = *t;
  out.residue = *t % 4;
  return out;
}

}  // namespace sst
