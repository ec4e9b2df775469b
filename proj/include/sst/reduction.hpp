#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sst/coin.hpp"
#include "sst/walk.hpp"

namespace sst {

/// One basis column of col(C_u + I).
struct Clone {
  int vertex;
  int column;
};

/// Exact orthogonal basis of col(C + I), one weight vector over sigma_u per clone.
struct CoinBasis {
  std::vector<Clone> clones;
  std::vector<RatVector> weights;
  std::vector<int> S;  // W-clones of a
  std::vector<int> T;  // V-clones of b, paired with S by position
};

/// Order in which the coin's own basis columns are offered to the completion step.
enum class Completion { Forward, Reverse };

/// Basis whose first vectors at a and b span x_a(W) and x_b(V); every other
/// direction comes from Gram-Schmidt on the coin bases. W and V are given over
/// sigma_a and sigma_b. When a == b the two must agree and T == S.
CoinBasis induced_coin_basis(const CoinAssignment& coins, int a, const std::vector<RatVector>& W, int b,
                             const std::vector<RatVector>& V, Completion order = Completion::Forward);

/// Pointwise variant: V is W carried to b through the neighbor identification.
CoinBasis induced_coin_basis(const CoinAssignment& coins, int a, int b, const std::vector<RatVector>& W,
                             const NeighborMap& map = {}, Completion order = Completion::Forward);

/// H = Delta^-1 H_rat Delta with Delta^2 = delta_sq, H_rat = (M^T R M) D^-1, D = M^T M.
struct HermitianReduction {
  RatMatrix h_rat;
  RatVector delta_sq;
  std::vector<Clone> clone_of;
  std::vector<RatVector> weights;
  std::vector<int> S;
  std::vector<int> T;

  std::size_t size() const { return delta_sq.size(); }
  /// Exact check of H_rat[i][j] delta_sq[j] == H_rat[j][i] delta_sq[i].
  bool is_similar_to_symmetric() const;
  /// The Hermitian (real symmetric) matrix H in doubles.
  Eigen::MatrixXd symmetric() const;
  /// N: arc-space columns x_u(w) / |w| for every clone, in doubles.
  Eigen::MatrixXd normalized_basis(const Graph& graph) const;
};

/// Throws InputError when the basis is not exactly orthogonal or does not span col(C + I).
HermitianReduction build_H(const CoinAssignment& coins, const CoinBasis& basis);

/// f_t(H_rat) by the Chebyshev recurrence.
RatMatrix chebyshev_apply(const HermitianReduction& red, int t);
/// f_t(H_rat) e_s, computed column-wise.
RatVector chebyshev_column(const HermitianReduction& red, int s, int t);

/// f_t(H) B_S == gamma B_T exactly. Throws InputError when paired delta_sq differ.
bool exact_transfer_check(const HermitianReduction& red, const std::vector<int>& S, const std::vector<int>& T, int t,
                          int gamma);
bool exact_transfer_check(const HermitianReduction& red, int t, int gamma);

/// (C_a, C_b)-blow-up. Index blocks: cl(a) in sigma_a order, cl(b) in sigma_b order,
/// then the remaining vertices ascending.
struct BlowUp {
  RatMatrix g_rat;
  RatVector delta_sq;
  int a = -1;
  int b = -1;
  int deg_a = 0;
  int deg_b = 0;
  std::vector<int> rest;        // vertex ids for the trailing block
  std::vector<int> rest_index;  // vertex -> row in G, -1 for a and b

  std::size_t size() const { return delta_sq.size(); }
  std::size_t clone_count() const { return static_cast<std::size_t>(deg_a + deg_b); }
  Eigen::MatrixXd symmetric() const;
  /// G = [[0, F^*], [F, B]] with the clones first.
  Eigen::MatrixXd F() const;
  Eigen::MatrixXd B() const;
};

/// Throws InputError if a ~ b or any unmarked coin is not Grover.
BlowUp build_blowup(const CoinAssignment& coins, int a, int b);

}  // namespace sst
