#pragma once

#include <iosfwd>
#include <vector>

#include "sst/graph.hpp"
#include "sst/rational.hpp"

namespace sst {

/// Exact Gram-Schmidt without normalization. Each output vector is scaled to a
/// primitive integer vector. Throws InputError if the columns are dependent.
std::vector<RatVector> orthogonalize(const std::vector<RatVector>& columns);

/// Reflection C = 2P - I about col(P), with P an exact rational orthogonal projection
/// indexed by the neighbor order sigma_u.
class ReflectionCoin {
 public:
  /// P = J/d, basis = all-ones.
  static ReflectionCoin grover(int degree);
  /// P = sum b b^T / (b^T b) over an exact orthogonalization of the columns.
  static ReflectionCoin about(int degree, const std::vector<RatVector>& columns);
  /// C = -I, no fixed vectors.
  static ReflectionCoin minus_identity(int degree);

  int degree() const { return static_cast<int>(projection_.rows()); }
  int rank() const { return static_cast<int>(basis_.size()); }
  const RatMatrix& projection() const { return projection_; }
  /// Pairwise orthogonal, primitive integer columns spanning col(P).
  const std::vector<RatVector>& basis() const { return basis_; }
  RatMatrix reflection() const;
  bool fixes(const RatVector& w) const;

  bool operator==(const ReflectionCoin& rhs) const { return projection_ == rhs.projection_; }

 private:
  RatMatrix projection_;
  std::vector<RatVector> basis_;
};

inline ReflectionCoin grover_coin(int degree) { return ReflectionCoin::grover(degree); }
inline ReflectionCoin reflection_about(int degree, const std::vector<RatVector>& columns) {
  return ReflectionCoin::about(degree, columns);
}

/// One reflection coin per vertex, dimensions matching degrees.
class CoinAssignment {
 public:
  CoinAssignment(Graph graph, std::vector<ReflectionCoin> coins);
  static CoinAssignment all_grover(Graph graph);

  const Graph& graph() const { return graph_; }
  const ReflectionCoin& coin(int v) const { return coins_[v]; }
  CoinAssignment with_coin(int v, ReflectionCoin coin) const;

 private:
  Graph graph_;
  std::vector<ReflectionCoin> coins_;
};

/// Reads "coin <v> grover", "coin <v> minus" and "coin <v> basis <deg(v) rationals>".
/// Repeated basis lines for a vertex add columns; unlisted vertices get Grover coins.
CoinAssignment parse_coin_spec(std::istream& in, const Graph& graph);

/// Reads one subspace vector per line: "w <rationals>".
std::vector<RatVector> parse_subspace(std::istream& in);

}  // namespace sst
