#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sst/coin.hpp"

namespace sst {

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;

/// Maps the neighbor position j at a to the position of the identified neighbor at b.
using NeighborMap = std::vector<int>;
NeighborMap identity_map(int degree);
/// Applies the identification to a weight vector living at a.
RatVector map_weights(const RatVector& w, const NeighborMap& map);

/// Double-precision U = RC on the arc space. No renormalization is applied.
class QuantumWalk {
 public:
  explicit QuantumWalk(const CoinAssignment& coins);

  int arc_count() const { return graph_.arc_count(); }
  const Graph& graph() const { return graph_; }

  /// out = R C in.
  void step(std::span<const Amplitude> in, std::span<Amplitude> out) const;
  StateVector apply(StateVector state, int t) const;
  /// C alone, and R alone; exposed for operator identity checks.
  StateVector apply_coin(const StateVector& state) const;
  StateVector apply_reversal(const StateVector& state) const;

 private:
  Graph graph_;
  std::vector<std::vector<double>> coin_matrices_;  // row-major C_u
};

/// U^t state; throws InputError on a length mismatch.
StateVector walk_apply(const CoinAssignment& coins, StateVector state, int t);

/// x_a(w): weights w placed on the outgoing arcs of a in sigma_a order.
StateVector coin_state(const Graph& graph, int a, std::span<const Amplitude> w);
StateVector coin_state(const Graph& graph, int a, const RatVector& w);

struct Fidelity {
  double value;
  Amplitude gamma;
};

/// Evolves x_a(w_j) for an orthonormal basis {w_j} of W and compares against
/// gamma * x_b(w_j) after each step. gamma is estimated from the first basis vector;
/// the score is min_j Re(conj(gamma) <x_b(w_j), U^t x_a(w_j)>), clamped to [0, 1].
class TransferProbe {
 public:
  TransferProbe(const CoinAssignment& coins, int a, int b, const std::vector<RatVector>& subspace,
                NeighborMap map = {});

  int time() const { return time_; }
  Fidelity fidelity() const;
  void advance();
  void advance_to(int t);
  const StateVector& state(std::size_t j) const { return current_[j]; }

 private:
  QuantumWalk walk_;
  std::vector<StateVector> current_;
  std::vector<StateVector> target_;
  StateVector scratch_;
  int time_ = 0;
};

Fidelity transfer_fidelity(const CoinAssignment& coins, int a, int b, const std::vector<RatVector>& subspace, int t,
                           NeighborMap map = {});

double norm(const StateVector& v);

}  // namespace sst
