#include "sst/walk.hpp"

#include <algorithm>
#include <cmath>

#include "sst/errors.hpp"

namespace sst {

NeighborMap identity_map(int degree) {
  NeighborMap m(static_cast<std::size_t>(degree));
  for (int j = 0; j < degree; ++j) m[j] = j;
  return m;
}

RatVector map_weights(const RatVector& w, const NeighborMap& map) {
  if (map.size() != w.size()) throw InputError("neighbor identification has the wrong size");
  RatVector out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) out.at(static_cast<std::size_t>(map[j])) = w[j];
  return out;
}

QuantumWalk::QuantumWalk(const CoinAssignment& coins) : graph_(coins.graph()) {
  coin_matrices_.resize(static_cast<std::size_t>(graph_.vertex_count()));
  for (int u = 0; u < graph_.vertex_count(); ++u) {
    RatMatrix c = coins.coin(u).reflection();
    auto& m = coin_matrices_[u];
    m.resize(c.rows() * c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) m[i * c.cols() + j] = c(i, j).get_d();
  }
}

void QuantumWalk::step(std::span<const Amplitude> in, std::span<Amplitude> out) const {
  for (int u = 0; u < graph_.vertex_count(); ++u) {
    const int d = graph_.degree(u);
    const int base = graph_.first_arc(u);
    const double* c = coin_matrices_[u].data();
    for (int l = 0; l < d; ++l) {
      Amplitude acc = 0.0;
      for (int j = 0; j < d; ++j) acc += c[l * d + j] * in[base + j];
      out[graph_.reverse(base + l)] = acc;
    }
  }
}

StateVector QuantumWalk::apply(StateVector state, int t) const {
  if (static_cast<int>(state.size()) != arc_count()) {
    throw InputError("state has length " + std::to_string(state.size()) + ", expected " +
                     std::to_string(arc_count()));
  }
  if (t < 0) throw InputError("time must be nonnegative");
  StateVector next(state.size());
  for (int k = 0; k < t; ++k) {
    step(state, next);
    state.swap(next);
  }
  return state;
}

StateVector QuantumWalk::apply_coin(const StateVector& state) const {
  StateVector out(state.size());
  for (int u = 0; u < graph_.vertex_count(); ++u) {
    const int d = graph_.degree(u);
    const int base = graph_.first_arc(u);
    for (int l = 0; l < d; ++l) {
      Amplitude acc = 0.0;
      for (int j = 0; j < d; ++j) acc += coin_matrices_[u][l * d + j] * state[base + j];
      out[base + l] = acc;
    }
  }
  return out;
}

StateVector QuantumWalk::apply_reversal(const StateVector& state) const {
  StateVector out(state.size());
  for (int i = 0; i < arc_count(); ++i) out[graph_.reverse(i)] = state[i];
  return out;
}

StateVector walk_apply(const CoinAssignment& coins, StateVector state, int t) {
  return QuantumWalk(coins).apply(std::move(state), t);
}

StateVector coin_state(const Graph& graph, int a, std::span<const Amplitude> w) {
  if (static_cast<int>(w.size()) != graph.degree(a)) throw InputError("weight vector length != deg(a)");
  StateVector x(static_cast<std::size_t>(graph.arc_count()), 0.0);
  for (int j = 0; j < graph.degree(a); ++j) x[graph.first_arc(a) + j] = w[j];
  return x;
}

StateVector coin_state(const Graph& graph, int a, const RatVector& w) {
  std::vector<Amplitude> wd(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) wd[j] = w[j].get_d();
  return coin_state(graph, a, wd);
}

double norm(const StateVector& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

TransferProbe::TransferProbe(const CoinAssignment& coins, int a, int b, const std::vector<RatVector>& subspace,
                             NeighborMap map)
    : walk_(coins) {
  const Graph& g = coins.graph();
  if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count()) throw InputError("vertex out of range");
  if (subspace.empty()) throw InputError("subspace W is empty");
  if (map.empty()) {
    if (g.degree(a) != g.degree(b)) throw InputError("deg(a) != deg(b); supply a neighbor identification");
    map = identity_map(g.degree(a));
  }
  if (static_cast<int>(map.size()) != g.degree(a) || g.degree(a) != g.degree(b)) {
    throw InputError("neighbor identification does not match the degrees of a and b");
  }
  for (const auto& w : subspace) {
    if (!coins.coin(a).fixes(w)) throw InputError("W is not fixed by the coin at a");
    if (!coins.coin(b).fixes(map_weights(w, map))) throw InputError("W is not fixed by the coin at b");
  }
  for (const auto& w : orthogonalize(subspace)) {
    const std::vector<double> u = unit_vector(w);
    std::vector<Amplitude> ua(u.begin(), u.end());
    std::vector<Amplitude> ub(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) ub[map[j]] = u[j];
    StateVector src = coin_state(g, a, ua);
    StateVector dst = coin_state(g, b, ub);
    current_.push_back(std::move(src));
    target_.push_back(std::move(dst));
  }
  scratch_.resize(static_cast<std::size_t>(g.arc_count()));
}

Fidelity TransferProbe::fidelity() const {
  std::vector<Amplitude> overlaps;
  for (std::size_t j = 0; j < current_.size(); ++j) {
    Amplitude ip = 0.0;
    for (std::size_t i = 0; i < current_[j].size(); ++i) ip += std::conj(target_[j][i]) * current_[j][i];
    overlaps.push_back(ip);
  }
  Amplitude gamma = std::abs(overlaps[0]) > 1e-300 ? overlaps[0] / std::abs(overlaps[0]) : Amplitude(1.0);
  double worst = 1.0;
  for (const auto& ip : overlaps) worst = std::min(worst, (std::conj(gamma) * ip).real());
  return {std::clamp(worst, 0.0, 1.0), gamma};
}

void TransferProbe::advance() {
  for (auto& s : current_) {
    walk_.step(s, scratch_);
    s.swap(scratch_);
  }
  ++time_;
}

void TransferProbe::advance_to(int t) {
  if (t < time_) throw InputError("cannot rewind a transfer probe");
  while (time_ < t) advance();
}

Fidelity transfer_fidelity(const CoinAssignment& coins, int a, int b, const std::vector<RatVector>& subspace, int t,
                           NeighborMap map) {
  TransferProbe probe(coins, a, b, subspace, std::move(map));
  probe.advance_to(t);
  return probe.fidelity();
}

}  // namespace sst
