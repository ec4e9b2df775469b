#include "sst/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "sst/errors.hpp"

namespace sst {

namespace {

std::vector<RatVector> checked_subspace(const CoinAssignment& coins, int u, const std::vector<RatVector>& W,
                                        const char* label) {
  const Graph& g = coins.graph();
  if (u < 0 || u >= g.vertex_count()) throw InputError("vertex out of range");
  if (W.empty()) throw InputError(std::string("subspace ") + label + " is empty");
  for (const auto& w : W) {
    if (static_cast<int>(w.size()) != g.degree(u)) {
      throw InputError(std::string("subspace ") + label + " vector length differs from the degree");
    }
    if (!coins.coin(u).fixes(w)) {
      throw InputError(std::string(label) + " is not fixed by the coin at vertex " + std::to_string(u));
    }
  }
  return orthogonalize(W);
}

std::vector<RatVector> complete(const ReflectionCoin& coin, std::vector<RatVector> basis, Completion order) {
  std::vector<RatVector> candidates = coin.basis();
  if (order == Completion::Reverse) std::reverse(candidates.begin(), candidates.end());
  for (const auto& c : candidates) {
    if (static_cast<int>(basis.size()) == coin.rank()) break;
    RatVector v = c;
    for (const auto& b : basis) {
      const Rational f = dot(v, b) / dot(b, b);
      if (f == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * b[i];
    }
    if (!is_zero(v)) basis.push_back(primitive(v));
  }
  if (static_cast<int>(basis.size()) != coin.rank()) throw InvariantError("coin basis completion lost rank");
  return basis;
}

// Entry of Delta^-1 M Delta for M similar to a symmetric matrix: its square is M_ij M_ji.
double symmetric_entry(const Rational& mij, const Rational& mji) {
  if (mij == 0) return 0;
  const double mag = std::sqrt(Rational(mij * mji).get_d());
  return mij > 0 ? mag : -mag;
}

}  // namespace

CoinBasis induced_coin_basis(const CoinAssignment& coins, int a, const std::vector<RatVector>& W, int b,
                             const std::vector<RatVector>& V, Completion order) {
  if (W.size() != V.size()) throw InputError("dim W != dim V");
  const std::vector<RatVector> wo = checked_subspace(coins, a, W, "W");
  const std::vector<RatVector> vo = checked_subspace(coins, b, V, "V");
  if (a == b && wo != vo) throw InputError("W and V must coincide when a == b");

  const Graph& g = coins.graph();
  CoinBasis out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    std::vector<RatVector> prescribed;
    if (u == a) prescribed = wo;
    else if (u == b) prescribed = vo;
    const std::size_t fixed = prescribed.size();
    std::vector<RatVector> basis = complete(coins.coin(u), std::move(prescribed), order);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const int idx = static_cast<int>(out.clones.size());
      if (k < fixed && u == a) out.S.push_back(idx);
      if (k < fixed && u == b) out.T.push_back(idx);
      out.clones.push_back({u, static_cast<int>(k)});
      out.weights.push_back(std::move(basis[k]));
    }
  }
  return out;
}

CoinBasis induced_coin_basis(const CoinAssignment& coins, int a, int b, const std::vector<RatVector>& W,
                             const NeighborMap& map, Completion order) {
  const Graph& g = coins.graph();
  if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count()) throw InputError("vertex out of range");
  NeighborMap m = map;
  if (m.empty()) {
    if (g.degree(a) != g.degree(b)) throw InputError("deg(a) != deg(b); supply a neighbor identification");
    m = identity_map(g.degree(a));
  }
  std::vector<RatVector> V;
  for (const auto& w : W) V.push_back(map_weights(w, m));
  return induced_coin_basis(coins, a, W, b, V, order);
}

bool HermitianReduction::is_similar_to_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (h_rat(i, j) * delta_sq[j] != h_rat(j, i) * delta_sq[i]) return false;
  return true;
}

Eigen::MatrixXd HermitianReduction::symmetric() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      h(i, j) = symmetric_entry(h_rat(i, j), h_rat(j, i));
  return h;
}

Eigen::MatrixXd HermitianReduction::normalized_basis(const Graph& graph) const {
  Eigen::MatrixXd n = Eigen::MatrixXd::Zero(graph.arc_count(), static_cast<Eigen::Index>(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    const int u = clone_of[i].vertex;
    const std::vector<double> w = unit_vector(weights[i]);
    for (int l = 0; l < graph.degree(u); ++l) n(graph.first_arc(u) + l, static_cast<Eigen::Index>(i)) = w[l];
  }
  return n;
}

HermitianReduction build_H(const CoinAssignment& coins, const CoinBasis& basis) {
  const Graph& g = coins.graph();
  const std::size_t m = basis.clones.size();
  if (basis.weights.size() != m) throw InputError("coin basis has mismatched clone and weight lists");
  std::vector<std::vector<int>> at(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < m; ++i) {
    const int u = basis.clones[i].vertex;
    if (u < 0 || u >= g.vertex_count()) throw InputError("clone vertex out of range");
    const RatVector& w = basis.weights[i];
    if (static_cast<int>(w.size()) != g.degree(u) || is_zero(w)) throw InputError("malformed clone weight vector");
    if (!coins.coin(u).fixes(w)) throw InputError("coin basis vector outside col(C_u + I)");
    for (int j : at[u]) {
      if (dot(w, basis.weights[j]) != 0) throw InputError("coin basis is not orthogonal");
    }
    at[u].push_back(static_cast<int>(i));
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (static_cast<int>(at[u].size()) != coins.coin(u).rank()) {
      throw InputError("coin basis does not span col(C_u + I) at vertex " + std::to_string(u));
    }
  }

  HermitianReduction red;
  red.clone_of = basis.clones;
  red.weights = basis.weights;
  red.S = basis.S;
  red.T = basis.T;
  red.delta_sq.resize(m);
  for (std::size_t i = 0; i < m; ++i) red.delta_sq[i] = dot(basis.weights[i], basis.weights[i]);
  red.h_rat = RatMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const int u = basis.clones[i].vertex;
    const auto nbrs = g.neighbors(u);
    for (int pu = 0; pu < static_cast<int>(nbrs.size()); ++pu) {
      const int v = nbrs[pu];
      const int pv = g.neighbor_position(v, u);
      const Rational& wi = basis.weights[i][pu];
      if (wi == 0) continue;
      for (int j : at[v]) red.h_rat(i, j) = wi * basis.weights[j][pv] / red.delta_sq[j];
    }
  }
  return red;
}

RatMatrix chebyshev_apply(const HermitianReduction& red, int t) {
  if (t < 0) throw InputError("time must be nonnegative");
  RatMatrix prev = RatMatrix::identity(red.size());
  if (t == 0) return prev;
  RatMatrix cur = red.h_rat;
  for (int k = 1; k < t; ++k) {
    RatMatrix next = red.h_rat * cur * Rational(2) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatVector chebyshev_column(const HermitianReduction& red, int s, int t) {
  if (t < 0) throw InputError("time must be nonnegative");
  RatVector prev(red.size());
  prev.at(static_cast<std::size_t>(s)) = 1;
  if (t == 0) return prev;
  RatVector cur = red.h_rat * prev;
  for (int k = 1; k < t; ++k) {
    RatVector next = red.h_rat * cur;
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = 2 * next[i] - prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool exact_transfer_check(const HermitianReduction& red, const std::vector<int>& S, const std::vector<int>& T, int t,
                          int gamma) {
  if (S.size() != T.size()) throw InputError("|S| != |T|");
  if (gamma != 1 && gamma != -1) throw InputError("gamma must be +1 or -1");
  for (std::size_t j = 0; j < S.size(); ++j) {
    if (red.delta_sq.at(S[j]) != red.delta_sq.at(T[j])) throw InputError("paired clones have different norms");
  }
  for (std::size_t j = 0; j < S.size(); ++j) {
    const RatVector col = chebyshev_column(red, S[j], t);
    for (std::size_t i = 0; i < col.size(); ++i) {
      const Rational want = static_cast<int>(i) == T[j] ? Rational(gamma) : Rational(0);
      if (col[i] != want) return false;
    }
  }
  return true;
}

bool exact_transfer_check(const HermitianReduction& red, int t, int gamma) {
  return exact_transfer_check(red, red.S, red.T, t, gamma);
}

Eigen::MatrixXd BlowUp::symmetric() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd gm(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      gm(i, j) = symmetric_entry(g_rat(i, j), g_rat(j, i));
  return gm;
}

Eigen::MatrixXd BlowUp::F() const {
  const auto c = static_cast<Eigen::Index>(clone_count());
  const auto r = static_cast<Eigen::Index>(size()) - c;
  return symmetric().block(c, 0, r, c);
}

Eigen::MatrixXd BlowUp::B() const {
  const auto c = static_cast<Eigen::Index>(clone_count());
  const auto r = static_cast<Eigen::Index>(size()) - c;
  return symmetric().block(c, c, r, r);
}

BlowUp build_blowup(const CoinAssignment& coins, int a, int b) {
  const Graph& g = coins.graph();
  if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count()) throw InputError("vertex out of range");
  if (a == b) throw InputError("marked vertices must be distinct");
  if (g.adjacent(a, b)) {
    throw InputError("a and b are adjacent: perfect subspace state transfer from a to b is guaranteed at t=1");
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u != a && u != b && !(coins.coin(u) == ReflectionCoin::grover(g.degree(u)))) {
      throw InputError("blow-up requires Grover coins away from the marked vertices");
    }
  }
  BlowUp bu;
  bu.a = a;
  bu.b = b;
  bu.deg_a = g.degree(a);
  bu.deg_b = g.degree(b);
  bu.rest_index.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = bu.deg_a + bu.deg_b;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u == a || u == b) continue;
    bu.rest.push_back(u);
    bu.rest_index[u] = next++;
  }
  const auto n = static_cast<std::size_t>(next);
  RatMatrix full(n, n);
  auto place = [&](int marked, int offset) {
    const RatMatrix& p = coins.coin(marked).projection();
    const auto nbrs = g.neighbors(marked);
    for (int l = 0; l < g.degree(marked); ++l) {
      for (int j = 0; j < g.degree(marked); ++j) {
        const int col = bu.rest_index[nbrs[j]];
        full(offset + l, col) = p(l, j);
        full(col, offset + l) = p(j, l);
      }
    }
  };
  place(a, 0);
  place(b, bu.deg_a);
  for (const auto& [u, v] : g.edges()) {
    if (u == a || u == b || v == a || v == b) continue;
    full(bu.rest_index[u], bu.rest_index[v]) = 1;
    full(bu.rest_index[v], bu.rest_index[u]) = 1;
  }
  bu.delta_sq.assign(n, Rational(1));
  for (int u : bu.rest) bu.delta_sq[bu.rest_index[u]] = g.degree(u);
  bu.g_rat = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (full(i, j) != 0) bu.g_rat(i, j) = full(i, j) / bu.delta_sq[j];
  return bu;
}

}  // namespace sst
