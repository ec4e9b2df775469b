#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "random_suite.hpp"
#include "sst/decider.hpp"
#include "sst/errors.hpp"
#include "sst/families.hpp"
#include "sst/reduction.hpp"
#include "sst/resolvent.hpp"

using namespace sst;

namespace {

HermitianReduction reduce(const CoinAssignment& coins, int a, int b, const std::vector<RatVector>& W,
                          Completion order = Completion::Forward) {
  return build_H(coins, induced_coin_basis(coins, a, b, W, {}, order));
}

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  return out;
}

int clones_at(const HermitianReduction& red, int v) {
  return static_cast<int>(std::count_if(red.clone_of.begin(), red.clone_of.end(),
                                        [v](const Clone& c) { return c.vertex == v; }));
}

// f_t(H) in doubles, from the exact f_t(H_rat) and the Delta scaling.
Eigen::MatrixXd chebyshev_symmetric(const HermitianReduction& red, int t) {
  const RatMatrix f = chebyshev_apply(red, t);
  Eigen::MatrixXd out(f.rows(), f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      out(i, j) = f(i, j).get_d() * std::sqrt(Rational(red.delta_sq[j] / red.delta_sq[i]).get_d());
  return out;
}

const CoinAssignment octahedron_coins(const MarkedGraph& oct, bool with_ones) {
  auto W = circulant_subspace(oct.graph, 3, 1, 2);
  if (with_ones) W.emplace_back(4, Rational(1));
  const ReflectionCoin c = reflection_about(4, W);
  return CoinAssignment::all_grover(oct.graph).with_coin(oct.a, c).with_coin(oct.b, c);
}

}  // namespace

TEST_CASE("all-Grover coins give one all-ones clone per vertex") {
  const MarkedGraph gp = build_family(GeneralizedPath{2, 4});
  const CoinAssignment coins = CoinAssignment::all_grover(gp.graph);
  const CoinBasis basis = induced_coin_basis(coins, gp.a, gp.b, {RatVector(2, Rational(1))});
  REQUIRE(static_cast<int>(basis.clones.size()) == gp.graph.vertex_count());
  for (std::size_t i = 0; i < basis.clones.size(); ++i)
    CHECK(basis.weights[i] == RatVector(gp.graph.degree(basis.clones[i].vertex), Rational(1)));
  CHECK(basis.S.size() == 1);
  CHECK(basis.T.size() == 1);
}

TEST_CASE("vertices with C = -I contribute no clones") {
  const Graph path = build_graph({{0, 1}, {1, 2}, {2, 3}}, 4);
  const CoinAssignment coins = CoinAssignment::all_grover(path).with_coin(3, ReflectionCoin::minus_identity(1));
  const HermitianReduction red = reduce(coins, 0, 0, {RatVector{1}});
  CHECK(red.size() == 3);
  CHECK(clones_at(red, 3) == 0);
}

TEST_CASE("octahedron clone counts") {
  const MarkedGraph oct = build_family(Circulant2m{3, 1, 2});
  const auto W = circulant_subspace(oct.graph, 3, 1, 2);
  for (bool ones : {false, true}) {
    const CoinAssignment coins = octahedron_coins(oct, ones);
    const HermitianReduction red = reduce(coins, oct.a, oct.b, W);
    CHECK(clones_at(red, oct.a) == coins.coin(oct.a).rank());
    CHECK(clones_at(red, oct.b) == coins.coin(oct.b).rank());
    CHECK(red.S.size() == 2);
    CHECK(red.size() == 4 + 2 * static_cast<std::size_t>(coins.coin(oct.a).rank()));
  }
}

TEST_CASE("induced basis errors") {
  const MarkedGraph oct = build_family(Circulant2m{3, 1, 2});
  const CoinAssignment coins = octahedron_coins(oct, false);
  CHECK_THROWS_AS(induced_coin_basis(coins, oct.a, oct.b, {RatVector(4, Rational(1))}), InputError);
  CHECK_THROWS_AS(induced_coin_basis(coins, oct.a, {{1, 0, -1, 0}}, oct.b, {{1, 0, -1, 0}, {0, 1, 0, -1}}),
                  InputError);
  const MarkedGraph k23 = build_family(CompleteBipartiteK2m{3});
  CHECK_THROWS_AS(induced_coin_basis(CoinAssignment::all_grover(k23.graph), k23.a, 2, {RatVector(3, Rational(1))}),
                  InputError);
}

TEST_CASE("build_H rejects non-orthogonal or incomplete bases") {
  const Graph path = build_graph({{0, 1}, {1, 2}}, 3);
  const CoinAssignment coins = CoinAssignment::all_grover(path).with_coin(1, ReflectionCoin::about(2, {{1, 0}, {0, 1}}));
  CoinBasis bad;
  bad.clones = {{0, 0}, {1, 0}, {1, 1}, {2, 0}};
  bad.weights = {{1}, {1, 1}, {1, 0}, {1}};
  bad.S = {0};
  bad.T = {0};
  CHECK_THROWS_AS(build_H(coins, bad), InputError);
  bad.clones = {{0, 0}, {1, 0}, {2, 0}};
  bad.weights = {{1}, {1, 1}, {1}};
  CHECK_THROWS_AS(build_H(coins, bad), InputError);
}

TEST_CASE("small reductions by hand") {
  const Graph k2 = build_graph({{0, 1}}, 2);
  const CoinAssignment coins = CoinAssignment::all_grover(k2);
  const HermitianReduction red = reduce(coins, 0, 1, {RatVector{1}});
  RatMatrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1;
  CHECK(red.h_rat == swap);

  std::vector<Edge> pet;
  for (int i = 0; i < 5; ++i) {
    pet.emplace_back(i, (i + 1) % 5);
    pet.emplace_back(5 + i, 5 + (i + 2) % 5);
    pet.emplace_back(i, 5 + i);
  }
  const Graph petersen = build_graph(pet, 10);
  const HermitianReduction rp = reduce(CoinAssignment::all_grover(petersen), 0, 0, {RatVector(3, Rational(1))});
  for (std::size_t i = 0; i < rp.size(); ++i)
    for (std::size_t j = 0; j < rp.size(); ++j) {
      const bool adj = petersen.adjacent(rp.clone_of[i].vertex, rp.clone_of[j].vertex);
      CHECK(rp.h_rat(i, j) == (adj ? Rational(1, 3) : Rational(0)));
    }

  const Graph star = build_graph({{0, 1}, {0, 2}, {0, 3}}, 4);
  const HermitianReduction rs = reduce(CoinAssignment::all_grover(star), 0, 0, {RatVector(3, Rational(1))});
  const auto ev = sorted_eigenvalues(rs.symmetric());
  REQUIRE(ev.size() == 4);
  CHECK(ev[0] == doctest::Approx(-1));
  CHECK(ev[1] == doctest::Approx(0).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(0).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(1));
}

TEST_CASE("reduction invariants on the random suite") {
  for (const auto& inst : suite::random_instances(family_seed())) {
    CAPTURE(inst.name);
    const HermitianReduction red = reduce(inst.coins, inst.a, inst.b, inst.W);
    CHECK(red.is_similar_to_symmetric());
    for (std::size_t j = 0; j < red.S.size(); ++j) CHECK(red.delta_sq[red.S[j]] == red.delta_sq[red.T[j]]);
    const auto ev = sorted_eigenvalues(red.symmetric());
    CHECK(ev.front() >= -1 - 1e-9);
    CHECK(ev.back() <= 1 + 1e-9);
    const Eigen::MatrixXd N = red.normalized_basis(inst.coins.graph());
    CHECK((N.transpose() * N - Eigen::MatrixXd::Identity(N.cols(), N.cols())).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("N* U^t N equals f_t(H)") {
  for (const auto& inst : suite::random_instances(family_seed())) {
    CAPTURE(inst.name);
    const HermitianReduction red = reduce(inst.coins, inst.a, inst.b, inst.W);
    const Eigen::MatrixXd N = red.normalized_basis(inst.coins.graph());
    const Eigen::MatrixXd U = oracle::walk_matrix(inst.coins);
    Eigen::MatrixXd UtN = N;
    for (int t = 1; t <= 8; ++t) {
      UtN = U * UtN;
      CHECK((N.transpose() * UtN - chebyshev_symmetric(red, t)).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("completion order does not change psi or the verdict") {
  for (const auto& inst : suite::random_instances(family_seed() + 1, 10)) {
    CAPTURE(inst.name);
    const HermitianReduction f = reduce(inst.coins, inst.a, inst.b, inst.W, Completion::Forward);
    const HermitianReduction r = reduce(inst.coins, inst.a, inst.b, inst.W, Completion::Reverse);
    CHECK(psi(f, f.S) == psi(r, r.S));
    CHECK(psi(f, f.S, f.T) == psi(r, r.S, r.T));
    CHECK(to_line(decide_transfer(f)) == to_line(decide_transfer(r)));
  }
}

TEST_CASE("Chebyshev evaluation") {
  const Graph k2 = build_graph({{0, 1}}, 2);
  const HermitianReduction red = reduce(CoinAssignment::all_grover(k2), 0, 1, {RatVector{1}});
  CHECK(chebyshev_apply(red, 0) == RatMatrix::identity(2));
  CHECK(chebyshev_apply(red, 2) == RatMatrix::identity(2));
  CHECK(chebyshev_column(red, 0, 3) == RatVector{0, 1});
  CHECK_THROWS_AS(chebyshev_apply(red, -1), InputError);

  const MarkedGraph oct = build_family(Circulant2m{3, 1, 2});
  const HermitianReduction ro = reduce(octahedron_coins(oct, false), oct.a, oct.b, circulant_subspace(oct.graph, 3, 1, 2));
  CHECK(exact_transfer_check(ro, 4, -1));
  CHECK_FALSE(exact_transfer_check(ro, 4, 1));
  for (int t = 0; t < 4; ++t) {
    CHECK_FALSE(exact_transfer_check(ro, t, 1));
    CHECK_FALSE(exact_transfer_check(ro, t, -1));
  }
  CHECK(exact_transfer_check(ro, ro.S, ro.S, 0, 1));
}

TEST_CASE("K_{2,3} transfers at t=2 for any rational W") {
  std::mt19937_64 rng(41);
  const MarkedGraph k23 = build_family(CompleteBipartiteK2m{3});
  for (int trial = 0; trial < 6; ++trial) {
    const int r = 1 + trial % 3;
    const auto span = random_subspace(rng, 3, r);
    const ReflectionCoin c = reflection_about(3, span);
    const CoinAssignment coins = CoinAssignment::all_grover(k23.graph).with_coin(k23.a, c).with_coin(k23.b, c);
    const HermitianReduction red = reduce(coins, k23.a, k23.b, random_span_subspace(rng, span, 1 + trial % r));
    CHECK((exact_transfer_check(red, 2, 1) || exact_transfer_check(red, 2, -1)));
    CHECK_FALSE(exact_transfer_check(red, 1, 1));
    CHECK_FALSE(exact_transfer_check(red, 1, -1));
  }
}

TEST_CASE("blow-up structure") {
  const MarkedGraph k24 = build_family(CompleteBipartiteK2m{4});
  std::mt19937_64 rng(43);
  const ReflectionCoin c = reflection_about(4, random_subspace(rng, 4, 2));
  const CoinAssignment coins = CoinAssignment::all_grover(k24.graph).with_coin(k24.a, c).with_coin(k24.b, c);
  const BlowUp g = build_blowup(coins, k24.a, k24.b);
  CHECK(g.size() == 8 + 4);
  CHECK(g.B().cwiseAbs().maxCoeff() == 0);
  const Eigen::MatrixXd F = g.F();
  CHECK((F.leftCols(4) - F.rightCols(4)).cwiseAbs().maxCoeff() < 1e-14);
  for (int j = 0; j < 4; ++j) {
    RatVector seed(g.size());
    seed[j] = 1;
    seed[4 + j] = -1;
    CHECK(is_zero(g.g_rat * seed));
  }
  // clone blocks only touch N(a) and N(b); no cl(a)-cl(b) entries
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(g.g_rat(i, j) == 0);

  const MarkedGraph adjacent = build_family(Circulant2m{3, 1, 2});
  CHECK_THROWS_WITH_AS(build_blowup(CoinAssignment::all_grover(adjacent.graph), 0, 1),
                       doctest::Contains("guaranteed at t=1"), InputError);
  const CoinAssignment not_grover =
      CoinAssignment::all_grover(k24.graph).with_coin(2, ReflectionCoin::about(2, {{1, 0}}));
  CHECK_THROWS_AS(build_blowup(not_grover, k24.a, k24.b), InputError);
}

TEST_CASE("GP(1,n) blow-up is the normalized path") {
  for (int n : {3, 4, 6}) {
    const MarkedGraph gp = build_family(GeneralizedPath{1, n});
    const BlowUp g = build_blowup(CoinAssignment::all_grover(gp.graph), gp.a, gp.b);
    const auto ev = sorted_eigenvalues(g.symmetric());
    REQUIRE(static_cast<int>(ev.size()) == n);
    for (int k = 0; k < n; ++k) CHECK(ev[k] == doctest::Approx(-std::cos(M_PI * k / (n - 1))).epsilon(1e-12));
  }
}

TEST_CASE("quadratic eigenvalue identity on blow-ups") {
  std::mt19937_64 rng(47);
  std::vector<std::pair<MarkedGraph, int>> cases = {{build_family(CompleteBipartiteK2m{3}), 3},
                                                    {build_family(GeneralizedPath{3, 5}), 3},
                                                    {build_family(DoubleConeOverCycles{{1, 2}}), 12}};
  for (const auto& [mg, d] : cases) {
    const ReflectionCoin c = reflection_about(d, random_subspace(rng, d, 2));
    const BlowUp g =
        build_blowup(CoinAssignment::all_grover(mg.graph).with_coin(mg.a, c).with_coin(mg.b, c), mg.a, mg.b);
    const Eigen::MatrixXd G = g.symmetric(), F = g.F(), B = g.B();
    const int k = static_cast<int>(g.clone_count());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    for (int i = 0; i < G.rows(); ++i) {
      const double lam = es.eigenvalues()(i);
      const Eigen::VectorXd y = es.eigenvectors().col(i).tail(G.rows() - k);
      if (std::abs(lam) > 1e-9) {
        const Eigen::MatrixXd Q =
            lam * lam * Eigen::MatrixXd::Identity(B.rows(), B.rows()) - lam * B - F * F.transpose();
        CHECK((Q * y).norm() <= 1e-8);
      } else {
        CHECK((F.transpose() * y).norm() <= 1e-8);
      }
    }
  }
}
