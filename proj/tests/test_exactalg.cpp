#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "oracle.hpp"
#include "sst/charpoly.hpp"
#include "sst/cyclotomic.hpp"
#include "sst/errors.hpp"
#include "sst/factor.hpp"
#include "sst/families.hpp"
#include "sst/reduction.hpp"
#include "sst/resolvent.hpp"

using namespace sst;

namespace {

RatPoly P(std::vector<Rational> c) { return RatPoly(std::move(c)); }
const RatPoly X = RatPoly::x();

Rational small(std::mt19937_64& rng) {
  Rational r(std::uniform_int_distribution<int>(-5, 5)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
  r.canonicalize();
  return r;
}

// H_rat = K D^-1 with K symmetric, so H = D^-1/2 K D^-1/2.
// Clones in S and T share one delta_sq, as the pairing requires.
HermitianReduction random_reduction(std::mt19937_64& rng, int n, const std::vector<int>& S, const std::vector<int>& T) {
  HermitianReduction red;
  red.h_rat = RatMatrix(n, n);
  red.delta_sq.resize(n);
  for (int j = 0; j < n; ++j) red.delta_sq[j] = Rational(std::uniform_int_distribution<int>(1, 7)(rng), 1);
  for (std::size_t j = 0; j < S.size(); ++j) red.delta_sq[S[j]] = red.delta_sq[T[j]] = red.delta_sq[S[0]];
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Rational k = rng() % 3 == 0 ? Rational(0) : small(rng);
      red.h_rat(i, j) = k / red.delta_sq[j];
      red.h_rat(j, i) = k / red.delta_sq[i];
    }
  return red;
}

RatMatrix petersen_over_3() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  RatMatrix m(10, 10);
  for (auto [u, v] : edges) m(u, v) = m(v, u) = Rational(1, 3);
  return m;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(parse_rational("-4/6")) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK(primitive({Rational(1, 2), Rational(-1, 3)}) == RatVector{3, -2});

  RatVector huge{Rational("1000000000000000000000000000000000000000000000000000000000000000000000000000000"
                          "0000000000000000000000000000000000000000000000000000000000000000000000000000000"
                          "0000000000000000000000000000000000000000000000000000000000000000000000000000000"
                          "0000000000000000000000000000000000000000000000000000000000000000000000000000000"
                          "000000000000"),
                 0};
  huge[1] = huge[0];
  const auto u = unit_vector(huge);
  CHECK(u[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(u[1] == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("exact rank and kernel") {
  RatMatrix m(2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
  CHECK(rank(m) == 1);
  const auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero(m * v));
}

TEST_CASE("polynomial arithmetic") {
  const RatPoly xm1 = X - RatPoly::constant(1);
  CHECK(gcd(X * X - RatPoly::constant(1), xm1) == xm1);
  CHECK(gcd(cyclotomic(4), cyclotomic(6)) == RatPoly::constant(1));
  const PolyDivision d = divrem(X.pow(3), X - RatPoly::constant(2));
  CHECK(d.quotient == P({4, 2, 1}));
  CHECK(d.remainder == RatPoly::constant(8));
  CHECK_THROWS_AS(divrem(X, RatPoly()), InputError);
  CHECK_THROWS_AS(exact_div(X, xm1), InvariantError);
  CHECK(lcm(xm1 * X, xm1 * (X + RatPoly::constant(1))) == X * (X * X - RatPoly::constant(1)));
  CHECK(content(P({Rational(2, 3), Rational(4, 9)})) == Rational(2, 9));
  CHECK(P({0, 0, 3}).derivative() == P({0, 6}));
  CHECK(P({Rational(-1, 2), 0, 1}).eval(Rational(1, 2)) == Rational(-1, 4));
  CHECK(gcd(RatPoly(), RatPoly()).is_zero());

  CHECK(pretty(P({Rational(-1, 2), 0, 1})) == "x^2 - 1/2");
  CHECK(pretty(X) == "x");
  CHECK(to_string(P({Rational(-1, 2), 0, 1})) == "-1/2 0 1");
  CHECK(parse_poly("-1/2 0 1") == P({Rational(-1, 2), 0, 1}));
  CHECK(to_string(RatPoly()) == "0");
}

TEST_CASE("random gcd identities") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto rp = [&](int deg) {
      std::vector<Rational> c;
      for (int i = 0; i <= deg; ++i) c.push_back(small(rng));
      c.back() = Rational(std::uniform_int_distribution<int>(1, 5)(rng), 2);
      return RatPoly(c);
    };
    const RatPoly g = rp(1 + trial % 3), a = rp(trial % 4), b = rp(1 + trial % 2);
    const RatPoly h = gcd(g * a, g * b);
    CHECK(divrem(g * a, h).remainder.is_zero());
    CHECK(divrem(g * b, h).remainder.is_zero());
    CHECK(divrem(h, g.monic()).remainder.is_zero());
    CHECK(h.leading() == 1);
  }
}

TEST_CASE("integer subresultant gcd") {
  const zx::IntPoly a = zx::mul({1, 1}, zx::mul({1, 1}, {-2, 1}));
  const zx::IntPoly b = zx::mul({1, 1}, {3, 1});
  CHECK(zx::gcd(zx::scale(a, 3), b) == zx::IntPoly{1, 1});
  zx::IntPoly q;
  CHECK(zx::divides({1, 1}, a, &q));
  CHECK(q == zx::mul({1, 1}, {-2, 1}));
  CHECK_FALSE(zx::divides({3, 1}, a));
}

TEST_CASE("square-free decomposition") {
  const RatPoly p = (X - RatPoly::constant(1)).pow(3) * (X + RatPoly::constant(2)) * RatPoly::constant(5);
  const auto parts = squarefree_decomposition(p);
  RatPoly back = RatPoly::constant(1);
  for (const auto& [f, k] : parts) back *= f.pow(k);
  CHECK(back * RatPoly::constant(5) == p);
  CHECK(squarefree_part(p) == ((X - RatPoly::constant(1)) * (X + RatPoly::constant(2))));
}

TEST_CASE("factorization over Q") {
  const RatPoly x2m2 = X * X - RatPoly::constant(2), x2m3 = X * X - RatPoly::constant(3);
  CHECK(irreducible_factors(x2m2 * x2m3) == std::vector<RatPoly>{x2m3, x2m2});
  const RatPoly sd = P({1, 0, -10, 0, 1});
  CHECK(irreducible_factors(sd) == std::vector<RatPoly>{sd});
  const auto f = factor((X - RatPoly::constant(1)).pow(3) * (X * X + X + RatPoly::constant(1)));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::pair{X - RatPoly::constant(1), 3});
  CHECK(f[1] == std::pair{X * X + X + RatPoly::constant(1), 1});

  std::vector<RatPoly> parts = {P({-2, 0, 0, 1}), P({Rational(-1, 2), 1}), P({1, 1, 0, 0, 1}), P({3, 0, 1}),
                                P({-1, -1, 1})};
  RatPoly prod = RatPoly::constant(Rational(7, 3));
  for (const auto& q : parts) prod *= q;
  std::vector<RatPoly> sorted = parts;
  std::sort(sorted.begin(), sorted.end(), poly_less);
  CHECK(irreducible_factors(prod) == sorted);
}

TEST_CASE("characteristic polynomials") {
  RatMatrix z(1, 1);
  CHECK(charpoly(z) == X);
  RatMatrix s(2, 2);
  s(0, 1) = s(1, 0) = 1;
  CHECK(charpoly(s) == X * X - RatPoly::constant(1));

  const RatPoly pet = charpoly(petersen_over_3());
  CHECK(pet == (X - RatPoly::constant(1)) * (X - RatPoly::constant(Rational(1, 3))).pow(5) *
                   (X + RatPoly::constant(Rational(2, 3))).pow(4));
  const auto f = factor(pet);
  REQUIRE(f.size() == 3);
  CHECK(f[0].second + f[1].second + f[2].second == 10);
}

TEST_CASE("charpoly matches numeric eigenvalues") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = small(rng);
    const RatPoly p = charpoly(m);
    Eigen::EigenSolver<Eigen::MatrixXd> es(m.to_double());
    std::vector<std::complex<double>> c{1.0};
    for (int k = 0; k < 6; ++k) {
      const std::complex<double> lam = es.eigenvalues()(k);
      std::vector<std::complex<double>> next(c.size() + 1);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= lam * c[i];
      }
      c = next;
    }
    for (int i = 0; i <= 6; ++i) CHECK(std::abs(c[i] - p.coeff(i).get_d()) < 1e-6);
  }
}

TEST_CASE("adjugate entries agree with an exact solve") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 4;
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = small(rng);
    const Rational x0(5, 2);
    const Rational det = charpoly(m).eval(x0);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        RatVector e(n);
        e[t] = 1;
        const Rational inv = oracle::solve(RatMatrix::identity(n) * x0 - m, e)[s];
        CHECK(adjugate_entry(m, s, t).eval(x0) == det * inv);
      }
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == X - RatPoly::constant(1));
  CHECK(cyclotomic(2) == X + RatPoly::constant(1));
  CHECK(cyclotomic(4) == P({1, 0, 1}));
  CHECK(cyclotomic(6) == P({1, -1, 1}));
  CHECK(cyclotomic(8) == P({1, 0, 0, 0, 1}));
  CHECK(cyclotomic(12) == P({1, 0, -1, 0, 1}));
  CHECK(cyclotomic(105).coeff(7) == -2);
  CHECK_THROWS_AS(cyclotomic(0), InputError);
  for (int m = 1; m <= 60; ++m) {
    RatPoly prod = RatPoly::constant(1);
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) prod *= cyclotomic(d);
    CHECK(prod == RatPoly::monomial(1, m) - RatPoly::constant(1));
  }
  const auto phi = totients(12);
  CHECK(phi[1] == 1);
  CHECK(phi[8] == 4);
  CHECK(phi[12] == 4);
}

TEST_CASE("sharp transform and cyclotomic factoring") {
  CHECK(sharp(P({Rational(-1, 2), 0, 1})) == cyclotomic(8));
  CHECK(sharp(X) == cyclotomic(4));
  CHECK(sharp(X - RatPoly::constant(1)) == cyclotomic(1).pow(2));
  CHECK_THROWS_AS(sharp(RatPoly()), InputError);

  CHECK(factor_into_cyclotomics(P({-1, -1, 1})) == std::nullopt);
  CHECK(factor_into_cyclotomics(P({2, 0, 1})) == std::nullopt);
  CHECK(factor_into_cyclotomics(RatPoly::monomial(1, 6) - RatPoly::constant(1)) == std::vector<int>{1, 2, 3, 6});
  CHECK(factor_into_cyclotomics(cyclotomic(1).pow(2) * cyclotomic(2)) == std::vector<int>{1, 1, 2});
  CHECK(factor_into_cyclotomics(cyclotomic(30) * RatPoly::constant(3)) == std::vector<int>{30});
  CHECK(factor_into_cyclotomics(cyclotomic(30), 20) == std::nullopt);
  CHECK(cyclotomic_product({4, 8}) == cyclotomic(4) * cyclotomic(8));
  for (int m = 1; m <= 200; ++m) CHECK(m <= cyclotomic_order_limit(cyclotomic(m).degree()));
  const std::vector<int> phi = totients(100000);
  int worst_gap = 1 << 30;
  for (int m = 1; m <= 100000; ++m) worst_gap = std::min(worst_gap, cyclotomic_order_limit(phi[m]) - m);
  CHECK(worst_gap >= 0);
}

TEST_CASE("psi by hand") {
  HermitianReduction one;
  one.h_rat = RatMatrix(1, 1);
  one.delta_sq = {1};
  const RatFun f = psi(one, {0}, {0});
  CHECK(f.num() == RatPoly::constant(1));
  CHECK(f.den() == X);
  CHECK(pole_support(f) == std::vector<RatPoly>{X});

  HermitianReduction two;
  two.h_rat = RatMatrix(2, 2);
  two.h_rat(0, 1) = two.h_rat(1, 0) = Rational(1, 2);
  two.delta_sq = {1, 1};
  const RatFun g = psi(two, {0}, {0});
  CHECK(g.num() == X);
  CHECK(g.den() == X * X - RatPoly::constant(Rational(1, 4)));
  CHECK(pole_support(g) ==
        std::vector<RatPoly>{X - RatPoly::constant(Rational(1, 2)), X + RatPoly::constant(Rational(1, 2))});
  CHECK(to_string(g) == "0 1 | -1/4 0 1");
}

TEST_CASE("psi against moment and resolvent oracles") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<int> S{0}, T{static_cast<int>(rng() % n)};
    if (n > 3) {
      S.push_back(n - 1);
      T.push_back(1);
    }
    const HermitianReduction red = random_reduction(rng, n, S, T);
    REQUIRE(red.is_similar_to_symmetric());
    const RatFun f = psi(red, S, T);
    CHECK(gcd(f.num(), f.den()).degree() <= 0);
    CHECK(f.num().degree() < f.den().degree());

    const auto mom = oracle::moments(red.h_rat, S, T, 2 * n + 3);
    CHECK(oracle::laurent(f.num(), f.den(), 2 * n + 3) == mom);

    const Rational two(2);
    CHECK(f.num().eval(two) / f.den().eval(two) == oracle::resolvent_at(red.h_rat, S, T, two));

    // Numerically through the symmetric H with the Delta correction.
    const Eigen::MatrixXd H = red.symmetric();
    const Eigen::MatrixXd Rinv = (2 * Eigen::MatrixXd::Identity(n, n) - H).inverse();
    double numeric = 0;
    for (std::size_t j = 0; j < S.size(); ++j)
      numeric += Rinv(S[j], T[j]) * std::sqrt(red.delta_sq[S[j]].get_d() / red.delta_sq[T[j]].get_d());
    CHECK(std::abs(numeric - f.eval(2.0).real()) < 1e-8);
  }
}

TEST_CASE("psi on family reductions") {
  const MarkedGraph k23 = build_family(CompleteBipartiteK2m{3});
  const CoinAssignment grover = CoinAssignment::all_grover(k23.graph);
  const HermitianReduction red =
      build_H(grover, induced_coin_basis(grover, k23.a, k23.b, {RatVector(3, Rational(1))}));
  CHECK(psi(red, red.S) == psi(red, red.T));

  const MarkedGraph oct = build_family(Circulant2m{3, 1, 2});
  const auto W = circulant_subspace(oct.graph, 3, 1, 2);
  const ReflectionCoin cw = reflection_about(4, W);
  const CoinAssignment coins = CoinAssignment::all_grover(oct.graph).with_coin(oct.a, cw).with_coin(oct.b, cw);
  const HermitianReduction ro = build_H(coins, induced_coin_basis(coins, oct.a, oct.b, W));
  const auto poles = pole_support(psi(ro, ro.S));
  CHECK(std::find(poles.begin(), poles.end(), P({Rational(-1, 2), 0, 1})) != poles.end());
}
