#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sst/coin.hpp"
#include "sst/graph.hpp"

namespace sst {

/// One verified instance: decider, exact Chebyshev check and simulation.
struct CaseRun {
  std::string name;
  std::string expected;  // transfer time, or "pgst" / "none" for pretty-good cases
  std::string got;
  int dim = 0;
  int gamma = 0;
  double fidelity = 0;
  bool decided = false;
  bool exact = false;
  bool minimal = false;  // fidelity < 1 - 1e-4 before the reported time
  bool passed = false;
  std::string detail;
};

std::string to_line(const CaseRun& run);

/// Seed from SST_SEED when set, otherwise a fixed default.
std::uint64_t family_seed();

/// Rational with numerator and denominator bounded by 7 in absolute value; never zero.
Rational small_rational(std::mt19937_64& rng);
/// A random rational basis of an r-dimensional subspace of Q^d.
std::vector<RatVector> random_subspace(std::mt19937_64& rng, int d, int r);
/// A random rational basis of an r-dimensional subspace of col(P) for the given coin.
std::vector<RatVector> random_fixed_subspace(std::mt19937_64& rng, const ReflectionCoin& coin, int r);
/// Random rational combinations of the given spanning vectors, r of them, independent.
std::vector<RatVector> random_span_subspace(std::mt19937_64& rng, const std::vector<RatVector>& basis, int r);

/// Runs the full pipeline on marked (a, b) with positional neighbor identification.
CaseRun verify_transfer(const std::string& name, const CoinAssignment& coins, int a, int b,
                        const std::vector<RatVector>& W, int expected_time);

/// Three runs, each with a random rational C_a = C_b and a random W inside col(C_a + I).
std::vector<CaseRun> case_k2m(int m, std::mt19937_64& rng, int samples = 3);
std::vector<CaseRun> case_circulant(int m, int c, int d);
/// Same graph with Grover coins everywhere and W = span{1}; expected time is passed in.
CaseRun case_circulant_grover(int m, int c, int d, int expected_time);
std::vector<CaseRun> case_double_cone(const std::vector<int>& quarter_lengths);
/// Grover with dim W = 1 and a random rank-min(2, k) rational reflection with W = col(C_a + I).
std::vector<CaseRun> case_gp(int k, int n, std::mt19937_64& rng);

/// W for the circulant construction over sigma_0 of X(Z_2m, +-{c, d}).
std::vector<RatVector> circulant_subspace(const Graph& g, int m, int c, int d);
/// One alternating 1, 0, -1, 0 vector per cycle, over the conical vertex's neighbors.
std::vector<RatVector> double_cone_subspace(const std::vector<int>& quarter_lengths);

struct PrettyGoodRun {
  CaseRun run;
  int k = 0;
  Rational c_squared;
  bool decided_pretty_good = false;
  long best_time = 0;
  double best_fidelity = 0;
};

struct SweepOptions {
  long t_max = 100000;
  double stop_at = 1 - 1e-6;
  std::size_t max_kernel_vectors = 2;
};

/// Double cone over a k-regular base with W inside the exact kernel of A(base).
/// Throws InputError when the kernel is empty.
PrettyGoodRun case_pretty_good_cone(const std::string& name, const DoubleConeOverRegular& base,
                                    const SweepOptions& opts = {});

/// Every known instance the harness runs, as CASE lines.
std::vector<CaseRun> run_all_cases(std::uint64_t seed);

}  // namespace sst
