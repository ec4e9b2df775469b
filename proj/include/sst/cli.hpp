#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sst/coin.hpp"
#include "sst/walk.hpp"

namespace sst {

enum class OutputFormat { Human, Machine };

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::string family;  // k2m | circulant | double-cone | gp
  int m = 0, c = 0, d = 0, k = 0, n = 0;
  std::vector<int> cycles;  // cycle lengths, each divisible by 4
  std::optional<int> a, b;
  std::string coins_path;
  std::string subspace_path;
  std::vector<int> map;  // neighbor identification N(a) -> N(b) by position
  std::string S = "auto-a";
  std::string T;
  std::vector<int> times;
  std::string state = "w1";
  double tol = 1e-7;
  OutputFormat format = OutputFormat::Human;
  bool dump_h = false;
  bool report_split = false;
};

/// Graph, coins, marked pair and W resolved from a config.
struct Instance {
  CoinAssignment coins;
  int a;
  int b;
  std::vector<RatVector> W;
  NeighborMap map;
  std::string label;
};

/// Throws InputError on conflicting or missing sources.
Instance resolve_instance(const RunConfig& cfg);

int cmd_period(const RunConfig& cfg, std::ostream& out);
int cmd_transfer(const RunConfig& cfg, std::ostream& out);
int cmd_simulate(const RunConfig& cfg, std::ostream& out);
int cmd_psi(const RunConfig& cfg, std::ostream& out);
int cmd_family(const RunConfig& cfg, std::ostream& out);

/// Parses argv and dispatches. Exit codes: 0 completed, 2 input error, 3 invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sst
