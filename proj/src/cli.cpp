#include "sst/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sst/cospec.hpp"
#include "sst/decider.hpp"
#include "sst/errors.hpp"
#include "sst/families.hpp"
#include "sst/reduction.hpp"
#include "sst/resolvent.hpp"

namespace sst {

namespace {

std::ifstream open_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + what + " file '" + path + "'");
  return in;
}

std::string fixed(double x, int digits = 10) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0;  // no "-0.000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string join_doubles(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + fixed(xs[i]);
  return s.empty() ? "-" : s;
}

std::string show(const RatPoly& p, OutputFormat f) { return f == OutputFormat::Machine ? to_string(p) : pretty(p); }

std::string show(const RatFun& r, OutputFormat f) {
  if (f == OutputFormat::Machine) return to_string(r);
  return "(" + pretty(r.num()) + ") / (" + pretty(r.den()) + ")";
}

struct Reduced {
  Instance inst;
  HermitianReduction red;
};

Reduced reduce(const RunConfig& cfg) {
  Instance inst = resolve_instance(cfg);
  HermitianReduction red = build_H(inst.coins, induced_coin_basis(inst.coins, inst.a, inst.b, inst.W, inst.map));
  return {std::move(inst), std::move(red)};
}

std::vector<int> clone_set(const std::string& spec, const HermitianReduction& red) {
  if (spec == "auto-a") return red.S;
  if (spec == "auto-b") return red.T;
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int idx = -1;
    try {
      std::size_t used = 0;
      idx = std::stoi(item, &used);
      if (used != item.size()) idx = -1;
    } catch (const std::exception&) {
    }
    if (idx < 0 || idx >= static_cast<int>(red.size())) throw InputError("bad clone index '" + item + "'");
    out.push_back(idx);
  }
  if (out.empty()) throw InputError("empty clone set");
  return out;
}

void print_header(const Reduced& r, std::ostream& out) {
  const Graph& g = r.inst.coins.graph();
  out << "# " << r.inst.label << ": n=" << g.vertex_count() << " arcs=" << g.arc_count() << " a=" << r.inst.a
      << " b=" << r.inst.b << " dimW=" << r.inst.W.size() << " clones=" << r.red.size() << "\n";
}

void dump_h(const HermitianReduction& red, std::ostream& out) {
  out << "H_RAT " << red.size() << "\n";
  for (std::size_t i = 0; i < red.h_rat.rows(); ++i) {
    for (std::size_t j = 0; j < red.h_rat.cols(); ++j) out << (j ? " " : "") << to_string(red.h_rat(i, j));
    out << "\n";
  }
  out << "DELTA_SQ";
  for (const Rational& x : red.delta_sq) out << " " << to_string(x);
  out << "\n";
}

}  // namespace

Instance resolve_instance(const RunConfig& cfg) {
  const bool has_graph = !cfg.graph_path.empty();
  const bool has_family = !cfg.family.empty();
  if (has_graph == has_family) throw InputError("give exactly one of --graph or --family");

  std::optional<Graph> graph;
  std::optional<CoinAssignment> coins;
  std::vector<RatVector> W;
  int a = -1, b = -1;
  std::string label;

  if (has_family) {
    FamilySpec spec;
    if (cfg.family == "k2m") {
      spec = CompleteBipartiteK2m{cfg.m};
    } else if (cfg.family == "circulant") {
      spec = Circulant2m{cfg.m, cfg.c, cfg.d};
    } else if (cfg.family == "double-cone") {
      if (cfg.cycles.empty()) throw InputError("double-cone needs --cycles");
      std::vector<int> quarters;
      for (int len : cfg.cycles) {
        if (len <= 0 || len % 4 != 0) throw InputError("cycle lengths must be positive multiples of 4");
        quarters.push_back(len / 4);
      }
      spec = DoubleConeOverCycles{quarters};
    } else if (cfg.family == "gp") {
      spec = GeneralizedPath{cfg.k, cfg.n};
    } else {
      throw InputError("unknown family '" + cfg.family + "'");
    }
    MarkedGraph mg = build_family(spec);
    label = family_name(spec);
    a = mg.a;
    b = mg.b;
    graph = mg.graph;
    if (cfg.family == "circulant") {
      W = circulant_subspace(mg.graph, cfg.m, cfg.c, cfg.d);
    } else if (cfg.family == "double-cone") {
      W = double_cone_subspace(std::get<DoubleConeOverCycles>(spec).quarter_lengths);
    } else {
      W = {RatVector(mg.graph.degree(a), Rational(1))};
    }
    CoinAssignment all = CoinAssignment::all_grover(mg.graph);
    if (cfg.family == "circulant" || cfg.family == "double-cone") {
      const ReflectionCoin coin = reflection_about(mg.graph.degree(a), W);
      all = all.with_coin(a, coin).with_coin(b, coin);
    }
    coins = std::move(all);
  } else {
    std::ifstream in = open_file(cfg.graph_path, "graph");
    graph = parse_graph(in);
    label = cfg.graph_path;
    coins = CoinAssignment::all_grover(*graph);
  }

  if (cfg.a) a = *cfg.a;
  if (cfg.b) b = *cfg.b;
  if (a < 0) throw InputError("marked vertex --a is required with --graph");
  if (b < 0) b = a;
  if (a >= graph->vertex_count() || b >= graph->vertex_count()) throw InputError("marked vertex out of range");
  if (cfg.a && cfg.b && a == b) throw InputError("marked vertices must be distinct");

  if (!cfg.coins_path.empty()) {
    std::ifstream in = open_file(cfg.coins_path, "coin");
    coins = parse_coin_spec(in, *graph);
  }
  if (!cfg.subspace_path.empty()) {
    std::ifstream in = open_file(cfg.subspace_path, "subspace");
    W = parse_subspace(in);
  } else if (has_graph || !cfg.coins_path.empty()) {
    W = coins->coin(a).basis();
    if (W.empty()) throw InputError("coin at the marked vertex has no fixed vectors");
  }
  for (const RatVector& w : W)
    if (static_cast<int>(w.size()) != graph->degree(a)) throw InputError("subspace vectors must have length deg(a)");

  NeighborMap map;
  if (!cfg.map.empty()) {
    map = cfg.map;
    if (static_cast<int>(map.size()) != graph->degree(a) || graph->degree(a) != graph->degree(b))
      throw InputError("--map must list deg(a) positions and deg(a) must equal deg(b)");
  }
  return Instance{std::move(*coins), a, b, std::move(W), std::move(map), std::move(label)};
}

int cmd_period(const RunConfig& cfg, std::ostream& out) {
  const Reduced r = reduce(cfg);
  if (cfg.dump_h) dump_h(r.red, out);
  const PeriodicityVerdict v = decide_periodicity(r.red, clone_set(cfg.S, r.red));
  if (cfg.format == OutputFormat::Human) {
    print_header(r, out);
    out << "# psi_S = " << show(v.psi_s, cfg.format) << "\n";
    out << "# g = " << show(v.g, cfg.format) << "\n";
    if (v.periodic) out << "# g_sharp = " << show(v.g_sharp, cfg.format) << "\n";
  }
  out << to_line(v) << "\n";
  return 0;
}

int cmd_transfer(const RunConfig& cfg, std::ostream& out) {
  const Reduced r = reduce(cfg);
  if (r.inst.a == r.inst.b) throw InputError("transfer needs distinct --a and --b");
  if (cfg.dump_h) dump_h(r.red, out);
  const std::vector<int> S = clone_set(cfg.S, r.red);
  const std::vector<int> T = clone_set(cfg.T.empty() ? "auto-b" : cfg.T, r.red);
  const TransferVerdict v = decide_transfer(r.red, S, T);
  if (cfg.format == OutputFormat::Human) {
    print_header(r, out);
    out << "# g_plus = " << pretty(v.g_plus) << "\n";
    out << "# g_minus = " << pretty(v.g_minus) << "\n";
  }
  out << to_line(v) << "\n";
  if (cfg.report_split) {
    const auto split = strong_cospectral_exact(r.red, S, T);
    if (!split) {
      out << "SPLIT none\n";
    } else {
      out << "SPLIT strong\n";
      for (const RatPoly& p : split->plus_factors)
        out << "LAMBDA+ " << show(p, cfg.format) << " roots=" << join_doubles(support_roots({p})) << "\n";
      for (const RatPoly& p : split->minus_factors)
        out << "LAMBDA- " << show(p, cfg.format) << " roots=" << join_doubles(support_roots({p})) << "\n";
    }
    out << "NUMERIC support=" << join_doubles(numeric_support(r.red, S, cfg.tol)) << "\n";
  }
  if (cfg.format == OutputFormat::Human && v.occurs && v.time <= 1000000) {
    const Fidelity f = transfer_fidelity(r.inst.coins, r.inst.a, r.inst.b, r.inst.W, static_cast<int>(v.time), r.inst.map);
    out << "# simulated fidelity at t=" << v.time << ": " << fixed(f.value, 12) << "\n";
  }
  return 0;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = resolve_instance(cfg);
  const Graph& g = inst.coins.graph();
  if (cfg.state.size() < 2 || cfg.state[0] != 'w') throw InputError("--state must be w<j>");
  int j = 0;
  try {
    j = std::stoi(cfg.state.substr(1));
  } catch (const std::exception&) {
    throw InputError("--state must be w<j>");
  }
  if (j < 1 || j > static_cast<int>(inst.W.size())) throw InputError("--state index out of range");
  const std::vector<double> u = unit_vector(inst.W[j - 1]);
  const std::vector<Amplitude> w(u.begin(), u.end());

  std::vector<int> times = cfg.times.empty() ? std::vector<int>{0} : cfg.times;
  if (std::any_of(times.begin(), times.end(), [](int t) { return t < 0; })) throw InputError("times must be >= 0");
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  QuantumWalk walk(inst.coins);
  StateVector state = coin_state(g, inst.a, w);
  int now = 0;
  for (int t : times) {
    state = walk.apply(std::move(state), t - now);
    now = t;
    out << "TIME " << t << " norm=" << fixed(norm(state), 12) << "\n";
    for (int i = 0; i < g.arc_count(); ++i) {
      const Arc arc = g.arc(i);
      out << "ARC " << i << " " << arc.tail << " " << arc.head << " " << fixed(state[i].real()) << " "
          << fixed(state[i].imag()) << "\n";
    }
  }
  return 0;
}

int cmd_psi(const RunConfig& cfg, std::ostream& out) {
  const Reduced r = reduce(cfg);
  if (cfg.dump_h) dump_h(r.red, out);
  const std::vector<int> S = clone_set(cfg.S, r.red);
  const std::vector<int> T = cfg.T.empty() ? S : clone_set(cfg.T, r.red);
  const RatFun f = psi(r.red, S, T);
  if (cfg.format == OutputFormat::Human) print_header(r, out);
  out << "PSI " << show(f, cfg.format) << "\n";
  for (const RatPoly& p : pole_support(f))
    out << "POLE " << show(p, cfg.format) << " roots=" << join_doubles(support_roots({p})) << "\n";
  return 0;
}

int cmd_family(const RunConfig& cfg, std::ostream& out) {
  int passed = 0, failed = 0;
  for (const CaseRun& run : run_all_cases(family_seed())) {
    if (!cfg.family.empty() && run.name.rfind(cfg.family, 0) != 0) continue;
    out << to_line(run) << "\n";
    (run.passed ? passed : failed)++;
  }
  out << "SUMMARY passed=" << passed << " failed=" << failed << "\n";
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subspace state transfer analysis for coined quantum walks with reflection coins"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "human";

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "graph file: 'n <count>' then 'u v' per line");
    sub->add_option("--family", cfg.family, "k2m | circulant | double-cone | gp");
    sub->add_option("--m", cfg.m);
    sub->add_option("--c", cfg.c);
    sub->add_option("--d", cfg.d);
    sub->add_option("--k", cfg.k);
    sub->add_option("--n", cfg.n);
    sub->add_option("--cycles", cfg.cycles, "double-cone cycle lengths")->delimiter(',');
    sub->add_option("--a", cfg.a, "marked vertex a");
    sub->add_option("--b", cfg.b, "marked vertex b");
    sub->add_option("--coins", cfg.coins_path, "coin spec file");
    sub->add_option("--subspace", cfg.subspace_path, "subspace file, one 'w <entries>' per line");
    sub->add_option("--map", cfg.map, "neighbor identification N(a) -> N(b), by position")->delimiter(',');
    sub->add_option("--tol", cfg.tol, "numeric tolerance");
    sub->add_option("--format", format, "human | machine")->check(CLI::IsMember({"human", "machine"}));
  };

  CLI::App* period = app.add_subcommand("period", "decide W-periodicity at a");
  add_source(period);
  period->add_option("--S", cfg.S, "auto-a | auto-b | clone indices");
  period->add_flag("--dump-H", cfg.dump_h, "print H_rat and delta_sq");

  CLI::App* transfer = app.add_subcommand("transfer", "decide perfect transfer from a to b");
  add_source(transfer);
  transfer->add_option("--S", cfg.S, "auto-a | auto-b | clone indices");
  transfer->add_option("--T", cfg.T, "auto-a | auto-b | clone indices");
  transfer->add_flag("--dump-H", cfg.dump_h, "print H_rat and delta_sq");
  transfer->add_flag("--report-split", cfg.report_split, "print the eigenvalue support split");

  CLI::App* simulate = app.add_subcommand("simulate", "print arc amplitudes of U^t x_a(w)");
  add_source(simulate);
  simulate->add_option("--state", cfg.state, "w<j>: j-th subspace vector at a");
  simulate->add_option("--times", cfg.times, "comma-separated times")->delimiter(',');

  CLI::App* psi_cmd = app.add_subcommand("psi", "print psi_{S,T} and its pole factors");
  add_source(psi_cmd);
  psi_cmd->add_option("--S", cfg.S, "auto-a | auto-b | clone indices");
  psi_cmd->add_option("--T", cfg.T, "defaults to S");
  psi_cmd->add_flag("--dump-H", cfg.dump_h, "print H_rat and delta_sq");

  CLI::App* family = app.add_subcommand("family", "run the family harness");
  family->add_option("--family", cfg.family, "only cases whose name starts with this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.format = format == "machine" ? OutputFormat::Machine : OutputFormat::Human;

  try {
    if (*period) return cmd_period(cfg, out);
    if (*transfer) return cmd_transfer(cfg, out);
    if (*simulate) return cmd_simulate(cfg, out);
    if (*psi_cmd) return cmd_psi(cfg, out);
    return cmd_family(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace sst
