#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "golden.hpp"
#include "sst/cli.hpp"
#include "sst/graph.hpp"

using namespace sst;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "sst");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  for (std::string l; std::getline(ss, l);) out.push_back(l);
  return out;
}

// Lines not starting with '#'.
std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  for (auto& l : lines(text))
    if (l.empty() || l[0] != '#') out.push_back(l);
  return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("sst_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string graph_text(const Graph& g) {
  std::string s = "n " + std::to_string(g.vertex_count()) + "\n";
  for (int i = 0; i < g.arc_count(); ++i) {
    const Arc a = g.arc(i);
    if (a.tail < a.head) s += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  }
  return s;
}

struct Amp {
  int tail, head;
  double re, im;
};

std::map<int, std::vector<Amp>> parse_simulation(const std::string& text) {
  std::map<int, std::vector<Amp>> out;
  int now = -1;
  for (const auto& l : lines(text)) {
    std::istringstream ss(l);
    std::string tag;
    ss >> tag;
    if (tag == "TIME") {
      ss >> now;
    } else if (tag == "ARC") {
      int i;
      Amp a{};
      ss >> i >> a.tail >> a.head >> a.re >> a.im;
      out[now].push_back(a);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("period verdicts") {
  const Result k = run({"period", "--family", "k2m", "--m", "3"});
  CHECK(k.code == 0);
  CHECK(data_lines(k.out) == std::vector<std::string>{"PERIODIC min_period=4 L={1,2,4}"});

  const Result c = run({"period", "--family", "circulant", "--m", "3", "--c", "1", "--d", "2", "--format", "machine"});
  CHECK(c.code == 0);
  CHECK(c.out == "PERIODIC min_period=8 L={4,8}\n");
}

TEST_CASE("transfer verdicts") {
  const Result gp = run({"transfer", "--family", "gp", "--k", "2", "--n", "4", "--format", "machine"});
  CHECK(gp.code == 0);
  CHECK(gp.out == "TRANSFER time=3 gamma=+1\n");

  const Result cone = run({"transfer", "--family", "double-cone", "--cycles", "4,8", "--format", "machine"});
  CHECK(cone.out == "TRANSFER time=4 gamma=-1\n");

  const Result human = run({"transfer", "--family", "k2m", "--m", "5"});
  CHECK(human.code == 0);
  CHECK(human.out.find("TRANSFER time=2 gamma=+1\n") != std::string::npos);
  CHECK(human.out.find("# simulated fidelity at t=2: 1.000000000000") != std::string::npos);
}

TEST_CASE("a verdict of no transfer still exits 0") {
  const std::string g = temp_file("tree.txt", "n 6\n0 1\n1 2\n2 3\n3 4\n1 5\n");
  const Result r = run({"transfer", "--graph", g, "--a", "0", "--b", "4", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out == "NO_TRANSFER stage=not-cospectral\n");
}

TEST_CASE("split report") {
  const Result r = run({"transfer", "--family", "circulant", "--m", "3", "--c", "1", "--d", "2", "--report-split",
                        "--format", "machine"});
  CHECK(r.code == 0);
  const auto out = data_lines(r.out);
  REQUIRE(out.size() == 5);
  CHECK(out[0] == "TRANSFER time=4 gamma=-1");
  CHECK(out[1] == "SPLIT strong");
  CHECK(out[2] == "LAMBDA+ -1/2 0 1 roots=-0.7071067812,0.7071067812");
  CHECK(out[3] == "LAMBDA- 0 1 roots=0.0000000000");
  CHECK(out[4] == "NUMERIC support=-0.7071067812,0.0000000000,0.7071067812");
}

TEST_CASE("H dump") {
  const Result r = run({"period", "--family", "circulant", "--m", "3", "--c", "1", "--d", "2", "--dump-H",
                        "--format", "machine"});
  const auto out = lines(r.out);
  REQUIRE(out.size() == 11);
  CHECK(out[0] == "H_RAT 8");
  CHECK(out[1] == "0 0 1/4 0 0 0 -1/4 0");
  CHECK(out[9] == "DELTA_SQ 2 2 4 4 2 2 4 4");
}

TEST_CASE("simulation moves the circulant coin state from a to b") {
  const Result r = run({"simulate", "--family", "circulant", "--m", "3", "--c", "1", "--d", "2", "--state", "w1",
                        "--times", "4,0"});
  CHECK(r.code == 0);
  const auto sim = parse_simulation(r.out);
  REQUIRE(sim.size() == 2);
  REQUIRE(sim.at(0).size() == 24);
  double at_a = 0, at_b = 0;
  for (const Amp& x : sim.at(0)) at_a += (x.tail == 0) * (x.re * x.re + x.im * x.im);
  for (const Amp& x : sim.at(4)) at_b += (x.tail == 3) * (x.re * x.re + x.im * x.im);
  CHECK(at_a == doctest::Approx(1).epsilon(1e-9));
  CHECK(at_b == doctest::Approx(1).epsilon(1e-9));
  // gamma = -1 with the positional identification N(0) = (1,2,4,5) -> N(3) = (1,2,4,5).
  for (int j = 0; j < 4; ++j) CHECK(std::abs(sim.at(4)[12 + j].re + sim.at(0)[j].re) < 1e-9);
}

TEST_CASE("simulation of the Grover octahedron matches the golden table") {
  const MarkedGraph oct = build_family(Circulant2m{3, 1, 2});
  const std::string g = temp_file("octahedron.txt", graph_text(oct.graph));
  const Result r = run({"simulate", "--graph", g, "--a", std::to_string(oct.a), "--times", "6"});
  CHECK(r.code == 0);
  const auto sim = parse_simulation(r.out).at(6);
  const auto gold = golden::read_table(std::string(SST_TEST_DATA) + "/octahedron_grover_t6.txt");
  REQUIRE(sim.size() == gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    CHECK(sim[i].tail == gold[i].tail);
    CHECK(sim[i].head == gold[i].head);
    CHECK(std::abs(sim[i].re - gold[i].re) <= 1e-9);
    CHECK(std::abs(sim[i].im - gold[i].im) <= 1e-9);
  }
}

TEST_CASE("psi from graph and coin files") {
  const std::string g = temp_file("c4.txt", "n 4\n0 1\n1 2\n2 3\n3 0\n");
  const std::string c = temp_file("c4coins.txt", "coin 0 grover\n");
  const Result human = run({"psi", "--graph", g, "--coins", c, "--a", "0", "--S", "auto-a"});
  CHECK(human.code == 0);
  CHECK(data_lines(human.out) == std::vector<std::string>{"PSI (x^2 - 1/2) / (x^3 - x)", "POLE x - 1 roots=1.0000000000",
                                                          "POLE x roots=0.0000000000",
                                                          "POLE x + 1 roots=-1.0000000000"});
  const Result machine = run({"psi", "--graph", g, "--coins", c, "--a", "0", "--format", "machine"});
  CHECK(lines(machine.out).front() == "PSI -1/2 0 1 | 0 -1 0 1");

  const std::string w = temp_file("c4w.txt", "w 1 1\n");
  const Result sub = run({"psi", "--graph", g, "--a", "0", "--subspace", w, "--S", "0", "--format", "machine"});
  CHECK(sub.code == 0);
  CHECK(lines(sub.out).front() == "PSI -1/2 0 1 | 0 -1 0 1");
}

TEST_CASE("input errors exit 2") {
  const std::string g = temp_file("c4.txt", "n 4\n0 1\n1 2\n2 3\n3 0\n");
  const std::vector<std::vector<std::string>> bad = {
      {"period", "--graph", g, "--coins", "/nonexistent/coins.txt", "--a", "0"},
      {"period", "--graph", "/nonexistent/graph.txt", "--a", "0"},
      {"period", "--graph", g},
      {"period", "--graph", g, "--family", "k2m", "--a", "0"},
      {"period", "--family", "petersen"},
      {"period", "--family", "k2m", "--m", "3", "--format", "xml"},
      {"period", "--family", "k2m", "--m", "3", "--S", "99"},
      {"transfer", "--graph", g, "--a", "0", "--b", "0"},
      {"transfer", "--graph", g, "--a", "0"},
      {"simulate", "--family", "k2m", "--m", "3", "--state", "w2"},
      {"simulate", "--family", "k2m", "--m", "3", "--times", "-1"},
      {"transfer", "--family", "double-cone", "--cycles", "4,6"},
      {"period", "--graph", g, "--a", "7"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : bad) {
    CAPTURE(args.empty() ? std::string("<none>") : args.front());
    const Result r = run(args);
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("family harness output") {
  const Result r = run({"family", "--family", "gp"});
  CHECK(r.code == 0);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 9);
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    CHECK(out[i].rfind("CASE gp(", 0) == 0);
    CHECK(out[i].find("status=PASS") != std::string::npos);
  }
  CHECK(out.back() == "SUMMARY passed=8 failed=0");
}

TEST_CASE("machine output is stable across runs") {
  const std::vector<std::string> args = {"transfer", "--family", "k2m", "--m", "3", "--report-split", "--format",
                                         "machine"};
  CHECK(run(args).out == run(args).out);
}
