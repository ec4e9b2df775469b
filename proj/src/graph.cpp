#include "sst/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "sst/errors.hpp"

namespace sst {

Arc Graph::arc(int index) const { return {tails_[index], heads_[index]}; }

int Graph::neighbor_position(int u, int v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return static_cast<int>(it - nb.begin());
}

int Graph::arc_index(int tail, int head) const {
  int pos = neighbor_position(tail, head);
  if (pos < 0) {
    throw InputError("no arc (" + std::to_string(tail) + "," + std::to_string(head) + ")");
  }
  return offsets_[tail] + pos;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_graph(const std::vector<Edge>& edges, int n) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  std::set<Edge> unique;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    unique.emplace(std::min(u, v), std::max(u, v));
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : unique) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : unique) parent[find(u)] = find(v);
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) throw InputError("graph is disconnected");
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int u = 0; u < n; ++u) {
    std::sort(adj[u].begin(), adj[u].end());
    g.offsets_[u + 1] = g.offsets_[u] + static_cast<int>(adj[u].size());
  }
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) {
      g.tails_.push_back(u);
      g.heads_.push_back(v);
    }
  }
  g.reverse_.resize(g.heads_.size());
  for (int i = 0; i < g.arc_count(); ++i) g.reverse_[i] = g.arc_index(g.heads_[i], g.tails_[i]);
  return g;
}

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

std::pair<int, std::vector<Edge>> parse_edge_list(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(strip_comment(line));
    std::string first;
    if (!(ss >> first)) continue;
    if (n < 0) {
      if (first != "n" || !(ss >> n) || n < 1) {
        throw InputError("line " + std::to_string(line_no) + ": expected 'n <count>'");
      }
      continue;
    }
    int u = 0;
    int v = 0;
    std::istringstream edge_ss(strip_comment(line));
    if (!(edge_ss >> u >> v)) throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    std::string extra;
    if (edge_ss >> extra) throw InputError("line " + std::to_string(line_no) + ": trailing tokens");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw InputError("missing 'n <count>' header");
  return {n, edges};
}

Graph parse_graph(std::istream& in) {
  auto [n, edges] = parse_edge_list(in);
  return build_graph(edges, n);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

namespace {

struct Validator {
  void operator()(const CompleteBipartiteK2m& s) const {
    if (s.m < 1) throw InputError("K_{2,m} needs m >= 1");
  }
  void operator()(const Circulant2m& s) const {
    if (s.m < 2) throw InputError("circulant needs m >= 2");
    if (s.c + s.d != s.m) throw InputError("circulant needs c + d = m");
    if (s.c == s.d) throw InputError("circulant needs c != d");
    if (s.c <= 0 || s.d <= 0 || s.c >= s.m || s.d >= s.m) {
      throw InputError("circulant parameters c = 0 or d = m give loops or multi-edges");
    }
  }
  void operator()(const DoubleConeOverCycles& s) const {
    if (s.quarter_lengths.empty()) throw InputError("double cone needs at least one cycle");
    for (int q : s.quarter_lengths)
      if (q < 1) throw InputError("cycle lengths must be positive multiples of 4");
  }
  void operator()(const GeneralizedPath& s) const {
    if (s.k < 1) throw InputError("GP(k,n) needs k >= 1");
    if (s.n < 3) throw InputError("GP(k,n) needs n >= 3");
  }
  void operator()(const DoubleConeOverRegular& s) const {
    if (s.n < 1) throw InputError("cone base must be nonempty");
    std::vector<int> deg(static_cast<std::size_t>(s.n), 0);
    std::set<Edge> unique;
    for (auto [u, v] : s.edges) {
      if (u < 0 || v < 0 || u >= s.n || v >= s.n || u == v) throw InputError("bad base edge");
      unique.emplace(std::min(u, v), std::max(u, v));
    }
    for (auto [u, v] : unique) {
      ++deg[u];
      ++deg[v];
    }
    if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) {
      throw InputError("cone base is not regular");
    }
  }
};

struct Namer {
  std::string operator()(const CompleteBipartiteK2m& s) const { return "k2m(m=" + std::to_string(s.m) + ")"; }
  std::string operator()(const Circulant2m& s) const {
    return "circulant(m=" + std::to_string(s.m) + ",c=" + std::to_string(s.c) + ",d=" + std::to_string(s.d) + ")";
  }
  std::string operator()(const DoubleConeOverCycles& s) const {
    std::string out = "double-cone(";
    for (std::size_t i = 0; i < s.quarter_lengths.size(); ++i) {
      out += (i ? "+C" : "C") + std::to_string(4 * s.quarter_lengths[i]);
    }
    return out + ")";
  }
  std::string operator()(const GeneralizedPath& s) const {
    return "gp(k=" + std::to_string(s.k) + ",n=" + std::to_string(s.n) + ")";
  }
  std::string operator()(const DoubleConeOverRegular& s) const {
    return "cone-regular(n=" + std::to_string(s.n) + ",e=" + std::to_string(s.edges.size()) + ")";
  }
};

// Conical vertices are 0 and 1; the base occupies 2..n+1.
MarkedGraph double_cone(int base_n, const std::vector<Edge>& base_edges) {
  std::vector<Edge> edges;
  for (int v = 0; v < base_n; ++v) {
    edges.emplace_back(0, v + 2);
    edges.emplace_back(1, v + 2);
  }
  for (auto [u, v] : base_edges) edges.emplace_back(u + 2, v + 2);
  return {build_graph(edges, base_n + 2), 0, 1};
}

struct Builder {
  MarkedGraph operator()(const CompleteBipartiteK2m& s) const {
    std::vector<Edge> edges;
    for (int v = 2; v < s.m + 2; ++v) {
      edges.emplace_back(0, v);
      edges.emplace_back(1, v);
    }
    return {build_graph(edges, s.m + 2), 0, 1};
  }
  MarkedGraph operator()(const Circulant2m& s) const {
    int n = 2 * s.m;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      edges.emplace_back(i, (i + s.c) % n);
      edges.emplace_back(i, (i + s.d) % n);
    }
    return {build_graph(edges, n), 0, s.m};
  }
  MarkedGraph operator()(const DoubleConeOverCycles& s) const {
    std::vector<Edge> base;
    int offset = 0;
    for (int q : s.quarter_lengths) {
      int len = 4 * q;
      for (int i = 0; i < len; ++i) base.emplace_back(offset + i, offset + (i + 1) % len);
      offset += len;
    }
    return double_cone(offset, base);
  }
  MarkedGraph operator()(const GeneralizedPath& s) const {
    // a = 0, b = 1; path j has interior vertices 2 + j(n-2) .. 2 + j(n-2) + n-3.
    int interior = s.n - 2;
    std::vector<Edge> edges;
    for (int j = 0; j < s.k; ++j) {
      int first = 2 + j * interior;
      edges.emplace_back(0, first);
      for (int i = 0; i + 1 < interior; ++i) edges.emplace_back(first + i, first + i + 1);
      edges.emplace_back(first + interior - 1, 1);
    }
    return {build_graph(edges, s.k * interior + 2), 0, 1};
  }
  MarkedGraph operator()(const DoubleConeOverRegular& s) const { return double_cone(s.n, s.edges); }
};

}  // namespace

void validate(const FamilySpec& spec) { std::visit(Validator{}, spec); }

std::string family_name(const FamilySpec& spec) { return std::visit(Namer{}, spec); }

MarkedGraph build_family(const FamilySpec& spec) {
  validate(spec);
  return std::visit(Builder{}, spec);
}

DoubleConeOverRegular cycle_base(int length) {
  DoubleConeOverRegular base{length, {}};
  for (int i = 0; i < length; ++i) base.edges.emplace_back(i, (i + 1) % length);
  return base;
}

DoubleConeOverRegular complete_bipartite_base(int k) {
  DoubleConeOverRegular base{2 * k, {}};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) base.edges.emplace_back(i, k + j);
  return base;
}

DoubleConeOverRegular complete_base(int k) {
  DoubleConeOverRegular base{k + 1, {}};
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) base.edges.emplace_back(i, j);
  return base;
}

DoubleConeOverRegular cube_base() {
  DoubleConeOverRegular base{8, {}};
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if ((v ^ bit) > v) base.edges.emplace_back(v, v ^ bit);
  return base;
}

DoubleConeOverRegular prism_base() {
  return {6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}};
}

}  // namespace sst
