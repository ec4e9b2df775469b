#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sst {

using Edge = std::pair<int, int>;

struct Arc {
  int tail;
  int head;
};

/// Connected simple graph with arcs ordered lexicographically by (tail, head).
///
/// The arcs leaving u occupy the contiguous index range
/// [first_arc(u), first_arc(u) + degree(u)), in ascending head order, so the
/// j-th neighbor of u (its position in sigma_u) is the head of arc first_arc(u) + j.
class Graph {
 public:
  int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
  int arc_count() const { return static_cast<int>(heads_.size()); }
  int edge_count() const { return arc_count() / 2; }
  int degree(int u) const { return offsets_[u + 1] - offsets_[u]; }
  int first_arc(int u) const { return offsets_[u]; }

  std::span<const int> neighbors(int u) const {
    return {heads_.data() + offsets_[u], static_cast<std::size_t>(degree(u))};
  }

  Arc arc(int index) const;
  int reverse(int index) const { return reverse_[index]; }
  /// Index of arc (tail, head); throws InputError if the vertices are not adjacent.
  int arc_index(int tail, int head) const;
  /// Position of v in sigma_u, or -1 when u and v are not adjacent.
  int neighbor_position(int u, int v) const;
  bool adjacent(int u, int v) const { return neighbor_position(u, v) >= 0; }
  std::vector<Edge> edges() const;

  friend Graph build_graph(const std::vector<Edge>& edges, int n);

 private:
  std::vector<int> offsets_;
  std::vector<int> heads_;
  std::vector<int> tails_;
  std::vector<int> reverse_;
};

/// Builds a connected simple graph on vertices 0..n-1. Duplicate edges are merged.
Graph build_graph(const std::vector<Edge>& edges, int n);

/// Reads the text format: "n <count>" then one "u v" edge per line; '#' starts a comment.
Graph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// Reads "n <count>" + edges without requiring connectivity (used for cone bases).
std::pair<int, std::vector<Edge>> parse_edge_list(std::istream& in);

struct CompleteBipartiteK2m {
  int m;
};

/// X(Z_2m, +-{c, d}) with c + d = m.
struct Circulant2m {
  int m;
  int c;
  int d;
};

/// Double cone over disjoint cycles; cycle j has length 4 * quarter_lengths[j].
struct DoubleConeOverCycles {
  std::vector<int> quarter_lengths;
};

/// k paths on n vertices with left endpoints identified and right endpoints identified.
struct GeneralizedPath {
  int k;
  int n;
};

/// Double cone over an explicit (possibly disconnected) regular base graph.
struct DoubleConeOverRegular {
  int n;
  std::vector<Edge> edges;
};

using FamilySpec =
    std::variant<CompleteBipartiteK2m, Circulant2m, DoubleConeOverCycles, GeneralizedPath, DoubleConeOverRegular>;

struct MarkedGraph {
  Graph graph;
  int a;
  int b;
};

/// Throws InputError when the family parameters are out of range.
void validate(const FamilySpec& spec);
std::string family_name(const FamilySpec& spec);
MarkedGraph build_family(const FamilySpec& spec);

/// Common bases for double cones.
DoubleConeOverRegular cycle_base(int length);
DoubleConeOverRegular complete_bipartite_base(int k);
DoubleConeOverRegular complete_base(int k);
DoubleConeOverRegular cube_base();
DoubleConeOverRegular prism_base();

}  // namespace sst
