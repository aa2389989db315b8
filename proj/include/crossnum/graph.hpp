#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "crossnum/error.hpp"

namespace crossnum {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge &o) const {
    return touches(o.u) || touches(o.v);
  }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge &) const = default;
};

std::ostream &operator<<(std::ostream &os, const Edge &e);

/// Simple undirected graph on dense vertices 0..n-1.
///
/// Edges are kept sorted so iteration order, serialization, and the host
/// checksum are all canonical. Labels are metadata only.
class Graph {
public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges);

  /// Throws InvalidInput for loops, out-of-range endpoints and duplicates.
  void add_edge(Vertex a, Vertex b);
  bool try_add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);
  Vertex add_vertex();

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<Vertex> &neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge &e) const { return has_edge(e.u, e.v); }

  /// Position of `e` in the canonical edge list, or -1.
  int edge_index(const Edge &e) const;

  void set_label(Vertex v, std::string label);
  std::optional<std::string> label(Vertex v) const;
  const std::map<Vertex, std::string> &labels() const { return labels_; }

  std::vector<int> degree_sequence() const;

  /// FNV-1a over the canonical edge list, prefixed by n and m.
  std::uint64_t checksum() const;

  bool operator==(const Graph &o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;                 // sorted
  std::vector<std::vector<Vertex>> adj_;    // sorted neighbor lists
  std::map<Vertex, std::string> labels_;
};

/// Cycle in canonical form: starts at its minimum vertex, and the second
/// vertex is smaller than the last.
struct Cycle {
  std::vector<Vertex> vertices;

  static Cycle canonical(std::vector<Vertex> walk);
  int length() const { return static_cast<int>(vertices.size()); }
  std::vector<Edge> edges() const;
  bool contains(Vertex v) const;

  auto operator<=>(const Cycle &) const = default;
};

/// Bijection from the vertices of one graph onto another.
struct VertexMap {
  std::vector<Vertex> image;

  Vertex operator()(Vertex v) const { return image.at(v); }
  /// True when `image` is a bijection preserving adjacency and non-adjacency.
  bool is_isomorphism(const Graph &g, const Graph &h) const;
};

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Removes `removed` and relabels the rest contiguously (order preserved).
Graph induced_subgraph(const Graph &g, const std::set<Vertex> &removed);

/// Subgraph on the same vertex set keeping only `kept` edges.
Graph edge_subgraph(const Graph &g, std::span<const Edge> kept);

/// Replaces degree-2 vertices by edges until none remain.
///
/// Throws PreconditionError on a component that is a bare cycle, and
/// NonSimpleResult when a suppression would create a parallel edge.
Graph suppress_degree_two(const Graph &g);

/// Backtracking isomorphism search with degree and neighbor-degree pruning.
std::optional<VertexMap> is_isomorphic(const Graph &g, const Graph &h);

/// All cycles of exactly `length`, canonical and sorted.
std::vector<Cycle> enumerate_cycles(const Graph &g, int length);

/// Number of cycles of each length in [3, max_length]; index = length.
std::vector<long long> count_cycles_up_to(const Graph &g, int max_length);

/// Shortest cycle length, or kInfiniteGirth for forests.
int girth(const Graph &g);

/// Connected component id per vertex; returns the component count.
int connected_components(const Graph &g, std::vector<int> &component);

Graph relabel(const Graph &g, const VertexMap &map);
Graph disjoint_union(const Graph &a, const Graph &b);

// Named families.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

// ".gr" text format.
Graph read_graph(std::istream &in);
Graph read_graph_file(const std::string &path);
void write_graph(std::ostream &out, const Graph &g);
std::string to_gr_string(const Graph &g);

} // namespace crossnum
