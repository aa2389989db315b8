#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "crossnum/graph.hpp"

namespace crossnum {

/// Arrangement of the symbols 1..n.
class Permutation {
public:
  explicit Permutation(std::vector<int> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  int operator[](int i) const { return symbols_.at(i); }
  /// Reverses the first `k` symbols (2 <= k <= n).
  Permutation flip(int k) const;
  std::string to_string() const;

  auto operator<=>(const Permutation &) const = default;

private:
  std::vector<int> symbols_;
};

/// Pancake graph on all permutations of 1..n; vertices in lexicographic
/// order, labeled by their permutation strings. Requires 2 <= n <= 8.
Graph pancake_graph(int n);

/// The four 6-cycles of the 4-dimensional pancake graph and the edge classes
/// derived from them. Cycles are indexed 0..3 in canonical order.
struct PancakeDecomposition {
  Graph graph;
  std::array<Cycle, 4> cycles;
  std::array<std::set<Vertex>, 4> vertex_class;   // V_i
  std::array<std::set<Edge>, 4> cycle_edges;      // E_i
  std::array<std::array<std::set<Edge>, 4>, 4> between; // E_{i,j}

  int owner(Vertex v) const;
  /// E'_i: cycle edges of C_i plus every edge leaving it.
  std::set<Edge> closed_class(int i) const;
  /// E(P4) minus E'_i.
  std::set<Edge> complement_class(int i) const;
};

/// Builds the classes from a graph and four vertex-disjoint cycles covering
/// it. Does not check that the graph is a pancake graph.
PancakeDecomposition make_decomposition(const Graph &g,
                                        const std::array<Cycle, 4> &cycles);

/// Finds the 6-cycle census of `p4` and derives every class. Throws
/// InvalidInput unless `p4` is isomorphic to pancake_graph(4) with exactly
/// four vertex-disjoint 6-cycles.
PancakeDecomposition decompose(const Graph &p4);

/// Every cross-cycle edge class pairs attachment vertices at distance 3 on
/// their cycle, and the two inner vertices of each connecting 3-edge path
/// lead to the two remaining cycles.
bool observation_audit(const PancakeDecomposition &d);

/// The 12-vertex cubic gadget: three 4-cycles 0-1-2-3, 4-5-6-7, 8-9-10-11
/// joined by {1,6}, {3,4}, {0,8}, {2,10}, {5,9}, {7,11}.
Graph g12_reference();

/// Subgraph on the complement of E'_i with the vertices of C_i dropped.
Graph complement_subgraph(const PancakeDecomposition &d, int i);

} // namespace crossnum
