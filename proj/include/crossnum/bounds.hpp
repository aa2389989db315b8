#pragma once

#include <limits>
#include <string>
#include <vector>

#include "crossnum/budget.hpp"
#include "crossnum/graph.hpp"
#include "crossnum/planarity.hpp"

namespace crossnum {

/// Parameters of the face-counting argument: a connected graph with `n`
/// vertices and `m_edges` edges whose only cycles shorter than
/// `long_face` have length `short_face`, and there are at most
/// `short_cycle_budget` of those.
struct EulerCountInput {
  int n = 0;
  int m_edges = 0;
  long long short_cycle_budget = 0;
  int short_face = 3;
  int long_face = 4;

  static constexpr long long kUnlimited = std::numeric_limits<int>::max();
};

struct BoundReport {
  int deletions_lower_bound = 0; // least feasible number of deleted edges
  int face_count_at_bound = 0;   // faces of the planar subgraph at that bound
  std::vector<std::string> derivation;
  bool warning = false;          // inputs inconsistent with a nonplanar graph

  std::string trace() const;
};

/// Least k such that a planar subgraph with m_edges - k edges can satisfy
/// Euler's formula and the face-length accounting. A lower bound on skewness
/// and therefore on the crossing number.
BoundReport euler_skewness_bound(const EulerCountInput &input);

/// The 12-vertex gadget: 18 edges, three 4-cycles, every other cycle has
/// length at least 6.
EulerCountInput g12_euler_preset();

/// Face-counting bound computed from the graph itself: per component, the
/// faces shorter than twice the girth are charged to distinct cycles of the
/// graph, using the cycle census up to `max_extra` beyond the girth.
/// Valid lower bound on skewness (summed over components).
int cycle_census_bound(const Graph &g, int max_extra = 3);

struct SkewnessResult {
  enum class Status { Exact, AboveMax, Timeout };
  Status status = Status::Exact;
  int value = 0; // exact value, or proven lower bound otherwise
  std::vector<Edge> deletion_set;
};

struct SkewnessOptions {
  bool census_prune = true;
  bool packing_prune = true;
};

/// Minimum number of edge deletions that leave `g` planar, searched by
/// iterative deepening over edges of the current Kuratowski witness.
SkewnessResult skewness_exact(const Graph &g, int max_k, Seconds budget,
                              const SkewnessOptions &options = {});

/// Greedy count of pairwise edge-disjoint Kuratowski subdivisions.
int kuratowski_packing(const Graph &g);
std::vector<KuratowskiWitness> kuratowski_packing_witnesses(const Graph &g);

} // namespace crossnum
