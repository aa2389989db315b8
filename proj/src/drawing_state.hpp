#pragma once

// Mutable crossing configuration shared by the exact search and the
// insertion heuristic. Internal to the library.

#include <utility>
#include <vector>

#include "crossnum/crossing.hpp"

namespace crossnum::detail {

/// Which host edge, and which gap between consecutive crossings on it, a
/// planarized edge comes from. Gap j lies between the (j-1)-th and j-th
/// crossing of the edge, counted from its lower endpoint.
struct SegmentTag {
  int edge = -1;
  int gap = 0;
};

struct BuiltPlanarization {
  Graph graph;
  std::vector<SegmentTag> tag; // indexed by planarized edge index
};

class DrawingState {
public:
  explicit DrawingState(const Graph &g, bool all_present = true)
      : g_(&g), present_(g.edge_count(), all_present ? 1 : 0),
        order_(g.edge_count()) {}

  const Graph &host() const { return *g_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  const std::vector<std::pair<int, int>> &crossings() const {
    return crossings_;
  }
  const std::vector<int> &order(int e) const { return order_[e]; }
  bool present(int e) const { return present_[e] != 0; }
  void set_present(int e, bool p) { present_[e] = p ? 1 : 0; }

  /// Adds a crossing of edges e and f at the given gaps; returns its index.
  int add_crossing(int e, int gap_e, int f, int gap_f) {
    const int id = static_cast<int>(crossings_.size());
    crossings_.emplace_back(std::min(e, f), std::max(e, f));
    order_[e].insert(order_[e].begin() + gap_e, id);
    order_[f].insert(order_[f].begin() + gap_f, id);
    return id;
  }

  /// Undoes the most recent add_crossing.
  void pop_crossing() {
    const int id = static_cast<int>(crossings_.size()) - 1;
    const auto [e, f] = crossings_.back();
    std::erase(order_[e], id);
    std::erase(order_[f], id);
    crossings_.pop_back();
  }

  /// Drops edge e and every crossing on it, compacting crossing ids.
  void remove_edge(int e) {
    std::vector<int> remap(crossings_.size(), -1);
    std::vector<std::pair<int, int>> kept;
    for (std::size_t i = 0; i < crossings_.size(); ++i)
      if (crossings_[i].first != e && crossings_[i].second != e) {
        remap[i] = static_cast<int>(kept.size());
        kept.push_back(crossings_[i]);
      }
    crossings_ = std::move(kept);
    for (auto &ord : order_) {
      std::vector<int> next;
      for (int id : ord)
        if (remap[id] >= 0)
          next.push_back(remap[id]);
      ord = std::move(next);
    }
    present_[e] = 0;
  }

  BuiltPlanarization build() const {
    const int n = g_->vertex_count();
    BuiltPlanarization b{Graph(n + crossing_count()), {}};
    std::vector<std::pair<Edge, SegmentTag>> segs;
    const auto &edges = g_->edges();
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (!present_[e])
        continue;
      Vertex prev = edges[e].u;
      const auto &ord = order_[e];
      for (std::size_t j = 0; j <= ord.size(); ++j) {
        const Vertex next = j < ord.size() ? n + ord[j] : edges[e].v;
        b.graph.add_edge(prev, next);
        segs.push_back({Edge(prev, next), {e, static_cast<int>(j)}});
        prev = next;
      }
    }
    b.tag.resize(segs.size());
    for (const auto &[ed, t] : segs)
      b.tag[b.graph.edge_index(ed)] = t;
    return b;
  }

  DrawingCertificate certificate() const {
    DrawingCertificate c;
    c.host = HostId::of(*g_);
    const auto &edges = g_->edges();
    for (std::size_t i = 0; i < crossings_.size(); ++i)
      c.crossings.push_back(
          {static_cast<int>(i), CrossingPair(edges[crossings_[i].first],
                                             edges[crossings_[i].second])});
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
      if (order_[e].size() >= 2)
        c.orders[edges[e]] = order_[e];
    return c;
  }

private:
  const Graph *g_;
  std::vector<char> present_;
  std::vector<std::pair<int, int>> crossings_;
  std::vector<std::vector<int>> order_;
};

} // namespace crossnum::detail
