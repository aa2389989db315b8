#include "crossnum/pancake.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace crossnum {

Permutation::Permutation(std::vector<int> symbols)
    : symbols_(std::move(symbols)) {
  std::vector<int> sorted = symbols_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw InvalidInput("permutation must use each of 1..n exactly once");
}

Permutation Permutation::flip(int k) const {
  if (k < 2 || k > size())
    throw InvalidInput("prefix reversal length out of range");
  std::vector<int> out = symbols_;
  std::reverse(out.begin(), out.begin() + k);
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string s;
  for (int x : symbols_)
    s += std::to_string(x);
  return s;
}

Graph pancake_graph(int n) {
  if (n < 2 || n > 8)
    throw InvalidInput("pancake dimension must be in [2, 8]");
  std::vector<int> sym(n);
  std::iota(sym.begin(), sym.end(), 1);
  std::vector<Permutation> perms;
  do {
    perms.emplace_back(sym);
  } while (std::next_permutation(sym.begin(), sym.end()));

  std::map<Permutation, Vertex> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index.emplace(perms[i], static_cast<Vertex>(i));

  Graph g(static_cast<int>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i) {
    g.set_label(static_cast<Vertex>(i), perms[i].to_string());
    for (int k = 2; k <= n; ++k) {
      const Vertex j = index.at(perms[i].flip(k));
      if (static_cast<Vertex>(i) < j)
        g.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return g;
}

int PancakeDecomposition::owner(Vertex v) const {
  for (int i = 0; i < 4; ++i)
    if (vertex_class[i].contains(v))
      return i;
  return -1;
}

std::set<Edge> PancakeDecomposition::closed_class(int i) const {
  std::set<Edge> out = cycle_edges.at(i);
  for (int j = 0; j < 4; ++j)
    if (j != i)
      out.insert(between[i][j].begin(), between[i][j].end());
  return out;
}

std::set<Edge> PancakeDecomposition::complement_class(int i) const {
  const std::set<Edge> closed = closed_class(i);
  std::set<Edge> out;
  for (const Edge &e : graph.edges())
    if (!closed.contains(e))
      out.insert(e);
  return out;
}

PancakeDecomposition make_decomposition(const Graph &g,
                                        const std::array<Cycle, 4> &cycles) {
  PancakeDecomposition d;
  d.graph = g;
  d.cycles = cycles;
  std::vector<int> owner(g.vertex_count(), -1);
  for (int i = 0; i < 4; ++i) {
    for (Vertex v : cycles[i].vertices) {
      if (v < 0 || v >= g.vertex_count() || owner[v] >= 0)
        throw InvalidInput("cycles must be vertex-disjoint and in range");
      owner[v] = i;
      d.vertex_class[i].insert(v);
    }
    for (const Edge &e : cycles[i].edges()) {
      if (!g.has_edge(e))
        throw InvalidInput("cycle uses a non-edge");
      d.cycle_edges[i].insert(e);
    }
  }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw InvalidInput("cycles do not cover every vertex");
  for (const Edge &e : g.edges()) {
    const int a = owner[e.u], b = owner[e.v];
    if (a != b) {
      d.between[a][b].insert(e);
      d.between[b][a].insert(e);
    } else if (!d.cycle_edges[a].contains(e)) {
      throw InvalidInput("chord inside a cycle class");
    }
  }
  return d;
}

PancakeDecomposition decompose(const Graph &p4) {
  if (p4.vertex_count() != 24 || p4.edge_count() != 36)
    throw InvalidInput("expected a graph with 24 vertices and 36 edges");
  if (!is_isomorphic(p4, pancake_graph(4)))
    throw InvalidInput("graph is not isomorphic to the pancake graph P4");
  const std::vector<Cycle> census = enumerate_cycles(p4, 6);
  if (census.size() != 4)
    throw InvalidInput("expected exactly four 6-cycles, found " +
                       std::to_string(census.size()));
  std::array<Cycle, 4> cycles;
  std::copy(census.begin(), census.end(), cycles.begin());
  return make_decomposition(p4, cycles);
}

namespace {

// The unique neighbor of `v` outside its own cycle class, or -1.
Vertex external_neighbor(const PancakeDecomposition &d, Vertex v) {
  const int own = d.owner(v);
  Vertex found = -1;
  for (Vertex w : d.graph.neighbors(v))
    if (d.owner(w) != own) {
      if (found >= 0)
        return -1;
      found = w;
    }
  return found;
}

} // namespace

bool observation_audit(const PancakeDecomposition &d) {
  for (int i = 0; i < 4; ++i) {
    const auto &cyc = d.cycles[i].vertices;
    const int len = static_cast<int>(cyc.size());
    auto pos = [&](Vertex v) {
      return static_cast<int>(std::find(cyc.begin(), cyc.end(), v) -
                              cyc.begin());
    };
    for (int j = 0; j < 4; ++j) {
      if (j == i)
        continue;
      const auto &cls = d.between[i][j];
      if (cls.size() != 2)
        return false;
      std::vector<Vertex> attach;
      for (const Edge &e : cls)
        attach.push_back(d.owner(e.u) == i ? e.u : e.v);
      if (attach[0] == attach[1])
        return false;
      const int pa = pos(attach[0]), pb = pos(attach[1]);
      const int fwd = ((pb - pa) % len + len) % len;
      const int shorter = std::min(fwd, len - fwd);
      if (shorter != 3)
        return false;
      // Check every 3-edge path between the two attachments.
      for (int dir : {+1, -1}) {
        if ((dir == +1 ? fwd : len - fwd) != 3)
          continue;
        const Vertex c = cyc[((pa + dir) % len + len) % len];
        const Vertex e = cyc[((pa + 2 * dir) % len + len) % len];
        const Vertex xc = external_neighbor(d, c);
        const Vertex xe = external_neighbor(d, e);
        if (xc < 0 || xe < 0)
          return false;
        const int oc = d.owner(xc), oe = d.owner(xe);
        if (oc == oe || oc == i || oc == j || oe == i || oe == j)
          return false;
      }
    }
  }
  return true;
}

Graph g12_reference() {
  return Graph(12, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                    {4, 5}, {5, 6}, {6, 7}, {7, 4},
                    {8, 9}, {9, 10}, {10, 11}, {11, 8},
                    {1, 6}, {3, 4}, {0, 8}, {2, 10}, {5, 9}, {7, 11}});
}

Graph complement_subgraph(const PancakeDecomposition &d, int i) {
  const std::set<Edge> keep = d.complement_class(i);
  const std::vector<Edge> kept(keep.begin(), keep.end());
  const Graph sub = edge_subgraph(d.graph, kept);
  return induced_subgraph(sub, d.vertex_class.at(i));
}

} // namespace crossnum
