#include "crossnum/planarity.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace crossnum {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph &g) {
  BoostGraph bg(g.vertex_count());
  int idx = 0;
  for (const Edge &e : g.edges())
    boost::add_edge(e.u, e.v, idx++, bg);
  return bg;
}

// Euler's bound for simple graphs: a planar graph on n >= 3 vertices has at
// most 3n - 6 edges.
bool too_dense(const Graph &g) {
  const int n = g.vertex_count();
  return n >= 3 && g.edge_count() > 3 * n - 6;
}

KuratowskiWitness classify(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::map<Vertex, int> deg;
  for (const Edge &e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  KuratowskiWitness w;
  int deg4 = 0;
  for (auto [v, d] : deg)
    if (d >= 3) {
      w.branch_vertices.insert(v);
      if (d == 4)
        ++deg4;
    }
  w.kind = (w.branch_vertices.size() == 5 && deg4 == 5) ? KuratowskiKind::K5
                                                         : KuratowskiKind::K33;
  w.edges = std::move(edges);
  return w;
}

bool planar_edges(int n, const std::vector<Edge> &edges) {
  BoostGraph bg(n);
  int idx = 0;
  for (const Edge &e : edges)
    boost::add_edge(e.u, e.v, idx++, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Degree pattern of a subdivided K5 or K3,3 after dropping pendant paths.
bool kuratowski_shaped(const std::vector<Edge> &edges) {
  std::map<Vertex, int> deg;
  for (const Edge &e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  int three = 0, four = 0;
  for (auto [v, d] : deg) {
    if (d == 3)
      ++three;
    else if (d == 4)
      ++four;
    else if (d != 2)
      return false;
  }
  return (three == 6 && four == 0) || (three == 0 && four == 5);
}

// Boost occasionally reports a few surplus edges. Pendant paths are peeled
// off first; if the rest is still not a subdivision, edges are dropped
// greedily while the subgraph stays nonplanar, which leaves an edge-minimal
// nonplanar graph, i.e. a Kuratowski subdivision.
std::vector<Edge> minimize(int n, std::vector<Edge> edges, const Graph &host) {
  for (bool changed = true; changed;) {
    changed = false;
    std::map<Vertex, int> deg;
    for (const Edge &e : edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    const auto before = edges.size();
    std::erase_if(edges, [&](const Edge &e) {
      return deg[e.u] == 1 || deg[e.v] == 1;
    });
    changed = edges.size() != before;
  }
  if (kuratowski_shaped(edges) && !planar_edges(n, edges))
    return edges;
  if (planar_edges(n, edges))
    edges = host.edges();
  for (std::size_t i = 0; i < edges.size();) {
    std::vector<Edge> trial = edges;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!planar_edges(n, trial))
      edges = std::move(trial);
    else
      ++i;
  }
  return edges;
}

KuratowskiWitness extract_witness(const Graph &g) {
  BoostGraph bg = to_boost(g);
  std::vector<BoostEdge> found;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(found));
  if (planar)
    throw InvalidCall("graph is planar; no Kuratowski witness exists");
  std::vector<Edge> edges;
  edges.reserve(found.size());
  for (const BoostEdge &be : found)
    edges.emplace_back(static_cast<int>(boost::source(be, bg)),
                       static_cast<int>(boost::target(be, bg)));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return classify(minimize(g.vertex_count(), std::move(edges), g));
}

} // namespace

std::string to_string(KuratowskiKind kind) {
  return kind == KuratowskiKind::K5 ? "K5" : "K3,3";
}

NonplanarError::NonplanarError(KuratowskiWitness w)
    : Error("graph is nonplanar (contains a " + to_string(w.kind) +
            " subdivision)"),
      witness_(std::move(w)) {}

// --- Embedding -------------------------------------------------------------

Embedding::Embedding(Graph g, std::vector<std::vector<Vertex>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  const int n = graph_.vertex_count();
  if (static_cast<int>(rotation_.size()) != n)
    throw InvalidInput("rotation system size mismatch");
  offset_.resize(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    auto sorted = rotation_[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != graph_.neighbors(v))
      throw InvalidInput("rotation at vertex " + std::to_string(v) +
                         " does not match its neighbors");
    offset_[v + 1] = offset_[v] + static_cast<int>(rotation_[v].size());
  }
  dart_tail_.resize(offset_[n]);
  dart_head_.resize(offset_[n]);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      dart_tail_[offset_[v] + i] = v;
      dart_head_[offset_[v] + i] = rotation_[v][i];
    }
}

Dart Embedding::dart(Vertex tail, Vertex head) const {
  const auto &rot = rotation_.at(tail);
  auto it = std::find(rot.begin(), rot.end(), head);
  if (it == rot.end())
    throw InvalidInput("no dart " + std::to_string(tail) + "->" +
                       std::to_string(head));
  return offset_[tail] + static_cast<int>(it - rot.begin());
}

Dart Embedding::next_in_face(Dart d) const {
  // Arrive at v from u; leave along the neighbor after u in v's rotation.
  const Vertex u = dart_tail_[d];
  const Vertex v = dart_head_[d];
  const auto &rot = rotation_[v];
  const auto pos = std::find(rot.begin(), rot.end(), u) - rot.begin();
  const auto next = (pos + 1) % static_cast<long>(rot.size());
  return offset_[v] + static_cast<int>(next);
}

// --- Planarity -------------------------------------------------------------

bool is_planar(const Graph &g) {
  if (too_dense(g))
    return false;
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

Embedding planar_embedding(const Graph &g) {
  BoostGraph bg = to_boost(g);
  using EmbeddingStorage = std::vector<std::vector<BoostEdge>>;
  EmbeddingStorage storage(boost::num_vertices(bg));
  boost::iterator_property_map<EmbeddingStorage::iterator,
                               boost::property_map<BoostGraph,
                                                   boost::vertex_index_t>::type>
      emb(storage.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(
          boost::boyer_myrvold_params::graph = bg,
          boost::boyer_myrvold_params::embedding = emb))
    throw NonplanarError(extract_witness(g));

  std::vector<std::vector<Vertex>> rotation(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const BoostEdge &be : storage[v]) {
      const auto s = static_cast<Vertex>(boost::source(be, bg));
      const auto t = static_cast<Vertex>(boost::target(be, bg));
      rotation[v].push_back(s == v ? t : s);
    }
  return Embedding(g, std::move(rotation));
}

KuratowskiWitness kuratowski_witness(const Graph &g) {
  return extract_witness(g);
}

bool validate_witness(const Graph &host, const KuratowskiWitness &w) {
  if (w.edges.empty())
    return false;
  for (const Edge &e : w.edges)
    if (!host.has_edge(e))
      return false;
  Graph sub(host.vertex_count());
  for (const Edge &e : w.edges)
    if (!sub.try_add_edge(e.u, e.v))
      return false;
  std::set<Vertex> isolated;
  for (Vertex v = 0; v < sub.vertex_count(); ++v)
    if (sub.degree(v) == 0)
      isolated.insert(v);
  sub = induced_subgraph(sub, isolated);
  try {
    Graph core = suppress_degree_two(sub);
    const Graph target = w.kind == KuratowskiKind::K5
                             ? complete_graph(5)
                             : complete_bipartite(3, 3);
    return is_isomorphic(core, target).has_value();
  } catch (const Error &) {
    return false;
  }
}

// --- Faces -----------------------------------------------------------------

FaceStructure face_structure(const Embedding &e) {
  FaceStructure fs;
  fs.face_of_dart.assign(e.dart_count(), -1);
  for (Dart start = 0; start < e.dart_count(); ++start) {
    if (fs.face_of_dart[start] >= 0)
      continue;
    Face f;
    const int id = static_cast<int>(fs.faces.size());
    Dart d = start;
    do {
      fs.face_of_dart[d] = id;
      f.darts.push_back(d);
      f.vertices.push_back(e.tail(d));
      d = e.next_in_face(d);
    } while (d != start);
    fs.faces.push_back(std::move(f));
  }
  return fs;
}

std::vector<Face> faces(const Embedding &e) {
  return face_structure(e).faces;
}

int face_count(const Embedding &e) {
  int isolated = 0;
  for (Vertex v = 0; v < e.graph().vertex_count(); ++v)
    if (e.graph().degree(v) == 0)
      ++isolated;
  return static_cast<int>(face_structure(e).faces.size()) + isolated;
}

bool satisfies_euler(const Embedding &e) {
  const Graph &g = e.graph();
  std::vector<int> comp;
  const int ncomp = connected_components(g, comp);
  std::vector<int> verts(ncomp, 0), edges(ncomp, 0), fcount(ncomp, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ++verts[comp[v]];
    if (g.degree(v) == 0)
      ++fcount[comp[v]];
  }
  for (const Edge &ed : g.edges())
    ++edges[comp[ed.u]];
  for (const Face &f : face_structure(e).faces)
    ++fcount[comp[f.vertices.front()]];
  for (int c = 0; c < ncomp; ++c)
    if (verts[c] - edges[c] + fcount[c] != 2)
      return false;
  return true;
}

bool closed_walk_separates(const Embedding &e, std::span<const Vertex> walk,
                           const std::set<Vertex> &a,
                           const std::set<Vertex> &b) {
  const Graph &g = e.graph();
  if (walk.size() < 3)
    throw InvalidInput("separating cycle needs at least 3 vertices");
  std::set<Vertex> on_cycle(walk.begin(), walk.end());
  if (on_cycle.size() != walk.size())
    throw InvalidInput("separating cycle is not simple");
  std::set<Edge> cycle_edges;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    Edge ed(walk[i], walk[(i + 1) % walk.size()]);
    if (!g.has_edge(ed))
      throw InvalidInput("cycle uses a non-edge of the embedded graph");
    cycle_edges.insert(ed);
  }
  for (const auto *side : {&a, &b})
    for (Vertex v : *side) {
      if (on_cycle.contains(v))
        throw InvalidInput("vertex set intersects the separating cycle");
      if (v < 0 || v >= g.vertex_count() || g.degree(v) == 0)
        throw InvalidInput("vertex set member is isolated or out of range");
    }
  if (a.empty() || b.empty())
    throw InvalidInput("vertex sets must be non-empty");

  std::vector<int> comp;
  connected_components(g, comp);
  const int cyc_comp = comp[walk.front()];
  for (const auto *side : {&a, &b})
    for (Vertex v : *side)
      if (comp[v] != cyc_comp)
        throw InvalidInput("vertex set lies outside the cycle's component");

  // Grow regions: faces adjacent across a non-cycle edge share a side.
  const FaceStructure fs = face_structure(e);
  std::vector<int> parent(fs.faces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Dart d = 0; d < e.dart_count(); ++d) {
    if (cycle_edges.contains(Edge(e.tail(d), e.head(d))))
      continue;
    parent[find(fs.face_of_dart[d])] = find(fs.face_of_dart[e.reverse(d)]);
  }
  auto region = [&](Vertex v) {
    return find(fs.face_of_dart[e.dart(v, e.rotation(v).front())]);
  };
  std::set<int> ra, rb;
  for (Vertex v : a)
    ra.insert(region(v));
  for (Vertex v : b)
    rb.insert(region(v));
  for (int r : ra)
    if (rb.contains(r))
      return false;
  return true;
}

bool cycle_separates(const Embedding &e, const Cycle &c,
                     const std::set<Vertex> &a, const std::set<Vertex> &b) {
  return closed_walk_separates(e, c.vertices, a, b);
}

} // namespace crossnum
