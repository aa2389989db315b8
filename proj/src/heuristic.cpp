#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include "crossnum/bounds.hpp"
#include "crossnum/crossing.hpp"
#include "drawing_state.hpp"

namespace crossnum {

namespace {

struct RouteStep {
  int edge; // host edge crossed
  int gap;  // gap on that edge at routing time
};

// Shortest route for host edge `e` through the faces of one embedding of the
// current planarization. Crossing segments of adjacent edges or crossing the
// same host edge twice is not allowed. Returns nullopt if no route exists.
std::optional<std::vector<RouteStep>> route_edge(const detail::DrawingState &s,
                                                 int e) {
  const Graph &g = s.host();
  const Edge target = g.edges()[e];
  const detail::BuiltPlanarization built = s.build();
  const Graph &p = built.graph;

  std::vector<int> comp;
  connected_components(p, comp);
  if (comp[target.u] != comp[target.v])
    return std::vector<RouteStep>{};

  const Embedding emb = planar_embedding(p);
  const FaceStructure fs = face_structure(emb);
  const int nf = static_cast<int>(fs.faces.size());

  std::vector<char> banned(g.edge_count(), 0);
  for (int f = 0; f < g.edge_count(); ++f)
    if (g.edges()[f].shares_endpoint(target) || f == e)
      banned[f] = 1;

  for (int attempt = 0; attempt <= g.edge_count(); ++attempt) {
    std::vector<int> dist(nf, -1), via(nf, -1);
    std::queue<int> q;
    for (Vertex x : p.neighbors(target.u)) {
      const int f = fs.face_of_dart[emb.dart(target.u, x)];
      if (dist[f] < 0) {
        dist[f] = 0;
        q.push(f);
      }
    }
    std::vector<char> goal(nf, 0);
    for (Vertex x : p.neighbors(target.v))
      goal[fs.face_of_dart[emb.dart(target.v, x)]] = 1;

    int reached = -1;
    while (!q.empty() && reached < 0) {
      const int face = q.front();
      q.pop();
      if (goal[face]) {
        reached = face;
        break;
      }
      for (Dart d : fs.faces[face].darts) {
        const int idx = p.edge_index(Edge(emb.tail(d), emb.head(d)));
        if (banned[built.tag[idx].edge])
          continue;
        const int other = fs.face_of_dart[emb.reverse(d)];
        if (dist[other] >= 0)
          continue;
        dist[other] = dist[face] + 1;
        via[other] = d;
        q.push(other);
      }
    }
    if (reached < 0)
      return std::nullopt;

    std::vector<RouteStep> steps;
    for (int face = reached; dist[face] > 0;) {
      const Dart d = via[face];
      const auto &t = built.tag[p.edge_index(Edge(emb.tail(d), emb.head(d)))];
      steps.push_back({t.edge, t.gap});
      face = fs.face_of_dart[d];
    }
    std::reverse(steps.begin(), steps.end());

    std::vector<int> seen;
    int repeated = -1;
    for (const RouteStep &st : steps) {
      if (std::find(seen.begin(), seen.end(), st.edge) != seen.end()) {
        repeated = st.edge;
        break;
      }
      seen.push_back(st.edge);
    }
    if (repeated < 0)
      return steps;
    banned[repeated] = 1;
  }
  return std::nullopt;
}

bool insert_edge(detail::DrawingState &s, int e) {
  auto route = route_edge(s, e);
  if (!route)
    return false;
  s.set_present(e, true);
  int along = 0;
  for (const RouteStep &st : *route)
    s.add_crossing(e, along++, st.edge, st.gap);
  return true;
}

std::vector<int> crossings_per_edge(const detail::DrawingState &s) {
  std::vector<int> out(s.host().edge_count(), 0);
  for (const auto &[e, f] : s.crossings()) {
    ++out[e];
    ++out[f];
  }
  return out;
}

// One randomized construction on `g`, followed by remove-and-reinsert
// passes. Returns nullopt when an insertion finds no legal route.
std::optional<detail::DrawingState> construct(const Graph &g,
                                              std::mt19937_64 &rng) {
  detail::DrawingState s(g, false);
  std::vector<int> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<int> later;
  for (int e : order) {
    s.set_present(e, true);
    if (!is_planar(s.build().graph)) {
      s.set_present(e, false);
      later.push_back(e);
    }
  }
  for (int e : later)
    if (!insert_edge(s, e))
      return std::nullopt;

  for (int pass = 0; pass < 8; ++pass) {
    bool improved = false;
    std::vector<int> crossed;
    const auto per = crossings_per_edge(s);
    for (int e = 0; e < g.edge_count(); ++e)
      if (per[e] > 0)
        crossed.push_back(e);
    std::shuffle(crossed.begin(), crossed.end(), rng);
    for (int e : crossed) {
      const detail::DrawingState before = s;
      s.remove_edge(e);
      if (!insert_edge(s, e) || s.crossing_count() > before.crossing_count()) {
        s = before;
        continue;
      }
      if (s.crossing_count() < before.crossing_count())
        improved = true;
    }
    if (!improved)
      break;
  }
  return s;
}

} // namespace

DrawingCertificate upper_bound_heuristic(const Graph &g, int tries,
                                         std::uint64_t seed) {
  if (tries < 1)
    throw InvalidInput("tries must be at least 1");
  const DrawingCertificate empty{HostId::of(g), {}, {}};
  if (is_planar(g))
    return empty;

  const int floor = cycle_census_bound(g);
  std::optional<DrawingCertificate> best;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < tries; ++t) {
    // A random relabeling varies the embeddings the planarity test returns.
    VertexMap perm{std::vector<Vertex>(g.vertex_count())};
    std::iota(perm.image.begin(), perm.image.end(), 0);
    std::shuffle(perm.image.begin(), perm.image.end(), rng);
    const Graph h = relabel(g, perm);
    auto drawn = construct(h, rng);
    if (!drawn)
      continue;
    const DrawingCertificate local = drawn->certificate();
    if (best && local.count() >= best->count())
      continue;

    std::vector<Vertex> inverse(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      inverse[perm(v)] = v;
    DrawingCertificate mapped;
    mapped.host = HostId::of(g);
    for (const Crossing &x : local.crossings)
      mapped.crossings.push_back(
          {x.id, CrossingPair(Edge(inverse[x.pair.e1.u], inverse[x.pair.e1.v]),
                              Edge(inverse[x.pair.e2.u], inverse[x.pair.e2.v]))});
    for (const auto &[e, ids] : local.orders) {
      const Edge back(inverse[e.u], inverse[e.v]);
      std::vector<int> list = ids;
      // Orders run from the lower endpoint; relabeling may flip direction.
      if (inverse[e.u] > inverse[e.v])
        std::reverse(list.begin(), list.end());
      mapped.orders[back] = std::move(list);
    }
    best = mapped.canonical();
    if (best->count() <= floor)
      break;
  }
  if (!best)
    throw Error("heuristic failed to route every edge");
  verify_certificate(g, *best);
  return *best;
}

} // namespace crossnum
