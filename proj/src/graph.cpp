#include "crossnum/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace crossnum {

std::ostream &operator<<(std::ostream &os, const Edge &e) {
  return os << '(' << e.u << ',' << e.v << ')';
}

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0)
    throw InvalidInput("negative vertex count");
  adj_.resize(vertex_count);
}

Graph::Graph(int vertex_count, std::span<const Edge> edges)
    : Graph(vertex_count) {
  for (const Edge &e : edges)
    add_edge(e.u, e.v);
}

Graph::Graph(int vertex_count,
             std::initializer_list<std::pair<int, int>> edges)
    : Graph(vertex_count) {
  for (auto [a, b] : edges)
    add_edge(a, b);
}

bool Graph::try_add_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_)
    throw InvalidInput("edge endpoint out of range: " + std::to_string(a) +
                       " " + std::to_string(b));
  if (a == b)
    throw InvalidInput("loop at vertex " + std::to_string(a));
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e)
    return false;
  edges_.insert(it, e);
  auto &na = adj_[a];
  na.insert(std::lower_bound(na.begin(), na.end(), b), b);
  auto &nb = adj_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  return true;
}

void Graph::add_edge(Vertex a, Vertex b) {
  if (!try_add_edge(a, b))
    throw InvalidInput("duplicate edge " + std::to_string(a) + " " +
                       std::to_string(b));
}

void Graph::remove_edge(Vertex a, Vertex b) {
  Edge e(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw InvalidInput("no such edge " + std::to_string(a) + " " +
                       std::to_string(b));
  edges_.erase(it);
  std::erase(adj_[a], b);
  std::erase(adj_[b], a);
}

Vertex Graph::add_vertex() {
  adj_.emplace_back();
  return n_++;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b)
    return false;
  const auto &na = adj_[a];
  return std::binary_search(na.begin(), na.end(), b);
}

int Graph::edge_index(const Edge &e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    return -1;
  return static_cast<int>(it - edges_.begin());
}

void Graph::set_label(Vertex v, std::string label) {
  if (v < 0 || v >= n_)
    throw InvalidInput("label for vertex out of range: " + std::to_string(v));
  labels_[v] = std::move(label);
}

std::optional<std::string> Graph::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end())
    return std::nullopt;
  return it->second;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v)
    d[v] = degree(v);
  return d;
}

std::uint64_t Graph::checksum() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n_));
  mix(edges_.size());
  for (const Edge &e : edges_) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  return h;
}

// --- Cycle -----------------------------------------------------------------

Cycle Cycle::canonical(std::vector<Vertex> walk) {
  if (walk.size() < 3)
    throw InvalidInput("cycle must have at least 3 vertices");
  auto min_it = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), min_it, walk.end());
  if (walk[1] > walk.back())
    std::reverse(walk.begin() + 1, walk.end());
  return Cycle{std::move(walk)};
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  return out;
}

bool Cycle::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool VertexMap::is_isomorphism(const Graph &g, const Graph &h) const {
  const int n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count() ||
      static_cast<int>(image.size()) != n)
    return false;
  std::vector<char> hit(n, 0);
  for (Vertex x : image) {
    if (x < 0 || x >= n || hit[x])
      return false;
    hit[x] = 1;
  }
  // Equal edge counts plus edge preservation imply non-edges are preserved.
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge &e) {
    return h.has_edge(image[e.u], image[e.v]);
  });
}

// --- Structural operations -------------------------------------------------

Graph induced_subgraph(const Graph &g, const std::set<Vertex> &removed) {
  for (Vertex v : removed)
    if (v < 0 || v >= g.vertex_count())
      throw InvalidInput("removed vertex out of range: " + std::to_string(v));
  std::vector<Vertex> remap(g.vertex_count(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!removed.contains(v))
      remap[v] = next++;
  Graph out(next);
  for (const Edge &e : g.edges())
    if (remap[e.u] >= 0 && remap[e.v] >= 0)
      out.add_edge(remap[e.u], remap[e.v]);
  for (const auto &[v, text] : g.labels())
    if (remap[v] >= 0)
      out.set_label(remap[v], text);
  return out;
}

Graph edge_subgraph(const Graph &g, std::span<const Edge> kept) {
  Graph out(g.vertex_count());
  for (const Edge &e : kept) {
    if (!g.has_edge(e))
      throw InvalidInput("edge not in graph");
    out.add_edge(e.u, e.v);
  }
  for (const auto &[v, text] : g.labels())
    out.set_label(v, text);
  return out;
}

int connected_components(const Graph &g, std::vector<int> &component) {
  component.assign(g.vertex_count(), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (component[s] >= 0)
      continue;
    component[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (component[y] < 0) {
          component[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  return count;
}

Graph suppress_degree_two(const Graph &g) {
  std::vector<int> comp;
  const int ncomp = connected_components(g, comp);
  std::vector<char> has_anchor(ncomp, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2)
      has_anchor[comp[v]] = 1;
  for (int c = 0; c < ncomp; ++c)
    if (!has_anchor[c])
      throw PreconditionError("component is a bare cycle; cannot suppress");

  Graph work = g;
  std::vector<char> gone(g.vertex_count(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < work.vertex_count(); ++v) {
      if (gone[v] || work.degree(v) != 2)
        continue;
      Vertex a = work.neighbors(v)[0];
      Vertex b = work.neighbors(v)[1];
      if (work.has_edge(a, b))
        throw NonSimpleResult("suppressing vertex " + std::to_string(v) +
                              " duplicates edge " + std::to_string(a) + " " +
                              std::to_string(b));
      work.remove_edge(v, a);
      work.remove_edge(v, b);
      work.add_edge(a, b);
      gone[v] = 1;
      changed = true;
    }
  }
  std::set<Vertex> removed;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (gone[v])
      removed.insert(v);
  return induced_subgraph(work, removed);
}

namespace {

class IsoSearch {
public:
  IsoSearch(const Graph &g, const Graph &h) : g_(g), h_(h) {
    n_ = g.vertex_count();
    sig_g_ = signatures(g);
    sig_h_ = signatures(h);
  }

  std::optional<VertexMap> run() {
    if (n_ != h_.vertex_count() || g_.edge_count() != h_.edge_count())
      return std::nullopt;
    auto sg = sig_g_, sh = sig_h_;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh)
      return std::nullopt;
    build_order();
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    if (!extend(0))
      return std::nullopt;
    return VertexMap{map_};
  }

private:
  using Signature = std::vector<int>; // degree, then sorted neighbor degrees

  static std::vector<Signature> signatures(const Graph &g) {
    std::vector<Signature> out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      Signature s;
      for (Vertex w : g.neighbors(v))
        s.push_back(g.degree(w));
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), g.degree(v));
      out[v] = std::move(s);
    }
    return out;
  }

  // BFS order so every vertex after the first of its component has an
  // already-mapped neighbor; this keeps candidate sets tiny.
  void build_order() {
    std::vector<char> seen(n_, 0);
    for (Vertex s = 0; s < n_; ++s) {
      if (seen[s])
        continue;
      std::queue<Vertex> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        order_.push_back(x);
        for (Vertex y : g_.neighbors(x))
          if (!seen[y]) {
            seen[y] = 1;
            q.push(y);
          }
      }
    }
  }

  bool consistent(Vertex x, Vertex y) const {
    if (sig_g_[x] != sig_h_[y])
      return false;
    for (Vertex z = 0; z < n_; ++z) {
      if (map_[z] < 0)
        continue;
      if (g_.has_edge(x, z) != h_.has_edge(y, map_[z]))
        return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size())
      return true;
    Vertex x = order_[depth];
    // Candidates: neighbors of the image of a mapped neighbor, if any.
    const std::vector<Vertex> *pool = nullptr;
    for (Vertex z : g_.neighbors(x))
      if (map_[z] >= 0) {
        pool = &h_.neighbors(map_[z]);
        break;
      }
    auto attempt = [&](Vertex y) {
      if (used_[y] || !consistent(x, y))
        return false;
      map_[x] = y;
      used_[y] = 1;
      if (extend(depth + 1))
        return true;
      map_[x] = -1;
      used_[y] = 0;
      return false;
    };
    if (pool) {
      for (Vertex y : *pool)
        if (attempt(y))
          return true;
    } else {
      for (Vertex y = 0; y < n_; ++y)
        if (attempt(y))
          return true;
    }
    return false;
  }

  const Graph &g_;
  const Graph &h_;
  int n_ = 0;
  std::vector<Signature> sig_g_, sig_h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

// Calls `visit(path)` for every simple path starting at `start`, using only
// vertices greater than `start`, that closes into a cycle of `length`.
// Each undirected cycle is reported once (second vertex < last vertex).
template <class Visit>
void cycles_from(const Graph &g, Vertex start, int length, Visit &&visit) {
  std::vector<Vertex> path{start};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[start] = 1;
  std::function<void()> dfs = [&]() {
    Vertex x = path.back();
    const int len = static_cast<int>(path.size());
    if (len == length) {
      if (g.has_edge(x, start) && path[1] < path.back())
        visit(path);
      return;
    }
    for (Vertex y : g.neighbors(x)) {
      if (y <= start || on_path[y])
        continue;
      on_path[y] = 1;
      path.push_back(y);
      dfs();
      path.pop_back();
      on_path[y] = 0;
    }
  };
  dfs();
}

} // namespace

std::optional<VertexMap> is_isomorphic(const Graph &g, const Graph &h) {
  return IsoSearch(g, h).run();
}

std::vector<Cycle> enumerate_cycles(const Graph &g, int length) {
  if (length < 3)
    throw InvalidInput("cycle length must be at least 3");
  std::vector<Cycle> out;
  for (Vertex s = 0; s < g.vertex_count(); ++s)
    cycles_from(g, s, length, [&](const std::vector<Vertex> &path) {
      out.push_back(Cycle::canonical(path));
    });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> count_cycles_up_to(const Graph &g, int max_length) {
  std::vector<long long> counts(std::max(max_length + 1, 3), 0);
  const int n = g.vertex_count();
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    std::function<void()> dfs = [&]() {
      Vertex x = path.back();
      const int len = static_cast<int>(path.size());
      if (len >= 3 && path[1] < x && g.has_edge(x, s))
        ++counts[len];
      if (len == max_length)
        return;
      for (Vertex y : g.neighbors(x)) {
        if (y <= s || on_path[y])
          continue;
        on_path[y] = 1;
        path.push_back(y);
        dfs();
        path.pop_back();
        on_path[y] = 0;
      }
    };
    dfs();
    on_path[s] = 0;
  }
  return counts;
}

int girth(const Graph &g) {
  const int n = g.vertex_count();
  int best = kInfiniteGirth;
  std::vector<int> dist(n), parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      if (2 * dist[x] + 1 >= best)
        break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best;
}

Graph relabel(const Graph &g, const VertexMap &map) {
  Graph out(g.vertex_count());
  for (const Edge &e : g.edges())
    out.add_edge(map(e.u), map(e.v));
  for (const auto &[v, text] : g.labels())
    out.set_label(map(v), text);
  return out;
}

Graph disjoint_union(const Graph &a, const Graph &b) {
  const int off = a.vertex_count();
  Graph out(off + b.vertex_count());
  for (const Edge &e : a.edges())
    out.add_edge(e.u, e.v);
  for (const Edge &e : b.edges())
    out.add_edge(e.u + off, e.v + off);
  return out;
}

Graph complete_graph(int n) {
  if (n < 0)
    throw InvalidInput("complete graph size must be non-negative");
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      g.add_edge(a, b);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0)
    throw InvalidInput("bipartite sides must be non-negative");
  Graph g(a + b);
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y)
      g.add_edge(x, a + y);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3)
    throw InvalidInput("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1)
    throw InvalidInput("path needs at least 1 vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);         // outer pentagon
    g.add_edge(i, i + 5);               // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
  }
  return g;
}

// --- .gr format ------------------------------------------------------------

namespace {

[[noreturn]] void parse_error(int line_no, const std::string &what) {
  throw InvalidInput("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph read_graph(std::istream &in) {
  std::string line;
  int line_no = 0;
  std::optional<Graph> g;
  int declared_m = 0;
  Edge last;
  bool have_last = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag))
      continue;
    if (tag == "c")
      continue;
    if (tag == "p") {
      if (g)
        parse_error(line_no, "duplicate header");
      long long n = -1, m = -1;
      if (!(ls >> n >> m) || n < 0 || m < 0 || n > 1000000)
        parse_error(line_no, "malformed header, expected 'p <n> <m>'");
      std::string extra;
      if (ls >> extra)
        parse_error(line_no, "trailing tokens in header");
      g.emplace(static_cast<int>(n));
      declared_m = static_cast<int>(m);
    } else if (tag == "e") {
      if (!g)
        parse_error(line_no, "edge before header");
      long long u = -1, v = -1;
      std::string extra;
      if (!(ls >> u >> v) || (ls >> extra))
        parse_error(line_no, "malformed edge, expected 'e <u> <v>'");
      if (u < 0 || v < 0 || u >= g->vertex_count() || v >= g->vertex_count())
        parse_error(line_no, "edge endpoint out of range");
      if (u >= v)
        parse_error(line_no, "edge must satisfy u < v");
      Edge e(static_cast<int>(u), static_cast<int>(v));
      if (have_last && !(last < e)) {
        if (last == e)
          parse_error(line_no, "duplicate edge");
        parse_error(line_no, "edges not sorted");
      }
      last = e;
      have_last = true;
      g->add_edge(e.u, e.v);
    } else if (tag == "l") {
      if (!g)
        parse_error(line_no, "label before header");
      long long v = -1;
      std::string text;
      if (!(ls >> v >> text))
        parse_error(line_no, "malformed label, expected 'l <v> <label>'");
      if (v < 0 || v >= g->vertex_count())
        parse_error(line_no, "label vertex out of range");
      g->set_label(static_cast<int>(v), text);
    } else {
      parse_error(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (!g)
    throw InvalidInput("missing 'p <n> <m>' header");
  if (g->edge_count() != declared_m)
    throw InvalidInput("header declares " + std::to_string(declared_m) +
                       " edges but file has " +
                       std::to_string(g->edge_count()));
  return *g;
}

Graph read_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream &out, const Graph &g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge &e : g.edges())
    out << "e " << e.u << ' ' << e.v << '\n';
  for (const auto &[v, text] : g.labels())
    out << "l " << v << ' ' << text << '\n';
}

std::string to_gr_string(const Graph &g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

} // namespace crossnum
