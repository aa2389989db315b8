#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "crossnum/crossing.hpp"

namespace crossnum {

std::vector<int> DrawingCertificate::crossings_on(const Edge &e) const {
  if (auto it = orders.find(e); it != orders.end())
    return it->second;
  std::vector<int> ids;
  for (const Crossing &x : crossings)
    if (x.pair.e1 == e || x.pair.e2 == e)
      ids.push_back(x.id);
  return ids;
}

DrawingCertificate DrawingCertificate::canonical() const {
  std::vector<Crossing> sorted = crossings;
  std::sort(sorted.begin(), sorted.end(),
            [](const Crossing &a, const Crossing &b) { return a.pair < b.pair; });
  std::map<int, int> remap;
  DrawingCertificate out;
  out.host = host;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    remap[sorted[i].id] = static_cast<int>(i);
    out.crossings.push_back({static_cast<int>(i), sorted[i].pair});
  }
  std::set<Edge> crossed;
  for (const Crossing &x : crossings) {
    crossed.insert(x.pair.e1);
    crossed.insert(x.pair.e2);
  }
  for (const Edge &e : crossed) {
    std::vector<int> ids = crossings_on(e);
    if (ids.size() < 2)
      continue;
    for (int &id : ids)
      id = remap.at(id);
    out.orders[e] = std::move(ids);
  }
  return out;
}

std::string to_string(Violation v) {
  switch (v) {
  case Violation::HostMismatch: return "host-mismatch";
  case Violation::UnknownEdge: return "unknown-edge";
  case Violation::SelfPair: return "self-crossing";
  case Violation::AdjacentPair: return "adjacent-edges-cross";
  case Violation::DuplicatePair: return "duplicate-pair";
  case Violation::DuplicateId: return "duplicate-id";
  case Violation::OrderMissing: return "order-missing";
  case Violation::OrderUnknownId: return "order-unknown-id";
  case Violation::OrderInconsistent: return "order-inconsistent";
  case Violation::NonplanarPlanarization: return "nonplanar-planarization";
  }
  return "unknown";
}

namespace {

std::string describe(const std::vector<ViolationDetail> &vs) {
  std::string out = "certificate rejected:";
  for (const auto &v : vs)
    out += " [" + to_string(v.kind) + ": " + v.detail + "]";
  return out;
}

std::string edge_text(const Edge &e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

} // namespace

CertificateError::CertificateError(std::vector<ViolationDetail> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

bool CertificateError::has(Violation v) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [v](const ViolationDetail &d) { return d.kind == v; });
}

std::vector<ViolationDetail> structural_violations(const Graph &g,
                                                   const DrawingCertificate &c) {
  std::vector<ViolationDetail> out;
  if (c.host != HostId::of(g))
    out.push_back({Violation::HostMismatch,
                   "certificate host (" + std::to_string(c.host.n) + ", " +
                       std::to_string(c.host.m) + ") does not match graph"});
  std::set<int> ids;
  std::set<CrossingPair> pairs;
  std::map<Edge, std::vector<int>> on_edge;
  for (const Crossing &x : c.crossings) {
    const std::string tag = "crossing " + std::to_string(x.id);
    if (!ids.insert(x.id).second)
      out.push_back({Violation::DuplicateId, tag});
    bool known = true;
    for (const Edge &e : {x.pair.e1, x.pair.e2})
      if (!g.has_edge(e)) {
        out.push_back({Violation::UnknownEdge, tag + " uses " + edge_text(e)});
        known = false;
      }
    if (x.pair.e1 == x.pair.e2) {
      out.push_back({Violation::SelfPair, tag});
      continue;
    }
    if (x.pair.e1.shares_endpoint(x.pair.e2))
      out.push_back({Violation::AdjacentPair, tag + ": " +
                                                  edge_text(x.pair.e1) + " x " +
                                                  edge_text(x.pair.e2)});
    if (!pairs.insert(x.pair).second)
      out.push_back({Violation::DuplicatePair, tag});
    if (known) {
      on_edge[x.pair.e1].push_back(x.id);
      on_edge[x.pair.e2].push_back(x.id);
    }
  }
  for (const auto &[e, list] : c.orders) {
    const std::string tag = "order of " + edge_text(e);
    if (!g.has_edge(e)) {
      out.push_back({Violation::UnknownEdge, tag});
      continue;
    }
    bool unknown = false;
    for (int id : list)
      if (!ids.contains(id)) {
        out.push_back({Violation::OrderUnknownId, tag + " lists " +
                                                      std::to_string(id)});
        unknown = true;
      }
    if (unknown)
      continue;
    auto expected = on_edge[e];
    auto given = list;
    std::sort(expected.begin(), expected.end());
    std::sort(given.begin(), given.end());
    if (expected != given)
      out.push_back({Violation::OrderInconsistent, tag});
  }
  for (const auto &[e, list] : on_edge)
    if (list.size() >= 2 && !c.orders.contains(e))
      out.push_back({Violation::OrderMissing, edge_text(e) + " crossed " +
                                                  std::to_string(list.size()) +
                                                  " times"});
  return out;
}

Planarization planarize_detailed(const Graph &g, const DrawingCertificate &c) {
  if (auto vs = structural_violations(g, c); !vs.empty())
    throw CertificateError(std::move(vs));
  const int n = g.vertex_count();
  std::map<int, Vertex> dummy;
  for (std::size_t i = 0; i < c.crossings.size(); ++i)
    dummy[c.crossings[i].id] = n + static_cast<int>(i);

  Planarization p;
  p.original_vertices = n;
  p.graph = Graph(n + c.count());
  p.chains.reserve(g.edge_count());
  for (const Edge &e : g.edges()) {
    std::vector<Vertex> chain{e.u};
    for (int id : c.crossings_on(e))
      chain.push_back(dummy.at(id));
    chain.push_back(e.v);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      p.graph.add_edge(chain[i], chain[i + 1]);
    p.chains.push_back(std::move(chain));
  }
  for (const auto &[v, text] : g.labels())
    p.graph.set_label(v, text);
  return p;
}

Graph planarize(const Graph &g, const DrawingCertificate &c) {
  return planarize_detailed(g, c).graph;
}

CrossingReport verify_certificate(const Graph &g, const DrawingCertificate &c) {
  const Planarization p = planarize_detailed(g, c);
  if (!is_planar(p.graph))
    throw CertificateError(
        {{Violation::NonplanarPlanarization,
          "planarization with " + std::to_string(p.graph.vertex_count()) +
              " vertices is not planar"}});
  CrossingReport r;
  r.count = c.count();
  for (const Crossing &x : c.crossings) {
    ++r.per_edge[x.pair.e1];
    ++r.per_edge[x.pair.e2];
  }
  for (const Edge &e : g.edges())
    if (!r.per_edge.contains(e))
      r.clean_edges.insert(e);
  return r;
}

// --- Accounting -------------------------------------------------------------

void EdgeClassPartition::add(std::string name, std::set<Edge> edges) {
  names.push_back(std::move(name));
  classes.push_back(std::move(edges));
}

int AccountTable::union_count(int a, int b) const {
  return within.at(a) + within.at(b) + between.at(a).at(b);
}

int count_within(const DrawingCertificate &c, const std::set<Edge> &a) {
  int n = 0;
  for (const Crossing &x : c.crossings)
    if (a.contains(x.pair.e1) && a.contains(x.pair.e2))
      ++n;
  return n;
}

int count_between(const DrawingCertificate &c, const std::set<Edge> &a,
                  const std::set<Edge> &b) {
  int n = 0;
  for (const Crossing &x : c.crossings)
    if ((a.contains(x.pair.e1) && b.contains(x.pair.e2)) ||
        (b.contains(x.pair.e1) && a.contains(x.pair.e2)))
      ++n;
  return n;
}

AccountTable account(const DrawingCertificate &c,
                     const EdgeClassPartition &parts) {
  const int k = static_cast<int>(parts.classes.size());
  std::map<Edge, int> owner;
  for (int i = 0; i < k; ++i)
    for (const Edge &e : parts.classes[i])
      if (!owner.emplace(e, i).second)
        throw InvalidInput("edge classes overlap at " + edge_text(e) + " (" +
                           parts.names[owner[e]] + ", " + parts.names[i] +
                           ")");
  AccountTable t;
  t.names = parts.names;
  t.within.assign(k, 0);
  t.between.assign(k, std::vector<int>(k, 0));
  t.total = c.count();
  for (const Crossing &x : c.crossings) {
    auto a = owner.find(x.pair.e1);
    auto b = owner.find(x.pair.e2);
    if (a == owner.end() || b == owner.end()) {
      ++t.unclassified;
      continue;
    }
    if (a->second == b->second) {
      ++t.within[a->second];
    } else {
      ++t.between[a->second][b->second];
      ++t.between[b->second][a->second];
    }
  }
  // nu(A u B) = nu(A) + nu(B) + nu(A,B), checked against a direct count.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::set<Edge> u = parts.classes[i];
      u.insert(parts.classes[j].begin(), parts.classes[j].end());
      if (count_within(c, u) != t.union_count(i, j))
        throw Error("accounting identity violated for " + parts.names[i] +
                    " and " + parts.names[j]);
    }
  return t;
}

// --- Constraints ------------------------------------------------------------

bool ClassPairRule::matches(const CrossingPair &p) const {
  return (a.contains(p.e1) && b.contains(p.e2)) ||
         (b.contains(p.e1) && a.contains(p.e2));
}

bool CrossingConstraints::forbids(const CrossingPair &p) const {
  return std::any_of(forbid.begin(), forbid.end(),
                     [&](const ClassPairRule &r) { return r.matches(p); });
}

bool CrossingConstraints::requirement_met(
    std::span<const CrossingPair> pairs) const {
  if (require_any.empty())
    return true;
  for (const CrossingPair &p : pairs)
    for (const ClassPairRule &r : require_any)
      if (r.matches(p))
        return true;
  return false;
}

bool CrossingConstraints::allows(std::span<const CrossingPair> pairs) const {
  for (const CrossingPair &p : pairs)
    if (forbids(p))
      return false;
  return requirement_met(pairs);
}

// --- ".crt" format ----------------------------------------------------------

namespace {

[[noreturn]] void crt_error(int line_no, const std::string &what) {
  throw InvalidInput("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

DrawingCertificate read_certificate(std::istream &in) {
  DrawingCertificate c;
  bool have_host = false;
  long long declared = -1;
  std::set<int> ids;
  std::set<CrossingPair> pairs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c")
      continue;
    std::string extra;
    if (tag == "h") {
      if (have_host)
        crt_error(line_no, "duplicate host line");
      std::string sum;
      if (!(ls >> c.host.n >> c.host.m >> sum) || (ls >> extra) ||
          c.host.n < 0 || c.host.m < 0)
        crt_error(line_no, "malformed host line, expected 'h <n> <m> <sum>'");
      try {
        std::size_t used = 0;
        c.host.checksum = std::stoull(sum, &used, 16);
        if (used != sum.size())
          crt_error(line_no, "checksum must be hexadecimal");
      } catch (const std::logic_error &) {
        crt_error(line_no, "checksum must be hexadecimal");
      }
      have_host = true;
    } else if (tag == "cr") {
      if (declared >= 0)
        crt_error(line_no, "duplicate 'cr' line");
      if (!(ls >> declared) || declared < 0 || (ls >> extra))
        crt_error(line_no, "malformed count line, expected 'cr <k>'");
    } else if (tag == "x") {
      long long id, u1, v1, u2, v2;
      if (!(ls >> id >> u1 >> v1 >> u2 >> v2) || (ls >> extra) || id < 0 ||
          u1 < 0 || v1 < 0 || u2 < 0 || v2 < 0)
        crt_error(line_no, "malformed crossing, expected 'x <id> u1 v1 u2 v2'");
      if (u1 == v1 || u2 == v2)
        crt_error(line_no, "crossing names a loop");
      CrossingPair p(Edge(static_cast<int>(u1), static_cast<int>(v1)),
                     Edge(static_cast<int>(u2), static_cast<int>(v2)));
      if (p.e1 == p.e2)
        crt_error(line_no, "edge crosses itself");
      if (p.e1.shares_endpoint(p.e2))
        crt_error(line_no, "adjacent edges cross");
      if (!ids.insert(static_cast<int>(id)).second)
        crt_error(line_no, "duplicate crossing id " + std::to_string(id));
      if (!pairs.insert(p).second)
        crt_error(line_no, "duplicate crossing pair");
      c.crossings.push_back({static_cast<int>(id), p});
    } else if (tag == "o") {
      long long u, v;
      if (!(ls >> u >> v) || u < 0 || v < 0 || u >= v)
        crt_error(line_no, "malformed order, expected 'o <u> <v> <id...>' "
                           "with u < v");
      Edge e(static_cast<int>(u), static_cast<int>(v));
      if (c.orders.contains(e))
        crt_error(line_no, "duplicate order line");
      std::vector<int> list;
      long long id;
      while (ls >> id) {
        if (!ids.contains(static_cast<int>(id)))
          crt_error(line_no, "order names unknown crossing id " +
                                 std::to_string(id));
        list.push_back(static_cast<int>(id));
      }
      if (!ls.eof())
        crt_error(line_no, "malformed crossing id in order");
      c.orders[e] = std::move(list);
    } else {
      crt_error(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_host)
    throw InvalidInput("missing 'h' host line");
  if (declared < 0)
    throw InvalidInput("missing 'cr' count line");
  if (declared != c.count())
    throw InvalidInput("'cr " + std::to_string(declared) + "' but " +
                       std::to_string(c.count()) + " crossing lines");
  return c;
}

DrawingCertificate read_certificate_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open " + path);
  return read_certificate(in);
}

void write_certificate(std::ostream &out, const DrawingCertificate &c) {
  const DrawingCertificate k = c.canonical();
  std::ostringstream sum;
  sum << std::hex << std::setw(16) << std::setfill('0') << k.host.checksum;
  out << "h " << k.host.n << ' ' << k.host.m << ' ' << sum.str() << '\n';
  out << "cr " << k.count() << '\n';
  for (const Crossing &x : k.crossings)
    out << "x " << x.id << ' ' << x.pair.e1.u << ' ' << x.pair.e1.v << ' '
        << x.pair.e2.u << ' ' << x.pair.e2.v << '\n';
  for (const auto &[e, ids] : k.orders) {
    out << "o " << e.u << ' ' << e.v;
    for (int id : ids)
      out << ' ' << id;
    out << '\n';
  }
}

} // namespace crossnum
