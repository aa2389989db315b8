#include "crossnum/audit.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "crossnum/bounds.hpp"
#include "crossnum/crossing.hpp"
#include "crossnum/pancake.hpp"
#include "crossnum/planarity.hpp"

namespace crossnum {

std::string to_string(AuditStatus s) {
  switch (s) {
  case AuditStatus::Pass: return "pass";
  case AuditStatus::Fail: return "fail";
  case AuditStatus::Timeout: return "timeout";
  }
  return "?";
}

bool AuditReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const AuditEntry &e) {
    return e.status == AuditStatus::Pass;
  });
}

bool AuditReport::any_failed() const {
  return std::any_of(entries.begin(), entries.end(), [](const AuditEntry &e) {
    return e.status == AuditStatus::Fail;
  });
}

std::string AuditReport::machine() const {
  std::ostringstream os;
  for (const AuditEntry &e : entries)
    os << "audit " << e.id << ' ' << to_string(e.status) << ' ' << e.detail
       << '\n';
  return os.str();
}

std::string AuditReport::human() const {
  std::ostringstream os;
  for (const AuditEntry &e : entries) {
    std::string status = to_string(e.status);
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    os << "[" << e.id << "] " << status << "  " << e.title << '\n'
       << "      claim:  " << e.claim << '\n'
       << "      result: " << e.detail << '\n';
  }
  os << (all_passed() ? "all audits passed" : "audit suite did not pass")
     << '\n';
  return os.str();
}

std::string six_cycle_pair_class(const PancakeDecomposition &d,
                                 std::span<const CrossingPair> pairs) {
  auto cycle_of = [&](const Edge &e) {
    for (int i = 0; i < 4; ++i)
      if (d.cycle_edges[i].contains(e))
        return i;
    return -1;
  };
  std::set<std::pair<int, int>> crossing_pairs;
  for (const CrossingPair &p : pairs) {
    const int a = cycle_of(p.e1), b = cycle_of(p.e2);
    if (a >= 0 && b >= 0 && a != b)
      crossing_pairs.emplace(std::min(a, b), std::max(a, b));
  }
  switch (crossing_pairs.size()) {
  case 0: return "none";
  case 1: return "one";
  default: return "two+";
  }
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Walk of `c` through the planarization, with the dummy vertices of its
// crossings inserted in order. Empty if the walk repeats a vertex.
std::vector<Vertex> planarized_walk(const Graph &host,
                                    const DrawingCertificate &cert,
                                    const Cycle &c) {
  std::map<int, Vertex> dummy;
  for (std::size_t i = 0; i < cert.crossings.size(); ++i)
    dummy[cert.crossings[i].id] = host.vertex_count() + static_cast<int>(i);
  std::vector<Vertex> walk;
  const auto &vs = c.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    walk.push_back(a);
    std::vector<int> ids = cert.crossings_on(Edge(a, b));
    if (a > b)
      std::reverse(ids.begin(), ids.end());
    for (int id : ids)
      walk.push_back(dummy.at(id));
  }
  std::set<Vertex> distinct(walk.begin(), walk.end());
  if (distinct.size() != walk.size())
    return {};
  return walk;
}

ClassPairRule between_cycles(const Cycle &a, const Cycle &b) {
  const auto ea = a.edges(), eb = b.edges();
  return ClassPairRule{{ea.begin(), ea.end()}, {eb.begin(), eb.end()}};
}

class Suite {
public:
  explicit Suite(const AuditOptions &opt)
      : opt_(opt), gadget_(opt.gadget_override ? *opt.gadget_override
                                               : g12_reference()) {}

  AuditReport run() {
    construction();
    census();
    homeomorphism();
    observation();
    face_counting();
    cross_pairs_expensive();
    nesting();
    upper_bound();
    if (opt_.level == AuditLevel::Full)
      refutation();
    return std::move(report_);
  }

private:
  AuditEntry &begin(char id, std::string title, std::string claim) {
    report_.entries.push_back({id, std::move(title), std::move(claim),
                               AuditStatus::Pass, ""});
    return report_.entries.back();
  }

  static void finish(AuditEntry &e, bool ok, std::string detail) {
    e.status = ok ? AuditStatus::Pass : AuditStatus::Fail;
    e.detail = std::move(detail);
  }

  // (a)
  void construction() {
    AuditEntry &e = begin('a', "pancake construction",
                          "P2, P3, P4 have n! vertices and are (n-1)-regular; "
                          "P3 is a single 6-cycle");
    const Graph p2 = pancake_graph(2), p3 = pancake_graph(3);
    const Graph &p4 = p4_;
    auto regular = [](const Graph &g, int d) {
      const auto ds = g.degree_sequence();
      return std::all_of(ds.begin(), ds.end(), [d](int x) { return x == d; });
    };
    const bool p3_cycle = p3.vertex_count() == 6 && p3.edge_count() == 6 &&
                          regular(p3, 2) && enumerate_cycles(p3, 6).size() == 1;
    const bool ok = p2.vertex_count() == 2 && p2.edge_count() == 1 &&
                    p3_cycle && p4.vertex_count() == 24 &&
                    p4.edge_count() == 36 && regular(p4, 3);
    std::ostringstream d;
    d << "P2=(" << p2.vertex_count() << "," << p2.edge_count() << ") P3=("
      << p3.vertex_count() << "," << p3.edge_count()
      << ",6-cycle=" << yes_no(p3_cycle) << ") P4=(" << p4.vertex_count()
      << "," << p4.edge_count() << ",cubic=" << yes_no(regular(p4, 3)) << ")";
    finish(e, ok, d.str());
  }

  // (b)
  void census() {
    AuditEntry &e = begin('b', "six-cycle census",
                          "P4 has exactly four 6-cycles and they are pairwise "
                          "vertex-disjoint");
    const auto cycles = enumerate_cycles(p4_, 6);
    std::set<Vertex> covered;
    std::size_t total = 0;
    for (const Cycle &c : cycles) {
      covered.insert(c.vertices.begin(), c.vertices.end());
      total += c.vertices.size();
    }
    const bool disjoint = covered.size() == total;
    const bool ok = cycles.size() == 4 && disjoint && covered.size() == 24;
    std::ostringstream d;
    d << "six_cycles=" << cycles.size() << " disjoint=" << yes_no(disjoint)
      << " covered=" << covered.size();
    finish(e, ok, d.str());
    if (ok)
      decomposition_ = decompose(p4_);
  }

  // (c)
  void homeomorphism() {
    AuditEntry &e = begin('c', "gadget homeomorphism",
                          "for each i, the subgraph on the complement of E'_i "
                          "suppresses to the 12-vertex gadget");
    if (!decomposition_) {
      finish(e, false, "skipped: census failed");
      return;
    }
    std::ostringstream d;
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      bool iso = false;
      try {
        const Graph core = suppress_degree_two(complement_subgraph(
            *decomposition_, i));
        iso = is_isomorphic(core, gadget_).has_value();
      } catch (const Error &) {
        iso = false;
      }
      ok = ok && iso;
      d << (i ? " " : "") << "C" << (i + 1) << "=" << yes_no(iso);
    }
    finish(e, ok, d.str());
  }

  // (d)
  void observation() {
    AuditEntry &e = begin('d', "attachment observation",
                          "the inner vertices of each 3-edge path between the "
                          "E_ij attachments lead to the two other 6-cycles");
    if (!decomposition_) {
      finish(e, false, "skipped: census failed");
      return;
    }
    int sizes_ok = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        sizes_ok += decomposition_->between[i][j].size() == 2;
    const bool obs = observation_audit(*decomposition_);
    std::ostringstream d;
    d << "classes_of_two=" << sizes_ok << "/6 observation=" << yes_no(obs);
    finish(e, obs && sizes_ok == 6, d.str());
  }

  // (e)
  void face_counting() {
    AuditEntry &e = begin('e', "face-counting bound",
                          "the gadget needs at least 2 edge deletions to "
                          "become planar, hence at least 2 crossings");
    const BoundReport b = euler_skewness_bound(g12_euler_preset());
    const bool planar = is_planar(gadget_);
    const SkewnessResult sk = skewness_exact(gadget_, 4, Seconds(60));
    const bool ok = b.deletions_lower_bound == 2 && !planar &&
                    sk.status == SkewnessResult::Status::Exact &&
                    sk.value >= 2;
    std::ostringstream d;
    d << "euler_bound=" << b.deletions_lower_bound
      << " planar=" << yes_no(planar) << " skewness=" << sk.value;
    finish(e, ok, d.str());
  }

  std::vector<Cycle> gadget_squares() const {
    return enumerate_cycles(gadget_, 4);
  }

  // (f)
  void cross_pairs_expensive() {
    AuditEntry &e = begin('f', "crossing 4-cycles cost three",
                          "no drawing of the gadget with at most 2 crossings "
                          "has two distinct 4-cycles crossing each other");
    const auto sq = gadget_squares();
    CrossingConstraints cons;
    for (std::size_t a = 0; a < sq.size(); ++a)
      for (std::size_t b = a + 1; b < sq.size(); ++b)
        cons.require_any.push_back(between_cycles(sq[a], sq[b]));
    const auto found = enumerate_realizable(gadget_, 2, cons);
    std::ostringstream d;
    d << "four_cycles=" << sq.size() << " realizable=" << found.size();
    finish(e, sq.size() == 3 && found.empty(), d.str());
  }

  // (g)
  void nesting() {
    AuditEntry &e = begin('g', "4-cycles must nest",
                          "every drawing of the gadget with at most 2 "
                          "crossings keeps the 4-cycles uncrossed and has one "
                          "4-cycle separating the other two");
    const auto sq = gadget_squares();
    const auto found = enumerate_realizable(gadget_, 2);
    int crossing_violations = 0, unseparated = 0;
    for (const Realization &r : found) {
      std::vector<CrossingPair> pairs;
      for (const Crossing &x : r.certificate.crossings)
        pairs.push_back(x.pair);
      bool crossed = false;
      for (std::size_t a = 0; a < sq.size(); ++a)
        for (std::size_t b = a + 1; b < sq.size(); ++b)
          for (const CrossingPair &p : pairs)
            crossed = crossed || between_cycles(sq[a], sq[b]).matches(p);
      if (crossed)
        ++crossing_violations;
      bool separated = false;
      for (std::size_t c = 0; c < sq.size() && !separated; ++c) {
        const auto walk = planarized_walk(gadget_, r.certificate, sq[c]);
        if (walk.empty())
          continue;
        std::vector<std::set<Vertex>> rest;
        for (std::size_t o = 0; o < sq.size(); ++o)
          if (o != c)
            rest.emplace_back(sq[o].vertices.begin(), sq[o].vertices.end());
        if (rest.size() == 2)
          separated = closed_walk_separates(r.embedding, walk, rest[0],
                                            rest[1]);
      }
      if (!separated)
        ++unseparated;
    }
    std::ostringstream d;
    d << "drawings=" << found.size()
      << " crossing_violations=" << crossing_violations
      << " unseparated=" << unseparated;
    finish(e,
           sq.size() == 3 && !found.empty() && crossing_violations == 0 &&
               unseparated == 0,
           d.str());
  }

  // (h)
  void upper_bound() {
    AuditEntry &e = begin('h', "six-crossing drawing of P4",
                          "P4 has a good drawing with at most 6 crossings");
    const DrawingCertificate ub =
        upper_bound_heuristic(p4_, opt_.heuristic_tries, opt_.seed);
    bool verified = false;
    try {
      verified = verify_certificate(p4_, ub).count == ub.count();
    } catch (const CertificateError &) {
      verified = false;
    }
    SolverOptions so;
    so.heuristic_tries = opt_.heuristic_tries;
    so.seed = opt_.seed;
    const DecideResult dr = cr_decide(p4_, 6, opt_.budget, {}, so);
    const bool sat = dr.status == DecideResult::Status::Sat;
    std::ostringstream d;
    d << "heuristic=" << ub.count() << " verified=" << yes_no(verified)
      << " decide(6)=" << to_string(dr.status);
    finish(e, verified && ub.count() <= 6 && sat, d.str());
  }

  // (i)
  void refutation() {
    AuditEntry &e = begin('i', "no five-crossing drawing of P4",
                          "every good drawing of P4 has at least 6 crossings");
    if (!decomposition_) {
      finish(e, false, "skipped: census failed");
      return;
    }
    SolverOptions so;
    so.seed = opt_.seed;
    const PancakeDecomposition &dec = *decomposition_;
    so.classify_pruned = [&dec](std::span<const CrossingPair> pairs) {
      return six_cycle_pair_class(dec, pairs);
    };
    const DecideResult dr = cr_decide(p4_, 5, opt_.budget, {}, so);
    std::ostringstream d;
    d << "decide(5)=" << to_string(dr.status) << " nodes=" << dr.stats.nodes;
    for (const auto &[cls, count] : dr.stats.pruned_by_class)
      d << " pruned_" << cls << "=" << count;
    switch (dr.status) {
    case DecideResult::Status::Unsat:
      d << " cr=6";
      finish(e, true, d.str());
      break;
    case DecideResult::Status::Sat:
      finish(e, false, d.str());
      break;
    case DecideResult::Status::Timeout:
      d << " bracket=[" << crossing_lower_bound(p4_) << ",6]";
      e.status = AuditStatus::Timeout;
      e.detail = d.str();
      break;
    }
  }

  const AuditOptions &opt_;
  Graph gadget_;
  Graph p4_ = pancake_graph(4);
  std::optional<PancakeDecomposition> decomposition_;
  AuditReport report_;
};

} // namespace

AuditReport run_audit_suite(const AuditOptions &options) {
  return Suite(options).run();
}

} // namespace crossnum
