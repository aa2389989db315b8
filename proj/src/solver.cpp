#include <algorithm>
#include <stdexcept>

#include "crossnum/bounds.hpp"
#include "crossnum/crossing.hpp"
#include "drawing_state.hpp"

namespace crossnum {

std::string to_string(DecideResult::Status s) {
  switch (s) {
  case DecideResult::Status::Sat: return "SAT";
  case DecideResult::Status::Unsat: return "UNSAT";
  case DecideResult::Status::Timeout: return "TIMEOUT";
  }
  return "?";
}

namespace {

constexpr int kStart = -1;
constexpr int kEnd = -2;

// A crossing of `e` and `f` inside the given gap intervals, already explored
// by an earlier sibling. Interval ends are crossing ids or kStart/kEnd.
struct Exclusion {
  int e, f;
  int e_lo, e_hi, f_lo, f_hi;
};

struct Candidate {
  int e, gap_e, f, gap_f; // e < f
  auto operator<=>(const Candidate &) const = default;
};

// Branch and bound over planarizations. At each node the current crossings
// are fixed together with their positions along the edges. If the
// planarization is nonplanar, any completion must add a crossing between two
// segments of one of its Kuratowski subdivisions, so the node branches on
// exactly those segment pairs.
class PlanarizationSearch {
public:
  PlanarizationSearch(const Graph &g, const CrossingConstraints &cons,
                      const SolverOptions &opt, const Deadline &deadline,
                      SolverStats &stats)
      : g_(g), cons_(cons), opt_(opt), poll_(deadline, 1), stats_(stats),
        state_(g) {
    const int m = g.edge_count();
    const auto &edges = g.edges();
    crossable_.assign(m, std::vector<char>(m, 0));
    required_.assign(m, std::vector<char>(m, 0));
    for (int e = 0; e < m; ++e)
      for (int f = e + 1; f < m; ++f) {
        if (edges[e].shares_endpoint(edges[f]))
          continue;
        const CrossingPair p(edges[e], edges[f]);
        if (cons.forbids(p))
          continue;
        crossable_[e][f] = 1;
        for (const ClassPairRule &r : cons.require_any)
          if (r.matches(p))
            required_[e][f] = 1;
      }
    used_.assign(m, std::vector<char>(m, 0));
  }

  bool search(int remaining) {
    if (poll_.expired())
      return false;
    ++stats_.nodes;
    const detail::BuiltPlanarization built = state_.build();
    ++stats_.planarity_tests;
    const bool planar = is_planar(built.graph);

    std::vector<Candidate> cands;
    if (planar) {
      if (requirement_met()) {
        found_ = state_.certificate();
        return true;
      }
      if (remaining == 0)
        return dead_end();
      cands = required_candidates();
    } else {
      if (remaining == 0)
        return dead_end();
      if (pruned(built.graph, remaining))
        return false;
      cands = witness_candidates(built);
    }

    const std::size_t excl_mark = exclusions_.size();
    bool found = false;
    for (const Candidate &c : cands) {
      if (excluded(c)) {
        ++stats_.pruned_exclusion;
        continue;
      }
      const Exclusion x = interval_of(c);
      state_.add_crossing(c.e, c.gap_e, c.f, c.gap_f);
      used_[c.e][c.f] = 1;
      found = search(remaining - 1);
      used_[c.e][c.f] = 0;
      if (found)
        break;
      state_.pop_crossing();
      if (poll_.hit())
        break;
      if (opt_.sibling_exclusion)
        exclusions_.push_back(x);
    }
    exclusions_.resize(excl_mark);
    return found;
  }

  bool timed_out() const { return poll_.hit(); }
  const std::optional<DrawingCertificate> &found() const { return found_; }

private:
  std::vector<CrossingPair> current_pairs() const {
    std::vector<CrossingPair> out;
    const auto &edges = g_.edges();
    for (const auto &[e, f] : state_.crossings())
      out.emplace_back(edges[e], edges[f]);
    return out;
  }

  bool requirement_met() const {
    if (cons_.require_any.empty())
      return true;
    return cons_.requirement_met(current_pairs());
  }

  bool dead_end() {
    tally();
    return false;
  }

  void tally() {
    if (opt_.classify_pruned)
      ++stats_.pruned_by_class[opt_.classify_pruned(current_pairs())];
  }

  bool pruned(const Graph &planarized, int remaining) {
    if (opt_.census_prune && cycle_census_bound(planarized) > remaining) {
      ++stats_.pruned_census;
      tally();
      return true;
    }
    if (opt_.subgraph_prune && state_.crossing_count() > 0) {
      // Crossings still to come are the only ones among untouched edges.
      std::vector<char> touched(g_.edge_count(), 0);
      for (const auto &[e, f] : state_.crossings())
        touched[e] = touched[f] = 1;
      std::vector<Edge> rest;
      for (int i = 0; i < g_.edge_count(); ++i)
        if (!touched[i])
          rest.push_back(g_.edges()[i]);
      if (cycle_census_bound(Graph(g_.vertex_count(), rest)) > remaining) {
        ++stats_.pruned_subgraph;
        tally();
        return true;
      }
    }
    if (opt_.packing_prune && remaining <= 2 &&
        kuratowski_packing(planarized) > remaining) {
      ++stats_.pruned_packing;
      tally();
      return true;
    }
    return false;
  }

  bool pair_open(int e, int f) const {
    return crossable_[e][f] && !used_[e][f];
  }

  std::vector<Candidate>
  witness_candidates(const detail::BuiltPlanarization &built) const {
    const KuratowskiWitness w = kuratowski_witness(built.graph);
    std::vector<detail::SegmentTag> segs;
    segs.reserve(w.edges.size());
    for (const Edge &ed : w.edges)
      segs.push_back(built.tag[built.graph.edge_index(ed)]);
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < segs.size(); ++i)
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        detail::SegmentTag a = segs[i], b = segs[j];
        if (a.edge == b.edge)
          continue;
        if (a.edge > b.edge)
          std::swap(a, b);
        if (pair_open(a.edge, b.edge))
          out.push_back({a.edge, a.gap, b.edge, b.gap});
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Candidate> required_candidates() const {
    std::vector<Candidate> out;
    const int m = g_.edge_count();
    for (int e = 0; e < m; ++e)
      for (int f = e + 1; f < m; ++f) {
        if (!required_[e][f] || !pair_open(e, f))
          continue;
        const int ge = static_cast<int>(state_.order(e).size());
        const int gf = static_cast<int>(state_.order(f).size());
        for (int a = 0; a <= ge; ++a)
          for (int b = 0; b <= gf; ++b)
            out.push_back({e, a, f, b});
      }
    return out;
  }

  Exclusion interval_of(const Candidate &c) const {
    auto lo = [&](int edge, int gap) {
      return gap == 0 ? kStart : state_.order(edge)[gap - 1];
    };
    auto hi = [&](int edge, int gap) {
      const auto &ord = state_.order(edge);
      return gap == static_cast<int>(ord.size()) ? kEnd : ord[gap];
    };
    return {c.e, c.f, lo(c.e, c.gap_e), hi(c.e, c.gap_e), lo(c.f, c.gap_f),
            hi(c.f, c.gap_f)};
  }

  bool inside(int edge, int gap, int lo, int hi) const {
    const auto &ord = state_.order(edge);
    auto pos = [&](int id) -> int {
      if (id == kStart)
        return -1;
      if (id == kEnd)
        return static_cast<int>(ord.size());
      return static_cast<int>(std::find(ord.begin(), ord.end(), id) -
                              ord.begin());
    };
    return pos(lo) <= gap - 1 && gap <= pos(hi);
  }

  bool excluded(const Candidate &c) const {
    for (const Exclusion &x : exclusions_)
      if (x.e == c.e && x.f == c.f && inside(c.e, c.gap_e, x.e_lo, x.e_hi) &&
          inside(c.f, c.gap_f, x.f_lo, x.f_hi))
        return true;
    return false;
  }

  const Graph &g_;
  const CrossingConstraints &cons_;
  const SolverOptions &opt_;
  DeadlinePoller poll_;
  SolverStats &stats_;
  detail::DrawingState state_;
  std::vector<std::vector<char>> crossable_, required_, used_;
  std::vector<Exclusion> exclusions_;
  std::optional<DrawingCertificate> found_;
};

} // namespace

DecideResult cr_decide(const Graph &g, int k, Seconds budget,
                       const CrossingConstraints &constraints,
                       const SolverOptions &options) {
  if (k < 0)
    throw InvalidInput("k must be non-negative");
  const Deadline deadline = Deadline::after(budget);
  DecideResult result;

  if (options.heuristic_tries > 0 && constraints.empty()) {
    DrawingCertificate ub =
        upper_bound_heuristic(g, options.heuristic_tries, options.seed);
    if (ub.count() <= k) {
      verify_certificate(g, ub);
      result.status = DecideResult::Status::Sat;
      result.certificate = std::move(ub);
      return result;
    }
  }

  PlanarizationSearch search(g, constraints, options, deadline, result.stats);
  if (search.search(k)) {
    DrawingCertificate cert = search.found()->canonical();
    const CrossingReport rep = verify_certificate(g, cert);
    if (rep.count > k || !constraints.allows([&] {
          std::vector<CrossingPair> ps;
          for (const Crossing &x : cert.crossings)
            ps.push_back(x.pair);
          return ps;
        }()))
      throw Error("internal: solver produced an invalid witness");
    result.status = DecideResult::Status::Sat;
    result.certificate = std::move(cert);
  } else {
    result.status = search.timed_out() ? DecideResult::Status::Timeout
                                       : DecideResult::Status::Unsat;
  }
  return result;
}

int crossing_lower_bound(const Graph &g) {
  return std::max(cycle_census_bound(g), kuratowski_packing(g));
}

ExactResult cr_exact(const Graph &g, int k_max, Seconds budget,
                     const SolverOptions &options) {
  if (k_max < 0)
    throw InvalidInput("k_max must be non-negative");
  const Deadline deadline = Deadline::after(budget);
  const auto start = Deadline::Clock::now();
  ExactResult r;
  r.lower = crossing_lower_bound(g);
  const int tries = options.heuristic_tries > 0 ? options.heuristic_tries : 256;
  DrawingCertificate ub = upper_bound_heuristic(g, tries, options.seed);
  r.upper = ub.count();
  r.certificate = ub;

  SolverOptions inner = options;
  inner.heuristic_tries = 0;
  for (int k = r.lower; k < r.upper && k <= k_max; ++k) {
    const Seconds left =
        budget - std::chrono::duration_cast<Seconds>(Deadline::Clock::now() -
                                                     start);
    if (deadline.expired() || left.count() <= 0) {
      r.timed_out = true;
      break;
    }
    DecideResult d = cr_decide(g, k, left, {}, inner);
    if (d.status == DecideResult::Status::Sat) {
      r.upper = k;
      r.certificate = std::move(d.certificate);
      break;
    }
    if (d.status == DecideResult::Status::Timeout) {
      r.timed_out = true;
      break;
    }
    r.lower = k + 1;
  }
  if (r.lower > r.upper)
    throw std::logic_error("lower bound exceeds a verified drawing");
  if (r.lower == r.upper) {
    r.status = ExactResult::Status::Exact;
  } else {
    r.status = ExactResult::Status::Bracket;
  }
  return r;
}

} // namespace crossnum
