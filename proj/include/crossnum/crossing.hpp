#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "crossnum/budget.hpp"
#include "crossnum/graph.hpp"
#include "crossnum/planarity.hpp"

namespace crossnum {

/// Unordered pair of independent edges, stored with e1 < e2.
struct CrossingPair {
  Edge e1, e2;

  CrossingPair() = default;
  CrossingPair(Edge a, Edge b) : e1(a < b ? a : b), e2(a < b ? b : a) {}

  auto operator<=>(const CrossingPair &) const = default;
};

struct Crossing {
  int id = 0;
  CrossingPair pair;
};

/// Identifies the graph a certificate was produced for.
struct HostId {
  int n = 0;
  int m = 0;
  std::uint64_t checksum = 0;

  static HostId of(const Graph &g) {
    return HostId{g.vertex_count(), g.edge_count(), g.checksum()};
  }
  auto operator<=>(const HostId &) const = default;
};

/// Combinatorial description of a good drawing: which edge pairs cross and,
/// for every edge crossed at least twice, the order of its crossings
/// starting from its lower-numbered endpoint.
struct DrawingCertificate {
  HostId host;
  std::vector<Crossing> crossings;
  std::map<Edge, std::vector<int>> orders;

  int count() const { return static_cast<int>(crossings.size()); }

  /// Crossing ids along `e` from its lower endpoint.
  std::vector<int> crossings_on(const Edge &e) const;

  /// Relabels ids 0..k-1 in pair order and drops single-entry orders.
  DrawingCertificate canonical() const;
};

enum class Violation {
  HostMismatch,
  UnknownEdge,
  SelfPair,
  AdjacentPair,
  DuplicatePair,
  DuplicateId,
  OrderMissing,
  OrderUnknownId,
  OrderInconsistent,
  NonplanarPlanarization,
};

std::string to_string(Violation v);

struct ViolationDetail {
  Violation kind;
  std::string detail;
};

/// Certificate rejected; carries every violation found.
class CertificateError : public Error {
public:
  explicit CertificateError(std::vector<ViolationDetail> violations);
  const std::vector<ViolationDetail> &violations() const {
    return violations_;
  }
  bool has(Violation v) const;

private:
  std::vector<ViolationDetail> violations_;
};

struct CrossingReport {
  int count = 0;
  std::map<Edge, int> per_edge; // only edges crossed at least once
  std::set<Edge> clean_edges;
};

/// Structural good-drawing checks only; empty when the certificate is sound.
std::vector<ViolationDetail> structural_violations(const Graph &g,
                                                   const DrawingCertificate &c);

/// Graph with every crossing replaced by a degree-4 vertex.
///
/// Vertex n + i is the dummy for the i-th entry of `crossings`. `chains[j]`
/// lists the planarized path of the j-th edge of the host, from its lower
/// endpoint.
struct Planarization {
  Graph graph;
  int original_vertices = 0;
  std::vector<std::vector<Vertex>> chains;
};

Planarization planarize_detailed(const Graph &g, const DrawingCertificate &c);
Graph planarize(const Graph &g, const DrawingCertificate &c);

/// Throws CertificateError listing all violations.
CrossingReport verify_certificate(const Graph &g, const DrawingCertificate &c);

/// Named disjoint edge classes.
struct EdgeClassPartition {
  std::vector<std::string> names;
  std::vector<std::set<Edge>> classes;

  void add(std::string name, std::set<Edge> edges);
};

struct AccountTable {
  std::vector<std::string> names;
  std::vector<int> within;               // crossings inside class i
  std::vector<std::vector<int>> between; // crossings between classes i and j
  int unclassified = 0;                  // crossings touching no class pair
  int total = 0;

  /// nu(A u B) computed directly from the certificate.
  int union_count(int a, int b) const;
};

/// Within- and cross-class crossing counts; throws InvalidInput when the
/// classes overlap.
AccountTable account(const DrawingCertificate &c,
                     const EdgeClassPartition &parts);

/// Counts crossings with both edges in `a`, or one edge in each of `a`, `b`.
int count_within(const DrawingCertificate &c, const std::set<Edge> &a);
int count_between(const DrawingCertificate &c, const std::set<Edge> &a,
                  const std::set<Edge> &b);

/// "A crossing between an edge of `a` and an edge of `b`".
struct ClassPairRule {
  std::set<Edge> a, b;
  bool matches(const CrossingPair &p) const;
};

struct CrossingConstraints {
  std::vector<ClassPairRule> require_any; // at least one crossing matches one
  std::vector<ClassPairRule> forbid;      // no crossing matches any

  bool empty() const { return require_any.empty() && forbid.empty(); }
  bool forbids(const CrossingPair &p) const;
  bool requirement_met(std::span<const CrossingPair> pairs) const;
  bool allows(std::span<const CrossingPair> pairs) const;
};

struct SolverOptions {
  bool census_prune = true;      // face-counting bound on the planarization
  bool subgraph_prune = true;    // bound on g minus already-crossed edges
  bool packing_prune = true;     // disjoint Kuratowski packing
  bool sibling_exclusion = true; // later siblings forbid earlier branches
  int heuristic_tries = 0;       // upper-bound attempts before branching
  std::uint64_t seed = 1;

  /// Optional label for pruned branches; tallied in SolverStats.
  std::function<std::string(std::span<const CrossingPair>)> classify_pruned;
};

struct SolverStats {
  long long nodes = 0;
  long long planarity_tests = 0;
  long long pruned_census = 0;
  long long pruned_subgraph = 0;
  long long pruned_packing = 0;
  long long pruned_exclusion = 0;
  std::map<std::string, long long> pruned_by_class;
};

struct DecideResult {
  enum class Status { Sat, Unsat, Timeout };
  Status status = Status::Timeout;
  std::optional<DrawingCertificate> certificate; // set iff Sat
  SolverStats stats;
};

std::string to_string(DecideResult::Status s);

/// Does some good drawing of `g` with at most `k` crossings satisfy the
/// constraints? Exhaustive over crossing sets and per-edge orders.
DecideResult cr_decide(const Graph &g, int k, Seconds budget,
                       const CrossingConstraints &constraints = {},
                       const SolverOptions &options = {});

struct ExactResult {
  enum class Status { Exact, Bracket };
  Status status = Status::Bracket;
  int lower = 0;
  int upper = 0; // equals lower when exact
  std::optional<DrawingCertificate> certificate; // witness for `upper`
  bool timed_out = false;
};

/// Least k with a drawing, or the proven bracket when the budget or k_max
/// runs out. Never returns a guess: `lower` is refuted below, `upper` is
/// witnessed.
ExactResult cr_exact(const Graph &g, int k_max, Seconds budget,
                     const SolverOptions &options = {});

/// Lower bound on cr(g) from the cheap bounds (census and packing).
int crossing_lower_bound(const Graph &g);

/// Thrown by enumerate_realizable when the raw search space is too large.
class SearchTooLarge : public Error {
public:
  using Error::Error;
};

struct Realization {
  DrawingCertificate certificate;
  Embedding embedding; // embedding of the planarization
};

/// Every good-drawing configuration with at most `k` crossings whose
/// planarization is planar, paired with one embedding of it.
std::vector<Realization>
enumerate_realizable(const Graph &g, int k,
                     const CrossingConstraints &constraints = {},
                     long long ceiling = 2'000'000);

/// Verified certificate from planar-subgraph extraction followed by
/// shortest dual-path edge insertion, repeated over `tries` random orders.
DrawingCertificate upper_bound_heuristic(const Graph &g, int tries,
                                         std::uint64_t seed);

// ".crt" text format.
DrawingCertificate read_certificate(std::istream &in);
DrawingCertificate read_certificate_file(const std::string &path);
void write_certificate(std::ostream &out, const DrawingCertificate &c);

} // namespace crossnum
