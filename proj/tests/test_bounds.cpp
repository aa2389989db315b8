#include <doctest.h>

#include "crossnum/bounds.hpp"
#include "crossnum/pancake.hpp"
#include "oracles.hpp"

using namespace crossnum;

namespace {

bool trace_has(const BoundReport &r, const std::string &needle) {
  return r.trace().find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("face counting on the gadget") {
  const BoundReport r = euler_skewness_bound(g12_euler_preset());
  CHECK(r.deletions_lower_bound == 2);
  CHECK(r.face_count_at_bound == 6);
  CHECK_FALSE(r.warning);
  CHECK(trace_has(r, "p = 8 - m"));
  CHECK(trace_has(r, "4m >= 6"));
  CHECK(trace_has(r, "m >= 2"));
}

TEST_CASE("face counting reproduces classic skewness values") {
  using In = EulerCountInput;
  // triangles everywhere: K5 and K6
  CHECK(euler_skewness_bound(In{5, 10, In::kUnlimited, 3, 4})
            .deletions_lower_bound == 1);
  CHECK(euler_skewness_bound(In{6, 15, In::kUnlimited, 3, 4})
            .deletions_lower_bound == 3);
  // bipartite: faces of length >= 4
  CHECK(euler_skewness_bound(In{6, 9, In::kUnlimited, 4, 5})
            .deletions_lower_bound == 1);
  // Petersen: girth 5
  CHECK(euler_skewness_bound(In{10, 15, In::kUnlimited, 5, 6})
            .deletions_lower_bound == 2);
}

TEST_CASE("face counting input checks") {
  using In = EulerCountInput;
  CHECK_THROWS_AS(euler_skewness_bound(In{2, 1, 0, 3, 4}), InvalidInput);
  CHECK_THROWS_AS(euler_skewness_bound(In{12, 18, 3, 6, 4}), InvalidInput);
  CHECK_THROWS_AS(euler_skewness_bound(In{12, 18, -1, 4, 6}), InvalidInput);
  // A forest has p <= 0: not a nonplanar graph, bound 0 with a warning.
  const BoundReport tree = euler_skewness_bound(In{5, 3, 0, 3, 4});
  CHECK(tree.warning);
  CHECK(tree.deletions_lower_bound == 0);
}

TEST_CASE("census bound on named graphs") {
  CHECK(cycle_census_bound(complete_graph(4)) == 0);
  CHECK(cycle_census_bound(complete_graph(5)) == 1);
  CHECK(cycle_census_bound(complete_graph(6)) == 3);
  CHECK(cycle_census_bound(complete_bipartite(3, 3)) == 1);
  CHECK(cycle_census_bound(petersen_graph()) == 2);
  CHECK(cycle_census_bound(g12_reference()) == 2);
  CHECK(cycle_census_bound(pancake_graph(4)) == 5);
  CHECK(cycle_census_bound(path_graph(5)) == 0);
  // Components add up.
  CHECK(cycle_census_bound(disjoint_union(complete_graph(5),
                                          complete_bipartite(3, 3))) == 2);
}

TEST_CASE("bounds never exceed brute-force skewness") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 120; ++t) {
    const int n = 5 + t % 4;
    const Graph g = oracle::random_graph(rng, n, 0.55 + 0.1 * (t % 4));
    if (g.edge_count() > 20)
      continue;
    const int truth = oracle::skewness(g, 6);
    REQUIRE(truth <= 6);
    CHECK(cycle_census_bound(g) <= truth);
    for (int extra : {1, 2, 5})
      CHECK(cycle_census_bound(g, extra) <= truth);
    CHECK(kuratowski_packing(g) <= truth);
  }
}

TEST_CASE("exact skewness matches subset search, with and without pruning") {
  std::mt19937_64 rng(5);
  const SkewnessOptions all{};
  const SkewnessOptions none{false, false};
  const SkewnessOptions census_only{true, false};
  const SkewnessOptions packing_only{false, true};
  for (int t = 0; t < 80; ++t) {
    const Graph g = oracle::random_graph(rng, 6 + t % 3, 0.7);
    const int truth = oracle::skewness(g, 6);
    for (const SkewnessOptions &o : {all, none, census_only, packing_only}) {
      const SkewnessResult r = skewness_exact(g, 6, Seconds(30), o);
      REQUIRE(r.status == SkewnessResult::Status::Exact);
      CHECK(r.value == truth);
      CHECK(static_cast<int>(r.deletion_set.size()) == r.value);
      Graph h = g;
      for (const Edge &e : r.deletion_set)
        h.remove_edge(e.u, e.v);
      CHECK(oracle::boost_planar(h.vertex_count(), h.edges()));
    }
  }
}

TEST_CASE("skewness of named graphs") {
  CHECK(skewness_exact(complete_graph(4), 3, Seconds(10)).value == 0);
  CHECK(skewness_exact(complete_graph(5), 3, Seconds(10)).value == 1);
  CHECK(skewness_exact(complete_graph(6), 4, Seconds(10)).value == 3);
  CHECK(skewness_exact(petersen_graph(), 3, Seconds(10)).value == 2);
  CHECK(skewness_exact(g12_reference(), 3, Seconds(10)).value == 2);
  const SkewnessResult capped = skewness_exact(complete_graph(6), 2, Seconds(10));
  CHECK(capped.status == SkewnessResult::Status::AboveMax);
  CHECK(capped.value == 3);
}

TEST_CASE("Kuratowski packing witnesses are disjoint and valid") {
  const Graph g = disjoint_union(complete_graph(5), complete_bipartite(3, 3));
  const auto ws = kuratowski_packing_witnesses(g);
  CHECK(ws.size() == 2);
  std::set<Edge> used;
  for (const KuratowskiWitness &w : ws) {
    CHECK(validate_witness(g, w));
    for (const Edge &e : w.edges)
      CHECK(used.insert(e).second);
  }
  CHECK(kuratowski_packing(complete_graph(4)) == 0);
  CHECK(kuratowski_packing(complete_graph(6)) >= 1);
}
