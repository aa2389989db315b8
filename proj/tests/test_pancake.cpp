#include <doctest.h>

#include "crossnum/audit.hpp"
#include "crossnum/pancake.hpp"
#include "oracles.hpp"

using namespace crossnum;

TEST_CASE("permutations and prefix reversals") {
  const Permutation p({3, 1, 4, 2});
  CHECK(p.flip(2).to_string() == "1342");
  CHECK(p.flip(4).to_string() == "2413");
  CHECK(p.flip(3).flip(3) == p);
  CHECK_THROWS_AS(p.flip(1), InvalidInput);
  CHECK_THROWS_AS(p.flip(5), InvalidInput);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidInput);
}

TEST_CASE("pancake graph sizes") {
  const Graph p2 = pancake_graph(2);
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.edge_count() == 1);
  const Graph p3 = pancake_graph(3);
  CHECK(p3.vertex_count() == 6);
  CHECK(p3.edge_count() == 6);
  CHECK(enumerate_cycles(p3, 6).size() == 1);
  const Graph p4 = pancake_graph(4);
  CHECK(p4.vertex_count() == 24);
  CHECK(p4.edge_count() == 36);
  for (int d : p4.degree_sequence())
    CHECK(d == 3);
  CHECK(p4.label(0) == "1234");
  CHECK(p4.label(23) == "4321");
  const Graph p5 = pancake_graph(5);
  CHECK(p5.vertex_count() == 120);
  CHECK(p5.edge_count() == 240);
  CHECK_THROWS_AS(pancake_graph(1), InvalidInput);
  CHECK_THROWS_AS(pancake_graph(9), InvalidInput);
}

TEST_CASE("pancake edges are exactly the prefix reversals") {
  const Graph p4 = pancake_graph(4);
  for (const Edge &e : p4.edges()) {
    const std::string a = *p4.label(e.u), b = *p4.label(e.v);
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (a[i] != b[i])
        k = i + 1;
    const std::string flipped =
        std::string(a.rbegin() + (4 - k), a.rend()) + a.substr(k);
    CHECK(flipped == b);
  }
}

TEST_CASE("the four six-cycles of P4") {
  const Graph p4 = pancake_graph(4);
  CHECK(enumerate_cycles(p4, 6).size() == 4);
  const PancakeDecomposition d = decompose(p4);
  int covered = 0;
  for (int i = 0; i < 4; ++i) {
    CHECK(d.cycle_edges[i].size() == 6);
    CHECK(d.vertex_class[i].size() == 6);
    covered += static_cast<int>(d.vertex_class[i].size());
    // Each 6-cycle fixes the last symbol.
    const char last = p4.label(d.cycles[i].vertices[0])->back();
    for (Vertex v : d.cycles[i].vertices)
      CHECK(p4.label(v)->back() == last);
  }
  CHECK(covered == 24);
  int tiled = 0;
  for (int i = 0; i < 4; ++i) {
    tiled += 6;
    for (int j = i + 1; j < 4; ++j) {
      CHECK(d.between[i][j].size() == 2);
      tiled += 2;
    }
  }
  CHECK(tiled == 36);
  CHECK(d.complement_class(0).size() == 24);
  CHECK(d.closed_class(0).size() == 12);
}

TEST_CASE("decomposition is invariant under relabelling") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 5; ++t) {
    const Graph h = oracle::shuffled(pancake_graph(4), rng);
    const PancakeDecomposition d = decompose(h);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j)
          CHECK(d.between[i][j].size() == 2);
    CHECK(observation_audit(d));
    for (int i = 0; i < 4; ++i)
      CHECK(is_isomorphic(suppress_degree_two(complement_subgraph(d, i)),
                          g12_reference()));
  }
}

TEST_CASE("decompose rejects other graphs") {
  CHECK_THROWS_AS(decompose(pancake_graph(3)), InvalidInput);
  CHECK_THROWS_AS(decompose(g12_reference()), InvalidInput);
  // Same size and degree sequence, different graph: 24-vertex prism graph.
  Graph prism(24);
  for (int i = 0; i < 12; ++i) {
    prism.add_edge(i, (i + 1) % 12);
    prism.add_edge(12 + i, 12 + (i + 1) % 12);
    prism.add_edge(i, 12 + i);
  }
  CHECK_THROWS_AS(decompose(prism), InvalidInput);
}

TEST_CASE("every complement suppresses to the gadget") {
  const PancakeDecomposition d = decompose(pancake_graph(4));
  for (int i = 0; i < 4; ++i) {
    const Graph sub = complement_subgraph(d, i);
    CHECK(sub.vertex_count() == 18);
    CHECK(sub.edge_count() == 24);
    const Graph core = suppress_degree_two(sub);
    CHECK(core.vertex_count() == 12);
    CHECK(core.edge_count() == 18);
    CHECK(is_isomorphic(core, g12_reference()));
  }
}

TEST_CASE("observation holds, and fails on a tampered decomposition") {
  const Graph p4 = pancake_graph(4);
  const PancakeDecomposition d = decompose(p4);
  CHECK(observation_audit(d));

  // Swap an E_{0,1} edge against an E_{0,2} edge: rewire the host so the
  // cycles survive but the attachments move.
  const Edge a = *d.between[0][1].begin();
  const Edge b = *d.between[0][2].begin();
  const Vertex a0 = d.owner(a.u) == 0 ? a.u : a.v, a1 = a.other(a0);
  const Vertex b0 = d.owner(b.u) == 0 ? b.u : b.v, b2 = b.other(b0);
  Graph h = p4;
  h.remove_edge(a.u, a.v);
  h.remove_edge(b.u, b.v);
  h.add_edge(a0, b2);
  h.add_edge(b0, a1);
  const PancakeDecomposition bad = make_decomposition(h, d.cycles);
  CHECK_FALSE(observation_audit(bad));
}

TEST_CASE("make_decomposition input checks") {
  const PancakeDecomposition d = decompose(pancake_graph(4));
  std::array<Cycle, 4> overlapping = d.cycles;
  overlapping[1] = overlapping[0];
  CHECK_THROWS_AS(make_decomposition(d.graph, overlapping), InvalidInput);
}

TEST_CASE("six-cycle pair classes") {
  const PancakeDecomposition d = decompose(pancake_graph(4));
  const Edge e0 = *d.cycle_edges[0].begin();
  Edge e1;
  for (const Edge &e : d.cycle_edges[1])
    if (!e.shares_endpoint(e0))
      e1 = e;
  Edge e2 = *d.cycle_edges[2].begin();
  const std::vector<CrossingPair> none{};
  CHECK(six_cycle_pair_class(d, none) == "none");
  const std::vector<CrossingPair> one{CrossingPair(e0, e1)};
  CHECK(six_cycle_pair_class(d, one) == "one");
  const std::vector<CrossingPair> two{CrossingPair(e0, e1),
                                      CrossingPair(e0, e2)};
  CHECK(six_cycle_pair_class(d, two) == "two+");
}
