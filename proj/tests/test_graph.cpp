#include <doctest.h>

#include <sstream>

#include "crossnum/graph.hpp"
#include "crossnum/pancake.hpp"
#include "oracles.hpp"

using namespace crossnum;

TEST_CASE("edges are normalized and graphs reject bad edges") {
  Graph g(4);
  g.add_edge(3, 1);
  CHECK(g.edges() == std::vector<Edge>{Edge(1, 3)});
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK_THROWS_AS(g.add_edge(1, 3), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(2, 2), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(0, 4), InvalidInput);
  CHECK_FALSE(g.try_add_edge(3, 1));
  g.remove_edge(1, 3);
  CHECK(g.edge_count() == 0);
  CHECK_THROWS_AS(g.remove_edge(1, 3), InvalidInput);
}

TEST_CASE("named families have the expected sizes") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(cycle_graph(7).edge_count() == 7);
  CHECK(path_graph(4).edge_count() == 3);
  const Graph p = petersen_graph();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(girth(p) == 5);
  CHECK(enumerate_cycles(p, 5).size() == 12);
  CHECK(enumerate_cycles(p, 6).size() == 10);
}

TEST_CASE("girth") {
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(complete_bipartite(3, 3)) == 4);
  CHECK(girth(path_graph(6)) == kInfiniteGirth);
  CHECK(girth(Graph(0)) == kInfiniteGirth);
  CHECK(girth(pancake_graph(4)) == 6);
  CHECK(girth(g12_reference()) == 4);
}

TEST_CASE("cycle enumeration matches sequence counting") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 5;
    const Graph g = oracle::random_graph(rng, n, 0.6);
    const auto counts = count_cycles_up_to(g, n);
    for (int len = 3; len <= n; ++len) {
      const auto cycles = enumerate_cycles(g, len);
      CHECK(static_cast<long long>(cycles.size()) ==
            oracle::count_cycles(g, len));
      CHECK(counts[len] == static_cast<long long>(cycles.size()));
      for (const Cycle &c : cycles) {
        CHECK(c == Cycle::canonical(c.vertices));
        for (const Edge &e : c.edges())
          CHECK(g.has_edge(e));
      }
    }
  }
}

TEST_CASE("canonical cycles") {
  const Cycle c = Cycle::canonical({4, 2, 0, 7});
  CHECK(c.vertices == std::vector<Vertex>{0, 2, 4, 7});
  CHECK(Cycle::canonical({0, 7, 4, 2}) == c);
  CHECK(c.edges().size() == 4);
  CHECK(c.contains(7));
  CHECK_FALSE(c.contains(1));
}

TEST_CASE("twelve-vertex gadget census") {
  const Graph g = g12_reference();
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 18);
  for (int d : g.degree_sequence())
    CHECK(d == 3);
  const auto squares = enumerate_cycles(g, 4);
  REQUIRE(squares.size() == 3);
  CHECK(enumerate_cycles(g, 3).empty());
  CHECK(enumerate_cycles(g, 5).empty());
  std::set<Vertex> seen;
  for (const Cycle &c : squares)
    seen.insert(c.vertices.begin(), c.vertices.end());
  CHECK(seen.size() == 12);
}

TEST_CASE("isomorphism under random relabelling") {
  std::mt19937_64 rng(11);
  const std::vector<Graph> bases{petersen_graph(), pancake_graph(4),
                                 g12_reference(), complete_bipartite(3, 4)};
  for (const Graph &g : bases)
    for (int t = 0; t < 5; ++t) {
      const Graph h = oracle::shuffled(g, rng);
      const auto map = is_isomorphic(g, h);
      REQUIRE(map.has_value());
      CHECK(map->is_isomorphism(g, h));
      CHECK(relabel(g, *map) == h);
    }
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(rng, 7, 0.5);
    CHECK(is_isomorphic(g, oracle::shuffled(g, rng)).has_value());
  }
}

TEST_CASE("non-isomorphic graphs are told apart") {
  // Same degree sequence, different structure.
  Graph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
  CHECK_FALSE(is_isomorphic(cycle_graph(6), two_triangles).has_value());
  CHECK_FALSE(is_isomorphic(complete_graph(4), cycle_graph(4)).has_value());
  CHECK_FALSE(is_isomorphic(Graph(3), Graph(4)).has_value());
  // Moving one linking edge breaks the gadget.
  Graph mutated = g12_reference();
  mutated.remove_edge(1, 6);
  mutated.add_edge(1, 7);
  CHECK_FALSE(is_isomorphic(mutated, g12_reference()).has_value());
}

TEST_CASE("suppression of degree-two vertices") {
  SUBCASE("a subdivided K4 suppresses back to K4") {
    Graph g = complete_graph(4);
    g.remove_edge(0, 1);
    const Vertex s = g.add_vertex();
    g.add_edge(0, s);
    g.add_edge(s, 1);
    CHECK(is_isomorphic(suppress_degree_two(g), complete_graph(4)));
  }
  SUBCASE("a bare cycle is rejected") {
    CHECK_THROWS_AS(suppress_degree_two(cycle_graph(5)), PreconditionError);
  }
  SUBCASE("parallel edges are reported") {
    // theta graph with a length-2 and a length-1 path between 0 and 1
    const Graph g(4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}});
    CHECK_THROWS_AS(suppress_degree_two(g), NonSimpleResult);
  }
  SUBCASE("already cubic graphs are unchanged") {
    CHECK(suppress_degree_two(petersen_graph()) == petersen_graph());
  }
}

TEST_CASE("induced and edge subgraphs") {
  const Graph k5 = complete_graph(5);
  const Graph k4 = induced_subgraph(k5, {2});
  CHECK(k4 == complete_graph(4));
  const std::vector<Edge> kept{Edge(0, 1), Edge(3, 4)};
  const Graph sub = edge_subgraph(k5, kept);
  CHECK(sub.vertex_count() == 5);
  CHECK(sub.edges() == kept);
  CHECK_THROWS_AS(edge_subgraph(cycle_graph(4), kept), InvalidInput);
}

TEST_CASE("components") {
  std::vector<int> comp;
  CHECK(connected_components(disjoint_union(cycle_graph(3), path_graph(2)),
                             comp) == 2);
  CHECK(comp[0] == comp[2]);
  CHECK(comp[0] != comp[3]);
  CHECK(connected_components(Graph(3), comp) == 3);
}

TEST_CASE(".gr round trip") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Graph g = oracle::random_graph(rng, 6 + t % 4, 0.4);
    if (t % 3 == 0)
      g.set_label(0, "root");
    std::istringstream in(to_gr_string(g));
    const Graph back = read_graph(in);
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
    CHECK(to_gr_string(back) == to_gr_string(g));
  }
}

TEST_CASE(".gr parse errors name the line") {
  auto fails_at = [](const std::string &text, const std::string &line) {
    std::istringstream in(text);
    try {
      read_graph(in);
    } catch (const InvalidInput &e) {
      return std::string(e.what()).find("line " + line) != std::string::npos;
    }
    return false;
  };
  CHECK(fails_at("p 3 1\ne 0 5\n", "2"));
  CHECK(fails_at("p 3 2\ne 0 1\ne 0 1\n", "3"));
  CHECK(fails_at("p 3 1\nc note\ne 1 1\n", "3"));
  CHECK(fails_at("p 3 2\ne 1 2\ne 0 1\n", "3")); // unsorted
  CHECK(fails_at("p 3 1\nx 0 1\n", "2"));
  std::istringstream short_in("p 3 2\ne 0 1\n");
  CHECK_THROWS_AS(read_graph(short_in), InvalidInput);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_graph(empty), InvalidInput);
}

TEST_CASE("checksum depends only on n and the edge list") {
  Graph a = cycle_graph(5), b = cycle_graph(5);
  b.set_label(1, "x");
  CHECK(a.checksum() == b.checksum());
  b.remove_edge(0, 1);
  CHECK(a.checksum() != b.checksum());
  CHECK(Graph(4).checksum() != Graph(5).checksum());
}
