#include <doctest.h>

#include "crossnum/pancake.hpp"
#include "crossnum/planarity.hpp"
#include "oracles.hpp"

using namespace crossnum;

namespace {

// K6 minus a perfect matching; poles 0 and 5, equator 1-2-3-4.
Graph octahedron() {
  Graph g = complete_graph(6);
  g.remove_edge(0, 5);
  g.remove_edge(1, 3);
  g.remove_edge(2, 4);
  return g;
}

} // namespace

TEST_CASE("Kuratowski graphs and small planar graphs") {
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
  CHECK_FALSE(is_planar(petersen_graph()));
  CHECK_FALSE(is_planar(g12_reference()));
  CHECK_FALSE(is_planar(pancake_graph(4)));
  CHECK(is_planar(complete_graph(4)));
  CHECK(is_planar(complete_bipartite(2, 5)));
  CHECK(is_planar(octahedron()));
  CHECK(is_planar(Graph(0)));
  CHECK(is_planar(Graph(1)));
  CHECK(is_planar(pancake_graph(3)));
}

TEST_CASE("witness kinds") {
  const KuratowskiWitness k5 = kuratowski_witness(complete_graph(5));
  CHECK(k5.kind == KuratowskiKind::K5);
  CHECK(k5.edges.size() == 10);
  CHECK(validate_witness(complete_graph(5), k5));

  const KuratowskiWitness k33 = kuratowski_witness(complete_bipartite(3, 3));
  CHECK(k33.kind == KuratowskiKind::K33);
  CHECK(k33.branch_vertices.size() == 6);
  CHECK(validate_witness(complete_bipartite(3, 3), k33));

  const KuratowskiWitness p = kuratowski_witness(petersen_graph());
  CHECK(validate_witness(petersen_graph(), p));

  CHECK_THROWS_AS(kuratowski_witness(complete_graph(4)), InvalidCall);
  CHECK_THROWS_AS(planar_embedding(complete_graph(5)), NonplanarError);
}

TEST_CASE("validate_witness rejects tampering") {
  const Graph g = complete_graph(5);
  KuratowskiWitness w = kuratowski_witness(g);
  KuratowskiWitness missing = w;
  missing.edges.pop_back();
  CHECK_FALSE(validate_witness(g, missing));
  KuratowskiWitness wrong_kind = w;
  wrong_kind.kind = KuratowskiKind::K33;
  CHECK_FALSE(validate_witness(g, wrong_kind));
  KuratowskiWitness foreign = w;
  foreign.edges.push_back(Edge(0, 7));
  CHECK_FALSE(validate_witness(g, foreign));
}

TEST_CASE("planarity matches the subdivision oracle on random graphs") {
  std::mt19937_64 rng(2024);
  int planar = 0, nonplanar = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 5 + t % 4;
    const Graph g = oracle::random_graph(rng, n, 0.35 + 0.4 * (t % 5) / 4.0);
    const bool expect = !oracle::has_kuratowski_subdivision(g);
    REQUIRE(is_planar(g) == expect);
    if (expect) {
      ++planar;
      const Embedding e = planar_embedding(g);
      CHECK(satisfies_euler(e));
    } else {
      ++nonplanar;
      CHECK(validate_witness(g, kuratowski_witness(g)));
    }
  }
  CHECK(planar > 20);
  CHECK(nonplanar > 20);
}

TEST_CASE("faces of embeddings") {
  const Embedding oct = planar_embedding(octahedron());
  CHECK(face_count(oct) == 8);
  for (const Face &f : faces(oct))
    CHECK(f.length() == 3);

  const Embedding tree = planar_embedding(path_graph(4));
  CHECK(face_count(tree) == 1);
  CHECK(faces(tree).front().length() == 6);

  // Isolated vertices each count as one face.
  CHECK(face_count(planar_embedding(Graph(3))) == 3);

  const Embedding two = planar_embedding(
      disjoint_union(cycle_graph(3), complete_graph(4)));
  CHECK(satisfies_euler(two));
  CHECK(face_count(two) == 2 + 4);
}

TEST_CASE("dart structure") {
  const Embedding e = planar_embedding(complete_graph(4));
  CHECK(e.dart_count() == 12);
  const FaceStructure fs = face_structure(e);
  for (Dart d = 0; d < e.dart_count(); ++d) {
    CHECK(e.reverse(e.reverse(d)) == d);
    CHECK(e.tail(e.next_in_face(d)) == e.head(d));
    CHECK(fs.face_of_dart[d] == fs.face_of_dart[e.next_in_face(d)]);
  }
}

TEST_CASE("embedding validation") {
  const Graph g = cycle_graph(3);
  CHECK_NOTHROW(Embedding(g, {{1, 2}, {0, 2}, {0, 1}}));
  CHECK_THROWS_AS(Embedding(g, {{1, 2}, {0, 2}}), InvalidInput);
  CHECK_THROWS_AS(Embedding(g, {{1, 1}, {0, 2}, {0, 1}}), InvalidInput);
}

TEST_CASE("cycle separation") {
  const Embedding e = planar_embedding(octahedron());
  const Cycle equator = Cycle::canonical({1, 2, 3, 4});
  CHECK(cycle_separates(e, equator, {0}, {5}));
  const Cycle face = Cycle::canonical({0, 1, 2});
  CHECK_FALSE(cycle_separates(e, face, {3}, {5}));
  // Walk form, not canonical, same curve.
  const std::vector<Vertex> walk{3, 2, 1, 4};
  CHECK(closed_walk_separates(e, walk, {0}, {5}));

  CHECK_THROWS_AS(cycle_separates(e, equator, {1}, {5}), InvalidInput);
  CHECK_THROWS_AS(cycle_separates(e, equator, {}, {5}), InvalidInput);
  CHECK_THROWS_AS(cycle_separates(e, Cycle::canonical({0, 5, 1}), {2}, {3}),
                  InvalidInput); // 0-5 is not an edge
  const std::vector<Vertex> repeated{1, 2, 1, 4};
  CHECK_THROWS_AS(closed_walk_separates(e, repeated, {0}, {5}), InvalidInput);
}

TEST_CASE("face boundaries separate nothing") {
  const Embedding e = planar_embedding(octahedron());
  for (const Face &f : faces(e)) {
    const Cycle c = Cycle::canonical(f.vertices);
    std::vector<Vertex> off;
    for (Vertex v = 0; v < 6; ++v)
      if (!c.contains(v))
        off.push_back(v);
    REQUIRE(off.size() == 3);
    CHECK_FALSE(cycle_separates(e, c, {off[0]}, {off[1]}));
    CHECK_FALSE(cycle_separates(e, c, {off[1]}, {off[2]}));
  }
}
