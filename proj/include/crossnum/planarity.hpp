#pragma once

#include <set>
#include <string>
#include <vector>

#include "crossnum/graph.hpp"

namespace crossnum {

enum class KuratowskiKind { K5, K33 };

std::string to_string(KuratowskiKind kind);

/// Subdivision of K5 or K3,3 inside a host graph.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::K5;
  std::set<Vertex> branch_vertices;
  std::vector<Edge> edges; // sorted edges of the host graph
};

/// Thrown by planar_embedding on nonplanar input.
class NonplanarError : public Error {
public:
  explicit NonplanarError(KuratowskiWitness w);
  const KuratowskiWitness &witness() const { return witness_; }

private:
  KuratowskiWitness witness_;
};

/// Calling an operation that needs a nonplanar graph on a planar one.
class InvalidCall : public Error {
public:
  using Error::Error;
};

/// A dart is a directed edge; index = dart_offset(tail) + position of the
/// head in the tail's rotation.
using Dart = int;

/// Rotation system of a planar graph: for each vertex the cyclic order of
/// its neighbors. Immutable once built.
class Embedding {
public:
  Embedding(Graph g, std::vector<std::vector<Vertex>> rotation);

  const Graph &graph() const { return graph_; }
  const std::vector<Vertex> &rotation(Vertex v) const { return rotation_[v]; }

  int dart_count() const { return static_cast<int>(dart_head_.size()); }
  Dart dart(Vertex tail, Vertex head) const;
  Vertex tail(Dart d) const { return dart_tail_[d]; }
  Vertex head(Dart d) const { return dart_head_[d]; }
  Dart reverse(Dart d) const { return dart(head(d), tail(d)); }
  /// Next dart along the same face.
  Dart next_in_face(Dart d) const;

private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<int> offset_;
  std::vector<Vertex> dart_tail_, dart_head_;
};

/// Closed boundary walk; `vertices[i]` is the tail of `darts[i]`.
struct Face {
  std::vector<Vertex> vertices;
  std::vector<Dart> darts;
  int length() const { return static_cast<int>(darts.size()); }
};

struct FaceStructure {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;
};

bool is_planar(const Graph &g);

/// Throws NonplanarError carrying a Kuratowski witness.
Embedding planar_embedding(const Graph &g);

/// Throws InvalidCall on planar input.
KuratowskiWitness kuratowski_witness(const Graph &g);

/// Independent check: the witness edges lie in `host` and suppress to the
/// stated Kuratowski graph.
bool validate_witness(const Graph &host, const KuratowskiWitness &w);

std::vector<Face> faces(const Embedding &e);
FaceStructure face_structure(const Embedding &e);

/// Face count on the sphere; an isolated vertex contributes one face.
int face_count(const Embedding &e);

/// V - E + F == 2 holds for every connected component.
bool satisfies_euler(const Embedding &e);

/// True iff `a` and `b` lie in different regions of the sphere minus the
/// closed curve traced by `c`. `c` must be a simple cycle of the embedded
/// graph, and `a`, `b` must avoid it and sit in its component.
bool cycle_separates(const Embedding &e, const Cycle &c,
                     const std::set<Vertex> &a, const std::set<Vertex> &b);

/// Like cycle_separates but `c` is given as a closed vertex walk in
/// traversal order (not necessarily canonical).
bool closed_walk_separates(const Embedding &e, std::span<const Vertex> walk,
                           const std::set<Vertex> &a,
                           const std::set<Vertex> &b);

} // namespace crossnum
