#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "crossratio/graph.hpp"

namespace crossratio {

/// An edge-end. Dart 2e leaves edge(e).u, dart 2e+1 leaves edge(e).v.
using Dart = std::uint32_t;

[[nodiscard]] constexpr Dart make_dart(EdgeId e, bool from_v) { return e * 2 + (from_v ? 1u : 0u); }
[[nodiscard]] constexpr EdgeId dart_edge(Dart d) { return d >> 1; }
[[nodiscard]] constexpr Dart twin(Dart d) { return d ^ 1u; }
[[nodiscard]] inline VertexId tail(const Graph& g, Dart d) {
  const Edge& e = g.edge(dart_edge(d));
  return (d & 1u) ? e.v : e.u;
}
[[nodiscard]] inline VertexId head(const Graph& g, Dart d) { return tail(g, twin(d)); }
/// The dart of `e` leaving `from`.
[[nodiscard]] Dart out_dart(const Graph& g, EdgeId e, VertexId from);

/// Counter-clockwise cyclic order of outgoing darts, one list per vertex.
using Rotation = std::vector<std::vector<Dart>>;

/// A graph together with a rotation system. Faces are traced with
/// face_next(d) = successor(twin(d)); each face lies to the right of its darts.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;
  EmbeddedGraph(Graph graph, Rotation rotation);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] const Rotation& rotation() const { return rotation_; }
  [[nodiscard]] std::span<const Dart> rotation(VertexId v) const { return rotation_.at(v); }

  [[nodiscard]] Dart successor(Dart d) const;
  [[nodiscard]] Dart predecessor(Dart d) const;
  [[nodiscard]] Dart face_next(Dart d) const { return successor(twin(d)); }

  /// Rendering hint only; the embedding itself lives on the sphere.
  std::optional<Dart> outer_face_dart;

  bool operator==(const EmbeddedGraph& o) const {
    return graph_ == o.graph_ && rotation_ == o.rotation_;
  }

 private:
  Graph graph_;
  Rotation rotation_;
  std::vector<std::uint32_t> position_;
};

struct FaceReport {
  std::vector<std::vector<Dart>> faces;
  std::vector<std::size_t> face_of_dart;
  /// face size -> number of faces
  std::map<std::size_t, std::size_t> size_histogram;
  /// Faces of maximum size, when that size exceeds 4 (the polar faces of the
  /// rigid medial-extension graph).
  std::vector<std::size_t> polar_faces;
  /// V - E + F for each connected component, in component order.
  std::vector<long> euler_per_component;
  bool genus_zero = true;

  [[nodiscard]] std::size_t face_count() const { return faces.size(); }
  [[nodiscard]] std::size_t face_size(std::size_t f) const { return faces.at(f).size(); }
  /// Vertices of a face in walk order (tails of its darts).
  [[nodiscard]] std::vector<VertexId> face_vertices(const Graph& g, std::size_t f) const;
};

[[nodiscard]] FaceReport trace_faces(const EmbeddedGraph& g);

struct DualResult {
  EmbeddedGraph dual;
  FaceReport primal_faces;
  /// dual vertex of face h (h* in the usual notation)
  std::vector<VertexId> vertex_of_face;
  /// dual edge crossing primal edge e
  std::vector<EdgeId> edge_of_edge;
};

/// Geometric dual of a connected sphere embedding. Dual edge e* joins the
/// faces on the right and left of dart 2e, in that order. Throws GraphError
/// for disconnected or non-genus-0 input and for bridges (a dual self-loop).
[[nodiscard]] DualResult dual(const EmbeddedGraph& g);

/// Inserts `d` at the corner of a face where dart `incoming` ends, i.e. right
/// after twin(incoming) in the rotation of head(incoming).
void insert_at_corner(Rotation& rotation, const Graph& g, Dart incoming, Dart d);

/// Places a new vertex inside face `face` of `g` and joins it to the corners
/// at the given positions of the face walk (position i = head of dart i).
/// Returns the extended embedding; the new vertex is the last one.
[[nodiscard]] EmbeddedGraph insert_vertex_in_face(const EmbeddedGraph& g, const FaceReport& faces,
                                                  std::size_t face,
                                                  std::span<const std::size_t> corner_positions,
                                                  std::string name = {}, std::string label = {});

struct Point {
  double x = 0;
  double y = 0;
};

/// Rotation system of a straight-line drawing: darts sorted by angle. The
/// result is a genus-0 embedding exactly when the drawing is plane.
[[nodiscard]] EmbeddedGraph embed_straight_line(Graph g, std::span<const Point> positions);

/// Mirror image: every rotation reversed.
[[nodiscard]] EmbeddedGraph mirrored(const EmbeddedGraph& g);

}  // namespace crossratio
