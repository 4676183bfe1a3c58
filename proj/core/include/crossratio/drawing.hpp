#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crossratio/embedding.hpp"
#include "crossratio/graph.hpp"

namespace crossratio {

/// Unordered pair of base edges, stored with first < second.
struct EdgePair {
  EdgeId first = kNoEdge;
  EdgeId second = kNoEdge;

  EdgePair() = default;
  EdgePair(EdgeId a, EdgeId b) : first(a < b ? a : b), second(a < b ? b : a) {}

  [[nodiscard]] EdgeId partner(EdgeId e) const { return e == first ? second : first; }
  [[nodiscard]] bool contains(EdgeId e) const { return e == first || e == second; }
  auto operator<=>(const EdgePair&) const = default;
};

/// Abstract crossings: which edge pairs cross, and for every edge crossed at
/// least twice the order of its partners along the edge (from edge.u to edge.v).
struct CrossingScheme {
  std::vector<EdgePair> pairs;
  std::map<EdgeId, std::vector<EdgeId>> order;

  [[nodiscard]] std::size_t size() const { return pairs.size(); }
  /// Partners of `e` in crossing order (order entry, else the single partner).
  [[nodiscard]] std::vector<EdgeId> partners_in_order(EdgeId e) const;
  bool operator==(const CrossingScheme&) const = default;
};

/// A simple topological drawing stored as its planarization: skeleton
/// vertices 0..n-1 are the base vertices, the rest are dummy crossing
/// vertices; every base edge is a path of skeleton edges (segments).
///
/// Construction only checks that ids are in range, so malformed drawings can
/// be represented; validate() reports everything else.
class TopologicalDrawing {
 public:
  TopologicalDrawing() = default;
  TopologicalDrawing(Graph base, EmbeddedGraph skeleton, std::vector<std::vector<EdgeId>> paths);

  [[nodiscard]] const Graph& base() const { return base_; }
  [[nodiscard]] const EmbeddedGraph& skeleton() const { return skeleton_; }
  [[nodiscard]] const std::vector<EdgeId>& segments(EdgeId e) const { return paths_.at(e); }
  [[nodiscard]] const std::vector<std::vector<EdgeId>>& paths() const { return paths_; }

  [[nodiscard]] bool is_dummy(VertexId v) const { return v >= base_.vertex_count(); }
  [[nodiscard]] std::size_t dummy_count() const {
    return skeleton_.graph().vertex_count() - base_.vertex_count();
  }
  /// Base edge owning a skeleton edge; kNoEdge when it belongs to none.
  [[nodiscard]] EdgeId owner(EdgeId segment) const { return owner_.at(segment); }
  /// Base edges whose paths pass through a dummy (two in a valid drawing).
  [[nodiscard]] const std::vector<EdgeId>& edges_at(VertexId dummy) const {
    return through_.at(dummy - base_.vertex_count());
  }
  [[nodiscard]] EdgePair crossing_pair(VertexId dummy) const;
  /// Skeleton vertices along the path of `e`, from edge(e).u; empty if broken.
  [[nodiscard]] std::vector<VertexId> path_vertices(EdgeId e) const;
  [[nodiscard]] std::size_t crossings_on(EdgeId e) const;

  bool operator==(const TopologicalDrawing& o) const {
    return base_ == o.base_ && skeleton_ == o.skeleton_ && paths_ == o.paths_;
  }

 private:
  Graph base_;
  EmbeddedGraph skeleton_;
  std::vector<std::vector<EdgeId>> paths_;
  std::vector<EdgeId> owner_;
  std::vector<std::vector<EdgeId>> through_;
};

struct ValidityReport {
  bool paths_consistent = true;
  bool segments_partitioned = true;
  bool dummies_degree_four = true;
  bool dummies_on_two_paths = true;
  bool crossings_alternate = true;
  bool genus_zero = true;
  bool simple = true;
  std::size_t crossings = 0;
  std::vector<std::string> violations;

  [[nodiscard]] bool valid() const {
    return paths_consistent && segments_partitioned && dummies_degree_four &&
           dummies_on_two_paths && crossings_alternate && genus_zero && simple;
  }
};

[[nodiscard]] ValidityReport validate(const TopologicalDrawing& d);

/// Number of crossings of a valid drawing; throws GraphError otherwise.
[[nodiscard]] std::size_t crossing_count(const TopologicalDrawing& d);

/// Plane drawing (no crossings) of an embedded graph.
[[nodiscard]] TopologicalDrawing plane_drawing(const EmbeddedGraph& g);

/// Crossing scheme induced by a drawing.
[[nodiscard]] CrossingScheme scheme_of(const TopologicalDrawing& d);

struct Planarization {
  Graph skeleton;
  std::vector<std::vector<EdgeId>> paths;
  /// crossing pair of dummy n + i
  std::vector<EdgePair> dummy_pairs;
};

/// Replaces every crossed edge by a path through dummies, one per scheme
/// pair. Dummy n + i belongs to the i-th pair in sorted order; skeleton edges
/// are numbered by base edge, then position along the edge.
/// Throws GraphError for unknown edges, repeated pairs, a pair of an edge with
/// itself, or per-edge orders that do not list exactly the edge's partners.
[[nodiscard]] Planarization planarize(const Graph& g, const CrossingScheme& s);

/// Drawing of `g` from a genus-0 embedding of planarize(g, s). Dummies whose
/// rotation does not alternate are smoothed, so the result has at most |s|
/// crossings. Throws GraphError when `embedding` does not embed the
/// planarization or fails the genus-0 check.
[[nodiscard]] TopologicalDrawing realize(const Graph& g, const CrossingScheme& s,
                                         const EmbeddedGraph& embedding);

/// Mutable planarization used by drawing constructions. Segments keep their
/// ids until build(), which compacts into canonical numbering: dummies by
/// sorted crossing pair, skeleton edges by base edge and path position.
class DrawingBuilder {
 public:
  explicit DrawingBuilder(const TopologicalDrawing& d);

  [[nodiscard]] const Graph& base() const { return base_; }

  /// Adds a base edge (u, v). It leaves u at the corner where dart
  /// `start_corner` ends, crosses the given skeleton darts in order, each from
  /// the face on its right to the face on its left, and enters v at the corner
  /// where `end_corner` ends. Darts use the source skeleton's numbering; each
  /// crossed segment must still be unsplit.
  EdgeId add_routed_edge(VertexId u, VertexId v, Dart start_corner,
                         const std::vector<Dart>& crossed, Dart end_corner, std::string label);

  /// Removes a dummy whose two edges do not alternate around it.
  void smooth(VertexId dummy);

  /// Deletes a base edge with its crossings. Later base edges shift down by
  /// one in build().
  void erase_edge(EdgeId e);

  [[nodiscard]] TopologicalDrawing build() const;

 private:
  VertexId add_dummy();
  EdgeId add_segment(VertexId a, VertexId b, EdgeId owner);
  void replace_dart(VertexId at, Dart old_dart, Dart new_dart);
  void remove_dart(VertexId at, Dart d);
  /// Joins the two segments of `e` at `x` into one.
  void merge_at(VertexId x, EdgeId e);
  void insert_after(VertexId at, Dart anchor, Dart d);
  [[nodiscard]] VertexId tail_of(Dart d) const;

  Graph base_;
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<EdgeId> owner_;
  std::vector<bool> edge_alive_;
  Rotation rot_;
  std::vector<bool> vertex_alive_;
  std::vector<std::vector<EdgeId>> paths_;
  std::vector<bool> base_alive_;
};

/// The drawing without base edge `e`; edges after `e` shift down by one.
[[nodiscard]] TopologicalDrawing remove_edge(const TopologicalDrawing& d, EdgeId e);

/// Canonical numbering (see DrawingBuilder::build). Requires consistent paths.
[[nodiscard]] TopologicalDrawing canonicalize(const TopologicalDrawing& d);

}  // namespace crossratio
