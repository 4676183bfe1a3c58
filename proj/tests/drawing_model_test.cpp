#include <gtest/gtest.h>

#include <algorithm>
#include <optional>

#include "crossratio/drawing.hpp"
#include "test_support.hpp"

namespace crossratio {
namespace {

using testing::embed_by_coordinates;

struct OneCrossingRoute {
  Dart start;
  Dart crossed;
  Dart end;
};

// A route from u to v crossing exactly one skeleton edge.
std::optional<OneCrossingRoute> one_crossing_route(const TopologicalDrawing& d, VertexId u, VertexId v,
                                                   bool cross_adjacent) {
  const EmbeddedGraph& sk = d.skeleton();
  const Graph& g = sk.graph();
  const FaceReport faces = trace_faces(sk);
  auto corner = [&](std::size_t f, VertexId at) -> std::optional<Dart> {
    for (Dart a : faces.faces[f]) {
      if (head(g, a) == at) return a;
    }
    return std::nullopt;
  };
  for (Dart c = 0; c < 2 * g.edge_count(); ++c) {
    const Edge& e = g.edge(dart_edge(c));
    if ((e.has(u) || e.has(v)) != cross_adjacent) continue;
    const auto a = corner(faces.face_of_dart[c], u);
    const auto b = corner(faces.face_of_dart[twin(c)], v);
    if (a && b) return OneCrossingRoute{*a, c, *b};
  }
  return std::nullopt;
}

// K5 minus (0,1) drawn planar, with (0,1) added through one crossing.
TopologicalDrawing k5_one_crossing() {
  Graph g(5);
  for (VertexId a = 0; a < 5; ++a) {
    for (VertexId b = a + 1; b < 5; ++b) {
      if (a != 0 || b != 1) g.add_edge(a, b);
    }
  }
  const EmbeddedGraph eg =
      embed_by_coordinates(g, {{0, 4}, {0, 0.5}, {-4, 0}, {4, 0}, {0, 1.5}});
  const TopologicalDrawing plane = plane_drawing(eg);
  const auto route = one_crossing_route(plane, 0, 1, false);
  EXPECT_TRUE(route.has_value());
  DrawingBuilder b(plane);
  b.add_routed_edge(0, 1, route->start, {route->crossed}, route->end, "late");
  return b.build();
}

TEST(DrawingModel, PlaneDrawingHasNoCrossings) {
  const TopologicalDrawing d = plane_drawing(testing::planar_k4());
  const ValidityReport r = validate(d);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.crossings, 0u);
  EXPECT_EQ(crossing_count(d), 0u);
  EXPECT_TRUE(scheme_of(d).pairs.empty());
}

TEST(DrawingModel, K5WithOneCrossing) {
  const TopologicalDrawing d = k5_one_crossing();
  const ValidityReport r = validate(d);
  ASSERT_TRUE(r.valid()) << r.violations.front();
  EXPECT_EQ(crossing_count(d), 1u);
  EXPECT_EQ(d.base().edge_count(), 10u);
  EXPECT_EQ(d.skeleton().graph().vertex_count(), 6u);
  EXPECT_EQ(d.skeleton().graph().edge_count(), 12u);
  const CrossingScheme s = scheme_of(d);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.pairs[0].contains(9));
  EXPECT_TRUE(d.base().independent(s.pairs[0].first, s.pairs[0].second));
  EXPECT_EQ(d.crossings_on(9), 1u);
}

TEST(DrawingModel, PlanarizeMatchesCanonicalSkeleton) {
  const TopologicalDrawing d = k5_one_crossing();
  const Planarization p = planarize(d.base(), scheme_of(d));
  EXPECT_EQ(p.skeleton, d.skeleton().graph());
  EXPECT_EQ(p.paths, d.paths());
  ASSERT_EQ(p.dummy_pairs.size(), 1u);
}

TEST(DrawingModel, RealizeRoundTrip) {
  const TopologicalDrawing d = k5_one_crossing();
  EXPECT_EQ(realize(d.base(), scheme_of(d), d.skeleton()), d);
  EXPECT_EQ(canonicalize(d), d);
}

TEST(DrawingModel, AdjacentCrossingIsNotSimple) {
  Graph g(4);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 1);
  const TopologicalDrawing plane =
      plane_drawing(embed_by_coordinates(g, {{0, 0}, {3, 0}, {1, 0}, {4, 0}}));
  const auto route = one_crossing_route(plane, 0, 1, true);
  ASSERT_TRUE(route.has_value());
  DrawingBuilder b(plane);
  b.add_routed_edge(0, 1, route->start, {route->crossed}, route->end, {});
  const ValidityReport r = validate(b.build());
  EXPECT_FALSE(r.simple);
  EXPECT_FALSE(r.valid());
  EXPECT_THROW((void)crossing_count(b.build()), GraphError);
}

// C4 = 0-1-2-3 with (0,1) and (2,3) meeting at x without crossing.
struct Touching {
  Graph base;
  CrossingScheme scheme;
  EmbeddedGraph embedding;
};

Touching touching_c4() {
  Touching t;
  t.base = Graph(4);
  t.base.add_edge(0, 1);
  t.base.add_edge(1, 2);
  t.base.add_edge(2, 3);
  t.base.add_edge(3, 0);
  t.scheme.pairs = {EdgePair(0, 2)};
  const Planarization p = planarize(t.base, t.scheme);
  t.embedding = embed_by_coordinates(p.skeleton, {{-1, 1}, {-1, -1}, {1, -1}, {1, 1}, {0, 0}});
  return t;
}

TEST(DrawingModel, TouchingIsReportedAndSmoothed) {
  const Touching t = touching_c4();
  const Planarization p = planarize(t.base, t.scheme);
  const TopologicalDrawing raw(t.base, t.embedding, p.paths);
  const ValidityReport r = validate(raw);
  EXPECT_FALSE(r.crossings_alternate);
  EXPECT_TRUE(r.genus_zero);

  const TopologicalDrawing smooth = realize(t.base, t.scheme, t.embedding);
  const ValidityReport rs = validate(smooth);
  EXPECT_TRUE(rs.valid());
  EXPECT_EQ(rs.crossings, 0u);
  EXPECT_EQ(smooth.skeleton().graph().edge_count(), 4u);
}

TEST(DrawingModel, BrokenPathsAreReported) {
  const TopologicalDrawing d = k5_one_crossing();
  auto paths = d.paths();
  std::swap(paths[0], paths[1]);
  const ValidityReport r = validate(TopologicalDrawing(d.base(), d.skeleton(), paths));
  EXPECT_FALSE(r.paths_consistent);

  paths = d.paths();
  paths[2].push_back(paths[3].front());
  const ValidityReport r2 = validate(TopologicalDrawing(d.base(), d.skeleton(), paths));
  EXPECT_FALSE(r2.segments_partitioned);
}

TEST(DrawingModel, NonPlanarRotationIsReported) {
  const TopologicalDrawing d = k5_one_crossing();
  Rotation rot = d.skeleton().rotation();
  std::swap(rot[0][0], rot[0][1]);
  const TopologicalDrawing bad(d.base(), EmbeddedGraph(d.skeleton().graph(), rot), d.paths());
  EXPECT_FALSE(validate(bad).genus_zero);
  EXPECT_THROW((void)realize(d.base(), scheme_of(d), bad.skeleton()), GraphError);
}

TEST(DrawingModel, PlanarizeRejectsMalformedSchemes) {
  const Graph k5 = complete_graph(5);
  CrossingScheme s;
  s.pairs = {EdgePair(0, 42)};
  EXPECT_THROW((void)planarize(k5, s), GraphError);
  s.pairs = {EdgePair(3, 3)};
  EXPECT_THROW((void)planarize(k5, s), GraphError);
  s.pairs = {EdgePair(0, 7), EdgePair(7, 0)};
  EXPECT_THROW((void)planarize(k5, s), GraphError);
  s.pairs = {EdgePair(0, 7), EdgePair(0, 9)};
  EXPECT_THROW((void)planarize(k5, s), GraphError);  // no order for edge 0
  s.order[0] = {9, 8};
  EXPECT_THROW((void)planarize(k5, s), GraphError);
  s.order[0] = {9, 7};
  const Planarization p = planarize(k5, s);
  EXPECT_EQ(p.paths[0].size(), 3u);
  // edge 0 meets the (0,9) dummy first
  EXPECT_EQ(p.skeleton.edge(p.paths[0][0]).v, 5u + 1u);
}

TEST(DrawingModel, SchemeOrderFollowsPaths) {
  const Graph k5 = complete_graph(5);
  CrossingScheme s;
  s.pairs = {EdgePair(0, 7), EdgePair(0, 9)};
  s.order[0] = {9, 7};
  EXPECT_EQ(s.partners_in_order(0), (std::vector<EdgeId>{9, 7}));
  EXPECT_EQ(s.partners_in_order(7), (std::vector<EdgeId>{0}));
  EXPECT_TRUE(s.partners_in_order(4).empty());
}

}  // namespace
}  // namespace crossratio
