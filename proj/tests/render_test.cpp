#include <gtest/gtest.h>

#include "crossratio/families.hpp"
#include "crossratio/render.hpp"

namespace crossratio {
namespace {

TopologicalDrawing plane_k4() {
  Graph g;
  for (int i = 0; i < 4; ++i) g.add_vertex();
  for (VertexId a = 0; a < 4; ++a) {
    for (VertexId b = a + 1; b < 4; ++b) g.add_edge(a, b);
  }
  // vertex 3 in the middle of triangle 0 1 2
  const std::vector<Point> pos = {{0, 0}, {4, 0}, {0, 4}, {1, 1}};
  return plane_drawing(embed_straight_line(g, pos));
}

IntersectionCount count_svg(const TopologicalDrawing& d, LayoutMethod m) {
  RenderOptions options;
  options.layout = m;
  return count_intersections(read_svg_polylines(render_svg(d, options)));
}

TEST(Render, PlaneK4IsStraight) {
  const TopologicalDrawing d = plane_k4();
  for (LayoutMethod m : {LayoutMethod::kGrid, LayoutMethod::kBarycentric}) {
    const IntersectionCount c = count_svg(d, m);
    EXPECT_EQ(c.points, 0u);
    EXPECT_EQ(c.bends, 0u);
    EXPECT_EQ(c.overlaps, 0u);
  }
  const std::string svg = render_svg(d);
  EXPECT_EQ(read_svg_polylines(svg).size(), 6u);
  EXPECT_NE(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""), std::string::npos);
}

TEST(Render, OneplanarMinShowsTwoCrossings) {
  const TopologicalDrawing d = build_drawing(gen_oneplanar(7), DrawingStyle::kMin);
  EXPECT_EQ(count_svg(d, LayoutMethod::kGrid).points, 2u);
  EXPECT_EQ(count_svg(d, LayoutMethod::kBarycentric).points, 2u);
}

TEST(Render, QuasiPlanarShowsTwoEllPlusOne) {
  for (std::size_t ell = 2; ell <= 4; ++ell) {
    const TopologicalDrawing d = build_drawing(gen_quasi(ell), DrawingStyle::kQuasiPlanar);
    EXPECT_EQ(count_svg(d, LayoutMethod::kGrid).points, 2 * ell + 1);
  }
}

TEST(Render, ParallelSegmentsBendApart) {
  const TopologicalDrawing d = build_drawing(gen_oneplanar_multi(7, 2), DrawingStyle::kSaturated);
  const IntersectionCount c = count_svg(d, LayoutMethod::kGrid);
  EXPECT_EQ(c.points, crossing_count(d));
  EXPECT_EQ(c.overlaps, 0u);
}

TEST(Render, Deterministic) {
  const TopologicalDrawing d = build_drawing(gen_fan(3), DrawingStyle::kFanPlanar);
  RenderOptions options;
  options.title = "fan <3>";
  const std::string a = render_svg(d, options);
  EXPECT_EQ(a, render_svg(d, options));
  EXPECT_NE(a.find("<title>fan &lt;3&gt;</title>"), std::string::npos);
  options.layout = LayoutMethod::kBarycentric;
  EXPECT_EQ(render_svg(d, options), render_svg(d, options));
}

TEST(Render, RolesAreTagged) {
  const OneplanarFamily fam = gen_oneplanar(7);
  const std::string svg = render_svg(build_drawing(fam, DrawingStyle::kMin));
  EXPECT_NE(svg.find("data-role=\"P*\""), std::string::npos);
  EXPECT_NE(svg.find("data-role=\"binding\""), std::string::npos);
  EXPECT_NE(svg.find("data-role=\"special\""), std::string::npos);
  EXPECT_NE(svg.find("<rect x="), std::string::npos);
}

TEST(Render, ChosenOuterFaceIsOutside) {
  const TopologicalDrawing d = plane_k4();
  const EmbeddedGraph& sk = d.skeleton();
  const FaceReport faces = trace_faces(sk);
  for (std::size_t f = 0; f < faces.face_count(); ++f) {
    RenderOptions options;
    options.outer_face = faces.faces[f].front();
    const SkeletonLayout layout = layout_skeleton(d, options);
    // the vertex off the chosen face lies strictly inside the other three
    const std::vector<VertexId> on = faces.face_vertices(sk.graph(), f);
    VertexId inside = 0;
    while (std::find(on.begin(), on.end(), inside) != on.end()) ++inside;
    const Point p = layout.vertices[inside];
    int sides = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      const Point a = layout.vertices[on[i]], b = layout.vertices[on[(i + 1) % 3]];
      const double o = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
      sides += o > 0 ? 1 : -1;
    }
    EXPECT_EQ(std::abs(sides), 3) << "face " << f;
  }
}

TEST(Render, CounterHandlesSharedEndpointsAndOverlaps) {
  const std::vector<Polyline> lines = {
      {0, {{0, 0}, {4, 4}}},
      {1, {{0, 4}, {4, 0}}},
      {2, {{0, 0}, {0, 4}}},
      {3, {{0, 2}, {0, 6}}},
      {4, {{4, 0}, {2, 2}, {4, 4}}},
  };
  const IntersectionCount c = count_intersections(lines);
  // 2 and 3 overlap, and each half of 4 lies along one of the diagonals
  EXPECT_EQ(c.overlaps, 3u);
  EXPECT_EQ(c.bends, 1u);
  // 0 x 1, 0 x 2 and 1 x 2 touch only at shared endpoints; 0 x 1 at (2, 2)
  EXPECT_EQ(count_intersections({lines[0], lines[1], lines[2]}).points, 1u);
}

TEST(Render, InvalidDrawingRefused) {
  Graph g;
  g.add_vertex();
  g.add_vertex();
  g.add_edge(0, 1);
  EmbeddedGraph sk(g, {{make_dart(0, false)}, {make_dart(0, true)}});
  const TopologicalDrawing broken(g, sk, {{}});
  EXPECT_THROW((void)render_svg(broken), GraphError);
}

}  // namespace
}  // namespace crossratio
