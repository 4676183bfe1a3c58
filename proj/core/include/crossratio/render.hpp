#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossratio/drawing.hpp"
#include "crossratio/embedding.hpp"

namespace crossratio {

enum class LayoutMethod {
  /// Shift-method drawing on an integer grid; exact coordinates.
  kGrid,
  /// Barycentric (Tutte) drawing with a fixed outer triangle.
  kBarycentric,
};

[[nodiscard]] std::string_view to_string(LayoutMethod m);
/// Throws GraphError for an unknown name.
[[nodiscard]] LayoutMethod parse_layout(std::string_view name);

struct RenderOptions {
  LayoutMethod layout = LayoutMethod::kGrid;
  /// Skeleton dart whose right face is drawn as the outer face; default: the
  /// skeleton's hint, else the largest face.
  std::optional<Dart> outer_face;
  bool show_crossings = true;
  std::string title;
};

/// Plane positions for the skeleton. Every segment is straight except
/// parallel segments and loops, which bend at the given points.
struct SkeletonLayout {
  std::vector<Point> vertices;
  /// interior points of each segment, from edge(e).u
  std::vector<std::vector<Point>> bends;
};

/// Components are placed side by side. Deterministic for fixed input.
[[nodiscard]] SkeletonLayout layout_skeleton(const TopologicalDrawing& d, const RenderOptions& options = {});

/// SVG 1.1 figure: every base edge is one <polyline> through its crossings,
/// tagged with data-edge and data-role; styling follows the edge labels.
/// Throws GraphError for an invalid drawing.
[[nodiscard]] std::string render_svg(const TopologicalDrawing& d, const RenderOptions& options = {});

struct Polyline {
  EdgeId edge = kNoEdge;
  std::vector<Point> points;
};

/// Edge polylines read back from an SVG produced by render_svg.
[[nodiscard]] std::vector<Polyline> read_svg_polylines(std::string_view svg);

struct IntersectionCount {
  /// Distinct points where two polylines meet, endpoints they share excluded,
  /// summed over all pairs of polylines.
  std::size_t points = 0;
  /// Pairs of polylines with overlapping collinear pieces (not counted).
  std::size_t overlaps = 0;
  /// Bends: interior polyline vertices where the direction changes.
  std::size_t bends = 0;
};

/// Purely geometric count over the polylines, exact for integer coordinates.
[[nodiscard]] IntersectionCount count_intersections(const std::vector<Polyline>& lines);

}  // namespace crossratio
