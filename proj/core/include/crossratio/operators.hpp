#pragma once

#include <cstddef>
#include <string_view>

#include "crossratio/embedding.hpp"
#include "crossratio/graph.hpp"

namespace crossratio {

/// Label carried by the edges that extend_edge adds for edge `e`.
[[nodiscard]] std::string extension_label(EdgeId e);

/// Adds `paths` new vertices, each joined to both endpoints of `e`. The
/// original edge is kept. New vertices are appended after the existing ones,
/// new edges after the existing edges in (path, u-side, v-side) order.
[[nodiscard]] Graph extend_edge(const Graph& g, EdgeId e, std::size_t paths);

/// Cartesian product of the path a-b-c with the cycle C_len, embedded as
/// concentric cycles: a_i = i, b_i = len + i, c_i = 2 len + i. Edge order:
/// the three cycles (a, b, c; edge i joins index i and i+1), then the rungs
/// a_i b_i and b_i c_i.
[[nodiscard]] EmbeddedGraph cartesian_path2_cycle(std::size_t len);

/// Inserts into every quadrangular face (r_i, s_i, s_{i+1}, r_{i+1}) of a
/// product embedding a vertex adjacent to r_i, r_{i+1} and s_i, where r is the
/// outer row (a or c) and s = b. New vertices ma_i then mc_i are appended.
/// Throws GraphError when `base` is not a cartesian_path2_cycle embedding.
[[nodiscard]] EmbeddedGraph medial_extension(const EmbeddedGraph& base);

enum class DrawingClass { kOnePlanar, kQuasiPlanar, kFanPlanar };

[[nodiscard]] std::string_view to_string(DrawingClass c);

struct DensityVerdict {
  bool simple = true;
  bool within_bound = true;
  std::size_t edges = 0;
  /// Twice the admissible edge count (keeps 6.5n - 20 integral).
  long twice_bound = 0;
};

/// Edge-density test against the class bound: 4n-8, 6.5n-20 or 5n-10. Below
/// the size where a formula drops under the planar maximum, the trivial bound
/// n(n-1)/2 applies. Multigraphs are flagged (simple = false) and fail.
[[nodiscard]] DensityVerdict check_density(const Graph& g, DrawingClass cls);

}  // namespace crossratio
