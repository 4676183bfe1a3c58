#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "crossratio/drawing.hpp"
#include "crossratio/embedding.hpp"
#include "crossratio/graph.hpp"

namespace crossratio {

/// Edge labels shared by all generators.
namespace role {
inline constexpr std::string_view kPrimal = "P";
inline constexpr std::string_view kDual = "P*";
inline constexpr std::string_view kBinding = "binding";
inline constexpr std::string_view kSpecial = "special";
inline constexpr std::string_view kCycle = "cycle";
inline constexpr std::string_view kSpoke = "spoke";
inline constexpr std::string_view kCore = "core";
inline constexpr std::string_view kBar = "bar";
inline constexpr std::string_view kBundle = "bundle";
}  // namespace role

/// The 1-planar family: medial-extended product P, its dual P* (vertex f* of
/// the polar face f joined to every vertex of f) and the special edge (x, y*).
/// Graph ids: P vertices and P edges keep their ids; the dual vertices follow
/// in face order, the dual edge of e is |E(P)| + e; then the
/// binding edges in the order of f's walk, then the special edge.
struct OneplanarFamily {
  std::size_t ell = 0;
  /// Set when ell is below the bound for which the construction is claimed.
  bool below_bound = false;
  Graph graph;
  EmbeddedGraph primal;
  FaceReport primal_faces;
  EmbeddedGraph dual;
  std::vector<VertexId> dual_vertex_of_face;
  std::vector<EdgeId> dual_edge_of_edge;
  std::size_t face_f = 0;
  std::size_t face_g = 0;
  std::size_t face_y = 0;
  VertexId f_star = kNoVertex;
  VertexId g_star = kNoVertex;
  VertexId y_star = kNoVertex;
  VertexId z = kNoVertex;
  VertexId x = kNoVertex;
  std::vector<EdgeId> binding_edges;
  EdgeId special_edge = kNoEdge;
};

/// Throws GraphError for ell < 3; sets below_bound for ell < 7.
[[nodiscard]] OneplanarFamily gen_oneplanar(std::size_t ell);

/// Every edge but the special one replaced by k parallel edges. Edge ids: the
/// simple graph's edges, then copy round 1 of every non-special edge in id
/// order, then round 2, and so on.
struct OneplanarMultiFamily {
  OneplanarFamily base;
  std::size_t k = 1;
  Graph graph;
  /// copies[e] = ids of the parallel edges standing for simple edge e
  std::vector<std::vector<EdgeId>> copies;
};

/// Throws GraphError for ell < 6 or k < 1.
[[nodiscard]] OneplanarMultiFamily gen_oneplanar_multi(std::size_t ell, std::size_t k);

enum class ExtensionMode {
  /// Every edge of the wheel gets ell-1 paths of length two.
  kExtendAll,
  /// Only the spokes get paths, ell each; hits n = 2k(ell+1)+1.
  kMatchCorollary,
};

[[nodiscard]] std::string_view to_string(ExtensionMode m);

/// Wheel over the cycle u_0 .. u_{2k-1} with apex x, extended per mode, plus
/// the k diagonals (u_i, u_{i+k}). Ids: u_i = i, x = 2k; wheel edges are the
/// cycle edges (u_i, u_{i+1}) then the spokes (x, u_i); path vertices and
/// edges follow in wheel-edge order; the diagonals come last.
struct QuasiFamily {
  std::size_t ell = 0;
  std::size_t k = 3;
  ExtensionMode mode = ExtensionMode::kExtendAll;
  Graph graph;
  std::vector<VertexId> cycle;
  VertexId apex = kNoVertex;
  std::vector<EdgeId> wheel_edges;
  /// per wheel edge: the edges of its paths, two per path
  std::vector<std::vector<EdgeId>> extension_paths;
  std::vector<EdgeId> special_edges;
  /// Plane straight-line positions of the graph without its diagonals.
  std::vector<Point> layout;
};

/// gen_kquasi(ell, 3, kExtendAll). Throws GraphError for ell < 2.
[[nodiscard]] QuasiFamily gen_quasi(std::size_t ell);

/// Throws GraphError for ell < 2 or k < 3.
[[nodiscard]] QuasiFamily gen_kquasi(std::size_t ell, std::size_t k, ExtensionMode mode);

/// K3,3 on {u, w, a} x {v, z, b} with (u, v) and (w, z) kept plain, the other
/// seven edges extended by ell-1 paths, the bars (w, w') and (z, z'), and ell
/// paths of length two from w' to z and from z' to w.
struct FanFamily {
  std::size_t ell = 0;
  Graph graph;
  VertexId u = kNoVertex, v = kNoVertex, w = kNoVertex, z = kNoVertex;
  VertexId a = kNoVertex, b = kNoVertex;
  VertexId w_prime = kNoVertex, z_prime = kNoVertex;
  EdgeId uv = kNoEdge, wz = kNoEdge;
  EdgeId w_bar = kNoEdge, z_bar = kNoEdge;
  /// The seven extended K3,3 edges.
  std::vector<EdgeId> extended_core;
  /// routes[i][j]: route j (0 = the edge itself, j >= 1 = path j) of
  /// extended_core[i], as one or two edges.
  std::vector<std::vector<std::vector<EdgeId>>> routes;
  /// paths from w' to z and from z' to w, two edges each
  std::vector<std::vector<EdgeId>> w_bundle;
  std::vector<std::vector<EdgeId>> z_bundle;
  /// ell K3,3 subdivisions sharing only (u, v) and w_bar, and ell sharing
  /// only (u, v) and z_bar.
  std::vector<std::vector<EdgeId>> k33_via_w;
  std::vector<std::vector<EdgeId>> k33_via_z;
  std::vector<Point> layout;
};

/// Throws GraphError for ell < 2.
[[nodiscard]] FanFamily gen_fan(std::size_t ell);

/// True when `edges` form a subdivision of K3,3 in g.
[[nodiscard]] bool is_k33_subdivision(const Graph& g, const std::vector<EdgeId>& edges);

enum class DrawingStyle { kSaturated, kMin, kQuasiPlanar, kFanPlanar };

[[nodiscard]] std::string_view to_string(DrawingStyle s);
/// Throws GraphError for an unknown name.
[[nodiscard]] DrawingStyle parse_style(std::string_view name);

/// Each throws GraphError for a style the family does not support.
/// oneplanar: saturated (11 ell crossings, 1-planar) and min (2 crossings).
[[nodiscard]] TopologicalDrawing build_drawing(const OneplanarFamily& fam, DrawingStyle style);
/// Bundled versions: k^2 (n-2) and 2k crossings.
[[nodiscard]] TopologicalDrawing build_drawing(const OneplanarMultiFamily& fam, DrawingStyle style);
/// min: k(k-1)/2 crossings; quasi-planar (k = 3 only): 2 ell + 1 crossings.
[[nodiscard]] TopologicalDrawing build_drawing(const QuasiFamily& fam, DrawingStyle style);
/// min: 3 crossings; fan-planar: ell crossings.
[[nodiscard]] TopologicalDrawing build_drawing(const FanFamily& fam, DrawingStyle style);

/// Adds a parallel copy of base edge e drawn immediately to the right of e,
/// crossing the same edges in the same order. The copy gets the next edge id.
[[nodiscard]] TopologicalDrawing add_parallel_copy(const TopologicalDrawing& d, EdgeId e);

}  // namespace crossratio
