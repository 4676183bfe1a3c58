#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "crossratio/drawing.hpp"

namespace crossratio {

/// Nodes are the base edges; two nodes are linked when their edges cross.
struct CrossingGraph {
  std::size_t nodes = 0;
  std::vector<EdgePair> links;
  std::vector<std::vector<EdgeId>> neighbours;
};

[[nodiscard]] CrossingGraph crossing_graph(const TopologicalDrawing& d);

/// A maximum set of pairwise crossing edges, in increasing order. Empty only
/// for a graph without edges.
[[nodiscard]] std::vector<EdgeId> max_clique(const CrossingGraph& cg);

/// Every edge crossed at most k times. Throws GraphError on invalid drawings.
[[nodiscard]] bool check_k_planar(const TopologicalDrawing& d, std::size_t k);

/// No k pairwise crossing edges. Throws GraphError for k < 3 or an invalid drawing.
[[nodiscard]] bool check_k_quasi_planar(const TopologicalDrawing& d, std::size_t k);

enum class FanReason { kIndependent, kDifferentSides };

[[nodiscard]] std::string_view to_string(FanReason r);

struct FanViolation {
  EdgeId crossed = kNoEdge;
  EdgePair offending;
  FanReason reason = FanReason::kIndependent;
  bool operator==(const FanViolation&) const = default;
};

struct FanVerdict {
  bool fan_planar = true;
  std::vector<FanViolation> violations;
};

/// For every crossed edge e, the edges crossing e must share an endpoint a,
/// and, oriented away from a, all pass over e in the same direction. The
/// direction of f over e is read from the rotation at their common dummy.
/// Throws GraphError on invalid or non-simple drawings.
[[nodiscard]] FanVerdict check_fan_planar(const TopologicalDrawing& d);

struct PatternProfile {
  std::size_t max_crossings_per_edge = 0;
  std::size_t max_clique = 0;
  std::vector<FanViolation> fan_violations;
};

[[nodiscard]] PatternProfile profile(const TopologicalDrawing& d);

}  // namespace crossratio
