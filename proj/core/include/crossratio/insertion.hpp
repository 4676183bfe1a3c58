#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "crossratio/drawing.hpp"

namespace crossratio {

/// Base edges the new edge may cross; an empty predicate allows all.
using CrossablePredicate = std::function<bool(EdgeId)>;

struct InsertionResult {
  TopologicalDrawing drawing;
  EdgeId edge = kNoEdge;
  std::size_t crossings = 0;
};

/// Adds the base edge (u, v) to a drawing with the fewest crossings possible
/// while keeping the rest of the drawing fixed: a shortest path in the dual of
/// the skeleton from a face at u to a face at v. Edges sharing an endpoint
/// with (u, v) are never crossed, and no edge is crossed twice. Returns
/// nullopt when no admissible route exists.
[[nodiscard]] std::optional<InsertionResult> insert_edge_min_crossings(
    const TopologicalDrawing& d, VertexId u, VertexId v, std::string label = {},
    const CrossablePredicate& crossable = {});

}  // namespace crossratio
