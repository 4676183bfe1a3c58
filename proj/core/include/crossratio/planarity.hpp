#pragma once

#include <optional>
#include <vector>

#include "crossratio/embedding.hpp"
#include "crossratio/graph.hpp"

namespace crossratio {

struct PlanarityResult {
  bool planar = false;
  /// Set when planar and an embedding was requested.
  std::optional<EmbeddedGraph> embedding;
  /// Edges of a Kuratowski subdivision, sorted; set when non-planar and requested.
  std::vector<EdgeId> kuratowski;
};

struct PlanarityRequest {
  bool embedding = false;
  bool kuratowski = false;
  /// Shrink the isolated subgraph to an exact K5 or K3,3 subdivision (costs
  /// one planarity test per edge of the subgraph).
  bool minimal = false;
};

/// Planarity of a multigraph. Parallel edges never affect the verdict.
[[nodiscard]] PlanarityResult test_planarity(const Graph& g, PlanarityRequest want = {});

[[nodiscard]] inline bool is_planar(const Graph& g) { return test_planarity(g).planar; }

/// A genus-0 embedding of a planar graph; throws GraphError otherwise.
[[nodiscard]] EmbeddedGraph planar_embedding(const Graph& g);

/// Edges of a K5 or K3,3 subdivision in g; empty iff planar.
[[nodiscard]] std::vector<EdgeId> kuratowski_edges(const Graph& g);

}  // namespace crossratio
