#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace crossratio {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

/// Thrown for contract violations on graphs, embeddings and drawings.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  std::string label;

  [[nodiscard]] bool has(VertexId x) const { return u == x || v == x; }
  [[nodiscard]] VertexId other(VertexId x) const { return x == u ? v : u; }
  [[nodiscard]] bool same_endpoints(const Edge& e) const {
    return (u == e.u && v == e.v) || (u == e.v && v == e.u);
  }

  bool operator==(const Edge&) const = default;
};

/// Undirected multigraph with dense, stable ids. Parallel edges are allowed,
/// self-loops are not. Vertices may carry unique names, edges a role label.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  VertexId add_vertex(std::string name = {});
  EdgeId add_edge(VertexId u, VertexId v, std::string label = {});

  [[nodiscard]] std::size_t vertex_count() const { return names_.size(); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }

  [[nodiscard]] const Edge& edge(EdgeId e) const;
  [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
  [[nodiscard]] std::span<const EdgeId> incident(VertexId v) const;
  [[nodiscard]] std::size_t degree(VertexId v) const { return incident(v).size(); }

  [[nodiscard]] const std::string& vertex_name(VertexId v) const;
  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view name) const;
  /// Vertex by name; throws GraphError when absent.
  [[nodiscard]] VertexId vertex(std::string_view name) const;

  void set_label(EdgeId e, std::string label);
  [[nodiscard]] std::vector<EdgeId> edges_with_label(std::string_view label) const;

  /// Edges sharing at least one endpoint. An edge is adjacent to itself.
  [[nodiscard]] bool adjacent(EdgeId a, EdgeId b) const;
  [[nodiscard]] bool independent(EdgeId a, EdgeId b) const { return !adjacent(a, b); }

  [[nodiscard]] std::size_t multiplicity(VertexId u, VertexId v) const;
  [[nodiscard]] std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;
  [[nodiscard]] std::size_t max_multiplicity() const;
  [[nodiscard]] bool is_simple() const { return max_multiplicity() <= 1; }

  [[nodiscard]] bool has_vertex(VertexId v) const { return v < names_.size(); }
  [[nodiscard]] bool has_edge(EdgeId e) const { return e < edges_.size(); }

  [[nodiscard]] std::size_t component_count() const;
  /// Component index per vertex, numbered in order of smallest member.
  [[nodiscard]] std::vector<std::size_t> components() const;

  bool operator==(const Graph& other) const {
    return names_ == other.names_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::unordered_map<std::string, VertexId> by_name_;
};

/// Copy of `g` without the listed edges. Remaining edges keep their relative
/// order; `old_to_new` (if given) receives kNoEdge for removed edges.
Graph remove_edges(const Graph& g, std::span<const EdgeId> removed,
                   std::vector<EdgeId>* old_to_new = nullptr);

/// Complete graph K_n and complete bipartite K_{a,b}, for tests and the CLI.
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen_graph();

}  // namespace crossratio
