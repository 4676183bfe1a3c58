#pragma once

// Brute-force references kept apart from the library code they check.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "crossratio/drawing.hpp"
#include "crossratio/embedding.hpp"

namespace crossratio::testing {

// Maps every vertex of dual(dual(g)) to the primal vertex with the same set
// of incident edges (through e <-> e* <-> e**); empty when none exists.
inline std::vector<VertexId> double_dual_vertex_map(const EmbeddedGraph& g) {
  const DualResult d1 = dual(g);
  const DualResult d2 = dual(d1.dual);
  const Graph& dd = d2.dual.graph();
  std::map<std::set<EdgeId>, VertexId> by_incidence;
  for (VertexId v = 0; v < g.graph().vertex_count(); ++v) {
    auto inc = g.graph().incident(v);
    by_incidence[std::set<EdgeId>(inc.begin(), inc.end())] = v;
  }
  std::vector<EdgeId> primal_of(dd.edge_count());
  for (EdgeId e = 0; e < g.graph().edge_count(); ++e) {
    primal_of[d2.edge_of_edge[d1.edge_of_edge[e]]] = e;
  }
  std::vector<VertexId> out;
  for (VertexId x = 0; x < dd.vertex_count(); ++x) {
    std::set<EdgeId> inc;
    for (EdgeId e : dd.incident(x)) inc.insert(primal_of[e]);
    auto it = by_incidence.find(inc);
    if (it == by_incidence.end()) return {};
    out.push_back(it->second);
  }
  return out;
}

inline bool double_dual_isomorphic(const EmbeddedGraph& g) {
  const auto map = double_dual_vertex_map(g);
  if (map.size() != g.graph().vertex_count()) return false;
  if (std::set<VertexId>(map.begin(), map.end()).size() != map.size()) return false;
  const DualResult d1 = dual(g);
  const DualResult d2 = dual(d1.dual);
  for (EdgeId e = 0; e < g.graph().edge_count(); ++e) {
    const Edge& pe = g.graph().edge(e);
    const Edge& de = d2.dual.graph().edge(d2.edge_of_edge[d1.edge_of_edge[e]]);
    if (!Edge{map[de.u], map[de.v], {}}.same_endpoints(pe)) return false;
  }
  return true;
}

// Fewest crossings over all simple face sequences that never cross an edge
// sharing an endpoint with (u, v) and never cross one base edge twice.
inline std::optional<std::size_t> brute_force_insertion(const TopologicalDrawing& d, VertexId u, VertexId v) {
  const FaceReport faces = trace_faces(d.skeleton());
  const Graph& sk = d.skeleton().graph();
  auto has_corner = [&](std::size_t f, VertexId x) {
    for (Dart a : faces.faces[f]) {
      if (head(sk, a) == x) return true;
    }
    return false;
  };
  std::optional<std::size_t> best;
  std::vector<bool> on_path(faces.face_count(), false);
  std::set<EdgeId> used;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t f, std::size_t depth) {
    if (best && depth >= *best) return;
    if (has_corner(f, v)) {
      best = depth;
      return;
    }
    on_path[f] = true;
    for (Dart c : faces.faces[f]) {
      const EdgeId o = d.owner(dart_edge(c));
      if (d.base().edge(o).has(u) || d.base().edge(o).has(v) || used.contains(o)) continue;
      const std::size_t g = faces.face_of_dart[twin(c)];
      if (on_path[g]) continue;
      used.insert(o);
      dfs(g, depth + 1);
      used.erase(o);
    }
    on_path[f] = false;
  };
  for (std::size_t f = 0; f < faces.face_count(); ++f) {
    if (has_corner(f, u)) dfs(f, 0);
  }
  return best;
}

}  // namespace crossratio::testing
