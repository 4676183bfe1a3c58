#include "crossratio/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace crossratio {

Graph::Graph(std::size_t vertex_count) {
  for (std::size_t i = 0; i < vertex_count; ++i) add_vertex();
}

VertexId Graph::add_vertex(std::string name) {
  const auto id = static_cast<VertexId>(names_.size());
  if (!name.empty()) {
    auto [it, inserted] = by_name_.emplace(name, id);
    if (!inserted) throw GraphError("duplicate vertex name '" + name + "'");
  }
  names_.push_back(std::move(name));
  incidence_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(VertexId u, VertexId v, std::string label) {
  if (!has_vertex(u) || !has_vertex(v)) throw GraphError("edge endpoint does not exist");
  if (u == v) throw GraphError("self-loops are not allowed");
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{u, v, std::move(label)});
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  return id;
}

const Edge& Graph::edge(EdgeId e) const {
  if (!has_edge(e)) throw GraphError("unknown edge id " + std::to_string(e));
  return edges_[e];
}

std::span<const EdgeId> Graph::incident(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex id " + std::to_string(v));
  return incidence_[v];
}

const std::string& Graph::vertex_name(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex id " + std::to_string(v));
  return names_[v];
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw GraphError("no vertex named '" + std::string(name) + "'");
}

void Graph::set_label(EdgeId e, std::string label) {
  if (!has_edge(e)) throw GraphError("unknown edge id " + std::to_string(e));
  edges_[e].label = std::move(label);
}

std::vector<EdgeId> Graph::edges_with_label(std::string_view label) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].label == label) out.push_back(e);
  }
  return out;
}

bool Graph::adjacent(EdgeId a, EdgeId b) const {
  const Edge& ea = edge(a);
  const Edge& eb = edge(b);
  return ea.has(eb.u) || ea.has(eb.v);
}

std::size_t Graph::multiplicity(VertexId u, VertexId v) const {
  std::size_t count = 0;
  for (EdgeId e : incident(u)) {
    if (edges_[e].other(u) == v) ++count;
  }
  return count;
}

std::vector<EdgeId> Graph::edges_between(VertexId u, VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e : incident(u)) {
    if (edges_[e].other(u) == v) out.push_back(e);
  }
  return out;
}

std::size_t Graph::max_multiplicity() const {
  std::size_t best = edges_.empty() ? 0 : 1;
  std::vector<std::size_t> seen(names_.size(), 0);
  for (VertexId u = 0; u < names_.size(); ++u) {
    for (EdgeId e : incidence_[u]) ++seen[edges_[e].other(u)];
    for (EdgeId e : incidence_[u]) {
      auto& c = seen[edges_[e].other(u)];
      best = std::max(best, c);
      c = 0;
    }
  }
  return best;
}

std::vector<std::size_t> Graph::components() const {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(names_.size(), kUnset);
  std::size_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < names_.size(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : incidence_[x]) {
        VertexId y = edges_[e].other(x);
        if (comp[y] == kUnset) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::size_t Graph::component_count() const {
  auto comp = components();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

Graph remove_edges(const Graph& g, std::span<const EdgeId> removed,
                   std::vector<EdgeId>* old_to_new) {
  std::unordered_set<EdgeId> drop(removed.begin(), removed.end());
  Graph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.vertex_name(v));
  if (old_to_new) old_to_new->assign(g.edge_count(), kNoEdge);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (drop.contains(e)) continue;
    const Edge& ed = g.edge(e);
    EdgeId ne = out.add_edge(ed.u, ed.v, ed.label);
    if (old_to_new) (*old_to_new)[e] = ne;
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (VertexId i = 0; i < a; ++i) {
    for (VertexId j = 0; j < b; ++j) g.add_edge(i, static_cast<VertexId>(a + j));
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (VertexId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace crossratio
