#include "crossratio/embedding.hpp"

#include <algorithm>
#include <cmath>

namespace crossratio {

Dart out_dart(const Graph& g, EdgeId e, VertexId from) {
  const Edge& ed = g.edge(e);
  if (ed.u == from) return make_dart(e, false);
  if (ed.v == from) return make_dart(e, true);
  throw GraphError("vertex " + std::to_string(from) + " is not an endpoint of edge " +
                   std::to_string(e));
}

EmbeddedGraph::EmbeddedGraph(Graph graph, Rotation rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  if (rotation_.size() != graph_.vertex_count()) {
    throw GraphError("rotation system must list every vertex");
  }
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  position_.assign(graph_.edge_count() * 2, kUnset);
  for (VertexId v = 0; v < rotation_.size(); ++v) {
    const auto& rot = rotation_[v];
    for (std::uint32_t i = 0; i < rot.size(); ++i) {
      const Dart d = rot[i];
      if (dart_edge(d) >= graph_.edge_count()) throw GraphError("rotation names an unknown edge");
      if (tail(graph_, d) != v) {
        throw GraphError("dart listed at vertex " + std::to_string(v) + " does not start there");
      }
      if (position_[d] != kUnset) throw GraphError("edge-end listed twice in the rotation system");
      position_[d] = i;
    }
  }
  for (Dart d = 0; d < position_.size(); ++d) {
    if (position_[d] == kUnset) {
      throw GraphError("edge-end of edge " + std::to_string(dart_edge(d)) +
                       " missing from the rotation system");
    }
  }
}

Dart EmbeddedGraph::successor(Dart d) const {
  const auto& rot = rotation_[tail(graph_, d)];
  return rot[(position_[d] + 1) % rot.size()];
}

Dart EmbeddedGraph::predecessor(Dart d) const {
  const auto& rot = rotation_[tail(graph_, d)];
  return rot[(position_[d] + rot.size() - 1) % rot.size()];
}

std::vector<VertexId> FaceReport::face_vertices(const Graph& g, std::size_t f) const {
  std::vector<VertexId> out;
  for (Dart d : faces.at(f)) out.push_back(tail(g, d));
  return out;
}

FaceReport trace_faces(const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  FaceReport report;
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  report.face_of_dart.assign(g.edge_count() * 2, kUnset);
  for (Dart start = 0; start < report.face_of_dart.size(); ++start) {
    if (report.face_of_dart[start] != kUnset) continue;
    const std::size_t id = report.faces.size();
    std::vector<Dart> walk;
    Dart d = start;
    do {
      report.face_of_dart[d] = id;
      walk.push_back(d);
      d = eg.face_next(d);
    } while (d != start);
    report.faces.push_back(std::move(walk));
  }

  std::size_t largest = 0;
  for (const auto& f : report.faces) {
    ++report.size_histogram[f.size()];
    largest = std::max(largest, f.size());
  }
  if (largest > 4) {
    for (std::size_t f = 0; f < report.faces.size(); ++f) {
      if (report.faces[f].size() == largest) report.polar_faces.push_back(f);
    }
  }

  const auto comp = g.components();
  const std::size_t ncomp = g.component_count();
  std::vector<long> v(ncomp, 0), e(ncomp, 0), f(ncomp, 0);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    ++v[comp[x]];
    if (g.degree(x) == 0) ++f[comp[x]];
  }
  for (const Edge& ed : g.edges()) ++e[comp[ed.u]];
  for (const auto& face : report.faces) ++f[comp[tail(g, face.front())]];
  for (std::size_t c = 0; c < ncomp; ++c) {
    report.euler_per_component.push_back(v[c] - e[c] + f[c]);
    if (v[c] - e[c] + f[c] != 2) report.genus_zero = false;
  }
  return report;
}

DualResult dual(const EmbeddedGraph& eg) {
  const Graph& g = eg.graph();
  if (g.component_count() != 1) throw GraphError("dual requires a connected embedding");
  DualResult out;
  out.primal_faces = trace_faces(eg);
  const FaceReport& faces = out.primal_faces;
  if (!faces.genus_zero) throw GraphError("dual requires a genus-0 embedding");

  Graph d;
  for (std::size_t h = 0; h < faces.face_count(); ++h) {
    out.vertex_of_face.push_back(d.add_vertex());
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto right = faces.face_of_dart[make_dart(e, false)];
    const auto left = faces.face_of_dart[make_dart(e, true)];
    if (right == left) throw GraphError("edge " + std::to_string(e) + " is a bridge; dual has a loop");
    out.edge_of_edge.push_back(d.add_edge(static_cast<VertexId>(right), static_cast<VertexId>(left),
                                          g.edge(e).label));
  }
  // The dual dart of e* leaving face(d) has the same number as d; the face
  // walk runs clockwise around h*, so its reverse is the ccw rotation.
  Rotation rot(faces.face_count());
  for (std::size_t h = 0; h < faces.face_count(); ++h) {
    rot[h].assign(faces.faces[h].rbegin(), faces.faces[h].rend());
  }
  out.dual = EmbeddedGraph(std::move(d), std::move(rot));
  return out;
}

void insert_at_corner(Rotation& rotation, const Graph& g, Dart incoming, Dart d) {
  const Dart anchor = twin(incoming);
  auto& rot = rotation.at(tail(g, anchor));
  auto it = std::find(rot.begin(), rot.end(), anchor);
  if (it == rot.end()) throw GraphError("corner anchor missing from rotation");
  rot.insert(it + 1, d);
}

EmbeddedGraph insert_vertex_in_face(const EmbeddedGraph& eg, const FaceReport& faces,
                                    std::size_t face, std::span<const std::size_t> corner_positions,
                                    std::string name, std::string label) {
  Graph g = eg.graph();
  Rotation rot = eg.rotation();
  const auto& walk = faces.faces.at(face);
  const VertexId w = g.add_vertex(std::move(name));
  rot.emplace_back();
  std::vector<std::pair<std::size_t, Dart>> around;
  for (std::size_t pos : corner_positions) {
    const Dart incoming = walk.at(pos);
    const VertexId corner = head(g, incoming);
    const EdgeId e = g.add_edge(w, corner, label);
    insert_at_corner(rot, g, incoming, make_dart(e, true));
    around.emplace_back(pos, make_dart(e, false));
  }
  // walk order is clockwise around the face interior
  std::sort(around.begin(), around.end());
  for (auto it = around.rbegin(); it != around.rend(); ++it) rot[w].push_back(it->second);
  EmbeddedGraph out(std::move(g), std::move(rot));
  out.outer_face_dart = eg.outer_face_dart;
  return out;
}

EmbeddedGraph embed_straight_line(Graph g, std::span<const Point> positions) {
  if (positions.size() != g.vertex_count()) throw GraphError("one position per vertex expected");
  Rotation rot(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<double, Dart>> darts;
    for (EdgeId e : g.incident(v)) {
      const Point& a = positions[v];
      const Point& b = positions[g.edge(e).other(v)];
      darts.emplace_back(std::atan2(b.y - a.y, b.x - a.x), out_dart(g, e, v));
    }
    std::sort(darts.begin(), darts.end());
    for (const auto& [angle, d] : darts) rot[v].push_back(d);
  }
  return EmbeddedGraph(std::move(g), std::move(rot));
}

EmbeddedGraph mirrored(const EmbeddedGraph& eg) {
  Rotation rot = eg.rotation();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return EmbeddedGraph(eg.graph(), std::move(rot));
}

}  // namespace crossratio
