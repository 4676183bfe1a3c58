#include "crossratio/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace crossratio {

std::vector<EdgeId> CrossingScheme::partners_in_order(EdgeId e) const {
  if (auto it = order.find(e); it != order.end()) return it->second;
  std::vector<EdgeId> out;
  for (const EdgePair& p : pairs) {
    if (p.contains(e)) out.push_back(p.partner(e));
  }
  return out;
}

TopologicalDrawing::TopologicalDrawing(Graph base, EmbeddedGraph skeleton,
                                       std::vector<std::vector<EdgeId>> paths)
    : base_(std::move(base)), skeleton_(std::move(skeleton)), paths_(std::move(paths)) {
  const Graph& sk = skeleton_.graph();
  if (sk.vertex_count() < base_.vertex_count()) {
    throw GraphError("skeleton has fewer vertices than the base graph");
  }
  if (paths_.size() != base_.edge_count()) {
    throw GraphError("drawing needs one segment path per base edge");
  }
  owner_.assign(sk.edge_count(), kNoEdge);
  for (EdgeId e = 0; e < paths_.size(); ++e) {
    for (EdgeId s : paths_[e]) {
      if (s >= sk.edge_count()) throw GraphError("segment id out of range");
      if (owner_[s] == kNoEdge) owner_[s] = e;
    }
  }
  through_.assign(dummy_count(), {});
  for (EdgeId e = 0; e < paths_.size(); ++e) {
    for (VertexId v : path_vertices(e)) {
      if (is_dummy(v)) through_[v - base_.vertex_count()].push_back(e);
    }
  }
}

EdgePair TopologicalDrawing::crossing_pair(VertexId dummy) const {
  const auto& through = edges_at(dummy);
  if (through.size() != 2) throw GraphError("dummy does not lie on exactly two edges");
  return {through[0], through[1]};
}

std::vector<VertexId> TopologicalDrawing::path_vertices(EdgeId e) const {
  const Graph& sk = skeleton_.graph();
  const Edge& be = base_.edge(e);
  std::vector<VertexId> out{be.u};
  for (EdgeId s : paths_.at(e)) {
    const Edge& se = sk.edge(s);
    if (se.u == out.back()) {
      out.push_back(se.v);
    } else if (se.v == out.back()) {
      out.push_back(se.u);
    } else {
      return {};
    }
  }
  if (out.back() != be.v) return {};
  return out;
}

std::size_t TopologicalDrawing::crossings_on(EdgeId e) const {
  const auto& s = paths_.at(e);
  return s.empty() ? 0 : s.size() - 1;
}

ValidityReport validate(const TopologicalDrawing& d) {
  ValidityReport r;
  const Graph& base = d.base();
  const Graph& sk = d.skeleton().graph();
  const std::size_t n = base.vertex_count();
  auto fail = [&r](bool& flag, std::string message) {
    flag = false;
    r.violations.push_back(std::move(message));
  };

  std::vector<std::size_t> uses(sk.edge_count(), 0);
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    for (EdgeId s : d.segments(e)) ++uses[s];
    const auto verts = d.path_vertices(e);
    if (verts.empty()) {
      fail(r.paths_consistent, "edge " + std::to_string(e) + " is not a path between its endpoints");
      continue;
    }
    std::set<VertexId> seen;
    for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
      if (!d.is_dummy(verts[i])) {
        fail(r.paths_consistent, "edge " + std::to_string(e) + " passes through vertex " +
                                     std::to_string(verts[i]));
      } else if (!seen.insert(verts[i]).second) {
        fail(r.simple, "edge " + std::to_string(e) + " crosses itself");
      }
    }
  }
  for (EdgeId s = 0; s < sk.edge_count(); ++s) {
    if (uses[s] != 1) {
      fail(r.segments_partitioned, "segment " + std::to_string(s) + " belongs to " +
                                       std::to_string(uses[s]) + " edges");
    }
  }

  std::map<EdgePair, std::size_t> pair_count;
  for (VertexId x = static_cast<VertexId>(n); x < sk.vertex_count(); ++x) {
    const std::string where = "dummy " + std::to_string(x);
    if (sk.degree(x) != 4) fail(r.dummies_degree_four, where + " has degree " + std::to_string(sk.degree(x)));
    std::set<EdgeId> through(d.edges_at(x).begin(), d.edges_at(x).end());
    if (through.size() != 2) {
      fail(r.dummies_on_two_paths, where + " lies on " + std::to_string(through.size()) + " edges");
      continue;
    }
    const EdgeId e = *through.begin(), f = *through.rbegin();
    if (base.adjacent(e, f)) {
      fail(r.simple, where + " is a crossing of adjacent edges " + std::to_string(e) + ", " +
                         std::to_string(f));
    }
    if (++pair_count[{e, f}] == 2) {
      fail(r.simple, "edges " + std::to_string(e) + ", " + std::to_string(f) + " cross twice");
    }
    const auto rot = d.skeleton().rotation(x);
    if (rot.size() == 4) {
      EdgeId o[4];
      for (int i = 0; i < 4; ++i) o[i] = d.owner(dart_edge(rot[i]));
      if (!(o[0] == o[2] && o[1] == o[3] && o[0] != o[1])) {
        fail(r.crossings_alternate, where + " is a touching, not a crossing");
      }
    }
  }

  const FaceReport faces = trace_faces(d.skeleton());
  if (!faces.genus_zero) fail(r.genus_zero, "skeleton rotation system is not planar");
  r.crossings = sk.vertex_count() - n;
  return r;
}

std::size_t crossing_count(const TopologicalDrawing& d) {
  const ValidityReport r = validate(d);
  if (!r.valid()) throw GraphError("invalid drawing: " + r.violations.front());
  return r.crossings;
}

TopologicalDrawing plane_drawing(const EmbeddedGraph& g) {
  std::vector<std::vector<EdgeId>> paths(g.graph().edge_count());
  for (EdgeId e = 0; e < paths.size(); ++e) paths[e] = {e};
  return canonicalize(TopologicalDrawing(g.graph(), g, std::move(paths)));
}

CrossingScheme scheme_of(const TopologicalDrawing& d) {
  CrossingScheme s;
  for (VertexId x = static_cast<VertexId>(d.base().vertex_count());
       x < d.skeleton().graph().vertex_count(); ++x) {
    s.pairs.push_back(d.crossing_pair(x));
  }
  std::sort(s.pairs.begin(), s.pairs.end());
  for (EdgeId e = 0; e < d.base().edge_count(); ++e) {
    if (d.crossings_on(e) < 2) continue;
    auto& order = s.order[e];
    for (VertexId v : d.path_vertices(e)) {
      if (d.is_dummy(v)) order.push_back(d.crossing_pair(v).partner(e));
    }
  }
  return s;
}

Planarization planarize(const Graph& g, const CrossingScheme& s) {
  const std::size_t n = g.vertex_count();
  std::vector<EdgePair> pairs = s.pairs;
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::vector<EdgeId>> partners(g.edge_count());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const EdgePair& p = pairs[i];
    if (!g.has_edge(p.first) || !g.has_edge(p.second)) throw GraphError("crossing of unknown edge");
    if (p.first == p.second) throw GraphError("edge crossing itself");
    if (i > 0 && pairs[i - 1] == p) throw GraphError("repeated crossing pair");
    partners[p.first].push_back(p.second);
    partners[p.second].push_back(p.first);
  }
  for (const auto& [e, order] : s.order) {
    if (!g.has_edge(e)) throw GraphError("crossing order for unknown edge");
    std::vector<EdgeId> a = order, b = partners[e];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw GraphError("crossing order of edge " + std::to_string(e) + " does not match its pairs");
  }

  Planarization out;
  for (VertexId v = 0; v < n; ++v) out.skeleton.add_vertex(g.vertex_name(v));
  for (std::size_t i = 0; i < pairs.size(); ++i) out.skeleton.add_vertex();
  out.dummy_pairs = pairs;
  auto dummy_of = [&](EdgeId e, EdgeId f) {
    const auto it = std::lower_bound(pairs.begin(), pairs.end(), EdgePair(e, f));
    return static_cast<VertexId>(n + (it - pairs.begin()));
  };
  out.paths.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<EdgeId> along;
    if (auto it = s.order.find(e); it != s.order.end()) {
      along = it->second;
    } else if (partners[e].size() >= 2) {
      throw GraphError("edge " + std::to_string(e) + " has several crossings but no order");
    } else {
      along = partners[e];
    }
    const Edge& be = g.edge(e);
    VertexId cur = be.u;
    for (EdgeId f : along) {
      const VertexId x = dummy_of(e, f);
      out.paths[e].push_back(out.skeleton.add_edge(cur, x, be.label));
      cur = x;
    }
    out.paths[e].push_back(out.skeleton.add_edge(cur, be.v, be.label));
  }
  return out;
}

TopologicalDrawing realize(const Graph& g, const CrossingScheme& s, const EmbeddedGraph& embedding) {
  Planarization p = planarize(g, s);
  const Graph& eg = embedding.graph();
  if (eg.vertex_count() != p.skeleton.vertex_count() || eg.edge_count() != p.skeleton.edge_count()) {
    throw GraphError("embedding does not match the planarization");
  }
  for (EdgeId e = 0; e < eg.edge_count(); ++e) {
    if (eg.edge(e).u != p.skeleton.edge(e).u || eg.edge(e).v != p.skeleton.edge(e).v) {
      throw GraphError("embedding does not match the planarization");
    }
  }
  EmbeddedGraph sk(std::move(p.skeleton), embedding.rotation());
  if (!trace_faces(sk).genus_zero) throw GraphError("embedding is not planar");
  TopologicalDrawing raw(g, std::move(sk), std::move(p.paths));

  DrawingBuilder builder(raw);
  for (VertexId x = static_cast<VertexId>(g.vertex_count()); x < raw.skeleton().graph().vertex_count();
       ++x) {
    const auto rot = raw.skeleton().rotation(x);
    if (raw.owner(dart_edge(rot[0])) != raw.owner(dart_edge(rot[2]))) builder.smooth(x);
  }
  return builder.build();
}

DrawingBuilder::DrawingBuilder(const TopologicalDrawing& d)
    : base_(d.base()), rot_(d.skeleton().rotation()), paths_(d.paths()) {
  const Graph& sk = d.skeleton().graph();
  for (const Edge& e : sk.edges()) ends_.emplace_back(e.u, e.v);
  for (EdgeId s = 0; s < sk.edge_count(); ++s) {
    if (d.owner(s) == kNoEdge) throw GraphError("segment without an edge");
    owner_.push_back(d.owner(s));
  }
  edge_alive_.assign(sk.edge_count(), true);
  vertex_alive_.assign(sk.vertex_count(), true);
  base_alive_.assign(d.base().edge_count(), true);
}

VertexId DrawingBuilder::add_dummy() {
  rot_.emplace_back();
  vertex_alive_.push_back(true);
  return static_cast<VertexId>(rot_.size() - 1);
}

EdgeId DrawingBuilder::add_segment(VertexId a, VertexId b, EdgeId owner) {
  ends_.emplace_back(a, b);
  owner_.push_back(owner);
  edge_alive_.push_back(true);
  return static_cast<EdgeId>(ends_.size() - 1);
}

VertexId DrawingBuilder::tail_of(Dart d) const {
  const auto& [a, b] = ends_.at(dart_edge(d));
  return (d & 1u) ? b : a;
}

void DrawingBuilder::replace_dart(VertexId at, Dart old_dart, Dart new_dart) {
  auto& r = rot_.at(at);
  auto it = std::find(r.begin(), r.end(), old_dart);
  if (it == r.end()) throw GraphError("dart not found in rotation");
  *it = new_dart;
}

void DrawingBuilder::insert_after(VertexId at, Dart anchor, Dart d) {
  auto& r = rot_.at(at);
  auto it = std::find(r.begin(), r.end(), anchor);
  if (it == r.end()) throw GraphError("corner dart not found in rotation");
  r.insert(it + 1, d);
}

EdgeId DrawingBuilder::add_routed_edge(VertexId u, VertexId v, Dart start_corner,
                                       const std::vector<Dart>& crossed, Dart end_corner,
                                       std::string label) {
  if (tail_of(twin(start_corner)) != u || tail_of(twin(end_corner)) != v) {
    throw GraphError("corner darts do not end at the edge endpoints");
  }
  const EdgeId e = base_.add_edge(u, v, std::move(label));
  base_alive_.push_back(true);
  std::vector<VertexId> stops{u};
  for (std::size_t i = 0; i < crossed.size(); ++i) stops.push_back(add_dummy());
  stops.push_back(v);
  std::vector<EdgeId> segs;
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) segs.push_back(add_segment(stops[i], stops[i + 1], e));
  insert_after(u, twin(start_corner), make_dart(segs.front(), false));
  insert_after(v, twin(end_corner), make_dart(segs.back(), true));

  for (std::size_t i = 0; i < crossed.size(); ++i) {
    const Dart d = crossed[i];
    const EdgeId s = dart_edge(d);
    if (!edge_alive_.at(s)) throw GraphError("crossed segment was already split");
    const VertexId x = stops[i + 1];
    const auto [a, b] = ends_[s];
    const EdgeId owner = owner_[s];
    const EdgeId to_a = add_segment(a, x, owner), to_b = add_segment(x, b, owner);
    replace_dart(a, make_dart(s, false), make_dart(to_a, false));
    replace_dart(b, make_dart(s, true), make_dart(to_b, true));
    edge_alive_[s] = false;

    auto& path = paths_[owner];
    const auto pos = std::find(path.begin(), path.end(), s);
    // the owner path runs a -> b iff the segment before s ends at a
    VertexId before = base_.edge(owner).u;
    for (auto it = path.begin(); it != pos; ++it) {
      before = ends_[*it].first == before ? ends_[*it].second : ends_[*it].first;
    }
    const bool forward = before == a;
    *pos = forward ? to_a : to_b;
    path.insert(pos + 1, forward ? to_b : to_a);

    // crossing p -> q with the previous face on the right
    const bool d_from_a = (d & 1u) == 0;
    const Dart to_q = d_from_a ? make_dart(to_b, false) : make_dart(to_a, true);
    const Dart to_p = d_from_a ? make_dart(to_a, true) : make_dart(to_b, false);
    rot_[x] = {to_q, make_dart(segs[i + 1], false), to_p, make_dart(segs[i], true)};
  }
  paths_.push_back(std::move(segs));
  return e;
}

void DrawingBuilder::merge_at(VertexId x, EdgeId e) {
  auto& path = paths_[e];
  auto p0 = std::find_if(path.begin(), path.end(),
                         [&](EdgeId s) { return ends_[s].first == x || ends_[s].second == x; });
  if (p0 == path.end() || p0 + 1 == path.end()) throw GraphError("edge does not pass through dummy");
  const auto p1 = p0 + 1;
  const EdgeId first = *p0, second = *p1;
  const VertexId y0 = ends_[first].first == x ? ends_[first].second : ends_[first].first;
  const VertexId y1 = ends_[second].first == x ? ends_[second].second : ends_[second].first;
  const EdgeId t = add_segment(y0, y1, e);
  replace_dart(y0, make_dart(first, ends_[first].first != y0), make_dart(t, false));
  replace_dart(y1, make_dart(second, ends_[second].first != y1), make_dart(t, true));
  edge_alive_[first] = edge_alive_[second] = false;
  *p0 = t;
  path.erase(p1);
}

void DrawingBuilder::smooth(VertexId x) {
  auto& r = rot_.at(x);
  if (r.size() != 4) throw GraphError("smoothing needs a degree-4 dummy");
  std::set<EdgeId> owners;
  for (Dart d : r) owners.insert(owner_[dart_edge(d)]);
  if (owners.size() != 2) throw GraphError("smoothing needs a dummy on two edges");
  if (owner_[dart_edge(r[0])] == owner_[dart_edge(r[2])]) throw GraphError("dummy is a proper crossing");
  for (EdgeId e : owners) merge_at(x, e);
  r.clear();
  vertex_alive_[x] = false;
}

void DrawingBuilder::remove_dart(VertexId at, Dart d) {
  auto& r = rot_.at(at);
  auto it = std::find(r.begin(), r.end(), d);
  if (it == r.end()) throw GraphError("dart not found in rotation");
  r.erase(it);
}

void DrawingBuilder::erase_edge(EdgeId e) {
  if (e >= paths_.size() || !base_alive_[e]) throw GraphError("no such edge to erase");
  const std::size_t n = base_.vertex_count();
  for (EdgeId s : paths_[e]) {
    const auto [a, b] = ends_[s];
    edge_alive_[s] = false;
    if (a < n) remove_dart(a, make_dart(s, false));
    if (b < n) remove_dart(b, make_dart(s, true));
  }
  for (EdgeId s : paths_[e]) {
    for (VertexId x : {ends_[s].first, ends_[s].second}) {
      if (x < n || !vertex_alive_[x]) continue;
      auto& r = rot_[x];
      r.erase(std::remove_if(r.begin(), r.end(), [&](Dart d) { return owner_[dart_edge(d)] == e; }),
              r.end());
      if (r.size() != 2) throw GraphError("erased edge passes a dummy of unexpected degree");
      merge_at(x, owner_[dart_edge(r[0])]);
      r.clear();
      vertex_alive_[x] = false;
    }
  }
  paths_[e].clear();
  base_alive_[e] = false;
}

TopologicalDrawing remove_edge(const TopologicalDrawing& d, EdgeId e) {
  DrawingBuilder b(d);
  b.erase_edge(e);
  return b.build();
}

TopologicalDrawing DrawingBuilder::build() const {
  const std::size_t n = base_.vertex_count();
  std::vector<EdgeId> live, removed;  // old base edge ids; new id = index in live
  for (EdgeId e = 0; e < paths_.size(); ++e) (base_alive_[e] ? live : removed).push_back(e);
  Graph base = removed.empty() ? base_ : remove_edges(base_, removed);

  // walk every path once: vertex sequence and segment orientation
  std::vector<std::vector<VertexId>> walks(live.size());
  std::vector<std::vector<EdgeId>> through(rot_.size());
  for (EdgeId e = 0; e < live.size(); ++e) {
    VertexId cur = base.edge(e).u;
    walks[e].push_back(cur);
    for (EdgeId s : paths_[live[e]]) {
      const auto [a, b] = ends_[s];
      if (!edge_alive_[s] || (a != cur && b != cur)) throw GraphError("broken segment path");
      cur = a == cur ? b : a;
      walks[e].push_back(cur);
      if (cur >= n) through[cur].push_back(e);
    }
    if (cur != base.edge(e).v) throw GraphError("segment path ends at the wrong vertex");
  }

  // dummies sorted by crossing pair, ties by position along the first edge
  std::vector<std::tuple<EdgePair, std::size_t, VertexId>> keys;
  for (VertexId x = static_cast<VertexId>(n); x < rot_.size(); ++x) {
    if (!vertex_alive_[x]) continue;
    if (through[x].size() != 2) throw GraphError("dummy does not lie on exactly two edges");
    const EdgePair pair(through[x][0], through[x][1]);
    const auto& w = walks[pair.first];
    keys.emplace_back(pair, std::find(w.begin(), w.end(), x) - w.begin(), x);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<VertexId> new_id(rot_.size(), kNoVertex);
  for (VertexId v = 0; v < n; ++v) new_id[v] = v;
  for (std::size_t i = 0; i < keys.size(); ++i) new_id[std::get<2>(keys[i])] = static_cast<VertexId>(n + i);

  Graph sk;
  for (VertexId v = 0; v < n; ++v) sk.add_vertex(base.vertex_name(v));
  for (std::size_t i = 0; i < keys.size(); ++i) sk.add_vertex();
  std::vector<EdgeId> new_edge(ends_.size(), kNoEdge);
  std::vector<std::vector<EdgeId>> paths(live.size());
  for (EdgeId e = 0; e < live.size(); ++e) {
    const auto& old_path = paths_[live[e]];
    for (std::size_t i = 0; i < old_path.size(); ++i) {
      const EdgeId s = old_path[i];
      new_edge[s] = sk.add_edge(new_id[walks[e][i]], new_id[walks[e][i + 1]], base.edge(e).label);
      paths[e].push_back(new_edge[s]);
    }
  }
  for (EdgeId s = 0; s < ends_.size(); ++s) {
    if (edge_alive_[s] && new_edge[s] == kNoEdge) throw GraphError("segment without an edge");
  }

  Rotation rot(sk.vertex_count());
  for (VertexId v = 0; v < rot_.size(); ++v) {
    if (!vertex_alive_[v]) continue;
    auto& out = rot[new_id[v]];
    for (Dart d : rot_[v]) out.push_back(out_dart(sk, new_edge[dart_edge(d)], new_id[v]));
    if (!out.empty()) std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
  }
  return TopologicalDrawing(std::move(base), EmbeddedGraph(std::move(sk), std::move(rot)),
                            std::move(paths));
}

TopologicalDrawing canonicalize(const TopologicalDrawing& d) { return DrawingBuilder(d).build(); }

}  // namespace crossratio
