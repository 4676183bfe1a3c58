#include "crossratio/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>

#include "crossratio/insertion.hpp"
#include "crossratio/operators.hpp"

namespace crossratio {

namespace {

std::string name_of(std::string_view role) { return std::string(role); }

// Apex of the j-th two-path drawn beside segment p-q: alternating sides,
// growing offsets, all within `reach` of the segment.
Point path_apex(Point p, Point q, std::size_t j, std::size_t count, double reach, bool one_side = false) {
  const double dx = q.x - p.x, dy = q.y - p.y;
  const double len = std::hypot(dx, dy);
  const double nx = -dy / len, ny = dx / len;
  double side = 1, level = static_cast<double>(j + 1);
  std::size_t levels = count;
  if (!one_side) {
    side = j % 2 == 0 ? 1 : -1;
    level = static_cast<double>(j / 2 + 1);
    levels = (count + 1) / 2;
  }
  const double t = side * reach * level / static_cast<double>(levels);
  return {(p.x + q.x) / 2 + nx * t, (p.y + q.y) / 2 + ny * t};
}

// Graph with `count` two-paths added beside edge e; returns the path edges.
std::vector<EdgeId> extend_in_place(Graph& g, EdgeId e, std::size_t count, std::string_view label) {
  const EdgeId first = static_cast<EdgeId>(g.edge_count());
  g = extend_edge(g, e, count);
  std::vector<EdgeId> added;
  for (EdgeId f = first; f < g.edge_count(); ++f) {
    g.set_label(f, std::string(label));
    added.push_back(f);
  }
  return added;
}

// Inserts every listed edge of `full` (absent from `d`) with the fewest
// crossings allowed by `crossable`; throws when no route exists.
TopologicalDrawing insert_all(TopologicalDrawing d, const Graph& full, const std::vector<EdgeId>& edges,
                              const CrossablePredicate& crossable = {}) {
  for (EdgeId e : edges) {
    const Edge& ed = full.edge(e);
    auto r = insert_edge_min_crossings(d, ed.u, ed.v, ed.label, crossable);
    if (!r || r->edge != e) throw GraphError("edge " + std::to_string(e) + " could not be inserted");
    d = std::move(r->drawing);
  }
  return d;
}

// Same drawing with base edge e taken from edge drawn_id[e] of `drawn`.
TopologicalDrawing renumber_edges(const TopologicalDrawing& drawn, const std::vector<EdgeId>& drawn_id) {
  Graph base;
  for (VertexId v = 0; v < drawn.base().vertex_count(); ++v) base.add_vertex(drawn.base().vertex_name(v));
  std::vector<std::vector<EdgeId>> paths;
  for (EdgeId e : drawn_id) {
    const Edge& ed = drawn.base().edge(e);
    base.add_edge(ed.u, ed.v, ed.label);
    paths.push_back(drawn.segments(e));
  }
  return canonicalize(TopologicalDrawing(std::move(base), drawn.skeleton(), std::move(paths)));
}

TopologicalDrawing plane_part(const Graph& full, const std::vector<EdgeId>& left_out,
                              const std::vector<Point>& layout) {
  for (std::size_t i = 0; i < left_out.size(); ++i) {
    if (left_out[i] != full.edge_count() - left_out.size() + i) {
      throw GraphError("edges left out of the plane part must be the last ones");
    }
  }
  return plane_drawing(embed_straight_line(remove_edges(full, left_out), layout));
}

// Walk position i whose dart leaves vertex v (the corner of v is at i-1).
std::size_t leaving_position(const Graph& g, const std::vector<Dart>& walk, VertexId v) {
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (tail(g, walk[i]) == v) return i;
  }
  throw GraphError("vertex is not on the face");
}

}  // namespace

// ---------------------------------------------------------------------------
// 1-planar family

OneplanarFamily gen_oneplanar(std::size_t ell) {
  if (ell < 3) throw GraphError("the 1-planar family needs ell >= 3");
  OneplanarFamily fam;
  fam.ell = ell;
  fam.below_bound = ell < 7;

  const EmbeddedGraph medial = medial_extension(cartesian_path2_cycle(ell));
  Graph p = medial.graph();
  for (EdgeId e = 0; e < p.edge_count(); ++e) p.set_label(e, name_of(role::kPrimal));
  fam.primal = EmbeddedGraph(p, medial.rotation());
  fam.primal_faces = trace_faces(fam.primal);
  const FaceReport& faces = fam.primal_faces;

  // polar faces: the a-cycle (f) and the c-cycle (g); z = a_0, x = b_0
  auto row_face = [&](char row) {
    for (std::size_t h = 0; h < faces.face_count(); ++h) {
      const auto vs = faces.face_vertices(p, h);
      if (vs.size() == ell && std::all_of(vs.begin(), vs.end(), [&](VertexId v) {
            return p.vertex_name(v)[0] == row;
          })) {
        return h;
      }
    }
    throw GraphError("polar face not found");
  };
  fam.face_f = row_face('a');
  fam.face_g = row_face('c');
  fam.z = p.vertex("a0");
  fam.x = p.vertex("b0");
  bool found_y = false;
  for (std::size_t h = 0; h < faces.face_count() && !found_y; ++h) {
    if (h == fam.face_f || faces.face_size(h) != 4) continue;
    const auto vs = faces.face_vertices(p, h);
    if (std::find(vs.begin(), vs.end(), fam.z) != vs.end()) {
      fam.face_y = h;
      found_y = true;
    }
  }
  if (!found_y) throw GraphError("no quadrangle at z");

  const DualResult dr = dual(fam.primal);
  fam.dual = dr.dual;
  const std::size_t np = p.vertex_count();
  Graph g = p;
  fam.dual_vertex_of_face.resize(faces.face_count());
  for (std::size_t h = 0; h < faces.face_count(); ++h) {
    std::string name = "h" + std::to_string(h) + "*";
    if (h == fam.face_f) name = "f*";
    if (h == fam.face_g) name = "g*";
    if (h == fam.face_y) name = "y*";
    fam.dual_vertex_of_face[h] = g.add_vertex(std::move(name));
  }
  // dual vertices are added in face order; keep the dual's own numbering aligned
  for (std::size_t h = 0; h < faces.face_count(); ++h) {
    if (dr.vertex_of_face[h] != h) throw GraphError("dual vertices must follow face order");
  }
  fam.dual_edge_of_edge.resize(p.edge_count());
  std::vector<EdgeId> primal_of_dual(p.edge_count());
  for (EdgeId e = 0; e < p.edge_count(); ++e) primal_of_dual[dr.edge_of_edge[e]] = e;
  for (EdgeId de = 0; de < dr.dual.graph().edge_count(); ++de) {
    if (primal_of_dual[de] != de) throw GraphError("dual edges must follow primal edge order");
    const Edge& ed = dr.dual.graph().edge(de);
    fam.dual_edge_of_edge[de] =
        g.add_edge(static_cast<VertexId>(np + ed.u), static_cast<VertexId>(np + ed.v), name_of(role::kDual));
  }
  fam.f_star = fam.dual_vertex_of_face[fam.face_f];
  fam.g_star = fam.dual_vertex_of_face[fam.face_g];
  fam.y_star = fam.dual_vertex_of_face[fam.face_y];
  for (Dart d : faces.faces[fam.face_f]) {
    fam.binding_edges.push_back(g.add_edge(fam.f_star, tail(p, d), name_of(role::kBinding)));
  }
  fam.special_edge = g.add_edge(fam.x, fam.y_star, name_of(role::kSpecial));
  fam.graph = std::move(g);
  return fam;
}

OneplanarMultiFamily gen_oneplanar_multi(std::size_t ell, std::size_t k) {
  if (ell < 6) throw GraphError("the 1-planar multigraph family needs ell >= 6");
  if (k < 1) throw GraphError("bundle size k must be at least 1");
  OneplanarMultiFamily fam;
  fam.base = gen_oneplanar(ell);
  fam.k = k;
  fam.graph = fam.base.graph;
  fam.copies.resize(fam.graph.edge_count());
  for (EdgeId e = 0; e < fam.graph.edge_count(); ++e) fam.copies[e].push_back(e);
  for (std::size_t round = 1; round < k; ++round) {
    for (EdgeId e = 0; e < fam.base.graph.edge_count(); ++e) {
      if (e == fam.base.special_edge) continue;
      const Edge& ed = fam.base.graph.edge(e);
      fam.copies[e].push_back(fam.graph.add_edge(ed.u, ed.v, ed.label));
    }
  }
  return fam;
}

namespace {

// P with P* inside face f, the face z* of P* turned towards the boundary of
// f, binding edges fanning out of f* in one corner. `shift` picks the sector
// of f that holds P*, `mirror` the orientation of P*, `reversed` the order of
// the binding edges at f*.
std::optional<EmbeddedGraph> nested_embedding(const OneplanarFamily& fam, const Graph& g, std::size_t shift,
                                              bool mirror, bool reversed) {
  const Graph& p = fam.primal.graph();
  const std::size_t np = p.vertex_count();
  const EdgeId dual_offset = static_cast<EdgeId>(p.edge_count());
  const EmbeddedGraph dual = mirror ? mirrored(fam.dual) : fam.dual;

  Rotation rot(g.vertex_count());
  for (VertexId v = 0; v < np; ++v) {
    const auto r = fam.primal.rotation(v);
    rot[v].assign(r.begin(), r.end());
  }
  auto lift = [&](Dart d) { return make_dart(dart_edge(d) + dual_offset, (d & 1u) != 0); };
  for (VertexId h = 0; h < dual.graph().vertex_count(); ++h) {
    for (Dart d : dual.rotation(h)) rot[np + h].push_back(lift(d));
  }

  const auto& walk_f = fam.primal_faces.faces[fam.face_f];
  for (std::size_t i = 0; i < walk_f.size(); ++i) {
    // walk_f[i-1] arrives at the tail of walk_f[i]
    const Dart incoming = walk_f[(i + walk_f.size() - 1) % walk_f.size()];
    insert_at_corner(rot, g, incoming, make_dart(fam.binding_edges[i], true));
  }

  // face z* of the dual: the one made of duals of the edges at z
  const FaceReport dual_faces = trace_faces(dual);
  std::set<EdgeId> around_z;
  for (EdgeId e : p.incident(fam.z)) around_z.insert(e);
  std::optional<Dart> corner;
  const VertexId f_local = fam.f_star - static_cast<VertexId>(np);
  for (const auto& walk : dual_faces.faces) {
    if (!std::all_of(walk.begin(), walk.end(), [&](Dart d) { return around_z.contains(dart_edge(d)); })) continue;
    if (walk.size() != around_z.size()) continue;
    for (Dart d : walk) {
      if (head(dual.graph(), d) == f_local) corner = lift(d);
    }
  }
  if (!corner) return std::nullopt;
  const std::size_t ell = fam.binding_edges.size();
  // each insertion lands before the previous one, so insert in reverse
  for (std::size_t i = ell; i-- > 0;) {
    const std::size_t j = reversed ? ell - 1 - i : i;
    insert_at_corner(rot, g, *corner, make_dart(fam.binding_edges[(j + shift) % ell], false));
  }
  EmbeddedGraph out(g, std::move(rot));
  if (!trace_faces(out).genus_zero) return std::nullopt;
  return out;
}

TopologicalDrawing oneplanar_min(const OneplanarFamily& fam) {
  const std::vector<EdgeId> special{fam.special_edge};
  const Graph g = remove_edges(fam.graph, special);
  std::optional<InsertionResult> best;
  for (bool mirror : {false, true}) {
    for (bool reversed : {false, true}) {
      for (std::size_t shift = 0; shift < fam.binding_edges.size(); ++shift) {
        auto emb = nested_embedding(fam, g, shift, mirror, reversed);
        if (!emb) continue;
        auto r = insert_edge_min_crossings(plane_drawing(*emb), fam.x, fam.y_star, name_of(role::kSpecial));
        if (r && (!best || r->crossings < best->crossings)) best = std::move(r);
      }
    }
  }
  if (!best) throw GraphError("no plane embedding of the 1-planar family without its special edge");
  return std::move(best->drawing);
}

// Planarization of the primal-dual overlay: every primal edge crosses its
// dual edge at a dummy; binding and special edges run inside a face from its
// dual vertex to a corner.
TopologicalDrawing oneplanar_saturated(const OneplanarFamily& fam) {
  const Graph& g = fam.graph;
  const Graph& p = fam.primal.graph();
  const FaceReport& faces = fam.primal_faces;
  const std::size_t n = g.vertex_count();
  const std::size_t mp = p.edge_count();

  Graph skel;
  for (VertexId v = 0; v < n; ++v) skel.add_vertex(g.vertex_name(v));
  for (EdgeId e = 0; e < mp; ++e) skel.add_vertex();
  auto dummy = [n](EdgeId e) { return static_cast<VertexId>(n + e); };

  std::vector<std::vector<EdgeId>> paths(g.edge_count());
  std::vector<std::array<EdgeId, 2>> primal_seg(mp), dual_seg(mp);
  for (EdgeId e = 0; e < mp; ++e) {
    const Edge& ed = g.edge(e);
    primal_seg[e] = {skel.add_edge(ed.u, dummy(e), ed.label), skel.add_edge(dummy(e), ed.v, ed.label)};
    paths[e] = {primal_seg[e][0], primal_seg[e][1]};
  }
  for (EdgeId e = 0; e < mp; ++e) {
    const EdgeId de = fam.dual_edge_of_edge[e];
    const Edge& ed = g.edge(de);  // (right face of 2e, left face of 2e)
    dual_seg[e] = {skel.add_edge(ed.u, dummy(e), ed.label), skel.add_edge(dummy(e), ed.v, ed.label)};
    paths[de] = {dual_seg[e][0], dual_seg[e][1]};
  }
  std::vector<std::tuple<std::size_t, VertexId, EdgeId>> in_face;  // (face, corner, skeleton edge)
  for (std::size_t i = 0; i < fam.binding_edges.size(); ++i) {
    const EdgeId b = fam.binding_edges[i];
    const EdgeId s = skel.add_edge(g.edge(b).u, g.edge(b).v, g.edge(b).label);
    paths[b] = {s};
    in_face.emplace_back(fam.face_f, g.edge(b).v, s);
  }
  {
    const EdgeId sp = fam.special_edge;
    const EdgeId s = skel.add_edge(g.edge(sp).u, g.edge(sp).v, g.edge(sp).label);
    paths[sp] = {s};
    in_face.emplace_back(fam.face_y, g.edge(sp).u, s);
  }

  Rotation rot(skel.vertex_count());
  // primal vertices: primal rotation with the half-edges towards the dummies
  auto primal_dart = [&](Dart d) {
    const EdgeId e = dart_edge(d);
    return (d & 1u) == 0 ? make_dart(primal_seg[e][0], false) : make_dart(primal_seg[e][1], true);
  };
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    for (Dart d : fam.primal.rotation(v)) rot[v].push_back(primal_dart(d));
  }
  // dual vertices: reverse walk order of their face
  auto dual_dart = [&](Dart d) {
    const EdgeId e = dart_edge(d);
    return (d & 1u) == 0 ? make_dart(dual_seg[e][0], false) : make_dart(dual_seg[e][1], true);
  };
  for (std::size_t h = 0; h < faces.face_count(); ++h) {
    const VertexId hv = fam.dual_vertex_of_face[h];
    const auto& walk = faces.faces[h];
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) rot[hv].push_back(dual_dart(*it));
  }
  for (EdgeId e = 0; e < mp; ++e) {
    rot[dummy(e)] = {make_dart(primal_seg[e][1], false), make_dart(dual_seg[e][1], false),
                     make_dart(primal_seg[e][0], true), make_dart(dual_seg[e][0], true)};
  }
  for (const auto& [h, corner, s] : in_face) {
    const auto& walk = faces.faces[h];
    const std::size_t i = leaving_position(p, walk, corner);
    const std::size_t prev = (i + walk.size() - 1) % walk.size();
    const VertexId hv = fam.dual_vertex_of_face[h];
    const bool corner_is_u = skel.edge(s).u == corner;
    const Dart at_corner = make_dart(s, !corner_is_u), at_face = make_dart(s, corner_is_u);
    // at the corner: just before the dart leaving it along the walk
    auto& rc = rot[corner];
    rc.insert(std::find(rc.begin(), rc.end(), primal_dart(walk[i])), at_corner);
    // at the dual vertex: just before the half-edge towards the arriving edge
    auto& rh = rot[hv];
    rh.insert(std::find(rh.begin(), rh.end(), dual_dart(walk[prev])), at_face);
  }
  EmbeddedGraph emb(std::move(skel), std::move(rot));
  emb.outer_face_dart = primal_dart(fam.primal_faces.faces[fam.face_g].front());
  return canonicalize(TopologicalDrawing(g, std::move(emb), std::move(paths)));
}

}  // namespace

TopologicalDrawing build_drawing(const OneplanarFamily& fam, DrawingStyle style) {
  switch (style) {
    case DrawingStyle::kSaturated: return oneplanar_saturated(fam);
    case DrawingStyle::kMin: return oneplanar_min(fam);
    default: break;
  }
  throw GraphError("style " + std::string(to_string(style)) + " does not apply to the 1-planar family");
}

TopologicalDrawing build_drawing(const OneplanarMultiFamily& fam, DrawingStyle style) {
  TopologicalDrawing d = build_drawing(fam.base, style);
  for (std::size_t round = 1; round < fam.k; ++round) {
    for (EdgeId e = 0; e < fam.base.graph.edge_count(); ++e) {
      if (e != fam.base.special_edge) d = add_parallel_copy(d, e);
    }
  }
  return d;
}

TopologicalDrawing add_parallel_copy(const TopologicalDrawing& d, EdgeId e) {
  const EmbeddedGraph& sk = d.skeleton();
  const Graph& s = sk.graph();
  const Edge& ed = d.base().edge(e);
  const auto& segs = d.segments(e);
  const std::vector<VertexId> stops = d.path_vertices(e);
  if (stops.empty()) throw GraphError("edge path is broken");

  // the copy keeps to the right of e: clockwise next to it at u, on the
  // counter-clockwise side of the returning dart at v
  const Dart first = out_dart(s, segs.front(), ed.u);
  const Dart start_corner = twin(sk.predecessor(first));
  std::vector<Dart> crossed;
  for (std::size_t i = 1; i + 1 < stops.size(); ++i) {
    crossed.push_back(sk.predecessor(out_dart(s, segs[i], stops[i])));
  }
  const Dart end_corner = twin(out_dart(s, segs.back(), ed.v));
  DrawingBuilder b(d);
  b.add_routed_edge(ed.u, ed.v, start_corner, crossed, end_corner, ed.label);
  return b.build();
}

// ---------------------------------------------------------------------------
// quasi-planar family

std::string_view to_string(ExtensionMode m) {
  return m == ExtensionMode::kExtendAll ? "extend-all" : "match-corollary";
}

QuasiFamily gen_quasi(std::size_t ell) { return gen_kquasi(ell, 3, ExtensionMode::kExtendAll); }

QuasiFamily gen_kquasi(std::size_t ell, std::size_t k, ExtensionMode mode) {
  if (ell < 2) throw GraphError("the quasi-planar family needs ell >= 2");
  if (k < 3) throw GraphError("the k-quasi-planar family needs k >= 3");
  QuasiFamily fam;
  fam.ell = ell;
  fam.k = k;
  fam.mode = mode;
  const std::size_t len = 2 * k;
  Graph g;
  for (std::size_t i = 0; i < len; ++i) fam.cycle.push_back(g.add_vertex("u" + std::to_string(i)));
  fam.apex = g.add_vertex("x");
  for (std::size_t i = 0; i < len; ++i) {
    fam.wheel_edges.push_back(g.add_edge(fam.cycle[i], fam.cycle[(i + 1) % len], name_of(role::kCycle)));
  }
  for (std::size_t i = 0; i < len; ++i) {
    fam.wheel_edges.push_back(g.add_edge(fam.apex, fam.cycle[i], name_of(role::kSpoke)));
  }

  const double radius = 10;
  fam.layout.resize(len + 1);
  for (std::size_t i = 0; i < len; ++i) {
    const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(len);
    fam.layout[i] = {radius * std::cos(t), radius * std::sin(t)};
  }
  fam.layout[len] = {0, 0};
  const double spoke_reach = 0.2 * radius * std::sin(std::numbers::pi / static_cast<double>(k));
  const double chord = 2 * radius * std::sin(std::numbers::pi / static_cast<double>(len));

  for (std::size_t w = 0; w < fam.wheel_edges.size(); ++w) {
    const EdgeId e = fam.wheel_edges[w];
    const bool spoke = w >= len;
    std::size_t count = ell - 1;
    if (mode == ExtensionMode::kMatchCorollary) count = spoke ? ell : 0;
    const VertexId first = static_cast<VertexId>(g.vertex_count());
    fam.extension_paths.push_back(extend_in_place(g, e, count, spoke ? role::kSpoke : role::kCycle));
    const Point p = fam.layout[g.edge(e).u], q = fam.layout[g.edge(e).v];
    for (std::size_t j = 0; j < count; ++j) {
      // cycle paths bulge outwards (to the right of u_i -> u_{i+1})
      fam.layout.push_back(spoke ? path_apex(p, q, j, count, spoke_reach)
                                 : path_apex(q, p, j, count, 0.3 * chord, true));
    }
    if (g.vertex_count() != first + count) throw GraphError("unexpected extension size");
  }
  for (std::size_t i = 0; i < k; ++i) {
    fam.special_edges.push_back(g.add_edge(fam.cycle[i], fam.cycle[i + k], name_of(role::kSpecial)));
  }
  fam.graph = std::move(g);
  return fam;
}

TopologicalDrawing build_drawing(const QuasiFamily& fam, DrawingStyle style) {
  const TopologicalDrawing plane = plane_part(fam.graph, fam.special_edges, fam.layout);
  const Graph& g = fam.graph;
  auto has_label = [&g](std::string_view label) {
    return [&g, label](EdgeId e) { return g.has_edge(e) && g.edge(e).label == label; };
  };
  if (style == DrawingStyle::kMin) {
    // diagonals pairwise crossing in the face outside the cycle
    return insert_all(plane, g, fam.special_edges, has_label(role::kSpecial));
  }
  if (style == DrawingStyle::kQuasiPlanar && fam.k == 3) {
    // two diagonals crossing once outside the cycle, the third through two
    // spoke bundles inside it
    TopologicalDrawing d = plane;
    std::vector<EdgeId> drawn_id(g.edge_count());
    for (EdgeId e = 0; e < plane.base().edge_count(); ++e) drawn_id[e] = e;
    for (std::size_t i : {1u, 2u, 0u}) {
      const Edge& ed = g.edge(fam.special_edges[i]);
      auto r = insert_edge_min_crossings(d, ed.u, ed.v, ed.label,
                                         has_label(i == 0 ? role::kSpoke : role::kSpecial));
      if (!r) throw GraphError("diagonal could not be inserted");
      drawn_id[fam.special_edges[i]] = r->edge;
      d = std::move(r->drawing);
    }
    return renumber_edges(d, drawn_id);
  }
  throw GraphError("style " + std::string(to_string(style)) + " does not apply to this quasi-planar family");
}

// ---------------------------------------------------------------------------
// fan-planar family

FanFamily gen_fan(std::size_t ell) {
  if (ell < 2) throw GraphError("the fan-planar family needs ell >= 2");
  FanFamily fam;
  fam.ell = ell;
  Graph g;
  fam.u = g.add_vertex("u");
  fam.w = g.add_vertex("w");
  fam.a = g.add_vertex("a");
  fam.v = g.add_vertex("v");
  fam.z = g.add_vertex("z");
  fam.b = g.add_vertex("b");
  // K4 on w, z, b, a with a inside the triangle; u halves z-b, v halves w-a
  fam.layout = {{2, 4}, {-4, 0}, {0, 1.5}, {-2, 0.75}, {4, 0}, {0, 8}};

  std::vector<EdgeId> core;
  for (VertexId s : {fam.u, fam.w, fam.a}) {
    for (VertexId t : {fam.v, fam.z, fam.b}) core.push_back(g.add_edge(s, t, name_of(role::kCore)));
  }
  fam.uv = core[0];
  fam.wz = core[4];
  for (EdgeId e : core) {
    if (e == fam.uv || e == fam.wz) continue;
    fam.extended_core.push_back(e);
    const std::vector<EdgeId> added = extend_in_place(g, e, ell - 1, role::kCore);
    std::vector<std::vector<EdgeId>> routes{{e}};
    for (std::size_t j = 0; j + 1 < ell; ++j) routes.push_back({added[2 * j], added[2 * j + 1]});
    fam.routes.push_back(std::move(routes));
    const Point p = fam.layout[g.edge(e).u], q = fam.layout[g.edge(e).v];
    const double reach = 0.07 * std::hypot(q.x - p.x, q.y - p.y);
    for (std::size_t j = 0; j + 1 < ell; ++j) fam.layout.push_back(path_apex(p, q, j, ell - 1, reach));
  }

  // w' and its ell paths to z below w-z; z' and its paths to w below those
  const double depth = static_cast<double>(ell) + 6;
  fam.w_prime = g.add_vertex("w'");
  fam.layout.push_back({-2, -1});
  fam.z_prime = g.add_vertex("z'");
  fam.layout.push_back({2, -depth});
  fam.w_bar = g.add_edge(fam.w, fam.w_prime, name_of(role::kBar));
  fam.z_bar = g.add_edge(fam.z, fam.z_prime, name_of(role::kBar));
  for (std::size_t i = 0; i < ell; ++i) {
    const VertexId m = g.add_vertex("w'" + std::to_string(i));
    fam.layout.push_back({1, -0.8 - 0.5 * static_cast<double>(i)});
    fam.w_bundle.push_back({g.add_edge(fam.w_prime, m, name_of(role::kBundle)),
                            g.add_edge(m, fam.z, name_of(role::kBundle))});
  }
  for (std::size_t i = 0; i < ell; ++i) {
    const VertexId m = g.add_vertex("z'" + std::to_string(i));
    fam.layout.push_back({-1, -depth - 1 - static_cast<double>(i)});
    fam.z_bundle.push_back({g.add_edge(fam.z_prime, m, name_of(role::kBundle)),
                            g.add_edge(m, fam.w, name_of(role::kBundle))});
  }

  // subdivision i takes route i of every extended edge
  for (std::size_t i = 0; i < ell; ++i) {
    std::vector<EdgeId> via_w{fam.uv, fam.w_bar}, via_z{fam.uv, fam.z_bar};
    for (const auto& routes : fam.routes) {
      via_w.insert(via_w.end(), routes[i].begin(), routes[i].end());
      via_z.insert(via_z.end(), routes[i].begin(), routes[i].end());
    }
    via_w.insert(via_w.end(), fam.w_bundle[i].begin(), fam.w_bundle[i].end());
    via_z.insert(via_z.end(), fam.z_bundle[i].begin(), fam.z_bundle[i].end());
    std::sort(via_w.begin(), via_w.end());
    std::sort(via_z.begin(), via_z.end());
    fam.k33_via_w.push_back(std::move(via_w));
    fam.k33_via_z.push_back(std::move(via_z));
  }
  fam.graph = std::move(g);
  return fam;
}

TopologicalDrawing build_drawing(const FanFamily& fam, DrawingStyle style) {
  // (u, v) is the only edge outside the plane layout
  std::vector<EdgeId> removed{fam.uv};
  std::vector<EdgeId> old_to_new;
  const Graph rest = remove_edges(fam.graph, removed, &old_to_new);
  TopologicalDrawing d = plane_drawing(embed_straight_line(rest, fam.layout));

  CrossablePredicate crossable;
  std::set<EdgeId> allowed;  // ids in the graph without (u, v)
  if (style == DrawingStyle::kMin) {
    for (EdgeId e : {fam.wz, fam.w_bar, fam.z_bar}) allowed.insert(old_to_new[e]);
  } else if (style == DrawingStyle::kFanPlanar) {
    // every route of a-b, each crossed next to a
    const auto it = std::find_if(fam.extended_core.begin(), fam.extended_core.end(), [&](EdgeId e) {
      return fam.graph.edge(e).has(fam.a) && fam.graph.edge(e).has(fam.b);
    });
    const auto& routes = fam.routes[static_cast<std::size_t>(it - fam.extended_core.begin())];
    for (const auto& route : routes) {
      for (EdgeId e : route) {
        if (fam.graph.edge(e).has(fam.a)) allowed.insert(old_to_new[e]);
      }
    }
  } else {
    throw GraphError("style " + std::string(to_string(style)) + " does not apply to the fan-planar family");
  }
  crossable = [&allowed](EdgeId e) { return allowed.contains(e); };
  auto r = insert_edge_min_crossings(d, fam.u, fam.v, name_of(role::kCore), crossable);
  if (!r) throw GraphError("no admissible route for (u, v)");

  // (u, v) was drawn last
  std::vector<EdgeId> drawn_id;
  for (EdgeId e = 0; e < fam.graph.edge_count(); ++e) drawn_id.push_back(e == fam.uv ? r->edge : old_to_new[e]);
  return renumber_edges(r->drawing, drawn_id);
}

bool is_k33_subdivision(const Graph& g, const std::vector<EdgeId>& edges) {
  std::set<EdgeId> set(edges.begin(), edges.end());
  if (set.size() != edges.size()) return false;
  std::map<VertexId, std::vector<EdgeId>> at;
  for (EdgeId e : edges) {
    if (!g.has_edge(e) || g.edge(e).u == g.edge(e).v) return false;
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  std::vector<VertexId> branch;
  for (const auto& [v, inc] : at) {
    if (inc.size() == 3) {
      branch.push_back(v);
    } else if (inc.size() != 2) {
      return false;
    }
  }
  if (branch.size() != 6) return false;

  std::set<std::pair<VertexId, VertexId>> links;
  std::size_t walked = 0;
  for (VertexId s : branch) {
    for (EdgeId e0 : at[s]) {
      VertexId cur = g.edge(e0).other(s);
      EdgeId via = e0;
      ++walked;
      while (at[cur].size() == 2) {
        via = at[cur][0] == via ? at[cur][1] : at[cur][0];
        cur = g.edge(via).other(cur);
        ++walked;
        if (walked > 2 * edges.size()) return false;
      }
      if (cur == s) return false;
      links.emplace(std::min(s, cur), std::max(s, cur));
    }
  }
  // every edge walked once from each end
  if (walked != 2 * edges.size() || links.size() != 9) return false;
  std::map<VertexId, int> colour{{branch[0], 0}};
  std::vector<VertexId> queue{branch[0]};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& [p, q] : links) {
      if (p != queue[i] && q != queue[i]) continue;
      const VertexId o = p == queue[i] ? q : p;
      if (!colour.contains(o)) {
        colour[o] = 1 - colour[queue[i]];
        queue.push_back(o);
      } else if (colour[o] == colour[queue[i]]) {
        return false;
      }
    }
  }
  return colour.size() == 6 && std::count_if(colour.begin(), colour.end(), [](const auto& c) {
                                 return c.second == 0;
                               }) == 3;
}

// ---------------------------------------------------------------------------

std::string_view to_string(DrawingStyle s) {
  switch (s) {
    case DrawingStyle::kSaturated: return "saturated";
    case DrawingStyle::kMin: return "min";
    case DrawingStyle::kQuasiPlanar: return "quasi-planar";
    case DrawingStyle::kFanPlanar: return "fan-planar";
  }
  return "unknown";
}

DrawingStyle parse_style(std::string_view name) {
  for (DrawingStyle s : {DrawingStyle::kSaturated, DrawingStyle::kMin, DrawingStyle::kQuasiPlanar,
                         DrawingStyle::kFanPlanar}) {
    if (to_string(s) == name) return s;
  }
  throw GraphError("unknown drawing style '" + std::string(name) + "'");
}

}  // namespace crossratio
