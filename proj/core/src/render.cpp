#include "crossratio/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include <Eigen/Sparse>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>
#include <boost/property_map/property_map.hpp>

namespace crossratio {

std::string_view to_string(LayoutMethod m) { return m == LayoutMethod::kGrid ? "grid" : "barycentric"; }

LayoutMethod parse_layout(std::string_view name) {
  if (name == "grid") return LayoutMethod::kGrid;
  if (name == "barycentric") return LayoutMethod::kBarycentric;
  throw GraphError("unknown layout '" + std::string(name) + "'");
}

namespace {

// Embedded component with the ids it had in the whole graph.
struct Component {
  EmbeddedGraph graph;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> local_edge;
};

std::vector<Component> split_components(const EmbeddedGraph& g) {
  const Graph& s = g.graph();
  const std::vector<std::size_t> comp = s.components();
  const std::size_t count = s.vertex_count() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<Component> out(count);
  std::vector<VertexId> local(s.vertex_count());
  for (VertexId v = 0; v < s.vertex_count(); ++v) {
    Component& c = out[comp[v]];
    local[v] = static_cast<VertexId>(c.vertices.size());
    c.vertices.push_back(v);
  }
  std::vector<Graph> graphs(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (VertexId v : out[i].vertices) graphs[i].add_vertex(s.vertex_name(v));
  }
  std::vector<EdgeId> local_edge(s.edge_count());
  for (EdgeId e = 0; e < s.edge_count(); ++e) {
    const Edge& ed = s.edge(e);
    local_edge[e] = graphs[comp[ed.u]].add_edge(local[ed.u], local[ed.v], ed.label);
  }
  for (std::size_t i = 0; i < count; ++i) {
    Rotation rot(out[i].vertices.size());
    for (VertexId v : out[i].vertices) {
      for (Dart d : g.rotation(v)) rot[local[v]].push_back(make_dart(local_edge[dart_edge(d)], (d & 1u) != 0));
    }
    out[i].graph = EmbeddedGraph(std::move(graphs[i]), std::move(rot));
  }
  for (auto& c : out) c.local_edge = local_edge;
  return out;
}

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_index_t, std::size_t>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// Shift-method positions of a simple triangulation with `first` on the outer face.
std::vector<Point> grid_positions(const Graph& t, const Rotation& rot, VertexId first) {
  const std::size_t n = t.vertex_count();
  // the canonical ordering starts at boost vertex 0: `first` and 0 swap ids
  auto bid = [first](VertexId v) -> std::size_t { return v == first ? 0 : (v == 0 ? first : v); };
  BoostGraph bg(n);
  std::vector<BoostEdge> edge_of(t.edge_count());
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    edge_of[e] = boost::add_edge(bid(t.edge(e).u), bid(t.edge(e).v), e, bg).first;
  }
  std::vector<std::vector<BoostEdge>> embedding(n);
  for (VertexId v = 0; v < n; ++v) {
    for (Dart d : rot[v]) embedding[bid(v)].push_back(edge_of[dart_edge(d)]);
  }
  auto index = boost::get(boost::vertex_index, bg);
  auto emb = boost::make_iterator_property_map(embedding.begin(), index);
  std::vector<std::size_t> ordering;
  boost::planar_canonical_ordering(bg, emb, std::back_inserter(ordering));
  struct Coord {
    std::size_t x = 0;
    std::size_t y = 0;
  };
  std::vector<Coord> coords(n);
  auto drawing = boost::make_iterator_property_map(coords.begin(), index);
  boost::chrobak_payne_straight_line_drawing(bg, emb, ordering.begin(), ordering.end(), drawing);
  std::vector<Point> pos(n);
  for (VertexId v = 0; v < n; ++v) {
    pos[v] = {static_cast<double>(coords[bid(v)].x), static_cast<double>(coords[bid(v)].y)};
  }
  return pos;
}

// Tutte positions: the triangle of `first` and its first two neighbours is
// the outer face, every other vertex at the barycentre of its neighbours.
std::vector<Point> barycentric_positions(const Graph& t, const Rotation& rot, VertexId first) {
  const std::size_t n = t.vertex_count();
  const VertexId a = head(t, rot[first][0]), b = head(t, rot[first][1]);
  std::vector<Point> pos(n);
  std::vector<bool> fixed(n, false);
  const double r = 1000;
  pos[first] = {0, 0};
  pos[a] = {r, 0};
  pos[b] = {r / 2, -r * std::sqrt(3.0) / 2};
  fixed[first] = fixed[a] = fixed[b] = true;

  std::vector<long> slot(n, -1);
  long free_count = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!fixed[v]) slot[v] = free_count++;
  }
  std::vector<Eigen::Triplet<double>> entries;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(free_count), by = Eigen::VectorXd::Zero(free_count);
  for (VertexId v = 0; v < n; ++v) {
    if (fixed[v]) continue;
    entries.emplace_back(slot[v], slot[v], static_cast<double>(t.degree(v)));
    for (EdgeId e : t.incident(v)) {
      const VertexId w = t.edge(e).other(v);
      if (fixed[w]) {
        bx[slot[v]] += pos[w].x;
        by[slot[v]] += pos[w].y;
      } else {
        entries.emplace_back(slot[v], slot[w], -1.0);
      }
    }
  }
  Eigen::SparseMatrix<double> lap(free_count, free_count);
  lap.setFromTriplets(entries.begin(), entries.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
  if (solver.info() != Eigen::Success) throw GraphError("barycentric layout: singular system");
  const Eigen::VectorXd x = solver.solve(bx), y = solver.solve(by);
  for (VertexId v = 0; v < n; ++v) {
    if (!fixed[v]) pos[v] = {x[slot[v]], y[slot[v]]};
  }
  return pos;
}

double orient(Point p, Point q, Point r) { return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x); }

// A component made simple and triangulated by adding edges and vertices only;
// the component's vertices keep their ids and its embedding is a sub-embedding.
struct Triangulation {
  Graph graph;
  Rotation rotation;
  // inner vertices of each component edge from edge(e).u (parallel edges, loops)
  std::vector<std::vector<VertexId>> bends;
  // vertex placed inside the chosen outer face
  VertexId outer_centre = 0;
};

Triangulation triangulate(const EmbeddedGraph& comp, std::optional<Dart> outer) {
  const Graph& g = comp.graph();
  Triangulation t;
  for (VertexId v = 0; v < g.vertex_count(); ++v) t.graph.add_vertex();
  t.rotation.resize(g.vertex_count());
  t.bends.resize(g.edge_count());
  std::set<std::pair<VertexId, VertexId>> adjacent;
  auto key = [](VertexId a, VertexId b) { return std::pair<VertexId, VertexId>(std::minmax(a, b)); };
  // first and last dart of each edge's path
  std::vector<Dart> image(2 * g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    std::size_t inner = 0;
    if (ed.u == ed.v) {
      inner = 2;
    } else if (adjacent.contains(key(ed.u, ed.v))) {
      inner = 1;
    }
    VertexId prev = ed.u;
    EdgeId first_edge = kNoEdge, last_edge = kNoEdge;
    for (std::size_t i = 0; i <= inner; ++i) {
      VertexId next = ed.v;
      if (i < inner) {
        next = t.graph.add_vertex();
        t.rotation.emplace_back();
        t.bends[e].push_back(next);
      }
      const EdgeId h = t.graph.add_edge(prev, next);
      adjacent.insert(key(prev, next));
      if (i > 0) t.rotation[prev] = {make_dart(last_edge, true), make_dart(h, false)};
      if (i == 0) first_edge = h;
      last_edge = h;
      prev = next;
    }
    image[make_dart(e, false)] = make_dart(first_edge, false);
    image[make_dart(e, true)] = make_dart(last_edge, true);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (Dart d : comp.rotation(v)) t.rotation[v].push_back(image[d]);
  }

  // chords between consecutive neighbours until no vertex separates the graph
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexId v = 0; v < t.graph.vertex_count(); ++v) {
      for (std::size_t i = 0; i < t.rotation[v].size(); ++i) {
        const Dart d = t.rotation[v][i], s = t.rotation[v][(i + 1) % t.rotation[v].size()];
        const VertexId w1 = head(t.graph, d), w2 = head(t.graph, s);
        if (w1 == w2 || adjacent.contains(key(w1, w2))) continue;
        const EdgeId c = t.graph.add_edge(w1, w2);
        adjacent.insert(key(w1, w2));
        insert_at_corner(t.rotation, t.graph, s, make_dart(c, true));
        auto& at_w1 = t.rotation[w1];
        at_w1.insert(std::find(at_w1.begin(), at_w1.end(), twin(d)), make_dart(c, false));
        changed = true;
      }
    }
  }

  // a centre in the outer face and in every face longer than a triangle
  const FaceReport faces = trace_faces(EmbeddedGraph(t.graph, t.rotation));
  std::size_t outer_face = 0;
  if (outer) {
    outer_face = faces.face_of_dart[image[*outer]];
  } else {
    for (std::size_t f = 1; f < faces.face_count(); ++f) {
      if (faces.face_size(f) > faces.face_size(outer_face)) outer_face = f;
    }
  }
  for (std::size_t f = 0; f < faces.face_count(); ++f) {
    if (f != outer_face && faces.face_size(f) == 3) continue;
    const VertexId c = t.graph.add_vertex();
    t.rotation.emplace_back();
    if (f == outer_face) t.outer_centre = c;
    std::vector<Dart> clockwise;
    for (Dart incoming : faces.faces[f]) {
      const EdgeId e = t.graph.add_edge(c, head(t.graph, incoming));
      insert_at_corner(t.rotation, t.graph, incoming, make_dart(e, true));
      clockwise.push_back(make_dart(e, false));
    }
    t.rotation[c].assign(clockwise.rbegin(), clockwise.rend());
  }
  return t;
}

struct ComponentLayout {
  std::vector<Point> vertices;
  std::vector<std::vector<Point>> bends;
};

// Positions of one component; its outer face is the right face of `outer`.
ComponentLayout layout_component(const EmbeddedGraph& comp, std::optional<Dart> outer, LayoutMethod method) {
  const Graph& g = comp.graph();
  ComponentLayout out;
  out.bends.resize(g.edge_count());
  if (g.edge_count() == 0) {
    out.vertices.assign(g.vertex_count(), Point{0, 0});
    return out;
  }
  const Triangulation t = triangulate(comp, outer);
  std::vector<Point> pos;
  if (t.graph.vertex_count() < 3) {
    pos = {Point{0, 0}, Point{1, 0}};
  } else {
    pos = method == LayoutMethod::kGrid ? grid_positions(t.graph, t.rotation, t.outer_centre)
                                        : barycentric_positions(t.graph, t.rotation, t.outer_centre);
    // keep counter-clockwise rotations counter-clockwise on the page
    double sign = 0;
    for (VertexId v = 0; v < t.graph.vertex_count(); ++v) {
      const auto& rot = t.rotation[v];
      for (std::size_t i = 0; i < rot.size(); ++i) {
        const double o = orient(pos[v], pos[head(t.graph, rot[i])], pos[head(t.graph, rot[(i + 1) % rot.size()])]);
        sign += o > 0 ? 1 : (o < 0 ? -1 : 0);
      }
    }
    if (sign < 0) {
      for (Point& p : pos) p.x = -p.x;
    }
  }
  out.vertices.assign(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(g.vertex_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (VertexId b : t.bends[e]) out.bends[e].push_back(pos[b]);
  }
  double min_x = out.vertices[0].x, min_y = out.vertices[0].y;
  for (const Point& p : out.vertices) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  for (const auto& bends : out.bends) {
    for (const Point& p : bends) {
      min_x = std::min(min_x, p.x);
      min_y = std::min(min_y, p.y);
    }
  }
  for (Point& p : out.vertices) p = {p.x - min_x, p.y - min_y};
  for (auto& bends : out.bends) {
    for (Point& p : bends) p = {p.x - min_x, p.y - min_y};
  }
  return out;
}

struct RoleStyle {
  std::string_view stroke;
  double width;
  std::string_view dash;
};

RoleStyle style_of(std::string_view role) {
  if (role == "P") return {"#2b6cb0", 1.2, ""};
  if (role == "P*") return {"#c53030", 2.4, ""};
  if (role == "binding") return {"#2f855a", 1.2, "4 3"};
  if (role == "special") return {"#dd6b20", 2.8, ""};
  if (role == "cycle") return {"#2d3748", 1.6, ""};
  if (role == "spoke") return {"#319795", 1.2, ""};
  if (role == "core") return {"#2d3748", 1.2, ""};
  if (role == "bar") return {"#805ad5", 2.4, ""};
  if (role == "bundle") return {"#38a169", 1.2, ""};
  return {"#4a5568", 1.2, ""};
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SkeletonLayout layout_skeleton(const TopologicalDrawing& d, const RenderOptions& options) {
  const EmbeddedGraph& sk = d.skeleton();
  std::optional<Dart> outer = options.outer_face ? options.outer_face : sk.outer_face_dart;
  SkeletonLayout out;
  out.vertices.resize(sk.graph().vertex_count());
  out.bends.resize(sk.graph().edge_count());
  double offset = 0;
  const double gap = options.layout == LayoutMethod::kGrid ? 4 : 200;
  const std::vector<std::size_t> component_of = sk.graph().components();
  const std::vector<Component> components = split_components(sk);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Component& c = components[i];
    std::optional<Dart> local_outer;
    if (outer && component_of[tail(sk.graph(), *outer)] == i) {
      local_outer = make_dart(c.local_edge[dart_edge(*outer)], (*outer & 1u) != 0);
    }
    const ComponentLayout local = layout_component(c.graph, local_outer, options.layout);
    double width = 0;
    for (std::size_t j = 0; j < local.vertices.size(); ++j) {
      out.vertices[c.vertices[j]] = {local.vertices[j].x + offset, local.vertices[j].y};
      width = std::max(width, local.vertices[j].x);
    }
    for (EdgeId e = 0; e < sk.graph().edge_count(); ++e) {
      if (component_of[sk.graph().edge(e).u] != i) continue;
      for (const Point& p : local.bends[c.local_edge[e]]) {
        out.bends[e].push_back({p.x + offset, p.y});
        width = std::max(width, p.x);
      }
    }
    offset += width + gap;
  }
  return out;
}

std::string render_svg(const TopologicalDrawing& d, const RenderOptions& options) {
  const ValidityReport rep = validate(d);
  if (!rep.valid()) throw GraphError("cannot render an invalid drawing: " + rep.violations.front());
  SkeletonLayout layout = layout_skeleton(d, options);
  std::vector<Point>& pos = layout.vertices;
  const bool grid = options.layout == LayoutMethod::kGrid;
  double max_x = 0, max_y = 0;
  auto each_point = [&](auto&& f) {
    for (Point& p : pos) f(p);
    for (auto& bends : layout.bends) {
      for (Point& p : bends) f(p);
    }
  };
  each_point([&](Point& p) {
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  });
  if (!grid) {
    // scale to a 1000-unit box, three decimals
    const double s = 1000 / std::max({max_x, max_y, 1e-9});
    each_point([s](Point& p) { p = {std::round(p.x * s * 1000) / 1000, std::round(p.y * s * 1000) / 1000}; });
    max_x *= s;
    max_y *= s;
  }
  auto num = [grid](double v) {
    char buf[48];
    if (grid) {
      std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(v)));
    } else {
      std::snprintf(buf, sizeof buf, "%.3f", v);
    }
    return std::string(buf);
  };
  // page y grows downwards
  auto page = [&](const Point& p) { return num(p.x) + "," + num(max_y - p.y); };
  const double margin = std::max(max_x, max_y) * 0.04 + 1;
  const double unit = std::max(max_x, max_y) / 600 + 1e-9;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\""
      << num(-margin) << " " << num(-margin) << " " << num(max_x + 2 * margin) << " " << num(max_y + 2 * margin)
      << "\">\n";
  if (!options.title.empty()) out << "  <title>" << xml_escape(options.title) << "</title>\n";
  out << "  <rect x=\"" << num(-margin) << "\" y=\"" << num(-margin) << "\" width=\"" << num(max_x + 2 * margin)
      << "\" height=\"" << num(max_y + 2 * margin) << "\" fill=\"white\"/>\n";
  out << "  <g fill=\"none\" stroke-linejoin=\"round\" stroke-linecap=\"round\">\n";
  const Graph& base = d.base();
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    const RoleStyle st = style_of(base.edge(e).label);
    out << "    <polyline data-edge=\"" << e << "\" data-role=\"" << xml_escape(base.edge(e).label) << "\" stroke=\""
        << st.stroke << "\" stroke-width=\"" << st.width << "\" vector-effect=\"non-scaling-stroke\"";
    if (!st.dash.empty()) out << " stroke-dasharray=\"" << st.dash << "\"";
    out << " points=\"";
    const std::vector<VertexId> walk = d.path_vertices(e);
    const Graph& sk = d.skeleton().graph();
    out << page(pos[walk[0]]);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      const EdgeId seg = d.segments(e)[i];
      std::vector<Point> bends = layout.bends[seg];
      if (sk.edge(seg).u != walk[i]) std::reverse(bends.begin(), bends.end());
      for (const Point& p : bends) out << " " << page(p);
      out << " " << page(pos[walk[i + 1]]);
    }
    out << "\"/>\n";
  }
  out << "  </g>\n  <g>\n";
  for (VertexId v = 0; v < base.vertex_count(); ++v) {
    bool primal = false, dual = false;
    for (EdgeId e : base.incident(v)) {
      primal = primal || base.edge(e).label == "P";
      dual = dual || base.edge(e).label == "P*";
    }
    const std::string xy = page(pos[v]);
    const std::string x = xy.substr(0, xy.find(',')), y = xy.substr(xy.find(',') + 1);
    out << "    <g data-vertex=\"" << v << "\">";
    if (!base.vertex_name(v).empty()) out << "<title>" << xml_escape(base.vertex_name(v)) << "</title>";
    if (dual && !primal) {
      out << "<rect x=\"" << num(pos[v].x - 3 * unit) << "\" y=\"" << num(max_y - pos[v].y - 3 * unit)
          << "\" width=\"" << num(6 * unit) << "\" height=\"" << num(6 * unit) << "\" fill=\"#c53030\"/>";
    } else {
      out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << num(3 * unit) << "\" fill=\""
          << (primal ? "#2b6cb0" : "#1a202c") << "\"/>";
    }
    out << "</g>\n";
  }
  if (options.show_crossings) {
    for (VertexId x = static_cast<VertexId>(base.vertex_count()); x < pos.size(); ++x) {
      const std::string xy = page(pos[x]);
      out << "    <circle data-crossing=\"" << x << "\" cx=\"" << xy.substr(0, xy.find(',')) << "\" cy=\""
          << xy.substr(xy.find(',') + 1) << "\" r=\"" << num(1.5 * unit) << "\" fill=\"#f6e05e\"/>\n";
    }
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

std::vector<Polyline> read_svg_polylines(std::string_view svg) {
  auto attribute = [](std::string_view tag, std::string_view name) -> std::optional<std::string_view> {
    const std::string key = " " + std::string(name) + "=\"";
    const std::size_t at = tag.find(key);
    if (at == std::string_view::npos) return std::nullopt;
    const std::size_t begin = at + key.size();
    return tag.substr(begin, tag.find('"', begin) - begin);
  };
  std::vector<Polyline> out;
  for (std::size_t at = svg.find("<polyline"); at != std::string_view::npos; at = svg.find("<polyline", at + 1)) {
    const std::string_view tag = svg.substr(at, svg.find('>', at) - at);
    const auto edge = attribute(tag, "data-edge");
    const auto points = attribute(tag, "points");
    if (!edge || !points) throw GraphError("polyline without data-edge or points");
    Polyline p;
    p.edge = static_cast<EdgeId>(std::stoul(std::string(*edge)));
    std::istringstream in{std::string(*points)};
    std::string pair;
    while (in >> pair) {
      const std::size_t comma = pair.find(',');
      if (comma == std::string::npos) throw GraphError("malformed polyline point '" + pair + "'");
      p.points.push_back({std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

using i128 = __int128;

struct IPoint {
  std::int64_t x;
  std::int64_t y;
  bool operator==(const IPoint&) const = default;
};

// exact point with a common positive denominator, in lowest terms
struct RPoint {
  i128 x, y, den;
  bool operator<(const RPoint& o) const { return std::tie(x, y, den) < std::tie(o.x, o.y, o.den); }
  bool operator==(const RPoint&) const = default;
};

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

RPoint rational(i128 x, i128 y, i128 den) {
  if (den < 0) {
    x = -x;
    y = -y;
    den = -den;
  }
  const i128 g = gcd128(gcd128(x, y), den);
  return g > 1 ? RPoint{x / g, y / g, den / g} : RPoint{x, y, den};
}

i128 cross(IPoint o, IPoint a, IPoint b) {
  return static_cast<i128>(a.x - o.x) * (b.y - o.y) - static_cast<i128>(a.y - o.y) * (b.x - o.x);
}

int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

bool on_segment(IPoint p, IPoint q, IPoint r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

// Intersection of segments pq and rs: none, one point, or an overlap.
enum class Meet { kNone, kPoint, kOverlap };

Meet intersect(IPoint p, IPoint q, IPoint r, IPoint s, RPoint& at) {
  const int o1 = sgn(cross(p, q, r)), o2 = sgn(cross(p, q, s));
  const int o3 = sgn(cross(r, s, p)), o4 = sgn(cross(r, s, q));
  if (o1 == 0 && o2 == 0) {
    // collinear: count shared extent
    std::vector<IPoint> hits;
    for (IPoint c : {r, s}) {
      if (on_segment(p, q, c)) hits.push_back(c);
    }
    for (IPoint c : {p, q}) {
      if (on_segment(r, s, c)) hits.push_back(c);
    }
    std::sort(hits.begin(), hits.end(), [](IPoint a, IPoint b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.empty()) return Meet::kNone;
    if (hits.size() > 1) return Meet::kOverlap;
    at = rational(hits[0].x, hits[0].y, 1);
    return Meet::kPoint;
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return Meet::kNone;
  if (o1 == 0) {
    at = rational(r.x, r.y, 1);
  } else if (o2 == 0) {
    at = rational(s.x, s.y, 1);
  } else if (o3 == 0) {
    at = rational(p.x, p.y, 1);
  } else if (o4 == 0) {
    at = rational(q.x, q.y, 1);
  } else {
    // p + t (q - p), t = cross(r - p, s - r) / cross(q - p, s - r)
    const i128 dx = q.x - p.x, dy = q.y - p.y, ex = s.x - r.x, ey = s.y - r.y;
    const i128 den = dx * ey - dy * ex;
    const i128 num = static_cast<i128>(r.x - p.x) * ey - static_cast<i128>(r.y - p.y) * ex;
    at = rational(p.x * den + num * dx, p.y * den + num * dy, den);
  }
  return Meet::kPoint;
}

}  // namespace

IntersectionCount count_intersections(const std::vector<Polyline>& lines) {
  // printed coordinates carry at most three decimals
  std::vector<std::vector<IPoint>> pts(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (const Point& p : lines[i].points) {
      pts[i].push_back({std::llround(p.x * 1000), std::llround(p.y * 1000)});
    }
  }
  IntersectionCount out;
  for (const auto& line : pts) {
    for (std::size_t k = 1; k + 1 < line.size(); ++k) {
      if (cross(line[k - 1], line[k], line[k + 1]) != 0) ++out.bends;
    }
  }
  struct Box {
    std::int64_t x0, y0, x1, y1;
  };
  auto box_of = [](IPoint a, IPoint b) {
    return Box{std::min(a.x, b.x), std::min(a.y, b.y), std::max(a.x, b.x), std::max(a.y, b.y)};
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto& a = pts[i];
      const auto& b = pts[j];
      if (a.size() < 2 || b.size() < 2) continue;
      std::set<RPoint> shared_ends;
      for (IPoint x : {a.front(), a.back()}) {
        for (IPoint y : {b.front(), b.back()}) {
          if (x == y) shared_ends.insert(rational(x.x, x.y, 1));
        }
      }
      std::set<RPoint> meets;
      bool overlap = false;
      for (std::size_t s = 0; s + 1 < a.size(); ++s) {
        const Box ba = box_of(a[s], a[s + 1]);
        for (std::size_t t = 0; t + 1 < b.size(); ++t) {
          const Box bb = box_of(b[t], b[t + 1]);
          if (ba.x1 < bb.x0 || bb.x1 < ba.x0 || ba.y1 < bb.y0 || bb.y1 < ba.y0) continue;
          RPoint at{};
          const Meet m = intersect(a[s], a[s + 1], b[t], b[t + 1], at);
          if (m == Meet::kOverlap) overlap = true;
          if (m == Meet::kPoint && !shared_ends.contains(at)) meets.insert(at);
        }
      }
      out.points += meets.size();
      if (overlap) ++out.overlaps;
    }
  }
  return out;
}

}  // namespace crossratio
