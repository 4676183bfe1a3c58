#include "crossratio/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#ifndef CROSSRATIO_VERSION
#define CROSSRATIO_VERSION "0.0.0"
#endif

namespace crossratio {

using nlohmann::json;

std::string_view version() { return CROSSRATIO_VERSION; }

namespace {

constexpr std::string_view kDocumentFormat = "crossratio.drawing";
constexpr std::string_view kCertificateFormat = "crossratio.certificate";

std::string default_generator() { return "crossratio " + std::string(version()); }

// (tail, base edge, head) of a skeleton dart; names the dart independently of
// segment numbering.
struct DartRef {
  EdgeId edge = kNoEdge;
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
};

DartRef dart_ref(const TopologicalDrawing& d, Dart x) {
  const Graph& s = d.skeleton().graph();
  return {d.owner(dart_edge(x)), tail(s, x), head(s, x)};
}

std::optional<Dart> find_dart(const TopologicalDrawing& d, const DartRef& r) {
  if (!d.base().has_edge(r.edge)) return std::nullopt;
  const Graph& s = d.skeleton().graph();
  for (EdgeId seg : d.segments(r.edge)) {
    const Edge& ed = s.edge(seg);
    if (ed.u == r.from && ed.v == r.to) return make_dart(seg, false);
    if (ed.v == r.from && ed.u == r.to) return make_dart(seg, true);
  }
  return std::nullopt;
}

json graph_json(const Graph& g) {
  json vertices = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    json jv = {{"id", v}};
    if (!g.vertex_name(v).empty()) jv["name"] = g.vertex_name(v);
    vertices.push_back(std::move(jv));
  }
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    json je = {{"id", e}, {"u", ed.u}, {"v", ed.v}};
    if (!ed.label.empty()) je["label"] = ed.label;
    edges.push_back(std::move(je));
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json drawing_json(const TopologicalDrawing& d, const std::optional<Dart>& outer) {
  const std::size_t n = d.base().vertex_count();
  const EmbeddedGraph& sk = d.skeleton();
  json crossings = json::array();
  for (VertexId x = static_cast<VertexId>(n); x < sk.graph().vertex_count(); ++x) {
    const EdgePair p = d.crossing_pair(x);
    crossings.push_back({{"id", x}, {"edges", {p.first, p.second}}});
  }
  json paths = json::array();
  for (EdgeId e = 0; e < d.base().edge_count(); ++e) {
    paths.push_back({{"edge", e}, {"vertices", d.path_vertices(e)}});
  }
  json rotations = json::array();
  for (VertexId v = 0; v < sk.graph().vertex_count(); ++v) {
    json order = json::array();
    for (Dart x : sk.rotation(v)) {
      const DartRef r = dart_ref(d, x);
      order.push_back({r.edge, r.to});
    }
    rotations.push_back({{"vertex", v}, {"order", std::move(order)}});
  }
  json out = {{"crossings", std::move(crossings)}, {"edge_paths", std::move(paths)},
              {"rotations", std::move(rotations)}};
  if (outer) {
    const DartRef r = dart_ref(d, *outer);
    out["outer_face"] = {{"edge", r.edge}, {"from", r.from}, {"to", r.to}};
  }
  return out;
}

// ---------------------------------------------------------------------------
// checked reading

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(path_.empty() ? "/" : path_, what); }

  const Reader& object(std::initializer_list<std::string_view> required,
                       std::initializer_list<std::string_view> optional = {}) const {
    if (!j_.is_object()) fail("expected an object");
    for (const auto& [key, value] : j_.items()) {
      const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                         std::find(optional.begin(), optional.end(), key) != optional.end();
      if (!known) Reader(value, path_ + "/" + key).fail("unknown field");
    }
    for (std::string_view key : required) {
      if (!j_.contains(key)) fail("missing field '" + std::string(key) + "'");
    }
    return *this;
  }

  [[nodiscard]] bool has(std::string_view key) const { return j_.contains(key); }
  [[nodiscard]] Reader at(std::string_view key) const {
    return Reader(j_.at(key), path_ + "/" + std::string(key));
  }
  [[nodiscard]] Reader at(std::size_t i) const { return Reader(j_.at(i), path_ + "/" + std::to_string(i)); }

  [[nodiscard]] std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  [[nodiscard]] std::uint64_t count() const {
    if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<std::int64_t>() >= 0)) {
      fail("expected a non-negative integer");
    }
    return j_.get<std::uint64_t>();
  }
  [[nodiscard]] std::uint32_t id() const {
    const std::uint64_t v = count();
    if (v >= kNoVertex) fail("id out of range");
    return static_cast<std::uint32_t>(v);
  }
  [[nodiscard]] std::string text() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

 private:
  const json& j_;
  std::string path_;
};

Graph read_graph(const Reader& r) {
  r.object({"vertices", "edges"});
  Graph g;
  const Reader vs = r.at("vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Reader v = vs.at(i);
    v.object({"id"}, {"name"});
    if (v.at("id").id() != i) v.at("id").fail("vertex ids must be 0, 1, 2, ... in order");
    std::string name = v.has("name") ? v.at("name").text() : std::string();
    if (!name.empty() && g.find_vertex(name)) v.at("name").fail("duplicate vertex name '" + name + "'");
    g.add_vertex(std::move(name));
  }
  const Reader es = r.at("edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Reader e = es.at(i);
    e.object({"id", "u", "v"}, {"label"});
    if (e.at("id").id() != i) e.at("id").fail("edge ids must be 0, 1, 2, ... in order");
    const VertexId u = e.at("u").id(), v = e.at("v").id();
    if (!g.has_vertex(u)) e.at("u").fail("unknown vertex");
    if (!g.has_vertex(v)) e.at("v").fail("unknown vertex");
    if (u == v) e.fail("self-loop");
    g.add_edge(u, v, e.has("label") ? e.at("label").text() : std::string());
  }
  return g;
}

std::pair<TopologicalDrawing, std::optional<Dart>> read_drawing(const Reader& r, const Graph& g) {
  r.object({"crossings", "edge_paths", "rotations"}, {"outer_face"});
  const std::size_t n = g.vertex_count();

  const Reader cs = r.at("crossings");
  std::vector<EdgePair> pair_of;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Reader c = cs.at(i);
    c.object({"id", "edges"});
    if (c.at("id").id() != n + i) c.at("id").fail("crossing ids must continue the vertex ids in order");
    const Reader es = c.at("edges");
    if (es.size() != 2) es.fail("a crossing joins exactly two edges");
    const EdgeId a = es.at(0).id(), b = es.at(1).id();
    if (!g.has_edge(a) || !g.has_edge(b)) es.fail("unknown edge");
    if (a == b) es.fail("an edge cannot cross itself");
    pair_of.emplace_back(a, b);
  }
  const std::size_t total = n + pair_of.size();

  Graph sk;
  for (VertexId v = 0; v < n; ++v) sk.add_vertex(g.vertex_name(v));
  for (std::size_t i = 0; i < pair_of.size(); ++i) sk.add_vertex();
  std::vector<std::vector<EdgeId>> paths(g.edge_count());
  std::map<std::tuple<VertexId, EdgeId, VertexId>, Dart> dart_at;
  std::vector<std::vector<EdgeId>> through(pair_of.size());
  const Reader ps = r.at("edge_paths");
  if (ps.size() != g.edge_count()) ps.fail("expected one path per edge");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Reader p = ps.at(e);
    p.object({"edge", "vertices"});
    if (p.at("edge").id() != e) p.at("edge").fail("paths must be listed in edge order");
    const Reader vs = p.at("vertices");
    const std::size_t len = vs.size();
    if (len < 2) vs.fail("a path has at least two vertices");
    std::vector<VertexId> walk;
    for (std::size_t i = 0; i < len; ++i) {
      const VertexId v = vs.at(i).id();
      const bool end = i == 0 || i + 1 == len;
      if (end ? v >= n : (v < n || v >= total)) {
        vs.at(i).fail(end ? "path must start and end at base vertices" : "interior path vertices must be crossings");
      }
      if (!end) through[v - n].push_back(e);
      walk.push_back(v);
    }
    if (walk.front() != g.edge(e).u || walk.back() != g.edge(e).v) vs.fail("path does not join the edge's endpoints");
    for (std::size_t i = 0; i + 1 < len; ++i) {
      const EdgeId s = sk.add_edge(walk[i], walk[i + 1], g.edge(e).label);
      paths[e].push_back(s);
      if (!dart_at.emplace(std::tuple(walk[i], e, walk[i + 1]), make_dart(s, false)).second ||
          !dart_at.emplace(std::tuple(walk[i + 1], e, walk[i]), make_dart(s, true)).second) {
        vs.fail("path uses the same segment twice");
      }
    }
  }
  for (std::size_t i = 0; i < pair_of.size(); ++i) {
    std::vector<EdgeId> on = through[i];
    std::sort(on.begin(), on.end());
    if (on != std::vector<EdgeId>{pair_of[i].first, pair_of[i].second}) {
      cs.at(i).fail("crossing must lie once on each of its two edges and on no other path (found on " +
                    std::to_string(on.size()) + " path visits)");
    }
  }

  const Reader rs = r.at("rotations");
  if (rs.size() != total) rs.fail("expected one rotation per vertex and crossing");
  Rotation rot(total);
  for (VertexId v = 0; v < total; ++v) {
    const Reader rv = rs.at(v);
    rv.object({"vertex", "order"});
    if (rv.at("vertex").id() != v) rv.at("vertex").fail("rotations must be listed in vertex order");
    const Reader order = rv.at("order");
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Reader entry = order.at(i);
      if (entry.size() != 2) entry.fail("rotation entries are [edge, neighbour]");
      const auto it = dart_at.find({v, entry.at(0).id(), entry.at(1).id()});
      if (it == dart_at.end()) entry.fail("no such segment at this vertex");
      rot[v].push_back(it->second);
    }
    std::vector<Dart> sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) order.fail("segment listed twice");
    if (sorted.size() != sk.degree(v)) order.fail("rotation must list every segment at the vertex");
  }

  EmbeddedGraph emb(std::move(sk), std::move(rot));
  TopologicalDrawing raw(g, std::move(emb), std::move(paths));
  const ValidityReport rep = validate(raw);
  if (!rep.valid()) r.fail("invalid drawing: " + rep.violations.front());

  std::optional<DartRef> outer_ref;
  if (r.has("outer_face")) {
    const Reader o = r.at("outer_face");
    o.object({"edge", "from", "to"});
    const DartRef ref{o.at("edge").id(), o.at("from").id(), o.at("to").id()};
    if (!find_dart(raw, ref)) o.fail("no such segment");
    outer_ref = ref;
  }
  TopologicalDrawing d = canonicalize(raw);
  std::optional<Dart> outer;
  if (outer_ref) outer = find_dart(d, *outer_ref);
  return {std::move(d), outer};
}

DocumentMetadata read_metadata(const Reader& r) {
  r.object({}, {"family", "ell", "k", "mode", "style", "generator"});
  DocumentMetadata m;
  if (r.has("family")) m.family = r.at("family").text();
  if (r.has("ell")) m.ell = r.at("ell").count();
  if (r.has("k")) m.k = r.at("k").count();
  if (r.has("mode")) m.mode = r.at("mode").text();
  if (r.has("style")) m.style = r.at("style").text();
  if (r.has("generator")) m.generator = r.at("generator").text();
  return m;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

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

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::kCrEquals: return "cr-equals";
    case Claim::kCrExceeds: return "cr-exceeds";
    case Claim::kCrAtLeast: return "cr-at-least";
    case Claim::kParallelLemma: return "parallel-lemma";
  }
  return "unknown";
}

}  // namespace

DrawingDocument make_document(Graph g, DocumentMetadata meta) {
  if (meta.generator.empty()) meta.generator = default_generator();
  return {std::move(g), std::nullopt, std::nullopt, std::move(meta)};
}

DrawingDocument make_document(const TopologicalDrawing& d, DocumentMetadata meta) {
  if (meta.generator.empty()) meta.generator = default_generator();
  DrawingDocument doc{d.base(), canonicalize(d), std::nullopt, std::move(meta)};
  if (d.skeleton().outer_face_dart) doc.outer_face = find_dart(*doc.drawing, dart_ref(d, *d.skeleton().outer_face_dart));
  return doc;
}

std::string serialize(const DrawingDocument& doc) {
  json j = {{"format", kDocumentFormat}, {"version", kDocumentVersion}, {"graph", graph_json(doc.graph)}};
  if (doc.drawing) {
    if (!(doc.drawing->base() == doc.graph)) throw GraphError("document drawing is not a drawing of its graph");
    j["drawing"] = drawing_json(*doc.drawing, doc.outer_face);
  }
  json meta = json::object();
  const DocumentMetadata& m = doc.metadata;
  if (m.family) meta["family"] = *m.family;
  if (m.ell) meta["ell"] = *m.ell;
  if (m.k) meta["k"] = *m.k;
  if (m.mode) meta["mode"] = *m.mode;
  if (m.style) meta["style"] = *m.style;
  if (!m.generator.empty()) meta["generator"] = m.generator;
  j["metadata"] = std::move(meta);
  return dump(j);
}

DrawingDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
    const std::size_t last_nl = text.rfind('\n', offset == 0 ? 0 : offset - 1);
    const std::size_t column = last_nl == std::string_view::npos || offset == 0 ? offset + 1 : offset - last_nl;
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column), "malformed JSON");
  }
  const Reader root(j, "");
  root.object({"format", "version", "graph"}, {"drawing", "metadata"});
  if (root.at("format").text() != kDocumentFormat) root.at("format").fail("not a drawing document");
  if (root.at("version").count() != static_cast<std::uint64_t>(kDocumentVersion)) {
    root.at("version").fail("unsupported version (expected " + std::to_string(kDocumentVersion) + ")");
  }
  DrawingDocument doc;
  doc.graph = read_graph(root.at("graph"));
  if (root.has("drawing")) {
    auto [d, outer] = read_drawing(root.at("drawing"), doc.graph);
    doc.drawing = std::move(d);
    doc.outer_face = outer;
  }
  if (root.has("metadata")) doc.metadata = read_metadata(root.at("metadata"));
  return doc;
}

std::string certificate_json(const Certificate& c, const SearchOptions& options) {
  json forced = json::array();
  for (const EdgePair& p : c.forced) forced.push_back({p.first, p.second});
  json j = {
      {"format", kCertificateFormat},
      {"version", kDocumentVersion},
      {"tool", default_generator()},
      {"claim", claim_name(c.claim)},
      {"holds", c.holds},
      {"value", c.value},
      {"summary", c.summary()},
      {"forced", std::move(forced)},
      {"search",
       {{"mode", to_string(c.mode)}, {"budget", options.budget}, {"lower_bound_pruning", options.lower_bound_pruning}}},
      {"exhaustion",
       {{"exhausted_below", c.log.exhausted_below},
        {"planarity_tests", c.log.planarity_tests},
        {"tests_per_size", c.log.tests_per_size},
        {"search_nodes", c.log.search_nodes},
        {"estimate", c.log.estimate}}},
  };
  if (c.witness_scheme) {
    json pairs = json::array();
    for (const EdgePair& p : c.witness_scheme->pairs) pairs.push_back({p.first, p.second});
    json order = json::object();
    for (const auto& [e, partners] : c.witness_scheme->order) order[std::to_string(e)] = partners;
    j["witness"] = {{"scheme", {{"pairs", std::move(pairs)}, {"order", std::move(order)}}},
                    {"crossings", c.witness_crossings}};
    if (c.witness) j["witness"]["drawing"] = drawing_json(canonicalize(*c.witness), std::nullopt);
  }
  return dump(j);
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << dot_escape(g.vertex_name(v).empty() ? std::to_string(v) : g.vertex_name(v))
        << "\"];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << ed.u << " -- " << ed.v << " [id=\"e" << e << "\"";
    if (!ed.label.empty()) out << ", label=\"" << dot_escape(ed.label) << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const TopologicalDrawing& d) {
  const Graph& s = d.skeleton().graph();
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < s.vertex_count(); ++v) {
    if (d.is_dummy(v)) {
      out << "  " << v << " [shape=point];\n";
    } else {
      out << "  " << v << " [label=\"" << dot_escape(s.vertex_name(v).empty() ? std::to_string(v) : s.vertex_name(v))
          << "\"];\n";
    }
  }
  for (EdgeId seg = 0; seg < s.edge_count(); ++seg) {
    const Edge& ed = s.edge(seg);
    out << "  " << ed.u << " -- " << ed.v << " [id=\"e" << d.owner(seg) << "\"";
    if (!ed.label.empty()) out << ", label=\"" << dot_escape(ed.label) << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_graphml(const Graph& g) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n"
      << "  <key id=\"label\" for=\"edge\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "    <node id=\"n" << v << "\">";
    if (!g.vertex_name(v).empty()) out << "<data key=\"name\">" << xml_escape(g.vertex_name(v)) << "</data>";
    out << "</node>\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "    <edge id=\"e" << e << "\" source=\"n" << ed.u << "\" target=\"n" << ed.v << "\">";
    if (!ed.label.empty()) out << "<data key=\"label\">" << xml_escape(ed.label) << "</data>";
    out << "</edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

}  // namespace crossratio
