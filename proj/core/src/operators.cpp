#include "crossratio/operators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <tuple>

namespace crossratio {

std::string extension_label(EdgeId e) { return "extension(" + std::to_string(e) + ")"; }

namespace {

std::string fresh_name(const Graph& g, const std::string& base) {
  if (base.empty()) return {};
  std::string name = base;
  for (int k = 1; g.find_vertex(name); ++k) name = base + "." + std::to_string(k);
  return name;
}

struct RowIndex {
  char row;
  std::size_t index;
};

std::optional<RowIndex> parse_row_name(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'b' && name[0] != 'c')) return std::nullopt;
  std::size_t index = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
  if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
  return RowIndex{name[0], index};
}

}  // namespace

Graph extend_edge(const Graph& g, EdgeId e, std::size_t paths) {
  const Edge base = g.edge(e);
  Graph out = g;
  const std::string label = extension_label(e);
  for (std::size_t p = 0; p < paths; ++p) {
    std::string name;
    if (!g.vertex_name(base.u).empty() && !g.vertex_name(base.v).empty()) {
      name = fresh_name(out, g.vertex_name(base.u) + "~" + g.vertex_name(base.v) + "#" +
                                 std::to_string(p + 1));
    }
    const VertexId m = out.add_vertex(std::move(name));
    out.add_edge(base.u, m, label);
    out.add_edge(m, base.v, label);
  }
  return out;
}

EmbeddedGraph cartesian_path2_cycle(std::size_t len) {
  if (len < 3) throw GraphError("cartesian_path2_cycle needs a cycle of length >= 3");
  Graph g;
  for (char row : {'a', 'b', 'c'}) {
    for (std::size_t i = 0; i < len; ++i) g.add_vertex(std::string(1, row) + std::to_string(i));
  }
  auto id = [len](std::size_t row, std::size_t i) {
    return static_cast<VertexId>(row * len + i % len);
  };
  // cycle edge of row r at i: r * len + i; rung a_i b_i: 3 len + i; rung b_i c_i: 4 len + i
  for (std::size_t row = 0; row < 3; ++row) {
    for (std::size_t i = 0; i < len; ++i) g.add_edge(id(row, i), id(row, i + 1), "cycle");
  }
  for (std::size_t i = 0; i < len; ++i) g.add_edge(id(0, i), id(1, i), "rung");
  for (std::size_t i = 0; i < len; ++i) g.add_edge(id(1, i), id(2, i), "rung");

  auto cycle_edge = [len](std::size_t row, std::size_t i) {
    return static_cast<EdgeId>(row * len + i % len);
  };
  auto rung_ab = [len](std::size_t i) { return static_cast<EdgeId>(3 * len + i); };
  auto rung_bc = [len](std::size_t i) { return static_cast<EdgeId>(4 * len + i); };

  // Rows on concentric circles, a innermost; at every vertex the ccw order is
  // outward, forward along the cycle, inward, backward.
  Rotation rot(3 * len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t prev = (i + len - 1) % len;
    const VertexId a = id(0, i), b = id(1, i), c = id(2, i);
    rot[a] = {out_dart(g, rung_ab(i), a), out_dart(g, cycle_edge(0, i), a),
              out_dart(g, cycle_edge(0, prev), a)};
    rot[b] = {out_dart(g, rung_bc(i), b), out_dart(g, cycle_edge(1, i), b),
              out_dart(g, rung_ab(i), b), out_dart(g, cycle_edge(1, prev), b)};
    rot[c] = {out_dart(g, cycle_edge(2, i), c), out_dart(g, rung_bc(i), c),
              out_dart(g, cycle_edge(2, prev), c)};
  }
  return EmbeddedGraph(std::move(g), std::move(rot));
}

EmbeddedGraph medial_extension(const EmbeddedGraph& base) {
  const Graph& g = base.graph();
  const std::size_t n = g.vertex_count();
  if (n < 9 || n % 3 != 0 || g.edge_count() != 5 * (n / 3)) {
    throw GraphError("medial_extension expects a cartesian_path2_cycle embedding");
  }
  const std::size_t len = n / 3;
  std::vector<RowIndex> rows;
  for (VertexId v = 0; v < n; ++v) {
    auto r = parse_row_name(g.vertex_name(v));
    if (!r || r->index >= len || v != (r->row - 'a') * len + r->index) {
      throw GraphError("medial_extension expects product vertex names a_i, b_i, c_i");
    }
    rows.push_back(*r);
  }
  const FaceReport faces = trace_faces(base);
  if (!faces.genus_zero || faces.face_count() != 2 * len + 2) {
    throw GraphError("medial_extension expects the planar product embedding");
  }

  // (band, i, face, positions of r_i, r_{i+1}, s_i in the walk)
  std::vector<std::tuple<char, std::size_t, std::size_t, std::array<std::size_t, 3>>> quads;
  for (std::size_t f = 0; f < faces.face_count(); ++f) {
    const auto& walk = faces.faces[f];
    if (walk.size() != 4) continue;
    std::optional<char> band;
    std::vector<std::pair<std::size_t, std::size_t>> outer, middle;  // (index, position)
    for (std::size_t p = 0; p < 4; ++p) {
      const RowIndex& r = rows[head(g, walk[p])];
      if (r.row == 'b') {
        middle.emplace_back(r.index, p);
      } else {
        if (band && *band != r.row) throw GraphError("quadrangle spans both outer rows");
        band = r.row;
        outer.emplace_back(r.index, p);
      }
    }
    if (outer.size() != 2 || middle.size() != 2) {
      if (len == 4) continue;  // a polar face of C_4 is also a quadrangle
      throw GraphError("unexpected quadrangle in product embedding");
    }
    std::sort(outer.begin(), outer.end());
    std::sort(middle.begin(), middle.end());
    // first = r_i with r_{i+1} the other; wrap-around when {0, len-1}
    if (outer[0].first == 0 && outer[1].first == len - 1) std::swap(outer[0], outer[1]);
    if (middle[0].first == 0 && middle[1].first == len - 1) std::swap(middle[0], middle[1]);
    if ((outer[0].first + 1) % len != outer[1].first || middle[0].first != outer[0].first) {
      throw GraphError("quadrangle corners are not consecutive product vertices");
    }
    quads.emplace_back(*band, outer[0].first, f,
                       std::array<std::size_t, 3>{outer[0].second, outer[1].second,
                                                  middle[0].second});
  }
  if (quads.size() != 2 * len) throw GraphError("product embedding must have 2 len quadrangles");
  std::sort(quads.begin(), quads.end());

  EmbeddedGraph out = base;
  for (const auto& [band, i, face, corners] : quads) {
    out = insert_vertex_in_face(out, faces, face, corners,
                                std::string("m") + band + std::to_string(i), "medial");
  }
  return out;
}

std::string_view to_string(DrawingClass c) {
  switch (c) {
    case DrawingClass::kOnePlanar: return "1-planar";
    case DrawingClass::kQuasiPlanar: return "quasi-planar";
    case DrawingClass::kFanPlanar: return "fan-planar";
  }
  return "unknown";
}

DensityVerdict check_density(const Graph& g, DrawingClass cls) {
  DensityVerdict out;
  out.edges = g.edge_count();
  out.simple = g.is_simple();
  const long n = static_cast<long>(g.vertex_count());
  long twice = 0;
  switch (cls) {
    case DrawingClass::kOnePlanar: twice = 2 * (4 * n - 8); break;
    case DrawingClass::kQuasiPlanar: twice = 13 * n - 40; break;
    case DrawingClass::kFanPlanar: twice = 2 * (5 * n - 10); break;
  }
  const long planar_max = n >= 3 ? 3 * n - 6 : n * (n - 1) / 2;
  out.twice_bound = std::max(twice, 2 * planar_max);
  out.within_bound = out.simple && 2 * static_cast<long>(out.edges) <= out.twice_bound;
  return out;
}

}  // namespace crossratio
