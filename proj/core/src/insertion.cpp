#include "crossratio/insertion.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace crossratio {

namespace {

class DualRouter {
 public:
  DualRouter(const TopologicalDrawing& d, VertexId u, VertexId v, const CrossablePredicate& crossable)
      : d_(d), faces_(trace_faces(d.skeleton())), u_(u), v_(v), crossable_(crossable) {
    const Graph& g = d.skeleton().graph();
    corner_u_.assign(faces_.face_count(), std::nullopt);
    corner_v_.assign(faces_.face_count(), std::nullopt);
    for (std::size_t f = 0; f < faces_.face_count(); ++f) {
      for (Dart a : faces_.faces[f]) {
        if (head(g, a) == u && !corner_u_[f]) corner_u_[f] = a;
        if (head(g, a) == v && !corner_v_[f]) corner_v_[f] = a;
      }
    }
  }

  struct Route {
    Dart start;
    std::vector<Dart> crossed;
    Dart end;
  };

  std::optional<Route> shortest() {
    const std::size_t nf = faces_.face_count();
    std::vector<std::size_t> dist(nf, kUnreached);
    std::vector<Dart> via(nf, 0);
    std::deque<std::size_t> queue;
    for (std::size_t f = 0; f < nf; ++f) {
      if (corner_u_[f]) dist[f] = 0, queue.push_back(f);
    }
    while (!queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop_front();
      if (corner_v_[f]) {
        Route r = trace_back(f, dist, via);
        if (crosses_each_edge_once(r.crossed)) return r;
        return deepening(dist[f]);
      }
      for (Dart c : faces_.faces[f]) {
        if (!can_cross(c)) continue;
        const std::size_t g = faces_.face_of_dart[twin(c)];
        if (dist[g] != kUnreached) continue;
        dist[g] = dist[f] + 1;
        via[g] = c;
        queue.push_back(g);
      }
    }
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

  bool can_cross(Dart c) const {
    const EdgeId o = d_.owner(dart_edge(c));
    const Edge& oe = d_.base().edge(o);
    if (oe.has(u_) || oe.has(v_)) return false;
    return !crossable_ || crossable_(o);
  }

  Route trace_back(std::size_t f, const std::vector<std::size_t>& dist, const std::vector<Dart>& via) const {
    Route r;
    r.end = *corner_v_[f];
    while (dist[f] != 0) {
      r.crossed.push_back(via[f]);
      f = faces_.face_of_dart[via[f]];
    }
    std::reverse(r.crossed.begin(), r.crossed.end());
    r.start = *corner_u_[f];
    return r;
  }

  bool crosses_each_edge_once(const std::vector<Dart>& crossed) const {
    std::set<EdgeId> seen;
    for (Dart c : crossed) {
      if (!seen.insert(d_.owner(dart_edge(c))).second) return false;
    }
    return true;
  }

  // Shortest route that crosses no base edge twice, by iterative deepening.
  std::optional<Route> deepening(std::size_t from_depth) {
    for (std::size_t limit = from_depth; limit < faces_.face_count(); ++limit) {
      for (std::size_t f = 0; f < faces_.face_count(); ++f) {
        if (!corner_u_[f]) continue;
        Route r;
        r.start = *corner_u_[f];
        std::vector<bool> on_path(faces_.face_count(), false);
        std::set<EdgeId> used;
        if (dfs(f, limit, r, on_path, used)) return r;
      }
    }
    return std::nullopt;
  }

  bool dfs(std::size_t f, std::size_t budget, Route& r, std::vector<bool>& on_path, std::set<EdgeId>& used) {
    if (corner_v_[f] && r.crossed.size() == budget) {
      r.end = *corner_v_[f];
      return true;
    }
    if (r.crossed.size() == budget) return false;
    on_path[f] = true;
    for (Dart c : faces_.faces[f]) {
      if (!can_cross(c)) continue;
      const std::size_t g = faces_.face_of_dart[twin(c)];
      const EdgeId o = d_.owner(dart_edge(c));
      if (on_path[g] || used.contains(o)) continue;
      used.insert(o);
      r.crossed.push_back(c);
      if (dfs(g, budget, r, on_path, used)) return true;
      r.crossed.pop_back();
      used.erase(o);
    }
    on_path[f] = false;
    return false;
  }

  const TopologicalDrawing& d_;
  FaceReport faces_;
  VertexId u_, v_;
  const CrossablePredicate& crossable_;
  std::vector<std::optional<Dart>> corner_u_, corner_v_;
};

}  // namespace

std::optional<InsertionResult> insert_edge_min_crossings(const TopologicalDrawing& d, VertexId u,
                                                         VertexId v, std::string label,
                                                         const CrossablePredicate& crossable) {
  if (!d.base().has_vertex(u) || !d.base().has_vertex(v) || u == v) {
    throw GraphError("edge insertion needs two distinct base vertices");
  }
  DualRouter router(d, u, v, crossable);
  const auto route = router.shortest();
  if (!route) return std::nullopt;
  DrawingBuilder b(d);
  InsertionResult out;
  out.edge = b.add_routed_edge(u, v, route->start, route->crossed, route->end, std::move(label));
  out.crossings = route->crossed.size();
  out.drawing = b.build();
  return out;
}

}  // namespace crossratio
