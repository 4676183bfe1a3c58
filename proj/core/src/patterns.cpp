#include "crossratio/patterns.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace crossratio {

namespace {

void require_valid(const TopologicalDrawing& d) {
  const ValidityReport r = validate(d);
  if (!r.valid()) throw GraphError("invalid drawing: " + r.violations.front());
}

// Bron-Kerbosch with Tomita pivoting over sorted candidate lists.
class CliqueSearch {
 public:
  explicit CliqueSearch(const CrossingGraph& cg) : cg_(cg) {}

  std::vector<EdgeId> run(std::vector<EdgeId> candidates) {
    std::vector<EdgeId> r;
    expand(r, std::move(candidates), {});
    return best_;
  }

 private:
  bool linked(EdgeId a, EdgeId b) const {
    const auto& n = cg_.neighbours[a];
    return std::binary_search(n.begin(), n.end(), b);
  }

  std::vector<EdgeId> restrict_to(const std::vector<EdgeId>& set, EdgeId v) const {
    std::vector<EdgeId> out;
    std::set_intersection(set.begin(), set.end(), cg_.neighbours[v].begin(), cg_.neighbours[v].end(),
                          std::back_inserter(out));
    return out;
  }

  void expand(std::vector<EdgeId>& r, std::vector<EdgeId> p, std::vector<EdgeId> x) {
    if (p.empty()) {
      if (x.empty() && r.size() > best_.size()) best_ = r;
      return;
    }
    if (r.size() + p.size() <= best_.size()) return;
    EdgeId pivot = p.front();
    std::size_t pivot_hits = 0;
    for (const auto* set : {&p, &x}) {
      for (EdgeId u : *set) {
        const std::size_t hits = restrict_to(p, u).size();
        if (hits > pivot_hits) pivot = u, pivot_hits = hits;
      }
    }
    std::vector<EdgeId> branch;
    for (EdgeId v : p) {
      if (!linked(pivot, v)) branch.push_back(v);
    }
    for (EdgeId v : branch) {
      r.push_back(v);
      expand(r, restrict_to(p, v), restrict_to(x, v));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const CrossingGraph& cg_;
  std::vector<EdgeId> best_;
};

// Dart of `e` leaving `x` toward edge(e).v when `forward`, else toward edge(e).u.
Dart leaving(const TopologicalDrawing& d, const std::vector<VertexId>& walk, EdgeId e, VertexId x,
             bool forward) {
  const std::size_t i = std::find(walk.begin(), walk.end(), x) - walk.begin();
  const EdgeId seg = d.segments(e).at(forward ? i : i - 1);
  return out_dart(d.skeleton().graph(), seg, x);
}

}  // namespace

CrossingGraph crossing_graph(const TopologicalDrawing& d) {
  CrossingGraph cg;
  cg.nodes = d.base().edge_count();
  cg.neighbours.resize(cg.nodes);
  for (VertexId x = static_cast<VertexId>(d.base().vertex_count());
       x < d.skeleton().graph().vertex_count(); ++x) {
    const EdgePair p = d.crossing_pair(x);
    cg.links.push_back(p);
    cg.neighbours[p.first].push_back(p.second);
    cg.neighbours[p.second].push_back(p.first);
  }
  std::sort(cg.links.begin(), cg.links.end());
  cg.links.erase(std::unique(cg.links.begin(), cg.links.end()), cg.links.end());
  for (auto& n : cg.neighbours) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  return cg;
}

std::vector<EdgeId> max_clique(const CrossingGraph& cg) {
  if (cg.nodes == 0) return {};
  std::vector<EdgeId> crossed;
  for (EdgeId e = 0; e < cg.nodes; ++e) {
    if (!cg.neighbours[e].empty()) crossed.push_back(e);
  }
  if (crossed.empty()) return {0};
  std::vector<EdgeId> best = CliqueSearch(cg).run(std::move(crossed));
  std::sort(best.begin(), best.end());
  return best;
}

bool check_k_planar(const TopologicalDrawing& d, std::size_t k) {
  require_valid(d);
  for (EdgeId e = 0; e < d.base().edge_count(); ++e) {
    if (d.crossings_on(e) > k) return false;
  }
  return true;
}

bool check_k_quasi_planar(const TopologicalDrawing& d, std::size_t k) {
  if (k < 3) throw GraphError("k-quasi-planarity needs k >= 3");
  require_valid(d);
  return max_clique(crossing_graph(d)).size() < k;
}

std::string_view to_string(FanReason r) {
  return r == FanReason::kIndependent ? "independent" : "different-sides";
}

FanVerdict check_fan_planar(const TopologicalDrawing& d) {
  require_valid(d);
  const Graph& base = d.base();
  const EmbeddedGraph& sk = d.skeleton();
  std::vector<std::vector<VertexId>> walks(base.edge_count());
  for (EdgeId e = 0; e < base.edge_count(); ++e) walks[e] = d.path_vertices(e);

  FanVerdict out;
  for (EdgeId e = 0; e < base.edge_count(); ++e) {
    std::vector<std::pair<EdgeId, VertexId>> crossers;  // (edge, dummy) along e
    for (VertexId x : walks[e]) {
      if (d.is_dummy(x)) crossers.emplace_back(d.crossing_pair(x).partner(e), x);
    }
    if (crossers.size() < 2) continue;

    std::set<VertexId> apex{base.edge(crossers[0].first).u, base.edge(crossers[0].first).v};
    for (const auto& [f, x] : crossers) {
      std::set<VertexId> keep;
      for (VertexId a : apex) {
        if (base.edge(f).has(a)) keep.insert(a);
      }
      apex = std::move(keep);
    }
    if (apex.empty()) {
      // report an independent pair, or else a pair whose shared endpoint is not common
      std::optional<EdgePair> pair;
      for (std::size_t i = 0; i < crossers.size() && !pair; ++i) {
        for (std::size_t j = i + 1; j < crossers.size() && !pair; ++j) {
          if (base.independent(crossers[i].first, crossers[j].first)) {
            pair = EdgePair(crossers[i].first, crossers[j].first);
          }
        }
      }
      if (!pair) pair = EdgePair(crossers[0].first, crossers[2].first);
      out.violations.push_back({e, *pair, FanReason::kIndependent});
      continue;
    }

    const VertexId a = *apex.begin();
    std::optional<bool> first_side;
    for (const auto& [f, x] : crossers) {
      const Dart e_fwd = leaving(d, walks[e], e, x, true);
      const Dart f_fwd = leaving(d, walks[f], f, x, base.edge(f).u == a);
      const bool left_to_right = sk.predecessor(e_fwd) == f_fwd;
      if (!first_side) {
        first_side = left_to_right;
      } else if (*first_side != left_to_right) {
        out.violations.push_back({e, EdgePair(crossers[0].first, f), FanReason::kDifferentSides});
        break;
      }
    }
  }
  out.fan_planar = out.violations.empty();
  return out;
}

PatternProfile profile(const TopologicalDrawing& d) {
  require_valid(d);
  PatternProfile p;
  for (EdgeId e = 0; e < d.base().edge_count(); ++e) {
    p.max_crossings_per_edge = std::max(p.max_crossings_per_edge, d.crossings_on(e));
  }
  p.max_clique = max_clique(crossing_graph(d)).size();
  p.fan_violations = check_fan_planar(d).violations;
  return p;
}

}  // namespace crossratio
