#include "crossratio/planarity.hpp"

#include <algorithm>
#include <iterator>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace crossratio {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph b(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    boost::add_edge(g.edge(e).u, g.edge(e).v, static_cast<int>(e), b);
  }
  return b;
}

// The isolated subgraph may carry dangling paths; a subdivision has none.
void prune_pendant_edges(const Graph& g, std::vector<EdgeId>& edges) {
  std::vector<int> degree(g.vertex_count(), 0);
  for (EdgeId e : edges) ++degree[g.edge(e).u], ++degree[g.edge(e).v];
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<EdgeId> kept;
    for (EdgeId e : edges) {
      const Edge& ed = g.edge(e);
      if (degree[ed.u] == 1 || degree[ed.v] == 1) {
        --degree[ed.u], --degree[ed.v];
        changed = true;
      } else {
        kept.push_back(e);
      }
    }
    edges = std::move(kept);
  }
}

bool planar_subgraph(const Graph& g, const std::vector<EdgeId>& edges, std::size_t skip) {
  BoostGraph b(g.vertex_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i != skip) boost::add_edge(g.edge(edges[i]).u, g.edge(edges[i]).v, static_cast<int>(i), b);
  }
  return boost::boyer_myrvold_planarity_test(b);
}

void minimize(const Graph& g, std::vector<EdgeId>& edges) {
  for (std::size_t i = edges.size(); i-- > 0;) {
    if (!planar_subgraph(g, edges, i)) edges.erase(edges.begin() + static_cast<long>(i));
  }
}

}  // namespace

PlanarityResult test_planarity(const Graph& g, PlanarityRequest want) {
  BoostGraph b = to_boost(g);
  auto edge_index = boost::get(boost::edge_index, b);
  PlanarityResult out;

  if (want.embedding) {
    std::vector<std::vector<BoostEdge>> storage(g.vertex_count());
    auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, b));
    out.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                                     boost::boyer_myrvold_params::embedding = embedding);
    if (out.planar) {
      Rotation rot(g.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (const BoostEdge& be : storage[v]) {
          rot[v].push_back(out_dart(g, static_cast<EdgeId>(edge_index[be]), v));
        }
      }
      out.embedding = EmbeddedGraph(g, std::move(rot));
    }
  }
  if (!want.embedding || (!out.planar && want.kuratowski)) {
    if (!want.kuratowski) {
      out.planar = boost::boyer_myrvold_planarity_test(b);
      return out;
    }
    std::vector<BoostEdge> edges;
    out.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = b,
                                                     boost::boyer_myrvold_params::kuratowski_subgraph =
                                                         std::back_inserter(edges));
    if (!out.planar) {
      for (const BoostEdge& be : edges) out.kuratowski.push_back(static_cast<EdgeId>(edge_index[be]));
    }
  }
  std::sort(out.kuratowski.begin(), out.kuratowski.end());
  out.kuratowski.erase(std::unique(out.kuratowski.begin(), out.kuratowski.end()), out.kuratowski.end());
  prune_pendant_edges(g, out.kuratowski);
  if (want.minimal && !out.planar) minimize(g, out.kuratowski);
  return out;
}

EmbeddedGraph planar_embedding(const Graph& g) {
  PlanarityResult r = test_planarity(g, {.embedding = true});
  if (!r.planar) throw GraphError("graph is not planar");
  return std::move(*r.embedding);
}

std::vector<EdgeId> kuratowski_edges(const Graph& g) {
  return test_planarity(g, {.kuratowski = true, .minimal = true}).kuratowski;
}

}  // namespace crossratio
