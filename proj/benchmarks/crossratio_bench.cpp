#include <benchmark/benchmark.h>

#include "crossratio/exact.hpp"
#include "crossratio/families.hpp"
#include "crossratio/insertion.hpp"
#include "crossratio/io.hpp"
#include "crossratio/patterns.hpp"
#include "crossratio/planarity.hpp"
#include "crossratio/render.hpp"

namespace crossratio {
namespace {

Graph complete(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

void BM_PlanarityOneplanar(benchmark::State& state) {
  const Graph g = gen_oneplanar(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_planar(g));
  state.SetLabel(std::to_string(g.edge_count()) + " edges");
}
BENCHMARK(BM_PlanarityOneplanar)->DenseRange(7, 13, 3);

void BM_GenerateAndDraw(benchmark::State& state) {
  const auto ell = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const OneplanarFamily fam = gen_oneplanar(ell);
    benchmark::DoNotOptimize(build_drawing(fam, DrawingStyle::kSaturated));
    benchmark::DoNotOptimize(build_drawing(fam, DrawingStyle::kMin));
  }
}
BENCHMARK(BM_GenerateAndDraw)->Arg(7)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ExactCr(benchmark::State& state) {
  const Graph g = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_cr(g, 4));
}
BENCHMARK(BM_ExactCr)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CertifyOneplanar(benchmark::State& state) {
  const Graph g = gen_oneplanar(7).graph;
  SearchOptions o;
  o.mode = state.range(0) == 0 ? SearchMode::kBranching : SearchMode::kExhaustive;
  o.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(certify_lower(g, 2, {}, o));
  state.SetLabel(std::string(to_string(o.mode)));
}
BENCHMARK(BM_CertifyOneplanar)
    ->Args({0, 1})
    ->Args({1, 1})
    ->Args({1, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_QuasiCr(benchmark::State& state) {
  const Graph g = gen_quasi(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(exact_cr(g, 3));
}
BENCHMARK(BM_QuasiCr)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_InsertSpecialEdge(benchmark::State& state) {
  const OneplanarFamily fam = gen_oneplanar(static_cast<std::size_t>(state.range(0)));
  const TopologicalDrawing d = remove_edge(build_drawing(fam, DrawingStyle::kSaturated), fam.special_edge);
  for (auto _ : state) benchmark::DoNotOptimize(insert_edge_min_crossings(d, fam.x, fam.y_star));
}
BENCHMARK(BM_InsertSpecialEdge)->Arg(7)->Arg(13)->Unit(benchmark::kMicrosecond);

void BM_Validators(benchmark::State& state) {
  const TopologicalDrawing d = build_drawing(gen_oneplanar(10), DrawingStyle::kSaturated);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(d));
    benchmark::DoNotOptimize(profile(d));
  }
}
BENCHMARK(BM_Validators)->Unit(benchmark::kMicrosecond);

void BM_DocumentRoundTrip(benchmark::State& state) {
  const DrawingDocument doc = make_document(build_drawing(gen_oneplanar(10), DrawingStyle::kSaturated));
  for (auto _ : state) benchmark::DoNotOptimize(parse_document(serialize(doc)));
}
BENCHMARK(BM_DocumentRoundTrip)->Unit(benchmark::kMillisecond);

void BM_RenderSvg(benchmark::State& state) {
  const TopologicalDrawing d = build_drawing(gen_oneplanar(10), DrawingStyle::kSaturated);
  RenderOptions o;
  o.layout = state.range(0) == 0 ? LayoutMethod::kGrid : LayoutMethod::kBarycentric;
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(d, o));
  state.SetLabel(std::string(to_string(o.layout)));
}
BENCHMARK(BM_RenderSvg)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace crossratio

BENCHMARK_MAIN();
