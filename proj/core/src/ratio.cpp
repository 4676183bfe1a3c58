#include "crossratio/ratio.hpp"

#include <numeric>

namespace crossratio {

Rational Rational::of(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw GraphError("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

struct Drawn {
  Graph graph;
  DrawingStyle style;
  TopologicalDrawing restricted;
  TopologicalDrawing minimum;
};

Drawn draw_family(std::string_view family, std::size_t ell, std::size_t k) {
  if (family == "oneplanar") {
    const OneplanarFamily f = gen_oneplanar(ell);
    return {f.graph, DrawingStyle::kSaturated, build_drawing(f, DrawingStyle::kSaturated),
            build_drawing(f, DrawingStyle::kMin)};
  }
  if (family == "oneplanar-multi") {
    const OneplanarMultiFamily f = gen_oneplanar_multi(ell, k);
    return {f.graph, DrawingStyle::kSaturated, build_drawing(f, DrawingStyle::kSaturated),
            build_drawing(f, DrawingStyle::kMin)};
  }
  if (family == "quasi") {
    const QuasiFamily f = gen_quasi(ell);
    return {f.graph, DrawingStyle::kQuasiPlanar, build_drawing(f, DrawingStyle::kQuasiPlanar),
            build_drawing(f, DrawingStyle::kMin)};
  }
  if (family == "fan") {
    const FanFamily f = gen_fan(ell);
    return {f.graph, DrawingStyle::kFanPlanar, build_drawing(f, DrawingStyle::kFanPlanar),
            build_drawing(f, DrawingStyle::kMin)};
  }
  if (family == "kquasi") throw GraphError("kquasi has no pattern-restricted drawing");
  throw GraphError("unknown family '" + std::string(family) + "'");
}

}  // namespace

RatioReport ratio_report(std::string_view family, std::size_t ell, std::size_t k, const SearchOptions& options) {
  const Drawn d = draw_family(family, ell, k);
  RatioReport r;
  r.family = std::string(family);
  r.ell = ell;
  r.k = k;
  r.style = d.style;
  r.vertices = d.graph.vertex_count();
  r.witness = crossing_count(d.restricted);
  SearchOptions o = options;
  o.witness_hint = d.minimum;
  r.certificate = exact_cr(d.graph, crossing_count(d.minimum), {}, o);
  if (r.certificate.claim != Claim::kCrEquals || r.certificate.value == 0) {
    throw GraphError("crossing number not certified: " + r.certificate.summary());
  }
  r.cr = r.certificate.value;
  r.ratio = Rational::of(r.witness, r.cr);
  return r;
}

}  // namespace crossratio
