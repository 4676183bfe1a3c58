#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "crossratio/families.hpp"
#include "crossratio/io.hpp"
#include "crossratio/patterns.hpp"
#include "crossratio/planarity.hpp"
#include "crossratio/ratio.hpp"
#include "crossratio/render.hpp"

namespace {

using namespace crossratio;
using nlohmann::ordered_json;

enum Exit : int { kOk = 0, kRefuted = 1, kUsage = 2 };

// Usage and limit errors end the run with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << bytes)) throw UsageError("cannot write '" + path + "'");
}

DrawingDocument load(const std::string& path) { return parse_document(read_input(path)); }

const TopologicalDrawing& drawing_of(const DrawingDocument& doc) {
  if (!doc.drawing) throw UsageError("the document has no drawing section");
  return *doc.drawing;
}

ExtensionMode parse_mode(const std::string& name) {
  for (ExtensionMode m : {ExtensionMode::kExtendAll, ExtensionMode::kMatchCorollary}) {
    if (to_string(m) == name) return m;
  }
  throw UsageError("unknown mode '" + name + "' (extend-all or match-corollary)");
}

struct FamilyRequest {
  std::string family;
  std::size_t ell = 0;
  std::size_t k = 1;
  std::string mode = std::string(to_string(ExtensionMode::kExtendAll));
};

Graph family_graph(const FamilyRequest& r) {
  if (r.family == "oneplanar") return gen_oneplanar(r.ell).graph;
  if (r.family == "oneplanar-multi") return gen_oneplanar_multi(r.ell, r.k).graph;
  if (r.family == "quasi") return gen_quasi(r.ell).graph;
  if (r.family == "kquasi") return gen_kquasi(r.ell, r.k, parse_mode(r.mode)).graph;
  if (r.family == "fan") return gen_fan(r.ell).graph;
  throw UsageError("unknown family '" + r.family + "'");
}

TopologicalDrawing family_drawing(const FamilyRequest& r, DrawingStyle style) {
  if (r.family == "oneplanar") return build_drawing(gen_oneplanar(r.ell), style);
  if (r.family == "oneplanar-multi") return build_drawing(gen_oneplanar_multi(r.ell, r.k), style);
  if (r.family == "quasi") return build_drawing(gen_quasi(r.ell), style);
  if (r.family == "kquasi") return build_drawing(gen_kquasi(r.ell, r.k, parse_mode(r.mode)), style);
  if (r.family == "fan") return build_drawing(gen_fan(r.ell), style);
  throw UsageError("unknown family '" + r.family + "'");
}

DocumentMetadata metadata_of(const FamilyRequest& r) {
  DocumentMetadata m;
  m.family = r.family;
  m.ell = r.ell;
  if (r.family == "oneplanar-multi" || r.family == "kquasi") m.k = r.k;
  if (r.family == "kquasi") m.mode = r.mode;
  return m;
}

FamilyRequest request_from(const DocumentMetadata& m) {
  if (!m.family || !m.ell) throw UsageError("the document metadata names no family and ell");
  FamilyRequest r;
  r.family = *m.family;
  r.ell = *m.ell;
  if (m.k) r.k = *m.k;
  if (m.mode) r.mode = *m.mode;
  return r;
}

// "3x17" -> pair of edge ids
EdgePair parse_force(const std::string& text, const Graph& g) {
  const std::size_t x = text.find('x');
  std::size_t a = 0, b = 0;
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    a = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    b = std::stoul(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw UsageError("--force expects E1xE2 with edge ids, got '" + text + "'");
  }
  if (a >= g.edge_count() || b >= g.edge_count()) throw UsageError("--force names an edge out of range: " + text);
  return EdgePair(static_cast<EdgeId>(a), static_cast<EdgeId>(b));
}

// Size of the scheme space up to k as a count of pair sets, a lower bound on
// the schemes (crossing orders multiply it further).
std::string scheme_space(const Graph& g, std::size_t k, std::size_t forced) {
  long double pairs = 0;
  for (EdgeId a = 0; a < g.edge_count(); ++a) {
    for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
      if (g.independent(a, b)) pairs += 1;
    }
  }
  pairs -= static_cast<long double>(forced);
  long double total = 0, term = 1;
  for (std::size_t j = 0; j + forced <= k; ++j) {
    total += term;
    term = term * (pairs - static_cast<long double>(j)) / static_cast<long double>(j + 1);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3Lg", total);
  return buf;
}

struct Globals {
  unsigned threads = 1;
  bool json = false;
};

void report(const Globals& g, const ordered_json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

int cmd_gen(const Globals& glob, const FamilyRequest& r, const std::string& out) {
  const DrawingDocument doc = make_document(family_graph(r), metadata_of(r));
  write_output(out, serialize(doc));
  if (out != "-") {
    report(glob,
           {{"command", "gen"}, {"family", r.family}, {"vertices", doc.graph.vertex_count()},
            {"edges", doc.graph.edge_count()}},
           r.family + " ell=" + std::to_string(r.ell) + ": " + std::to_string(doc.graph.vertex_count()) +
               " vertices, " + std::to_string(doc.graph.edge_count()) + " edges");
  }
  return kOk;
}

int cmd_draw(const Globals& glob, const std::string& style_name, const std::string& in, const std::string& out) {
  const DrawingDocument src = load(in);
  const FamilyRequest r = request_from(src.metadata);
  const DrawingStyle style = parse_style(style_name);
  const TopologicalDrawing d = family_drawing(r, style);
  if (!(d.base() == src.graph)) throw UsageError("the document's graph is not the " + r.family + " graph it names");
  DocumentMetadata meta = src.metadata;
  meta.style = std::string(to_string(style));
  write_output(out, serialize(make_document(d, meta)));
  if (out != "-") {
    report(glob, {{"command", "draw"}, {"style", to_string(style)}, {"crossings", crossing_count(d)}},
           r.family + " " + std::string(to_string(style)) + ": " + std::to_string(crossing_count(d)) + " crossings");
  }
  return kOk;
}

int cmd_check(const Globals& glob, const std::string& pattern, const std::string& in) {
  const DrawingDocument doc = load(in);
  const TopologicalDrawing& d = drawing_of(doc);
  const std::size_t colon = pattern.find(':');
  const std::string kind = pattern.substr(0, colon);
  std::size_t k = 0;
  if (colon != std::string::npos) {
    try {
      k = std::stoul(pattern.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw UsageError("bad pattern '" + pattern + "'");
    }
  }
  const PatternProfile prof = profile(d);
  ordered_json j = {{"command", "check"}, {"pattern", pattern}, {"crossings", crossing_count(d)}};
  bool holds = false;
  std::string detail;
  if (kind == "kplanar" && colon != std::string::npos) {
    holds = check_k_planar(d, k);
    j["max_crossings_per_edge"] = prof.max_crossings_per_edge;
    detail = "max crossings on one edge " + std::to_string(prof.max_crossings_per_edge);
  } else if (kind == "quasi" && colon != std::string::npos) {
    if (k < 3) throw UsageError("quasi:K needs K >= 3");
    holds = check_k_quasi_planar(d, k);
    j["max_crossing_clique"] = prof.max_clique;
    detail = "largest set of pairwise crossing edges " + std::to_string(prof.max_clique);
  } else if (pattern == "fan") {
    const FanVerdict v = check_fan_planar(d);
    holds = v.fan_planar;
    ordered_json bad = ordered_json::array();
    for (const FanViolation& f : v.violations) {
      bad.push_back({{"crossed", f.crossed},
                     {"edges", {f.offending.first, f.offending.second}},
                     {"reason", to_string(f.reason)}});
    }
    j["violations"] = bad;
    detail = std::to_string(v.violations.size()) + " fan violations";
  } else {
    throw UsageError("unknown pattern '" + pattern + "' (kplanar:K, quasi:K or fan)");
  }
  j["holds"] = holds;
  report(glob, j,
         pattern + ": " + (holds ? "holds" : "fails") + " (" + std::to_string(crossing_count(d)) + " crossings, " +
             detail + ")");
  return holds ? kOk : kRefuted;
}

SearchOptions search_options(const Globals& glob, std::uint64_t budget, const std::string& mode) {
  SearchOptions o;
  o.threads = glob.threads;
  o.budget = budget;
  if (mode == "exhaustive") {
    o.mode = SearchMode::kExhaustive;
  } else if (mode != "branching") {
    throw UsageError("unknown search mode '" + mode + "' (branching or exhaustive)");
  }
  return o;
}

ordered_json certificate_summary(const Certificate& c, const std::string& command) {
  return {{"command", command},
          {"claim", to_string(c.claim)},
          {"value", c.value},
          {"holds", c.holds},
          {"planarity_tests", c.log.planarity_tests},
          {"exhausted_below", c.log.exhausted_below}};
}

template <class Run>
Certificate with_budget(const Graph& g, std::size_t k, std::size_t forced, Run run) {
  try {
    return run();
  } catch (const BudgetExceeded& e) {
    throw UsageError(std::string(e.what()) + "; the scheme space up to " + std::to_string(k) +
                     " crossings holds at least " + scheme_space(g, k, forced) + " pair sets");
  }
}

int cmd_cr(const Globals& glob, std::size_t max_k, const std::vector<std::string>& force, std::uint64_t budget,
           const std::string& mode, const std::string& in, const std::string& out) {
  const DrawingDocument doc = load(in);
  std::vector<EdgePair> forced;
  for (const std::string& f : force) forced.push_back(parse_force(f, doc.graph));
  const SearchOptions o = search_options(glob, budget, mode);
  const Certificate c =
      with_budget(doc.graph, max_k, forced.size(), [&] { return exact_cr(doc.graph, max_k, forced, o); });
  write_output(out, certificate_json(c, o));
  if (out != "-") report(glob, certificate_summary(c, "cr"), c.summary());
  return c.claim == Claim::kCrEquals ? kOk : kRefuted;
}

int cmd_certify(const Globals& glob, std::size_t at_least, std::uint64_t budget, const std::string& mode,
                const std::string& in, const std::string& out) {
  const DrawingDocument doc = load(in);
  const SearchOptions o = search_options(glob, budget, mode);
  const Certificate c = with_budget(doc.graph, at_least, 0, [&] { return certify_lower(doc.graph, at_least, {}, o); });
  write_output(out, certificate_json(c, o));
  if (out != "-") report(glob, certificate_summary(c, "certify"), c.summary());
  return c.holds ? kOk : kRefuted;
}

int cmd_ratio(const Globals& glob, const FamilyRequest& r, std::uint64_t budget) {
  SearchOptions o;
  o.threads = glob.threads;
  o.budget = budget;
  const RatioReport rep = ratio_report(r.family, r.ell, r.k, o);
  report(glob,
         {{"command", "ratio"},
          {"family", rep.family},
          {"ell", rep.ell},
          {"k", rep.k},
          {"style", to_string(rep.style)},
          {"vertices", rep.vertices},
          {"restricted_crossings", rep.witness},
          {"cr", rep.cr},
          {"ratio", rep.ratio.str()}},
         rep.family + " ell=" + std::to_string(rep.ell) + " n=" + std::to_string(rep.vertices) + ": " +
             std::string(to_string(rep.style)) + " drawing with " + std::to_string(rep.witness) +
             " crossings, cr = " + std::to_string(rep.cr) + ", ratio " + rep.ratio.str());
  return kOk;
}

int cmd_render(const std::string& layout, const std::string& title, const std::string& in, const std::string& out) {
  const DrawingDocument doc = load(in);
  RenderOptions options;
  options.layout = parse_layout(layout);
  options.title = title;
  options.outer_face = doc.outer_face;
  if (doc.drawing) {
    write_output(out, render_svg(*doc.drawing, options));
  } else {
    if (!is_planar(doc.graph)) throw UsageError("the document has no drawing and its graph is not planar");
    write_output(out, render_svg(plane_drawing(planar_embedding(doc.graph)), options));
  }
  return kOk;
}

int cmd_export(const std::string& format, const std::string& in, const std::string& out) {
  const DrawingDocument doc = load(in);
  if (format == "dot") {
    write_output(out, doc.drawing ? to_dot(*doc.drawing) : to_dot(doc.graph));
  } else if (format == "graphml") {
    write_output(out, to_graphml(doc.graph));
  } else {
    throw UsageError("unknown export format '" + format + "' (dot or graphml)");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossing numbers of pattern-restricted graph drawings"};
  app.set_version_flag("--version", std::string(crossratio::version()));
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals glob;
  app.add_option("--threads", glob.threads, "Worker threads for the crossing-number search")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--json", glob.json, "Machine-readable reports on stdout");

  FamilyRequest fam;
  std::string in = "-", out = "-", style, pattern, mode = "branching", layout = "grid", title, format;
  std::size_t max_k = 0, at_least = 0;
  std::uint64_t budget = SearchOptions{}.budget;
  std::vector<std::string> force;
  auto family_options = [&](CLI::App* cmd) {
    cmd->add_option("--family", fam.family, "oneplanar, oneplanar-multi, quasi, kquasi or fan")->required();
    cmd->add_option("--ell", fam.ell, "Family parameter")->required();
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a family graph");
  family_options(gen);
  gen->add_option("--k", fam.k, "Multiplicity (oneplanar-multi) or quasi-planarity order (kquasi)");
  gen->add_option("--mode", fam.mode, "kquasi extension: extend-all or match-corollary");
  gen->add_option("-o,--output", out, "Document to write");

  CLI::App* draw = app.add_subcommand("draw", "Draw a generated family graph in a given style");
  draw->add_option("--style", style, "saturated, min, quasi-planar or fan-planar")->required();
  draw->add_option("-i,--input", in, "Document from gen");
  draw->add_option("-o,--output", out, "Document to write");

  CLI::App* check = app.add_subcommand("check", "Check a drawing against a crossing pattern");
  check->add_option("--pattern", pattern, "kplanar:K, quasi:K or fan")->required();
  check->add_option("-i,--input", in, "Document with a drawing");

  CLI::App* cr = app.add_subcommand("cr", "Compute the crossing number up to a bound");
  cr->add_option("--max-k", max_k, "Largest crossing count searched")->required();
  cr->add_option("--force", force, "Edge pairs E1xE2 that must cross");
  cr->add_option("--budget", budget, "Ceiling on planarity tests");
  cr->add_option("--search", mode, "branching or exhaustive");
  cr->add_option("-i,--input", in, "Document");
  cr->add_option("-o,--output", out, "Certificate to write");

  CLI::App* certify = app.add_subcommand("certify", "Certify a lower bound on the crossing number");
  certify->add_option("--at-least", at_least, "Bound to certify")->required();
  certify->add_option("--budget", budget, "Ceiling on planarity tests");
  certify->add_option("--search", mode, "branching or exhaustive");
  certify->add_option("-i,--input", in, "Document");
  certify->add_option("-o,--output", out, "Certificate to write");

  CLI::App* ratio = app.add_subcommand("ratio", "Restricted crossing count over the crossing number");
  family_options(ratio);
  ratio->add_option("--k", fam.k, "Multiplicity (oneplanar-multi)");
  ratio->add_option("--budget", budget, "Ceiling on planarity tests");

  CLI::App* render = app.add_subcommand("render", "Render a drawing as SVG");
  render->add_option("--layout", layout, "grid or barycentric");
  render->add_option("--title", title, "Figure title");
  render->add_option("-i,--input", in, "Document");
  render->add_option("-o,--output", out, "SVG to write");

  CLI::App* exp = app.add_subcommand("export", "Export a document as DOT or GraphML");
  exp->add_option("--format", format, "dot or graphml")->required();
  exp->add_option("-i,--input", in, "Document");
  exp->add_option("-o,--output", out, "File to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(glob, fam, out);
    if (*draw) return cmd_draw(glob, style, in, out);
    if (*check) return cmd_check(glob, pattern, in);
    if (*cr) return cmd_cr(glob, max_k, force, budget, mode, in, out);
    if (*certify) return cmd_certify(glob, at_least, budget, mode, in, out);
    if (*ratio) return cmd_ratio(glob, fam, budget);
    if (*render) return cmd_render(layout, title, in, out);
    if (*exp) return cmd_export(format, in, out);
  } catch (const std::exception& e) {
    std::cerr << "crossratio: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
