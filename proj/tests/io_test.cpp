#include <gtest/gtest.h>

#include <json.hpp>

#include "crossratio/families.hpp"
#include "crossratio/io.hpp"

namespace crossratio {
namespace {

using nlohmann::json;

Graph complete(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

// K5 with its one-crossing witness: edges 0 = (0,1) and 7 = (2,3) cross at 5.
DrawingDocument k5_document() {
  const Certificate c = exact_cr(complete(5), 1);
  return make_document(*c.witness, {.family = "k5"});
}

std::string expect_parse_error(const std::string& text) {
  try {
    (void)parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  ADD_FAILURE() << "document was accepted";
  return {};
}

TEST(Io, EmptyGraphRoundTrip) {
  const DrawingDocument doc = make_document(Graph{});
  const std::string text = serialize(doc);
  EXPECT_EQ(parse_document(text), doc);
  EXPECT_EQ(serialize(parse_document(text)), text);
  EXPECT_FALSE(json::parse(text).contains("drawing"));
}

TEST(Io, FamilyDrawingsRoundTripByteForByte) {
  const std::vector<TopologicalDrawing> drawings = {
      build_drawing(gen_oneplanar(7), DrawingStyle::kMin),
      build_drawing(gen_oneplanar_multi(7, 2), DrawingStyle::kSaturated),
      build_drawing(gen_quasi(3), DrawingStyle::kQuasiPlanar),
      build_drawing(gen_fan(3), DrawingStyle::kFanPlanar),
  };
  for (const TopologicalDrawing& d : drawings) {
    const DrawingDocument doc = make_document(d, {.family = "x", .ell = 7, .style = "s"});
    const std::string text = serialize(doc);
    const DrawingDocument back = parse_document(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(serialize(back), text);
    EXPECT_EQ(crossing_count(*back.drawing), crossing_count(d));
  }
}

TEST(Io, SaturatedOneplanarHasOneRecordPerCrossing) {
  const OneplanarFamily fam = gen_oneplanar(7);
  const json j = json::parse(serialize(make_document(build_drawing(fam, DrawingStyle::kSaturated))));
  EXPECT_EQ(j["drawing"]["crossings"].size(), 77u);
  EXPECT_EQ(j["graph"]["vertices"].size(), fam.graph.vertex_count());
  EXPECT_EQ(j["graph"]["edges"].size(), fam.graph.edge_count());
}

TEST(Io, MetadataSurvives) {
  DrawingDocument doc = k5_document();
  doc.metadata.ell = 3;
  doc.metadata.k = 2;
  doc.metadata.mode = "extend-all";
  EXPECT_EQ(parse_document(serialize(doc)).metadata, doc.metadata);
  EXPECT_EQ(doc.metadata.generator, "crossratio " + std::string(version()));
}

TEST(Io, CrossingOfDegreeThreeIsRejected) {
  json j = json::parse(serialize(k5_document()));
  // edge 7 no longer passes through the crossing vertex 5
  for (json& p : j["drawing"]["edge_paths"]) {
    if (p["edge"] == 7) p["vertices"] = {2, 3};
  }
  expect_parse_error(j.dump());

  json three = json::parse(serialize(k5_document()));
  three["drawing"]["crossings"][0]["edges"] = {0, 7, 9};
  expect_parse_error(three.dump());
}

TEST(Io, UnknownFieldsAndVersionsAreRejected) {
  const json base = json::parse(serialize(k5_document()));
  json extra = base;
  extra["graph"]["edges"][0]["weight"] = 3;
  EXPECT_NE(expect_parse_error(extra.dump()).find("/graph/edges/0"), std::string::npos);

  json top = base;
  top["colour"] = "red";
  expect_parse_error(top.dump());

  json later = base;
  later["version"] = kDocumentVersion + 1;
  expect_parse_error(later.dump());

  json other = base;
  other["format"] = "crossratio.certificate";
  expect_parse_error(other.dump());
}

TEST(Io, SyntaxErrorsCarryLineAndColumn) {
  const std::string message = expect_parse_error("{\n  \"format\": \"crossratio.drawing\",\n  \"version\": 1,,\n}\n");
  EXPECT_NE(message.find("line 3"), std::string::npos) << message;
  EXPECT_NE(message.find("column"), std::string::npos) << message;
}

TEST(Io, IdsOutOfOrderAreRejected) {
  json j = json::parse(serialize(k5_document()));
  std::swap(j["graph"]["edges"][0], j["graph"]["edges"][1]);
  expect_parse_error(j.dump());
}

TEST(Io, InvalidDrawingIsRejected) {
  json j = json::parse(serialize(k5_document()));
  // two darts swapped at a degree-4 vertex: no longer a sphere embedding
  json& order = j["drawing"]["rotations"][0]["order"];
  std::swap(order[0], order[1]);
  expect_parse_error(j.dump());

  json missing = json::parse(serialize(k5_document()));
  missing["drawing"]["rotations"][1]["order"].erase(0);
  expect_parse_error(missing.dump());
}

TEST(Io, CertificateIndependentOfThreads) {
  const Graph g = complete(6);
  SearchOptions one;
  SearchOptions many;
  many.threads = 4;
  const std::string a = certificate_json(exact_cr(g, 3, {}, one), one);
  const std::string b = certificate_json(exact_cr(g, 3, {}, many), many);
  EXPECT_EQ(a, b);
  const json j = json::parse(a);
  EXPECT_EQ(j["format"], "crossratio.certificate");
  EXPECT_EQ(j["claim"], "cr-equals");
  EXPECT_EQ(j["value"], 3);
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_EQ(a.find("wall"), std::string::npos);
}

TEST(Io, DotAndGraphml) {
  const DrawingDocument doc = k5_document();
  const std::string dot = to_dot(doc.graph);
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++edges;
  EXPECT_EQ(edges, 10u);
  const std::string planar = to_dot(*doc.drawing);
  EXPECT_NE(planar.find("shape=point"), std::string::npos);
  const std::string gml = to_graphml(doc.graph);
  std::size_t gml_edges = 0;
  for (std::size_t at = gml.find("<edge "); at != std::string::npos; at = gml.find("<edge ", at + 1)) ++gml_edges;
  EXPECT_EQ(gml_edges, 10u);
}

}  // namespace
}  // namespace crossratio
