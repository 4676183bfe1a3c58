#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "crossratio/drawing.hpp"
#include "crossratio/exact.hpp"

namespace crossratio {

/// Library version, recorded in every document and certificate.
[[nodiscard]] std::string_view version();

inline constexpr int kDocumentVersion = 1;

struct DocumentMetadata {
  std::optional<std::string> family;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> k;
  std::optional<std::string> mode;
  std::optional<std::string> style;
  /// Tool and version that wrote the document.
  std::string generator;
  bool operator==(const DocumentMetadata&) const = default;
};

/// A graph with an optional drawing of it. The drawing is kept in canonical
/// numbering (see canonicalize), so serialization is a function of the
/// drawing alone.
struct DrawingDocument {
  Graph graph;
  std::optional<TopologicalDrawing> drawing;
  /// Skeleton dart with the preferred outer face on its right.
  std::optional<Dart> outer_face;
  DocumentMetadata metadata;
  bool operator==(const DrawingDocument&) const = default;
};

[[nodiscard]] DrawingDocument make_document(Graph g, DocumentMetadata meta = {});
/// Canonicalizes the drawing; the skeleton's outer-face hint is carried over.
[[nodiscard]] DrawingDocument make_document(const TopologicalDrawing& d, DocumentMetadata meta = {});

/// Syntax errors carry a line and column; schema errors carry the JSON
/// pointer of the offending field.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& where, const std::string& what)
      : GraphError(where + ": " + what), where_(where) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Canonical JSON: sorted keys, id lists in id order, two-space indent,
/// trailing newline.
[[nodiscard]] std::string serialize(const DrawingDocument& doc);

/// Inverse of serialize. Rejects unknown fields, other versions, ids out of
/// order, crossing records that disagree with the edge paths, rotations that
/// do not list exactly the segments at a vertex, and drawings that fail
/// validate. Throws ParseError.
[[nodiscard]] DrawingDocument parse_document(std::string_view text);

/// Certificate as canonical JSON. Wall time and thread count are left out so
/// the output depends only on the graph, the query and the search mode.
[[nodiscard]] std::string certificate_json(const Certificate& c, const SearchOptions& options);

/// Graphviz export of the graph, or of a drawing's planarization with the
/// crossings as point-shaped nodes.
[[nodiscard]] std::string to_dot(const Graph& g);
[[nodiscard]] std::string to_dot(const TopologicalDrawing& d);
/// GraphML export of the graph with vertex names and edge labels.
[[nodiscard]] std::string to_graphml(const Graph& g);

}  // namespace crossratio
