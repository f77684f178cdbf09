#pragma once

// File formats.
//
// Plain text instance: UTF-8, one string per line, every code point is one
// symbol. Symbol ids follow code point order of the distinct glyphs.
//
// Structured instance (JSON):
//   {"format": "attractor-instance", "version": 1, "shape": "set",
//    "symbols": ["a", "b", "#1"], "texts": [[0, 1], [1, 2, 0]]}
//
// Markings: "2,7,9" for single strings, "1:2,3:4" (text:position) for sets.
// Edge selections: "0,4,5" (0-based edge indices in file order).
//
// Graph interchange:
//   colored-graph 1
//   vertices 3
//   colors 2
//   vertex-label 0 ab        (optional)
//   color-label 1 b          (optional)
//   edge 0 1 0               (u v color, one line per edge, u == v for loops)
// Blank lines and lines starting with '#' are ignored.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "attractor/colored_graph.hpp"
#include "attractor/sat.hpp"
#include "attractor/strings.hpp"
#include "attractor/substring_graph.hpp"
#include "attractor/transforms.hpp"

namespace attractor {

/// Injective id -> glyph table.
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(std::vector<std::string> glyphs);

  std::size_t size() const { return glyphs_.size(); }
  const std::vector<std::string>& glyphs() const { return glyphs_; }
  std::optional<SymbolId> find(std::string_view glyph) const;
  /// Glyph of `id`, or "<id>" for ids without one.
  std::string glyph(SymbolId id) const;
  /// Assigns `glyph` to `id`, growing the table with "<i>" placeholders.
  void assign(SymbolId id, std::string glyph);
  /// Concatenated glyphs when all are single code points, else space separated.
  std::string render(const Word& word) const;
  bool all_single_code_point() const;

 private:
  std::vector<std::string> glyphs_;
};

struct InstanceDocument {
  Instance instance;
  SymbolTable symbols;
};

std::vector<std::string> split_code_points(std::string_view utf8);

InstanceDocument parse_plain_instance(std::string_view content, Shape shape);
InstanceDocument parse_instance_json(std::string_view content);
/// JSON when the first non-blank character is '{', plain text otherwise. A
/// given `shape` overrides the shape of plain text (default string).
InstanceDocument parse_instance(std::string_view content, std::optional<Shape> shape = {});
std::string format_instance_json(const InstanceDocument& doc);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
InstanceDocument read_instance_file(const std::filesystem::path& path,
                                    std::optional<Shape> shape = {});

Marking parse_marking(std::string_view text);
std::string format_marking(const Marking& marking, bool set_form);

EdgeSelection parse_edge_list(std::string_view text);
std::string format_edge_list(const EdgeSelection& selection);

struct GraphDocument {
  ColoredGraph graph;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> color_labels;
};

GraphDocument parse_graph(std::string_view content);
std::string format_graph(const GraphDocument& doc);
GraphDocument graph_document(const SubstringGraph& sg, const SymbolTable& symbols);

Cnf parse_dimacs(std::string_view content);
std::string format_dimacs(const Cnf& cnf, const std::vector<std::string>& comments = {});

/// Signed literals, e.g. "1,-2,3" or "1 -2 3"; every variable exactly once.
Assignment parse_assignment(std::string_view text, std::uint32_t num_vars);
std::string format_assignment(const Assignment& assignment);

/// JSON sidecar for transforms; carries source and target so markings can be
/// lifted later.
std::string format_transform_sidecar(const TransformResult& tr, const SymbolTable& source_symbols,
                                     const SymbolTable& target_symbols);
struct TransformSidecar {
  TransformResult result;
  SymbolTable source_symbols;
  SymbolTable target_symbols;
};
TransformSidecar parse_transform_sidecar(std::string_view content);

/// JSON sidecar listing every edge's classes and occurrences.
std::string format_substring_graph_sidecar(const SubstringGraph& sg, const SymbolTable& symbols);

}  // namespace attractor
