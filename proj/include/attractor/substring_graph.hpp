#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "attractor/colored_graph.hpp"
#include "attractor/strings.hpp"

namespace attractor {

/// Edge classes; an edge may belong to several when occurrences coincide
/// (e.g. the loop (aa,aa) labelled a in "aaa").
enum EdgeClassBits : std::uint8_t {
  kInterior = 1,  // (xy, yz) from an interior position, labelled y
  kPrefix = 2,    // (xy, xy) from a first position, labelled x
  kSuffix = 4,    // (yz, yz) from a last position, labelled z
};

/// 2-substring graph: vertices are distinct 2-substrings, every position of
/// every text becomes an edge labelled with the symbol at that position, and
/// edges with equal endpoints and label are merged.
struct SubstringGraph {
  ColoredGraph graph;
  /// Per vertex, its 2-substring.
  std::vector<std::array<SymbolId, 2>> vertex_labels;
  /// Per color, the symbol it stands for (ascending symbol ids).
  std::vector<SymbolId> color_symbols;
  /// Per edge, a mask of EdgeClassBits.
  std::vector<std::uint8_t> edge_classes;
  /// Per edge, every (text, position) it stands for, ascending.
  std::vector<std::vector<Site>> provenance;
  /// owner[x][p-1] is the edge of position p in text x+1.
  std::vector<std::vector<std::uint32_t>> owner;

  std::uint32_t edge_at(Site site) const;
  std::size_t vertex_of(std::array<SymbolId, 2> label) const;
  ColorId color_of(SymbolId symbol) const;
};

/// Throws InvalidParameter when a text is shorter than 2.
SubstringGraph build_2substring_graph(const StringSet& texts);

/// First provenance occurrence of every selected edge.
Marking edges_to_marking(const SubstringGraph& sg, const EdgeSelection& selection);

/// Owning edge of every marked position.
EdgeSelection marking_to_edges(const SubstringGraph& sg, const Marking& marking);

struct TwoAttractorSolution {
  SolveStatus status = SolveStatus::optimal;
  Marking marking;
  std::size_t size() const { return marking.size(); }
};

/// Minimum 2-attractor through minimum colorful edge cover on G(T). Texts of
/// length 1 are preprocessed: dropped when their symbol occurs in a longer
/// text, otherwise marked.
TwoAttractorSolution min_2attractor_via_cec(const StringSet& texts,
                                            const ExactOptions& options = {});
TwoAttractorSolution min_2attractor_via_cec(const Text& text, const ExactOptions& options = {});

}  // namespace attractor
