#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "attractor/set_cover.hpp"

namespace attractor {

using VertexId = std::uint32_t;
using ColorId = std::uint32_t;

/// Undirected edge {u, v}; u == v is a self-loop.
struct ColoredEdge {
  VertexId u = 0;
  VertexId v = 0;
  ColorId color = 0;
  bool is_loop() const { return u == v; }
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Edge-colored multigraph with self-loops. Vertices are 0..V-1, colors
/// 0..C-1 and every color is carried by at least one edge. Parallel edges
/// must differ in color.
class ColoredGraph {
 public:
  ColoredGraph(std::size_t num_vertices, std::size_t num_colors, std::vector<ColoredEdge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_colors() const { return num_colors_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<ColoredEdge>& edges() const { return edges_; }
  const ColoredEdge& edge(std::size_t i) const { return edges_.at(i); }
  /// Edge indices touching v, ascending.
  const std::vector<std::uint32_t>& incident(VertexId v) const { return incident_.at(v); }
  bool has_loops() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.num_colors_ == b.num_colors_ &&
           a.edges_ == b.edges_;
  }

 private:
  std::size_t num_vertices_;
  std::size_t num_colors_;
  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<std::uint32_t>> incident_;
};

/// Sorted, duplicate-free set of edge indices.
class EdgeSelection {
 public:
  EdgeSelection() = default;
  explicit EdgeSelection(std::vector<std::uint32_t> edges);
  EdgeSelection(std::initializer_list<std::uint32_t> edges)
      : EdgeSelection(std::vector<std::uint32_t>(edges)) {}

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<std::uint32_t>& indices() const { return edges_; }
  bool contains(std::uint32_t e) const;

  friend bool operator==(const EdgeSelection&, const EdgeSelection&) = default;

 private:
  std::vector<std::uint32_t> edges_;
};

struct CoverVerdict {
  bool valid = false;
  /// Smallest uncovered vertex, if any.
  std::optional<VertexId> missing_vertex;
  /// Smallest missing color, reported only when all vertices are covered.
  std::optional<ColorId> missing_color;
  explicit operator bool() const { return valid; }
};

/// Throws InvalidParameter for out-of-range edge indices.
CoverVerdict verify_colorful_cover(const ColoredGraph& g, const EdgeSelection& selection);

/// True when every vertex is touched by a selected edge (colors ignored).
bool is_edge_cover(const ColoredGraph& g, const EdgeSelection& selection);

/// Self-loop gadget: loops {v,v} of color a become {v,x} of color a, and a
/// fresh color b joins fresh vertices x and y.
struct LoopElimination {
  ColoredGraph graph;
  std::size_t size_offset = 0;
  /// Per edge of `graph`: the originating edge, or nullopt for the gadget edge.
  std::vector<std::optional<std::uint32_t>> origin;

  /// Selection on the loop-free graph -> selection on the original graph.
  EdgeSelection lift(const EdgeSelection& selection) const;
  /// Selection on the original graph -> selection on the loop-free graph.
  EdgeSelection embed(const EdgeSelection& selection) const;
};

LoopElimination eliminate_self_loops(const ColoredGraph& g);

struct GraphCoverResult {
  SolveStatus status = SolveStatus::optimal;
  EdgeSelection selection;
  std::uint64_t nodes = 0;
  std::size_t size() const { return selection.size(); }
};

/// Exact minimum colorful edge cover by branch and bound.
GraphCoverResult min_colorful_cover_exact(const ColoredGraph& g, const ExactOptions& options = {});

/// Exact minimum edge cover ignoring colors, via maximum cardinality matching.
/// Loops are only used for vertices whose incident edges are all loops.
/// Throws Infeasible when a vertex has no incident edge.
EdgeSelection min_edge_cover_exact(const ColoredGraph& g);

}  // namespace attractor
