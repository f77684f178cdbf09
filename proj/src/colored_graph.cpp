#include "attractor/colored_graph.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <tuple>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "attractor/error.hpp"

namespace attractor {

ColoredGraph::ColoredGraph(std::size_t num_vertices, std::size_t num_colors,
                           std::vector<ColoredEdge> edges)
    : num_vertices_(num_vertices),
      num_colors_(num_colors),
      edges_(std::move(edges)),
      incident_(num_vertices) {
  std::vector<bool> used(num_colors, false);
  std::set<std::tuple<VertexId, VertexId, ColorId>> seen;
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw InvalidParameter("edge " + std::to_string(i) + " has an undeclared endpoint");
    }
    if (e.color >= num_colors) {
      throw InvalidParameter("edge " + std::to_string(i) + " has an undeclared color");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v), e.color).second) {
      throw InvalidParameter("edge " + std::to_string(i) +
                             " duplicates an earlier edge with the same endpoints and color");
    }
    used[e.color] = true;
    incident_[e.u].push_back(i);
    if (!e.is_loop()) incident_[e.v].push_back(i);
  }
  for (ColorId c = 0; c < num_colors; ++c) {
    if (!used[c]) {
      throw InvalidParameter("color " + std::to_string(c) + " is not carried by any edge");
    }
  }
}

bool ColoredGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.is_loop(); });
}

EdgeSelection::EdgeSelection(std::vector<std::uint32_t> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSelection::contains(std::uint32_t e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

namespace {

void check_selection(const ColoredGraph& g, const EdgeSelection& selection) {
  for (auto e : selection.indices()) {
    if (e >= g.num_edges()) {
      throw InvalidParameter("edge index " + std::to_string(e) + " out of range");
    }
  }
}

}  // namespace

CoverVerdict verify_colorful_cover(const ColoredGraph& g, const EdgeSelection& selection) {
  check_selection(g, selection);
  std::vector<bool> vertex(g.num_vertices(), false);
  std::vector<bool> color(g.num_colors(), false);
  for (auto i : selection.indices()) {
    const auto& e = g.edge(i);
    vertex[e.u] = vertex[e.v] = true;
    color[e.color] = true;
  }
  CoverVerdict verdict;
  for (VertexId v = 0; v < vertex.size(); ++v) {
    if (!vertex[v]) {
      verdict.missing_vertex = v;
      return verdict;
    }
  }
  for (ColorId c = 0; c < color.size(); ++c) {
    if (!color[c]) {
      verdict.missing_color = c;
      return verdict;
    }
  }
  verdict.valid = true;
  return verdict;
}

bool is_edge_cover(const ColoredGraph& g, const EdgeSelection& selection) {
  check_selection(g, selection);
  std::vector<bool> vertex(g.num_vertices(), false);
  for (auto i : selection.indices()) vertex[g.edge(i).u] = vertex[g.edge(i).v] = true;
  return std::all_of(vertex.begin(), vertex.end(), [](bool b) { return b; });
}

LoopElimination eliminate_self_loops(const ColoredGraph& g) {
  if (!g.has_loops()) {
    std::vector<std::optional<std::uint32_t>> origin;
    for (std::uint32_t i = 0; i < g.num_edges(); ++i) origin.emplace_back(i);
    return LoopElimination{g, 0, std::move(origin)};
  }
  const auto x = static_cast<VertexId>(g.num_vertices());
  const auto y = x + 1;
  const auto gadget_color = static_cast<ColorId>(g.num_colors());
  std::vector<ColoredEdge> edges;
  std::vector<std::optional<std::uint32_t>> origin;
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    auto e = g.edge(i);
    if (e.is_loop()) e.v = x;
    edges.push_back(e);
    origin.emplace_back(i);
  }
  edges.push_back({x, y, gadget_color});
  origin.emplace_back(std::nullopt);
  return LoopElimination{ColoredGraph(g.num_vertices() + 2, g.num_colors() + 1, std::move(edges)),
                         1, std::move(origin)};
}

EdgeSelection LoopElimination::lift(const EdgeSelection& selection) const {
  std::vector<std::uint32_t> out;
  for (auto e : selection.indices()) {
    if (e >= origin.size()) throw InvalidParameter("edge index out of range");
    if (origin[e]) out.push_back(*origin[e]);
  }
  return EdgeSelection(std::move(out));
}

EdgeSelection LoopElimination::embed(const EdgeSelection& selection) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < origin.size(); ++i) {
    if (!origin[i] || selection.contains(*origin[i])) out.push_back(i);
  }
  return EdgeSelection(std::move(out));
}

namespace {

class ColorfulSearch {
 public:
  ColorfulSearch(const ColoredGraph& g, std::uint64_t budget)
      : g_(g),
        budget_(budget),
        vcount_(g.num_vertices(), 0),
        ccount_(g.num_colors(), 0),
        vavail_(g.num_vertices(), 0),
        cavail_(g.num_colors(), 0),
        forbidden_(g.num_edges(), false),
        color_edges_(g.num_colors()),
        in_s_(g.num_vertices(), 0) {
    for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
      const auto& e = g.edge(i);
      ++vavail_[e.u];
      if (!e.is_loop()) ++vavail_[e.v];
      ++cavail_[e.color];
      color_edges_[e.color].push_back(i);
    }
    uncovered_vertices_ = g.num_vertices();
    missing_colors_ = g.num_colors();
  }

  void run(std::vector<std::uint32_t> incumbent) {
    best_ = std::move(incumbent);
    search();
  }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::uint32_t>& best() const { return best_; }

 private:
  void choose(std::uint32_t i) {
    const auto& e = g_.edge(i);
    chosen_.push_back(i);
    if (vcount_[e.u]++ == 0) --uncovered_vertices_;
    if (!e.is_loop() && vcount_[e.v]++ == 0) --uncovered_vertices_;
    if (ccount_[e.color]++ == 0) --missing_colors_;
  }
  void unchoose(std::uint32_t i) {
    const auto& e = g_.edge(i);
    chosen_.pop_back();
    if (--vcount_[e.u] == 0) ++uncovered_vertices_;
    if (!e.is_loop() && --vcount_[e.v] == 0) ++uncovered_vertices_;
    if (--ccount_[e.color] == 0) ++missing_colors_;
  }
  void set_forbidden(std::uint32_t i, bool value) {
    const auto& e = g_.edge(i);
    const int delta = value ? -1 : 1;
    forbidden_[i] = value;
    vavail_[e.u] += delta;
    if (!e.is_loop()) vavail_[e.v] += delta;
    cavail_[e.color] += delta;
  }

  std::size_t gain(std::uint32_t i) const {
    const auto& e = g_.edge(i);
    std::size_t g = (vcount_[e.u] == 0) + (ccount_[e.color] == 0);
    if (!e.is_loop() && vcount_[e.v] == 0) ++g;
    return g;
  }

  std::size_t lower_bound() {
    // Uncovered vertices without an available edge to another uncovered
    // vertex need an edge of their own; the rest pair up at best.
    std::size_t solo = 0;
    std::size_t paired = 0;
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (vcount_[v] != 0) continue;
      bool partner = false;
      for (auto i : g_.incident(v)) {
        const auto& e = g_.edge(i);
        if (forbidden_[i] || e.is_loop()) continue;
        const VertexId w = e.u == v ? e.v : e.u;
        if (vcount_[w] == 0) {
          partner = true;
          break;
        }
      }
      partner ? ++paired : ++solo;
    }
    const std::size_t vertex_bound = solo + (paired + 1) / 2;

    // Pairwise non-adjacent uncovered vertices, plus missing colors none of
    // whose edges touch them: every edge serves at most one of these.
    ++stamp_;
    order_.clear();
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (vcount_[v] == 0) order_.push_back({vavail_[v], v});
    }
    std::sort(order_.begin(), order_.end());
    std::size_t packed = 0;
    for (const auto& [avail, v] : order_) {
      bool clash = false;
      for (auto i : g_.incident(v)) {
        if (forbidden_[i]) continue;
        const auto& e = g_.edge(i);
        const VertexId w = e.u == v ? e.v : e.u;
        if (w != v && in_s_[w] == stamp_) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      in_s_[v] = stamp_;
      ++packed;
    }
    for (ColorId c = 0; c < g_.num_colors(); ++c) {
      if (ccount_[c] != 0) continue;
      bool touches = false;
      for (auto i : color_edges_[c]) {
        if (forbidden_[i]) continue;
        const auto& e = g_.edge(i);
        if (in_s_[e.u] == stamp_ || in_s_[e.v] == stamp_) {
          touches = true;
          break;
        }
      }
      if (!touches) ++packed;
    }
    return std::max({vertex_bound, missing_colors_, packed});
  }

  void search() {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (uncovered_vertices_ == 0 && missing_colors_ == 0) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;

    // Branch on the uncovered vertex with fewest available edges; once all
    // vertices are covered, on the missing color with fewest available edges.
    std::vector<std::uint32_t> options;
    if (uncovered_vertices_ > 0) {
      VertexId pick = 0;
      std::uint32_t fewest = std::numeric_limits<std::uint32_t>::max();
      for (VertexId v = 0; v < g_.num_vertices(); ++v) {
        if (vcount_[v] == 0 && vavail_[v] < fewest) {
          fewest = vavail_[v];
          pick = v;
        }
      }
      if (fewest == 0) return;
      for (auto i : g_.incident(pick)) {
        if (!forbidden_[i]) options.push_back(i);
      }
    } else {
      ColorId pick = 0;
      std::uint32_t fewest = std::numeric_limits<std::uint32_t>::max();
      for (ColorId c = 0; c < g_.num_colors(); ++c) {
        if (ccount_[c] == 0 && cavail_[c] < fewest) {
          fewest = cavail_[c];
          pick = c;
        }
      }
      if (fewest == 0) return;
      for (auto i : color_edges_[pick]) {
        if (!forbidden_[i]) options.push_back(i);
      }
    }
    if (chosen_.size() + lower_bound() >= best_.size()) return;

    std::stable_sort(options.begin(), options.end(),
                     [&](auto a, auto b) { return gain(a) > gain(b); });
    std::vector<std::uint32_t> excluded;
    for (auto i : options) {
      choose(i);
      search();
      unchoose(i);
      if (aborted_) break;
      set_forbidden(i, true);
      excluded.push_back(i);
    }
    for (auto i : excluded) set_forbidden(i, false);
  }

  const ColoredGraph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::uint32_t> best_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::uint32_t> vcount_;
  std::vector<std::uint32_t> ccount_;
  std::vector<std::uint32_t> vavail_;
  std::vector<std::uint32_t> cavail_;
  std::vector<bool> forbidden_;
  std::vector<std::vector<std::uint32_t>> color_edges_;
  std::vector<std::uint64_t> in_s_;
  std::uint64_t stamp_ = 0;
  std::size_t uncovered_vertices_ = 0;
  std::size_t missing_colors_ = 0;
  std::vector<std::pair<std::uint32_t, VertexId>> order_;
};

// Greedy colorful cover used as the initial incumbent.
std::vector<std::uint32_t> greedy_colorful_cover(const ColoredGraph& g) {
  std::vector<bool> vertex(g.num_vertices(), false);
  std::vector<bool> color(g.num_colors(), false);
  std::size_t missing = g.num_vertices() + g.num_colors();
  std::vector<std::uint32_t> chosen;
  while (missing > 0) {
    std::uint32_t best = 0;
    std::size_t best_gain = 0;
    for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
      const auto& e = g.edge(i);
      std::size_t gain = !vertex[e.u] + !color[e.color];
      if (!e.is_loop()) gain += !vertex[e.v];
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best_gain == 0) throw Infeasible("graph has a vertex without incident edges");
    const auto& e = g.edge(best);
    missing -= best_gain;
    vertex[e.u] = vertex[e.v] = true;
    color[e.color] = true;
    chosen.push_back(best);
  }
  return chosen;
}

}  // namespace

GraphCoverResult min_colorful_cover_exact(const ColoredGraph& g, const ExactOptions& options) {
  auto incumbent = greedy_colorful_cover(g);
  ColorfulSearch search(g, options.node_budget);
  search.run(incumbent);
  GraphCoverResult result;
  result.nodes = search.nodes();
  result.status = search.aborted() ? SolveStatus::budget_exceeded : SolveStatus::optimal;
  result.selection = EdgeSelection(search.best());
  return result;
}

EdgeSelection min_edge_cover_exact(const ColoredGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using Vertex = boost::graph_traits<Graph>::vertex_descriptor;

  const std::size_t n = g.num_vertices();
  Graph bg(n);
  std::vector<bool> has_proper(n, false);
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edge(i);
    if (e.is_loop()) continue;
    boost::add_edge(e.u, e.v, bg);
    has_proper[e.u] = has_proper[e.v] = true;
  }
  std::vector<Vertex> mate(n);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);

  std::vector<std::uint32_t> chosen;
  for (VertexId v = 0; v < n; ++v) {
    const auto& inc = g.incident(v);
    if (inc.empty()) throw Infeasible("vertex " + std::to_string(v) + " has no incident edge");
    if (!has_proper[v]) {
      chosen.push_back(inc.front());
      continue;
    }
    const Vertex partner = mate[v];
    const bool matched = partner != boost::graph_traits<Graph>::null_vertex();
    if (matched && partner < v) continue;
    for (auto i : inc) {
      const auto& e = g.edge(i);
      if (e.is_loop()) continue;
      const VertexId w = e.u == v ? e.v : e.u;
      if (!matched || w == partner) {
        chosen.push_back(i);
        break;
      }
    }
  }
  return EdgeSelection(std::move(chosen));
}

}  // namespace attractor
