#include "attractor/substring_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "attractor/error.hpp"

namespace attractor {

std::uint32_t SubstringGraph::edge_at(Site site) const {
  if (site.text < 1 || site.text > owner.size() || site.pos < 1 ||
      site.pos > owner[site.text - 1].size()) {
    throw InvalidParameter("position " + std::to_string(site.text) + ":" +
                           std::to_string(site.pos) + " is not in the graph");
  }
  return owner[site.text - 1][site.pos - 1];
}

std::size_t SubstringGraph::vertex_of(std::array<SymbolId, 2> label) const {
  auto it = std::find(vertex_labels.begin(), vertex_labels.end(), label);
  if (it == vertex_labels.end()) throw InvalidParameter("2-substring is not a vertex");
  return static_cast<std::size_t>(it - vertex_labels.begin());
}

ColorId SubstringGraph::color_of(SymbolId symbol) const {
  auto it = std::lower_bound(color_symbols.begin(), color_symbols.end(), symbol);
  if (it == color_symbols.end() || *it != symbol) throw InvalidParameter("symbol is not a color");
  return static_cast<ColorId>(it - color_symbols.begin());
}

SubstringGraph build_2substring_graph(const StringSet& texts) {
  std::set<SymbolId> symbols;
  for (std::size_t x = 0; x < texts.count(); ++x) {
    const auto& t = texts.texts()[x];
    if (t.size() < 2) {
      throw InvalidParameter("text " + std::to_string(x + 1) + " has length " +
                             std::to_string(t.size()) + "; the 2-substring graph needs >= 2");
    }
    symbols.insert(t.symbols().begin(), t.symbols().end());
  }
  std::vector<SymbolId> color_symbols(symbols.begin(), symbols.end());
  auto color_of = [&](SymbolId s) {
    return static_cast<ColorId>(
        std::lower_bound(color_symbols.begin(), color_symbols.end(), s) - color_symbols.begin());
  };

  std::map<std::array<SymbolId, 2>, VertexId> vertex_ids;
  std::vector<std::array<SymbolId, 2>> vertex_labels;
  auto vertex = [&](SymbolId a, SymbolId b) {
    auto [it, inserted] = vertex_ids.try_emplace({a, b}, static_cast<VertexId>(vertex_labels.size()));
    if (inserted) vertex_labels.push_back({a, b});
    return it->second;
  };

  std::map<std::tuple<VertexId, VertexId, ColorId>, std::uint32_t> edge_ids;
  std::vector<ColoredEdge> edges;
  std::vector<std::uint8_t> classes;
  std::vector<std::vector<Site>> provenance;
  std::vector<std::vector<std::uint32_t>> owner(texts.count());

  for (std::size_t x = 0; x < texts.count(); ++x) {
    const auto& sym = texts.texts()[x].symbols();
    const std::size_t n = sym.size();
    for (std::size_t p = 0; p < n; ++p) {
      VertexId u = 0;
      VertexId v = 0;
      std::uint8_t cls = 0;
      if (p == 0) {
        u = v = vertex(sym[0], sym[1]);
        cls = kPrefix;
      } else if (p + 1 == n) {
        u = v = vertex(sym[n - 2], sym[n - 1]);
        cls = kSuffix;
      } else {
        u = vertex(sym[p - 1], sym[p]);
        v = vertex(sym[p], sym[p + 1]);
        cls = kInterior;
      }
      const ColorId c = color_of(sym[p]);
      auto [it, inserted] = edge_ids.try_emplace({std::min(u, v), std::max(u, v), c},
                                                 static_cast<std::uint32_t>(edges.size()));
      if (inserted) {
        edges.push_back({u, v, c});
        classes.push_back(0);
        provenance.emplace_back();
      }
      classes[it->second] |= cls;
      provenance[it->second].push_back(
          Site{static_cast<std::uint32_t>(x + 1), static_cast<std::uint32_t>(p + 1)});
      owner[x].push_back(it->second);
    }
  }

  const std::size_t num_vertices = vertex_labels.size();
  return SubstringGraph{ColoredGraph(num_vertices, color_symbols.size(), std::move(edges)),
                        std::move(vertex_labels),
                        std::move(color_symbols),
                        std::move(classes),
                        std::move(provenance),
                        std::move(owner)};
}

Marking edges_to_marking(const SubstringGraph& sg, const EdgeSelection& selection) {
  std::vector<Site> sites;
  for (auto e : selection.indices()) {
    if (e >= sg.provenance.size()) throw InvalidParameter("edge index out of range");
    sites.push_back(sg.provenance[e].front());
  }
  return Marking(std::move(sites));
}

EdgeSelection marking_to_edges(const SubstringGraph& sg, const Marking& marking) {
  std::vector<std::uint32_t> edges;
  for (const auto& site : marking.sites()) edges.push_back(sg.edge_at(site));
  return EdgeSelection(std::move(edges));
}

TwoAttractorSolution min_2attractor_via_cec(const StringSet& texts, const ExactOptions& options) {
  std::vector<Text> long_texts;
  std::vector<std::uint32_t> original_index;
  std::set<SymbolId> long_symbols;
  for (std::size_t x = 0; x < texts.count(); ++x) {
    const auto& t = texts.texts()[x];
    if (t.size() >= 2) {
      long_texts.push_back(t);
      original_index.push_back(static_cast<std::uint32_t>(x + 1));
      long_symbols.insert(t.symbols().begin(), t.symbols().end());
    }
  }

  std::vector<Site> sites;
  std::set<SymbolId> forced;
  for (std::size_t x = 0; x < texts.count(); ++x) {
    const auto& t = texts.texts()[x];
    if (t.size() != 1) continue;
    const SymbolId s = t.symbols().front();
    if (long_symbols.count(s) == 0 && forced.insert(s).second) {
      sites.push_back(Site{static_cast<std::uint32_t>(x + 1), 1});
    }
  }

  TwoAttractorSolution solution;
  if (!long_texts.empty()) {
    const auto sg = build_2substring_graph(StringSet(std::move(long_texts)));
    const auto cover = min_colorful_cover_exact(sg.graph, options);
    solution.status = cover.status;
    const auto marking = edges_to_marking(sg, cover.selection);
    for (const auto& site : marking.sites()) {
      sites.push_back(Site{original_index[site.text - 1], site.pos});
    }
  }
  solution.marking = Marking(std::move(sites));
  return solution;
}

TwoAttractorSolution min_2attractor_via_cec(const Text& text, const ExactOptions& options) {
  return min_2attractor_via_cec(StringSet({text}), options);
}

}  // namespace attractor
