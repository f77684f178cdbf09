#include "attractor/attractor_solvers.hpp"

#include <set>

#include "attractor/error.hpp"
#include "attractor/substring_graph.hpp"

namespace attractor {

namespace {

SetSystem to_set_system(const CoverInstance& cover) {
  return SetSystem{cover.elements.size(), cover.candidates};
}

Marking to_marking(const CoverInstance& cover, const std::vector<std::uint32_t>& chosen) {
  std::vector<Site> sites;
  sites.reserve(chosen.size());
  for (auto s : chosen) sites.push_back(cover.sites[s]);
  return Marking(std::move(sites));
}

}  // namespace

AttractorSolution min_attractor_exact(const Instance& instance, std::size_t k, bool sharp,
                                      const ExactOptions& options) {
  const auto cover = build_cover_instance(instance, k, sharp);
  const auto result = solve_set_cover_exact(to_set_system(cover), options);
  return AttractorSolution{result.status, to_marking(cover, result.chosen), result.nodes};
}

Marking min_attractor_greedy(const Instance& instance, std::size_t k, bool sharp) {
  const auto cover = build_cover_instance(instance, k, sharp);
  return to_marking(cover, solve_set_cover_greedy(to_set_system(cover)));
}

Marking min_1_attractor(const Text& text) {
  std::set<SymbolId> seen;
  std::vector<std::size_t> positions;
  for (std::size_t p = 1; p <= text.size(); ++p) {
    if (seen.insert(text.at(p)).second) positions.push_back(p);
  }
  return Marking::from_positions(positions);
}

Marking min_sharp2_attractor(const StringSet& texts) {
  const auto sg = build_2substring_graph(texts);
  return edges_to_marking(sg, min_edge_cover_exact(sg.graph));
}

Marking min_sharp2_attractor(const Text& text) { return min_sharp2_attractor(StringSet({text})); }

}  // namespace attractor
