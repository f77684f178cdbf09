#pragma once

#include <cstdint>

#include "attractor/set_cover.hpp"
#include "attractor/strings.hpp"

namespace attractor {

struct AttractorSolution {
  SolveStatus status = SolveStatus::optimal;
  /// Always a valid k-attractor. Proven minimal only when status is optimal.
  Marking marking;
  std::uint64_t nodes = 0;
  std::size_t size() const { return marking.size(); }
  bool optimal() const { return status == SolveStatus::optimal; }
};

/// Exact minimum k-attractor (sharp: length exactly k) through the set-cover
/// view. Hitting the node budget yields status budget_exceeded.
AttractorSolution min_attractor_exact(const Instance& instance, std::size_t k, bool sharp = false,
                                      const ExactOptions& options = {});

/// Greedy set cover over the same candidates; within a factor
/// H(k(k+1)/2) of the optimum.
Marking min_attractor_greedy(const Instance& instance, std::size_t k, bool sharp = false);

/// First occurrence of every distinct symbol. Optimal for k = 1.
Marking min_1_attractor(const Text& text);

/// Minimum sharp 2-attractor via plain minimum edge cover of the 2-substring
/// graph. Every text must have length >= 2.
Marking min_sharp2_attractor(const Text& text);
Marking min_sharp2_attractor(const StringSet& texts);

}  // namespace attractor
