#pragma once

#include <cstdint>
#include <vector>

namespace attractor {

/// Unweighted set cover: elements are 0..universe-1.
struct SetSystem {
  std::size_t universe = 0;
  std::vector<std::vector<std::uint32_t>> sets;
};

enum class SolveStatus { optimal, budget_exceeded };

struct SetCoverResult {
  SolveStatus status = SolveStatus::optimal;
  /// Indices into SetSystem::sets, ascending. When the budget is exceeded this
  /// holds the best cover found so far, which is valid but not proven minimal.
  std::vector<std::uint32_t> chosen;
  std::uint64_t nodes = 0;
};

struct ExactOptions {
  std::uint64_t node_budget = 20'000'000;
};

/// Branch and bound. Branches on the uncovered element with the fewest
/// remaining candidate sets; bounds with a greedy packing of elements whose
/// candidate sets are pairwise disjoint. Throws Infeasible when some element
/// belongs to no set.
SetCoverResult solve_set_cover_exact(const SetSystem& system, const ExactOptions& options = {});

/// Classic greedy (largest number of newly covered elements, smallest index on
/// ties). Throws Infeasible when some element belongs to no set.
std::vector<std::uint32_t> solve_set_cover_greedy(const SetSystem& system);

/// True when every element is in some chosen set.
bool is_set_cover(const SetSystem& system, const std::vector<std::uint32_t>& chosen);

}  // namespace attractor
