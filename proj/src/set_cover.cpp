#include "attractor/set_cover.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "attractor/error.hpp"

namespace attractor {

namespace {

std::vector<std::vector<std::uint32_t>> sets_per_element(const SetSystem& system) {
  std::vector<std::vector<std::uint32_t>> out(system.universe);
  for (std::uint32_t s = 0; s < system.sets.size(); ++s) {
    for (auto e : system.sets[s]) {
      if (e >= system.universe) throw InvalidParameter("set element outside the universe");
      if (out[e].empty() || out[e].back() != s) out[e].push_back(s);
    }
  }
  for (std::size_t e = 0; e < out.size(); ++e) {
    if (out[e].empty()) throw Infeasible("element " + std::to_string(e) + " is in no set");
  }
  return out;
}

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Reduced problem: dominated sets and implied elements removed. Set and
// element ids are local; `set_origin` maps back.
struct Reduced {
  std::vector<std::uint32_t> set_origin;
  std::vector<std::vector<std::uint32_t>> set_elems;
  std::vector<std::vector<std::uint32_t>> elem_sets;
};

Reduced reduce(const SetSystem& system) {
  std::vector<std::vector<std::uint32_t>> sets;
  sets.reserve(system.sets.size());
  for (const auto& s : system.sets) sets.push_back(sorted_unique(s));

  // A set contained in another is never needed. Equal sets keep the lowest index.
  std::vector<std::uint32_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return sets[a].size() > sets[b].size(); });
  std::vector<bool> keep(sets.size(), true);
  std::vector<std::uint32_t> kept;
  for (auto s : order) {
    if (sets[s].empty()) {
      keep[s] = false;
      continue;
    }
    for (auto t : kept) {
      if (std::includes(sets[t].begin(), sets[t].end(), sets[s].begin(), sets[s].end()) &&
          (sets[t].size() > sets[s].size() || t < s)) {
        keep[s] = false;
        break;
      }
    }
    if (keep[s]) kept.push_back(s);
  }

  Reduced r;
  std::vector<std::uint32_t> local_of(sets.size(), std::numeric_limits<std::uint32_t>::max());
  for (std::uint32_t s = 0; s < sets.size(); ++s) {
    if (!keep[s]) continue;
    local_of[s] = static_cast<std::uint32_t>(r.set_origin.size());
    r.set_origin.push_back(s);
  }

  std::vector<std::vector<std::uint32_t>> elem_sets(system.universe);
  for (std::uint32_t local = 0; local < r.set_origin.size(); ++local) {
    for (auto e : sets[r.set_origin[local]]) elem_sets[e].push_back(local);
  }

  // Element e is implied by f when every set holding f also holds e.
  std::vector<bool> needed(system.universe, true);
  for (std::uint32_t e = 0; e < system.universe; ++e) {
    const auto& ce = elem_sets[e];
    for (auto s : ce) {
      for (auto f : sets[r.set_origin[s]]) {
        if (f == e || !needed[f] || elem_sets[f].front() != s) continue;
        const auto& cf = elem_sets[f];
        if (cf.size() > ce.size()) continue;
        if (cf.size() == ce.size() && f > e) continue;
        if (std::includes(ce.begin(), ce.end(), cf.begin(), cf.end())) {
          needed[e] = false;
          break;
        }
      }
      if (!needed[e]) break;
    }
  }

  std::vector<std::uint32_t> elem_local(system.universe, 0);
  std::uint32_t count = 0;
  for (std::uint32_t e = 0; e < system.universe; ++e) {
    if (needed[e]) {
      elem_local[e] = count++;
      r.elem_sets.push_back(elem_sets[e]);
    }
  }
  r.set_elems.assign(r.set_origin.size(), {});
  for (std::uint32_t e = 0; e < system.universe; ++e) {
    if (!needed[e]) continue;
    for (auto s : elem_sets[e]) r.set_elems[s].push_back(elem_local[e]);
  }
  return r;
}

class BranchAndBound {
 public:
  BranchAndBound(const Reduced& r, std::vector<std::uint32_t> incumbent, std::uint64_t budget)
      : r_(r),
        budget_(budget),
        best_(std::move(incumbent)),
        cover_count_(r.elem_sets.size(), 0),
        avail_(r.elem_sets.size()),
        forbidden_(r.set_elems.size(), false),
        touched_(r.set_elems.size(), 0),
        uncovered_(r.elem_sets.size()) {
    for (std::size_t e = 0; e < r.elem_sets.size(); ++e) {
      avail_[e] = static_cast<std::uint32_t>(r.elem_sets[e].size());
    }
  }

  void run() { search(); }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::uint32_t>& best() const { return best_; }
  bool improved() const { return improved_; }

 private:
  void choose(std::uint32_t s) {
    chosen_.push_back(s);
    for (auto e : r_.set_elems[s]) {
      if (cover_count_[e]++ == 0) --uncovered_;
    }
  }
  void unchoose(std::uint32_t s) {
    chosen_.pop_back();
    for (auto e : r_.set_elems[s]) {
      if (--cover_count_[e] == 0) ++uncovered_;
    }
  }
  void forbid(std::uint32_t s) {
    forbidden_[s] = true;
    for (auto e : r_.set_elems[s]) --avail_[e];
  }
  void allow(std::uint32_t s) {
    forbidden_[s] = false;
    for (auto e : r_.set_elems[s]) ++avail_[e];
  }

  // Uncovered elements whose available sets are pairwise disjoint each need a
  // distinct set. Elements are packed greedily by increasing availability.
  std::size_t disjoint_bound() {
    ++stamp_;
    buckets_.clear();
    for (std::uint32_t e = 0; e < cover_count_.size(); ++e) {
      if (cover_count_[e] == 0) buckets_.push_back({avail_[e], e});
    }
    std::sort(buckets_.begin(), buckets_.end());
    std::size_t bound = 0;
    for (const auto& [a, e] : buckets_) {
      bool clash = false;
      for (auto s : r_.elem_sets[e]) {
        if (!forbidden_[s] && touched_[s] == stamp_) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      ++bound;
      for (auto s : r_.elem_sets[e]) {
        if (!forbidden_[s]) touched_[s] = stamp_;
      }
    }
    return bound;
  }

  void search() {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (uncovered_ == 0) {
      if (chosen_.size() < best_.size()) {
        best_ = chosen_;
        improved_ = true;
      }
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;

    std::uint32_t pick = 0;
    std::uint32_t fewest = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t e = 0; e < cover_count_.size(); ++e) {
      if (cover_count_[e] == 0 && avail_[e] < fewest) {
        fewest = avail_[e];
        pick = e;
      }
    }
    if (fewest == 0) return;
    if (chosen_.size() + disjoint_bound() >= best_.size()) return;

    std::vector<std::pair<std::int64_t, std::uint32_t>> options;
    for (auto s : r_.elem_sets[pick]) {
      if (forbidden_[s]) continue;
      std::int64_t gain = 0;
      for (auto e : r_.set_elems[s]) gain += cover_count_[e] == 0;
      options.push_back({-gain, s});
    }
    std::sort(options.begin(), options.end());

    std::vector<std::uint32_t> excluded;
    for (const auto& [neg_gain, s] : options) {
      choose(s);
      search();
      unchoose(s);
      if (aborted_) break;
      forbid(s);
      excluded.push_back(s);
    }
    for (auto s : excluded) allow(s);
  }

  const Reduced& r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool improved_ = false;
  std::vector<std::uint32_t> best_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::uint32_t> cover_count_;
  std::vector<std::uint32_t> avail_;
  std::vector<bool> forbidden_;
  std::vector<std::uint64_t> touched_;
  std::uint64_t stamp_ = 0;
  std::size_t uncovered_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> buckets_;
};

}  // namespace

bool is_set_cover(const SetSystem& system, const std::vector<std::uint32_t>& chosen) {
  std::vector<bool> covered(system.universe, false);
  for (auto s : chosen) {
    if (s >= system.sets.size()) return false;
    for (auto e : system.sets[s]) {
      if (e < system.universe) covered[e] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<std::uint32_t> solve_set_cover_greedy(const SetSystem& system) {
  sets_per_element(system);  // feasibility check
  std::vector<std::vector<std::uint32_t>> sets;
  for (const auto& s : system.sets) sets.push_back(sorted_unique(s));
  std::vector<bool> covered(system.universe, false);
  std::size_t remaining = system.universe;
  std::vector<std::uint32_t> chosen;
  while (remaining > 0) {
    std::uint32_t best = 0;
    std::size_t best_gain = 0;
    for (std::uint32_t s = 0; s < sets.size(); ++s) {
      std::size_t gain = 0;
      for (auto e : sets[s]) gain += !covered[e];
      if (gain > best_gain) {
        best_gain = gain;
        best = s;
      }
    }
    chosen.push_back(best);
    for (auto e : sets[best]) {
      if (!covered[e]) {
        covered[e] = true;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

SetCoverResult solve_set_cover_exact(const SetSystem& system, const ExactOptions& options) {
  auto greedy = solve_set_cover_greedy(system);
  const Reduced reduced = reduce(system);

  // The incumbent lives in reduced coordinates only when the search improves
  // it, so keep the greedy answer in original coordinates on the side.
  std::vector<std::uint32_t> sentinel(greedy.size());
  BranchAndBound bnb(reduced, sentinel, options.node_budget);
  bnb.run();

  SetCoverResult result;
  result.nodes = bnb.nodes();
  result.status = bnb.aborted() ? SolveStatus::budget_exceeded : SolveStatus::optimal;
  if (bnb.improved()) {
    for (auto s : bnb.best()) result.chosen.push_back(reduced.set_origin[s]);
    std::sort(result.chosen.begin(), result.chosen.end());
  } else {
    result.chosen = std::move(greedy);
  }
  return result;
}

}  // namespace attractor
