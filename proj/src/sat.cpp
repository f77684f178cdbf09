#include "attractor/sat.hpp"

#include <algorithm>
#include <random>

#include "attractor/error.hpp"

namespace attractor {

Literal Literal::from_dimacs(int value) {
  if (value == 0) throw InvalidParameter("0 is not a literal");
  return Literal{static_cast<std::uint32_t>(value < 0 ? -value : value), value > 0};
}

bool clause_satisfied(const Clause& clause, const Assignment& assignment) {
  return std::any_of(clause.begin(), clause.end(),
                     [&](const Literal& l) { return assignment.satisfies(l); });
}

std::size_t count_satisfied(const Cnf& cnf, const Assignment& assignment) {
  return static_cast<std::size_t>(
      std::count_if(cnf.clauses.begin(), cnf.clauses.end(),
                    [&](const Clause& c) { return clause_satisfied(c, assignment); }));
}

std::optional<std::size_t> first_unsatisfied_clause(const Cnf& cnf, const Assignment& assignment) {
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    if (!clause_satisfied(cnf.clauses[i], assignment)) return i;
  }
  return std::nullopt;
}

std::string Violation::describe() const {
  switch (kind) {
    case Kind::clause_arity:
      return "clause " + std::to_string(clause + 1) + " has " + std::to_string(count) +
             " literals, expected 3";
    case Kind::literal_count:
      return "literal " + std::to_string(literal.to_dimacs()) + " occurs " + std::to_string(count) +
             " times, expected 2";
    case Kind::variable_range:
      return "clause " + std::to_string(clause + 1) + " uses undeclared variable " +
             std::to_string(literal.var);
  }
  return "violation";
}

ValidationReport validate_3b2(const Cnf& cnf) {
  ValidationReport report;
  std::vector<std::size_t> pos(cnf.num_vars + 1, 0);
  std::vector<std::size_t> neg(cnf.num_vars + 1, 0);
  for (std::size_t i = 0; i < cnf.clauses.size(); ++i) {
    const auto& clause = cnf.clauses[i];
    if (clause.size() != 3) {
      report.violations.push_back(
          {Violation::Kind::clause_arity, static_cast<std::ptrdiff_t>(i), {}, clause.size()});
    }
    for (const auto& lit : clause) {
      if (lit.var < 1 || lit.var > cnf.num_vars) {
        report.violations.push_back(
            {Violation::Kind::variable_range, static_cast<std::ptrdiff_t>(i), lit, 0});
        continue;
      }
      ++(lit.positive ? pos : neg)[lit.var];
    }
  }
  for (std::uint32_t v = 1; v <= cnf.num_vars; ++v) {
    if (pos[v] != 2) {
      report.violations.push_back({Violation::Kind::literal_count, -1, Literal{v, true}, pos[v]});
    }
    if (neg[v] != 2) {
      report.violations.push_back({Violation::Kind::literal_count, -1, Literal{v, false}, neg[v]});
    }
  }
  return report;
}

namespace {

struct ClauseMask {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

// Bit (n - var) holds x_var so that counting upwards enumerates assignments
// lexicographically with x1 most significant.
std::vector<ClauseMask> masks_of(const Cnf& cnf) {
  if (cnf.num_vars > kMaxBruteForceVars) {
    throw BudgetExceeded("brute force is limited to " + std::to_string(kMaxBruteForceVars) +
                         " variables, formula has " + std::to_string(cnf.num_vars));
  }
  std::vector<ClauseMask> masks;
  for (const auto& clause : cnf.clauses) {
    ClauseMask m;
    for (const auto& lit : clause) {
      if (lit.var < 1 || lit.var > cnf.num_vars) throw InvalidParameter("literal out of range");
      const std::uint32_t bit = 1u << (cnf.num_vars - lit.var);
      (lit.positive ? m.pos : m.neg) |= bit;
    }
    masks.push_back(m);
  }
  return masks;
}

Assignment decode(std::uint32_t bits, std::uint32_t n) {
  std::vector<bool> values(n);
  for (std::uint32_t v = 1; v <= n; ++v) values[v - 1] = (bits >> (n - v)) & 1u;
  return Assignment(std::move(values));
}

std::size_t satisfied_by(const std::vector<ClauseMask>& masks, std::uint32_t bits) {
  std::size_t count = 0;
  for (const auto& m : masks) count += ((bits & m.pos) | (~bits & m.neg)) != 0;
  return count;
}

}  // namespace

std::optional<Assignment> solve_sat_bruteforce(const Cnf& cnf) {
  const auto masks = masks_of(cnf);
  const std::uint64_t total = std::uint64_t{1} << cnf.num_vars;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (satisfied_by(masks, static_cast<std::uint32_t>(bits)) == masks.size()) {
      return decode(static_cast<std::uint32_t>(bits), cnf.num_vars);
    }
  }
  return std::nullopt;
}

MaxSatResult max_sat_bruteforce(const Cnf& cnf) {
  const auto masks = masks_of(cnf);
  const std::uint64_t total = std::uint64_t{1} << cnf.num_vars;
  std::size_t best = 0;
  std::uint32_t best_bits = 0;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const auto count = satisfied_by(masks, static_cast<std::uint32_t>(bits));
    if (count > best || bits == 0) {
      best = count;
      best_bits = static_cast<std::uint32_t>(bits);
      if (best == masks.size()) break;
    }
  }
  return MaxSatResult{best, decode(best_bits, cnf.num_vars)};
}

Cnf generate_3b2(std::uint32_t n, std::uint64_t seed, bool allow_duplicate_literal_in_clause) {
  if (n < 3 || n % 3 != 0) {
    throw InvalidParameter("(3,B2) instances need n >= 3 divisible by 3, got " + std::to_string(n));
  }
  std::vector<Literal> slots;
  for (std::uint32_t v = 1; v <= n; ++v) {
    for (int copy = 0; copy < 2; ++copy) {
      slots.push_back({v, true});
      slots.push_back({v, false});
    }
  }
  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 1'000'000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(slots.begin(), slots.end(), rng);
    Cnf cnf{n, {}};
    bool duplicate = false;
    for (std::size_t i = 0; i < slots.size(); i += 3) {
      Clause c(slots.begin() + static_cast<std::ptrdiff_t>(i),
               slots.begin() + static_cast<std::ptrdiff_t>(i + 3));
      duplicate = duplicate || c[0] == c[1] || c[0] == c[2] || c[1] == c[2];
      cnf.clauses.push_back(std::move(c));
    }
    if (allow_duplicate_literal_in_clause || !duplicate) return cnf;
  }
  throw SoundnessError("no duplicate-free (3,B2) instance found");
}

}  // namespace attractor
