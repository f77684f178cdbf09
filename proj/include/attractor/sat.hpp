#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace attractor {

/// Literal over variables 1..n.
struct Literal {
  std::uint32_t var = 1;
  bool positive = true;

  int to_dimacs() const { return positive ? static_cast<int>(var) : -static_cast<int>(var); }
  static Literal from_dimacs(int value);
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// CNF formula. Balanced (3,B2) instances are checked with validate_3b2; the
/// type itself accepts any CNF so unbalanced input can be reported.
struct Cnf {
  std::uint32_t num_vars = 0;
  std::vector<Clause> clauses;
  friend bool operator==(const Cnf&, const Cnf&) = default;
};

class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  /// 1-based variable.
  bool value(std::uint32_t var) const { return values_.at(var - 1); }
  bool satisfies(const Literal& lit) const { return value(lit.var) == lit.positive; }
  const std::vector<bool>& values() const { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

bool clause_satisfied(const Clause& clause, const Assignment& assignment);
std::size_t count_satisfied(const Cnf& cnf, const Assignment& assignment);
/// 0-based index of the first clause the assignment falsifies.
std::optional<std::size_t> first_unsatisfied_clause(const Cnf& cnf, const Assignment& assignment);

struct Violation {
  enum class Kind { clause_arity, literal_count, variable_range };
  Kind kind;
  /// Offending clause (arity / range) or -1 for literal counts.
  std::ptrdiff_t clause = -1;
  Literal literal{};
  std::size_t count = 0;
  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Every clause has exactly 3 literals and each of the 2n literals occurs
/// exactly twice.
ValidationReport validate_3b2(const Cnf& cnf);

inline constexpr std::uint32_t kMaxBruteForceVars = 24;

/// First satisfying assignment in lexicographic order (x1 most significant,
/// false before true), or nullopt. Throws BudgetExceeded above 24 variables.
std::optional<Assignment> solve_sat_bruteforce(const Cnf& cnf);

struct MaxSatResult {
  std::size_t max_satisfied = 0;
  Assignment assignment;
};

/// Exact MAX-SAT by enumeration, first optimum in the same order.
MaxSatResult max_sat_bruteforce(const Cnf& cnf);

/// Random balanced instance: the 4n literal slots (two per literal) are
/// shuffled into 4n/3 clauses. Unless allowed, the same literal twice in a
/// clause triggers a redraw. Throws InvalidParameter unless n >= 3 and 3 | n.
Cnf generate_3b2(std::uint32_t n, std::uint64_t seed, bool allow_duplicate_literal_in_clause = false);

}  // namespace attractor
