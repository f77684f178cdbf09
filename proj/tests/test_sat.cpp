#include <gtest/gtest.h>

#include "attractor/error.hpp"
#include "attractor/sat.hpp"
#include "oracles.hpp"

using namespace attractor;

TEST(Literal, Dimacs) {
  EXPECT_EQ(Literal::from_dimacs(-4), (Literal{4, false}));
  EXPECT_EQ((Literal{2, true}).to_dimacs(), 2);
  EXPECT_THROW(Literal::from_dimacs(0), InvalidParameter);
}

TEST(Validate3B2, F0IsBalanced) {
  EXPECT_TRUE(validate_3b2(oracle::f0()).ok());
}

TEST(Validate3B2, MissingClause) {
  auto f = oracle::f0();
  f.clauses.pop_back();
  const auto report = validate_3b2(f);
  ASSERT_EQ(report.violations.size(), 3u);
  for (const auto& v : report.violations) {
    EXPECT_EQ(v.kind, Violation::Kind::literal_count);
    EXPECT_FALSE(v.literal.positive);
    EXPECT_EQ(v.count, 1u);
  }
}

TEST(Validate3B2, ArityAndRange) {
  auto f = oracle::f0();
  f.clauses[1].pop_back();
  auto report = validate_3b2(f);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().kind, Violation::Kind::clause_arity);
  EXPECT_EQ(report.violations.front().clause, 1);

  f = oracle::f0();
  f.clauses[0][0].var = 9;
  report = validate_3b2(f);
  EXPECT_EQ(report.violations.front().kind, Violation::Kind::variable_range);
}

TEST(BruteForce, F0) {
  const auto f = oracle::f0();
  const auto sat = solve_sat_bruteforce(f);
  ASSERT_TRUE(sat);
  EXPECT_FALSE(first_unsatisfied_clause(f, *sat));
  EXPECT_TRUE(first_unsatisfied_clause(f, Assignment({true, true, true})));
  EXPECT_FALSE(first_unsatisfied_clause(f, Assignment({true, false, false})));
  const auto max = max_sat_bruteforce(f);
  EXPECT_EQ(max.max_satisfied, 4u);
  EXPECT_EQ(count_satisfied(f, max.assignment), 4u);
}

TEST(BruteForce, Contradiction) {
  // Not a (3,B2) instance; exercises the unsatisfiable path of the solvers.
  const Cnf f{1, {{{1, true}, {1, true}, {1, true}}, {{1, false}, {1, false}, {1, false}}}};
  EXPECT_FALSE(solve_sat_bruteforce(f));
  EXPECT_EQ(max_sat_bruteforce(f).max_satisfied, 1u);
}

TEST(BruteForce, EmptyFormula) {
  const Cnf f{0, {}};
  const auto sat = solve_sat_bruteforce(f);
  ASSERT_TRUE(sat);
  EXPECT_EQ(sat->size(), 0u);
  EXPECT_EQ(max_sat_bruteforce(f).max_satisfied, 0u);
}

TEST(BruteForce, FirstAssignmentInOrder) {
  // x1 most significant, false first: (x2) forces 01.
  const Cnf f{2, {{{2, true}}}};
  EXPECT_EQ(*solve_sat_bruteforce(f), Assignment({false, true}));
}

TEST(BruteForce, VariableLimit) {
  EXPECT_THROW(solve_sat_bruteforce(Cnf{25, {}}), BudgetExceeded);
}

TEST(Generate3B2, Examples) {
  const auto f = generate_3b2(3, 1);
  EXPECT_EQ(f.num_vars, 3u);
  EXPECT_EQ(f.clauses.size(), 4u);
  EXPECT_TRUE(validate_3b2(f).ok());
  EXPECT_THROW(generate_3b2(4, 1), InvalidParameter);
  EXPECT_THROW(generate_3b2(0, 1), InvalidParameter);
  EXPECT_EQ(generate_3b2(6, 42), generate_3b2(6, 42));
}

TEST(Generate3B2, ManySeedsAgreeWithOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = generate_3b2(6, seed);
    ASSERT_TRUE(validate_3b2(f).ok());
    EXPECT_EQ(f.clauses.size(), 8u);
    for (const auto& c : f.clauses) {
      EXPECT_NE(c[0], c[1]);
      EXPECT_NE(c[0], c[2]);
      EXPECT_NE(c[1], c[2]);
    }
    const auto sat = solve_sat_bruteforce(f);
    EXPECT_EQ(sat.has_value(), oracle::satisfiable(f));
    const auto max = max_sat_bruteforce(f);
    EXPECT_EQ(max.max_satisfied, oracle::max_satisfied(f));
    EXPECT_LE(max.max_satisfied, f.clauses.size());
    if (sat) {
      EXPECT_EQ(max.max_satisfied, f.clauses.size());
    }
  }
}

TEST(Generate3B2, DuplicatesAllowedOnRequest) {
  bool duplicate = false;
  for (std::uint64_t seed = 0; seed < 200 && !duplicate; ++seed) {
    const auto f = generate_3b2(3, seed, true);
    ASSERT_TRUE(validate_3b2(f).ok());
    for (const auto& c : f.clauses) duplicate = duplicate || c[0] == c[1] || c[0] == c[2] || c[1] == c[2];
  }
  EXPECT_TRUE(duplicate);
}
