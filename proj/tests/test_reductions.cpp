#include <gtest/gtest.h>

#include "attractor/attractor_solvers.hpp"
#include "attractor/error.hpp"
#include "attractor/reductions.hpp"
#include "oracles.hpp"

using namespace attractor;

TEST(SatToCec, F0Shape) {
  const auto red = sat_to_cec(oracle::f0());
  EXPECT_EQ(red.graph.num_vertices(), 28u);
  EXPECT_EQ(red.graph.num_edges(), 30u);
  EXPECT_EQ(red.graph.num_colors(), 4u);
  EXPECT_EQ(red.predicted_cover, 15u);
  EXPECT_FALSE(red.graph.has_loops());
  // x1 occurs positively at slot 0 of clauses 0 and 1.
  const auto& e = red.graph.edge(red.positive_edge(1));
  EXPECT_EQ(e.u, CecReduction::literal_vertex(0, 0));
  EXPECT_EQ(e.v, CecReduction::literal_vertex(1, 0));
  EXPECT_EQ(e.color, 1u);
}

TEST(SatToCec, ClauseGadgetsArePaths) {
  const auto red = sat_to_cec(oracle::f0());
  for (std::uint32_t i = 0; i < 4; ++i) {
    for (std::uint32_t j = 0; j < 3; ++j) {
      const auto& spoke = red.graph.edge(CecReduction::spoke_edge(i, j));
      const auto& leg = red.graph.edge(CecReduction::leg_edge(i, j));
      EXPECT_EQ(spoke.u, CecReduction::clause_vertex(i));
      EXPECT_EQ(spoke.v, CecReduction::intermediate_vertex(i, j));
      EXPECT_EQ(leg.u, CecReduction::intermediate_vertex(i, j));
      EXPECT_EQ(leg.v, CecReduction::literal_vertex(i, j));
      EXPECT_EQ(spoke.color, 0u);
      EXPECT_EQ(leg.color, 0u);
    }
  }
}

TEST(SatToCec, RejectsUnbalanced) {
  auto f = oracle::f0();
  f.clauses.pop_back();
  EXPECT_THROW(sat_to_cec(f), InvalidParameter);
}

TEST(SatToCec, MinimumMatchesSatisfiability) {
  const auto red = sat_to_cec(oracle::f0());
  EXPECT_EQ(min_colorful_cover_exact(red.graph).size(), 15u);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = generate_3b2(6, seed);
    const auto r = sat_to_cec(f);
    const auto sol = min_colorful_cover_exact(r.graph);
    ASSERT_EQ(sol.status, SolveStatus::optimal);
    EXPECT_GE(sol.size(), r.predicted_cover);
    EXPECT_EQ(sol.size() == r.predicted_cover, oracle::satisfiable(f));
  }
}

TEST(CecCertificates, RoundTrip) {
  const auto f = oracle::f0();
  const auto red = sat_to_cec(f);
  const Assignment a({true, false, false});
  const auto cover = assignment_to_cover(red, a);
  EXPECT_EQ(cover.size(), 15u);
  EXPECT_TRUE(verify_colorful_cover(red.graph, cover).valid);
  EXPECT_EQ(cover_to_assignment(red, cover), a);

  const auto exact = min_colorful_cover_exact(red.graph).selection;
  const auto decoded = cover_to_assignment(red, exact);
  EXPECT_FALSE(first_unsatisfied_clause(f, decoded));
}

TEST(CecCertificates, Rejections) {
  const auto red = sat_to_cec(oracle::f0());
  EXPECT_THROW(assignment_to_cover(red, Assignment({true, true, true})), CertificateRejected);
  EXPECT_THROW(assignment_to_cover(red, Assignment({true})), CertificateRejected);
  auto cover = assignment_to_cover(red, Assignment({true, false, false}));
  std::vector<std::uint32_t> edges = cover.indices();
  edges.pop_back();
  EXPECT_THROW(cover_to_assignment(red, EdgeSelection(edges)), CertificateRejected);
  std::vector<std::uint32_t> all(red.graph.num_edges());
  for (std::uint32_t e = 0; e < all.size(); ++e) all[e] = e;
  EXPECT_THROW(cover_to_assignment(red, EdgeSelection(all)), CertificateRejected);
}

TEST(SatToAttractor, F0Shape) {
  const auto red = sat_to_attractor(oracle::f0());
  EXPECT_EQ(red.strings.count(), 12u);
  EXPECT_EQ(red.strings.total_length(), 54u);
  EXPECT_EQ(red.stitched_text().size(), 65u);
  EXPECT_EQ(red.predicted_set_attractor, 21u);
  EXPECT_EQ(red.predicted_string_attractor, 32u);
  EXPECT_EQ(red.glyphs.size(), 4u + 6u + 3u + 11u);
  // Positive string of x1: C1 C1 L1 X1 L1 C2 C2.
  const auto& p1 = red.strings.text(red.positive_text(1));
  EXPECT_EQ(p1.symbols(), (Word{0, 0, 4, 10, 4, 1, 1}));
  // Negative string of x1: C3 C3 ~L1 X1 ~L1 C4 C4.
  EXPECT_EQ(red.strings.text(red.negative_text(1)).symbols(), (Word{2, 2, 7, 10, 7, 3, 3}));
  EXPECT_EQ(red.strings.text(red.auxiliary_text(0)).symbols(), (Word{4, 4}));
  EXPECT_EQ(red.strings.text(red.auxiliary_text(1)).symbols(), (Word{7, 7}));
  EXPECT_EQ(red.strings.text(red.auxiliary_text(5)).symbols(), (Word{9, 9}));
}

TEST(SatToAttractor, SameClauseTwice) {
  // x1 appears twice positively in clause 1: literal slots keep j1 < j2.
  const Cnf f{3,
              {{{1, true}, {1, true}, {2, true}},
               {{1, false}, {2, false}, {3, true}},
               {{1, false}, {2, true}, {3, false}},
               {{2, false}, {3, true}, {3, false}}}};
  ASSERT_TRUE(validate_3b2(f).ok());
  const auto red = sat_to_attractor(f);
  const auto& p1 = red.strings.text(red.positive_text(1)).symbols();
  EXPECT_EQ(p1, (Word{0, 0, red.literal_symbol(0, false), red.variable_symbol(1), red.literal_symbol(1, false), 0, 0}));
  const auto sat = solve_sat_bruteforce(f);
  ASSERT_TRUE(sat);
  const auto marking = assignment_to_marking(red, *sat);
  EXPECT_TRUE(oracle::verify(red.strings, marking, 2));
  EXPECT_EQ(min_attractor_exact(red.strings, 2).size(), red.predicted_set_attractor);
}

TEST(AttractorCertificates, RoundTrip) {
  const auto f = oracle::f0();
  const auto red = sat_to_attractor(f);
  const Assignment a({true, false, false});
  const auto marking = assignment_to_marking(red, a);
  EXPECT_EQ(marking.size(), 21u);
  EXPECT_TRUE(oracle::verify(red.strings, marking, 2));
  EXPECT_EQ(marking_to_assignment(red, marking), a);

  const auto stitched = embed_solution(red.stitched, marking);
  EXPECT_EQ(stitched.size(), 32u);
  EXPECT_TRUE(oracle::verify(red.stitched_text(), stitched, 2));
  EXPECT_EQ(string_marking_to_assignment(red, stitched), a);
}

TEST(AttractorCertificates, ExactSolverMarkingsDecode) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = generate_3b2(3, seed);
    const auto red = sat_to_attractor(f);
    const auto set_sol = min_attractor_exact(red.strings, 2);
    ASSERT_EQ(set_sol.size(), red.predicted_set_attractor);
    EXPECT_FALSE(first_unsatisfied_clause(f, marking_to_assignment(red, set_sol.marking)));
    const auto str_sol = min_attractor_exact(red.stitched_text(), 2);
    ASSERT_EQ(str_sol.size(), red.predicted_string_attractor);
    EXPECT_FALSE(first_unsatisfied_clause(f, string_marking_to_assignment(red, str_sol.marking)));
  }
}

TEST(AttractorCertificates, Rejections) {
  const auto red = sat_to_attractor(oracle::f0());
  try {
    assignment_to_marking(red, Assignment({false, false, false}));
    FAIL();
  } catch (const CertificateRejected& e) {
    EXPECT_NE(std::string(e.what()).find("clause 1"), std::string::npos);
  }
  auto sites = assignment_to_marking(red, Assignment({true, false, false})).sites();
  sites.push_back(Site{1, 1});
  EXPECT_THROW(marking_to_assignment(red, Marking(sites)), CertificateRejected);
}

TEST(SatToAttractor, LowerBoundAndKRobustness) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = generate_3b2(3, seed);
    const auto red = sat_to_attractor(f);
    const auto& t = red.stitched_text();
    const auto k2 = min_attractor_exact(t, 2).size();
    EXPECT_GE(min_attractor_exact(red.strings, 2).size(), red.predicted_set_attractor);
    EXPECT_EQ(min_attractor_exact(t, 3).size(), k2);
    EXPECT_EQ(min_attractor_exact(t, t.size()).size(), k2);
  }
}

TEST(GapBounds, Formulas) {
  EXPECT_EQ(gap_bounds(4, 0), (Interval{32, 32}));
  EXPECT_EQ(gap_bounds(4, 2), (Interval{33, 34}));
  EXPECT_EQ(gap_bounds(8, 1), (Interval{54, 54}));
  EXPECT_THROW(gap_bounds(5, 0), InvalidParameter);
  EXPECT_THROW(gap_bounds(4, 5), InvalidParameter);
}

TEST(GapBounds, ContainExactMinimum) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = generate_3b2(6, seed);
    const auto red = sat_to_attractor(f);
    const auto u = f.clauses.size() - oracle::max_satisfied(f);
    const auto best = min_attractor_exact(red.stitched_text(), 2);
    ASSERT_TRUE(best.optimal());
    EXPECT_TRUE(gap_bounds(f.clauses.size(), u).contains(best.size()));
  }
}
