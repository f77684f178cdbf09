#include <gtest/gtest.h>

#include <random>
#include <set>

#include "attractor/attractor_solvers.hpp"
#include "attractor/error.hpp"
#include "oracles.hpp"

using namespace attractor;
using oracle::text;

TEST(MinAttractorExact, IntroductionExample) {
  const auto t = text("abbcabccac");
  const auto two = min_attractor_exact(t, 2);
  EXPECT_TRUE(two.optimal());
  EXPECT_EQ(two.size(), 3u);
  EXPECT_TRUE(oracle::verify(t, two.marking, 2));

  const auto full = min_attractor_exact(t, 10);
  EXPECT_EQ(full.size(), 4u);
  EXPECT_TRUE(oracle::verify(t, full.marking, 10));
  EXPECT_TRUE(verify_attractor(t, Marking::from_positions({2, 4, 7, 9}), 10).valid);
  EXPECT_TRUE(verify_attractor(t, Marking::from_positions({2, 5, 7, 9}), 10).valid);
}

TEST(MinAttractorExact, UnaryString) {
  for (std::size_t k = 1; k <= 4; ++k) {
    EXPECT_EQ(min_attractor_exact(text("aaaa"), k).size(), 1u);
  }
}

TEST(MinAttractorExact, MatchesBruteForce) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    const Text t(oracle::random_word(rng, 1, 9, 3));
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, t.size())(rng);
    const bool sharp = trial % 5 == 0;
    const auto sol = min_attractor_exact(t, k, sharp);
    EXPECT_TRUE(oracle::verify(t, sol.marking, k, sharp));
    EXPECT_EQ(sol.size(), oracle::min_attractor(t, k, sharp));
  }
}

TEST(MinAttractorExact, CircularAndSetMatchBruteForce) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 80; ++trial) {
    const auto w = oracle::random_word(rng, 1, 7, 3);
    const CircularText c(w);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, w.size())(rng);
    const auto sol = min_attractor_exact(c, k);
    EXPECT_TRUE(oracle::verify(c, sol.marking, k));
    EXPECT_EQ(sol.size(), oracle::min_attractor(c, k));

    std::vector<Text> texts;
    for (int i = 0; i < 1 + trial % 3; ++i) texts.emplace_back(oracle::random_word(rng, 1, 4, 3));
    const StringSet set(texts);
    const auto ssol = min_attractor_exact(set, 2);
    EXPECT_TRUE(oracle::verify(set, ssol.marking, 2));
    EXPECT_EQ(ssol.size(), oracle::min_attractor(set, 2));
  }
}

TEST(MinAttractorExact, MonotoneInK) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Text t(oracle::random_word(rng, 1, 12, 3));
    std::size_t previous = 0;
    for (std::size_t k = 1; k <= t.size(); ++k) {
      const auto size = min_attractor_exact(t, k).size();
      EXPECT_GE(size, previous);
      previous = size;
    }
  }
}

TEST(MinAttractorExact, BudgetExceededKeepsValidMarking) {
  std::mt19937_64 rng(64);
  bool hit = false;
  for (int trial = 0; trial < 50 && !hit; ++trial) {
    const Text t(oracle::random_word(rng, 40, 40, 4));
    const auto sol = min_attractor_exact(t, 3, false, ExactOptions{1});
    EXPECT_TRUE(verify_attractor(t, sol.marking, 3).valid);
    hit = sol.status == SolveStatus::budget_exceeded;
  }
  EXPECT_TRUE(hit);
}

TEST(MinAttractorGreedy, NeverBeatsExact) {
  const auto t = text("abbcabccac");
  const auto greedy = min_attractor_greedy(t, 2);
  EXPECT_TRUE(oracle::verify(t, greedy, 2));
  EXPECT_GE(greedy.size(), 3u);
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const Text t(oracle::random_word(rng, 1, 12, 3));
    const std::size_t k = 1 + trial % 4;
    const auto greedy = min_attractor_greedy(t, std::min(k, t.size()));
    EXPECT_TRUE(oracle::verify(t, greedy, std::min(k, t.size())));
    EXPECT_GE(greedy.size(), min_attractor_exact(t, std::min(k, t.size())).size());
  }
}

TEST(Min1Attractor, FirstOccurrences) {
  EXPECT_EQ(min_1_attractor(text("abbcabccac")), Marking::from_positions({1, 2, 4}));
  EXPECT_EQ(min_1_attractor(text("aaaa")), Marking::from_positions({1}));
  EXPECT_EQ(min_1_attractor(text("abc")), Marking::from_positions({1, 2, 3}));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Text t(oracle::random_word(rng, 1, 12, 5));
    const std::set<SymbolId> distinct(t.symbols().begin(), t.symbols().end());
    const auto m = min_1_attractor(t);
    EXPECT_EQ(m.size(), distinct.size());
    EXPECT_TRUE(oracle::verify(t, m, 1));
  }
}

TEST(MinSharp2Attractor, Examples) {
  EXPECT_EQ(min_sharp2_attractor(text("abbcabccac")).size(), 3u);
  EXPECT_EQ(min_sharp2_attractor(text("ab")).size(), 1u);
}

TEST(MinSharp2Attractor, MatchesExactSharpSolver) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    const Text t(oracle::random_word(rng, 2, 12, 3));
    const auto m = min_sharp2_attractor(t);
    EXPECT_TRUE(oracle::verify(t, m, 2, true));
    EXPECT_EQ(m.size(), min_attractor_exact(t, 2, true).size());
  }
}

TEST(MinSharp2Attractor, StringSets) {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Text> texts;
    for (int i = 0; i < 1 + trial % 3; ++i) texts.emplace_back(oracle::random_word(rng, 2, 5, 3));
    const StringSet set(texts);
    const auto m = min_sharp2_attractor(set);
    EXPECT_TRUE(oracle::verify(set, m, 2, true));
    EXPECT_EQ(m.size(), oracle::min_attractor(set, 2, true));
  }
}

TEST(Solvers, InvalidK) {
  EXPECT_THROW(min_attractor_exact(text("ab"), 0), InvalidParameter);
  EXPECT_THROW(min_attractor_exact(oracle::circular("ab"), 3), InvalidParameter);
}
