#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "attractor/error.hpp"
#include "attractor/strings.hpp"
#include "oracles.hpp"

using namespace attractor;
using oracle::text;
using oracle::word;

TEST(Text, OneBasedAccess) {
  const auto t = text("abbcabccac");
  EXPECT_EQ(t.at(1), 0u);
  EXPECT_EQ(t.at(10), 2u);
  EXPECT_EQ(t.substring(2, 4), word("bbc"));
  EXPECT_THROW(t.at(0), InvalidParameter);
  EXPECT_THROW(t.at(11), InvalidParameter);
  EXPECT_THROW(t.substring(3, 2), InvalidParameter);
}

TEST(CircularText, WrapsAround) {
  const auto c = oracle::circular("abc");
  EXPECT_EQ(c.substring(3, 2), word("ca"));
  EXPECT_EQ(c.substring(2, 3), word("bca"));
  EXPECT_THROW(c.substring(1, 4), InvalidParameter);
  EXPECT_THROW(CircularText(Word{}), InvalidParameter);
}

TEST(StringSet, RejectsEmpty) {
  EXPECT_THROW(StringSet(std::vector<Text>{}), InvalidParameter);
  const auto s = oracle::set({"ab", "bca"});
  EXPECT_EQ(s.total_length(), 5u);
  EXPECT_EQ(s.text(2), text("bca"));
  EXPECT_THROW(s.text(3), InvalidParameter);
}

TEST(Marking, SortedAndUnique) {
  const Marking m({Site{2, 1}, Site{1, 5}, Site{2, 1}, Site{1, 2}});
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m.sites().front(), (Site{1, 2}));
  EXPECT_TRUE(m.contains(Site{2, 1}));
  EXPECT_FALSE(m.contains(Site{2, 2}));
  EXPECT_EQ(Marking::from_positions({9, 2, 7}).positions(), (std::vector<std::size_t>{2, 7, 9}));
}

TEST(DistinctSubstrings, Examples) {
  const auto subs = distinct_substrings(text("abbcabccac"), 2);
  std::vector<Word> expected;
  for (auto s : {"a", "b", "c", "ab", "bb", "bc", "ca", "cc", "ac"}) expected.push_back(word(s));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(subs, expected);

  EXPECT_EQ(distinct_substrings(text("aaaa"), 3), (std::vector<Word>{word("a"), word("aa"), word("aaa")}));
  EXPECT_EQ(distinct_substrings(oracle::set({"ab", "ba"}), 2),
            (std::vector<Word>{word("a"), word("ab"), word("b"), word("ba")}));
  EXPECT_EQ(distinct_substrings(text("abbc"), 2, true),
            (std::vector<Word>{word("ab"), word("bb"), word("bc")}));
}

TEST(DistinctSubstrings, CircularCappedAtLength) {
  EXPECT_EQ(distinct_substrings(oracle::circular("ab"), 2),
            (std::vector<Word>{word("a"), word("ab"), word("b"), word("ba")}));
  EXPECT_THROW(distinct_substrings(oracle::circular("ab"), 3), InvalidParameter);
  EXPECT_THROW(distinct_substrings(text("ab"), 0), InvalidParameter);
}

TEST(DistinctSubstrings, MatchesNaiveEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = oracle::random_word(rng, 1, 10, 3);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, w.size())(rng);
    const bool sharp = trial % 3 == 0;
    for (const Instance& inst : {Instance(Text(w)), Instance(CircularText(w))}) {
      const auto got = distinct_substrings(inst, k, sharp);
      const auto want = oracle::substrings(inst, k, sharp);
      EXPECT_EQ(std::set<Word>(got.begin(), got.end()), want);
      EXPECT_EQ(got.size(), want.size());
    }
    std::size_t bound = 0;
    for (std::size_t l = 1; l <= k; ++l) bound += w.size() - l + 1;
    EXPECT_LE(distinct_substrings(Text(w), k).size(), bound);
  }
}

TEST(VerifyAttractor, IntroductionExample) {
  const auto t = text("abbcabccac");
  EXPECT_TRUE(verify_attractor(t, Marking::from_positions({2, 7, 9}), 2).valid);
  const auto v3 = verify_attractor(t, Marking::from_positions({2, 7, 9}), 3);
  EXPECT_FALSE(v3.valid);
  ASSERT_TRUE(v3.witness);
  EXPECT_EQ(*v3.witness, word("bca"));
}

TEST(VerifyAttractor, SmallCases) {
  EXPECT_FALSE(verify_attractor(text("abc"), Marking{}, 1).valid);
  const auto v = verify_attractor(oracle::circular("ab"), Marking::from_positions({1}), 2);
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(*v.witness, word("b"));
  EXPECT_TRUE(verify_attractor(Text{}, Marking{}, 3).valid);
  EXPECT_TRUE(verify_attractor(oracle::circular("ab"), Marking::from_positions({1, 2}), 2).valid);
}

TEST(VerifyAttractor, OutOfRangeIsAnError) {
  EXPECT_THROW(verify_attractor(text("abc"), Marking::from_positions({4}), 2), InvalidParameter);
  EXPECT_THROW(verify_attractor(oracle::set({"ab"}), Marking({Site{2, 1}}), 2), InvalidParameter);
}

TEST(VerifyAttractor, AgreesWithNaiveVerifier) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const auto w = oracle::random_word(rng, 1, 9, 3);
    std::vector<std::size_t> positions;
    for (std::size_t p = 1; p <= w.size(); ++p) {
      if (rng() % 3 == 0) positions.push_back(p);
    }
    const auto marking = Marking::from_positions(positions);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, w.size())(rng);
    const bool sharp = trial % 4 == 0;
    for (const Instance& inst : {Instance(Text(w)), Instance(CircularText(w))}) {
      const auto v = verify_attractor(inst, marking, k, sharp);
      EXPECT_EQ(v.valid, oracle::verify(inst, marking, k, sharp));
      if (!v.valid) {
        ASSERT_TRUE(v.witness);
        const auto cov = oracle::covered(inst, marking, k, sharp);
        EXPECT_EQ(cov.count(*v.witness), 0u);
        for (const auto& s : oracle::substrings(inst, k, sharp)) {
          if (s == *v.witness) break;
          EXPECT_EQ(cov.count(s), 1u);
        }
      }
    }
  }
}

TEST(VerifyAttractor, SetInstancesAgreeWithNaive) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Text> texts;
    const int m = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < m; ++i) texts.emplace_back(oracle::random_word(rng, 1, 5, 3));
    const StringSet set(texts);
    std::vector<Site> sites;
    for (const auto& s : oracle::sites(set)) {
      if (rng() % 2 == 0) sites.push_back(s);
    }
    const Marking marking(sites);
    for (std::size_t k : {1, 2, 3}) {
      EXPECT_EQ(verify_attractor(set, marking, k).valid, oracle::verify(set, marking, k));
    }
  }
}

TEST(VerifyAttractor, Properties) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Text t(oracle::random_word(rng, 1, 10, 3));
    std::vector<std::size_t> all(t.size());
    std::iota(all.begin(), all.end(), 1);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, t.size())(rng);
    EXPECT_TRUE(verify_attractor(t, Marking::from_positions(all), k).valid);

    std::vector<std::size_t> some;
    for (auto p : all) {
      if (rng() % 2) some.push_back(p);
    }
    const auto m = Marking::from_positions(some);
    if (verify_attractor(t, m, k).valid) {
      for (std::size_t kk = 1; kk <= k; ++kk) EXPECT_TRUE(verify_attractor(t, m, kk).valid);
      EXPECT_TRUE(verify_attractor(t, m, k, true).valid);
      auto more = some;
      more.push_back(1 + rng() % t.size());
      EXPECT_TRUE(verify_attractor(t, Marking::from_positions(more), k).valid);
    }
  }
}

TEST(CoverInstance, CandidatesAreCoveringPositions) {
  const auto t = text("abbcabccac");
  const auto ci = build_cover_instance(t, 2);
  ASSERT_EQ(ci.elements.size(), 9u);
  ASSERT_EQ(ci.sites.size(), 10u);
  for (std::size_t s = 0; s < ci.sites.size(); ++s) {
    std::set<Word> from_candidates;
    for (auto e : ci.candidates[s]) from_candidates.insert(ci.elements[e]);
    EXPECT_EQ(from_candidates, oracle::covered(t, Marking({ci.sites[s]}), 2));
  }
  EXPECT_EQ(full_length(t), 10u);
  EXPECT_EQ(full_length(oracle::set({"ab", "bcad"})), 4u);
}
