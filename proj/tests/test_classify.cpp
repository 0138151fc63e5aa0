#include <gtest/gtest.h>

#include "support.hpp"

using namespace redcycle;

TEST(Classify, Fork) {
  auto rep = classify(catalog::fork_example());
  EXPECT_EQ(rep.fork_returns, std::set<Label>{1});
  EXPECT_TRUE(rep.abundant);
  EXPECT_FALSE(rep.acyclic);
  EXPECT_FALSE(rep.is_key());
  EXPECT_TRUE(is_fork(catalog::fork_example()));
}

TEST(Classify, Key) {
  auto rep = classify(catalog::key_example());
  EXPECT_EQ(rep.key_pairs, (std::set<KeyPair>{{1, 3, 0}}));
  EXPECT_TRUE(rep.acyclic);
  EXPECT_FALSE(rep.is_fork());
  EXPECT_FALSE(rep.is_prefork());
}

TEST(Classify, Prefork) {
  auto rep = classify(catalog::prefork_example());
  EXPECT_EQ(rep.prefork_pairs, (std::set<PreforkPair>{{1, 3, 2}}));
  EXPECT_TRUE(is_prefork(catalog::prefork_example()));
  EXPECT_FALSE(rep.is_fork());
}

TEST(Classify, SmallQuiversAreNeither) {
  auto a2 = Quiver::from_arrows({1, 2}, {{1, 2, 3}});
  auto rep = classify(a2);
  EXPECT_FALSE(rep.is_fork());
  EXPECT_FALSE(rep.is_key());
  EXPECT_FALSE(rep.is_prefork());
  EXPECT_TRUE(rep.abundant);
  EXPECT_TRUE(rep.acyclic);
}

TEST(Classify, MarkovQuiverIsNotAFork) {
  auto m = Quiver::from_arrows({1, 2, 3}, {{1, 2, 2}, {2, 3, 2}, {3, 1, 2}});
  EXPECT_FALSE(is_fork(m));
}

TEST(Classify, IgnoresFrozen) {
  EXPECT_EQ(classify(framed(catalog::fork_example())).fork_returns, std::set<Label>{1});
}

TEST(Classify, ForkCondition) {
  // Only r = 1 satisfies the weight condition: 3 -> 2 carries 8 > max(2, 3).
  auto q = catalog::fork_example();
  EXPECT_TRUE(detail::fork_at(q, 1, true, false));
  EXPECT_FALSE(detail::fork_at(q, 2, true, false));
  EXPECT_FALSE(detail::fork_at(q, 3, true, false));
}

TEST(CanonicalForm, OrbitConstant) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    auto q = testsupport::random_quiver(rng, 5, 3);
    auto s = testsupport::random_permutation(rng, q.labels());
    EXPECT_EQ(canonical_form(q), canonical_form(apply_permutation(q, s)));
  }
}

TEST(ForklessExplore, A2) {
  auto a2 = Quiver::from_arrows({1, 2}, {{1, 2, 1}});
  auto iso = forkless_explore(a2);
  EXPECT_TRUE(iso.exhausted);
  EXPECT_EQ(iso.forms.size(), 1u);
  auto lab = forkless_explore(a2, kDefaultNodeBudget, ExploreMode::labeled);
  EXPECT_TRUE(lab.exhausted);
  EXPECT_EQ(lab.forms.size(), 1u);
  EXPECT_EQ(lab.nodes.size(), 2u);
}

TEST(ForklessExplore, KeyCensus) {
  auto res = forkless_explore(catalog::key_example());
  EXPECT_TRUE(res.exhausted);
  ASSERT_EQ(res.keys.size(), 3u);
  std::set<std::pair<std::vector<Label>, std::vector<Label>>> ends;
  for (auto i : res.keys) {
    auto q = res.nodes[i];
    std::vector<Label> src;
    std::vector<Label> snk;
    for (Label v : q.labels()) {
      bool in = false;
      bool out = false;
      for (Label w : q.labels()) {
        in = in || q.b(w, v) > 0;
        out = out || q.b(v, w) > 0;
      }
      if (!in) src.push_back(v);
      if (!out) snk.push_back(v);
    }
    EXPECT_FALSE(src.empty());
    EXPECT_FALSE(snk.empty());
    ends.insert({src, snk});
  }
  EXPECT_EQ(ends.size(), 3u);
}

TEST(ForklessExplore, BoxQuiver) {
  auto res = forkless_explore(catalog::box_quiver(2, 2));
  EXPECT_TRUE(res.exhausted);
  EXPECT_TRUE(res.keys.empty());
}

TEST(ForklessExplore, BudgetAndStart) {
  auto res = forkless_explore(catalog::key_example(), 2);
  EXPECT_FALSE(res.exhausted);
  EXPECT_EQ(res.nodes.size(), 2u);
  try {
    forkless_explore(catalog::fork_example());
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::fork_start);
  }
}

TEST(ForklessExplore, Deterministic) {
  auto a = forkless_explore(catalog::key_example());
  auto b = forkless_explore(apply_permutation(catalog::key_example(), Permutation::parse("(1,2,3,4)")));
  EXPECT_EQ(a.forms, b.forms);
  EXPECT_EQ(a.keys.size(), b.keys.size());
}

TEST(AbundantAcyclic, MutationsGiveForksOrAbundantAcyclic) {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 200; ++i) {
    auto q = testsupport::random_acyclic(rng, 4, 2, 4);
    for (Label v : q.labels()) {
      auto m = mutate(q, v);
      EXPECT_TRUE(is_fork(m) || (is_abundant(m) && is_acyclic(m)));
    }
  }
}
