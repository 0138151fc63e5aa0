#include <gtest/gtest.h>

#include "support.hpp"

using namespace redcycle;

namespace {
MutationSequence seq(char const* s) { return MutationSequence::parse(s); }
Permutation perm(char const* s) { return Permutation::parse(s); }
}  // namespace

TEST(IsReddening, KeyK) {
  auto k = catalog::quiver_k();
  EXPECT_EQ(is_reddening(k, seq("3,2,1,2,3,2,3")), Permutation{});
  EXPECT_EQ(is_reddening(k, seq("3,2,1,2,3,1,2,1,2,3")), perm("(1,2)"));
  EXPECT_FALSE(is_reddening(k, seq("3,2,1")).has_value());
}

TEST(IsReddening, Grid) {
  EXPECT_EQ(is_reddening(catalog::r33(), seq("7,4,1,8,7,5,4,2,1,9,8,7,6,5,4,3,2,1")), perm("(1,3)(4,6)(7,9)"));
}

TEST(IsReddening, EndStateIsPermutedCoframe) {
  for (auto const& [q, s] : {std::pair{catalog::quiver_k(), seq("3,2,1,2,3,1,2,1,2,3")},
                             std::pair{catalog::r33(), catalog::grid_reddening(3, 3)},
                             std::pair{catalog::r_prime(), seq("5,1,7,4,1,8,7,5,4,2,1,6,5,4,3,2,1,3,5")}}) {
    auto sigma = is_reddening(q, s);
    ASSERT_TRUE(sigma.has_value());
    EXPECT_EQ(mutate_seq(q, s), apply_permutation(q, *sigma));
    EXPECT_EQ(mutable_part(mutate_seq(framed(q), s)), apply_permutation(q, *sigma));
  }
}

TEST(ReddeningPermutation, RejectsImpossibleMatrix) {
  CMatrix c{{1, 2}, IntMatrix::from_rows({{-1, -1}, {0, -1}})};
  try {
    reddening_permutation(c);
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::internal_contradiction);
  }
}

TEST(IsMaximalGreen, Examples) {
  EXPECT_EQ(is_maximal_green(catalog::dreaded_torus(1), seq("1,3,4,2,1,3")), perm("(1,4)(2,3)"));
  auto a2 = Quiver::from_arrows({1, 2}, {{1, 2, 1}});
  EXPECT_EQ(is_maximal_green(a2, seq("2,1,2")), perm("(1,2)"));
  EXPECT_EQ(is_maximal_green(a2, seq("1,2")), Permutation{});
  auto acyclic = Quiver::from_arrows({1, 2, 3}, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}});
  EXPECT_EQ(is_maximal_green(acyclic, source_sequence(acyclic)), Permutation{});
  EXPECT_FALSE(is_maximal_green(a2, seq("2,1,2,1")).has_value());
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate_reddening(seq("1,2,3"), Permutation{}, seq("2")), seq("2,1,2,3,2"));
  EXPECT_EQ(conjugate_reddening(seq("1,2,3"), Permutation{}, {}), seq("1,2,3"));
  auto t = catalog::dreaded_torus(1);
  auto s = conjugate_reddening(seq("1,3,4,2,1,3"), perm("(1,4)(2,3)"), seq("1"));
  EXPECT_TRUE(is_reddening(mutate(t, 1), s).has_value());
}

TEST(SourceSequence, Examples) {
  EXPECT_EQ(source_sequence(Quiver::from_arrows({1, 2}, {{1, 2, 1}})), seq("1,2"));
  auto q = Quiver::from_arrows({1, 2, 3}, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}});
  EXPECT_EQ(source_sequence(q), seq("1,2,3"));
  EXPECT_EQ(mutate_seq(q, source_sequence(q)), q);
  try {
    source_sequence(catalog::quiver_k());
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cyclic_quiver);
  }
}

TEST(SourceSequence, SmallestSourceFirst) {
  auto q = Quiver::from_arrows({2, 5, 7}, {{7, 2, 1}, {5, 2, 3}});
  EXPECT_EQ(source_sequence(q), seq("5,7,2"));
}

TEST(Forkless, ReddeningTrajectoriesAvoidForks) {
  std::vector<std::pair<Quiver, MutationSequence>> cases{
      {catalog::dreaded_torus(1), seq("1,3,4,2,1,3")},
      {catalog::r33(), catalog::grid_reddening(3, 3)},
      {catalog::infinite_reduced_key(), seq("4,1,3,1,3,4,2,4,3,1")}};
  for (auto const& [q, s] : cases) {
    ASSERT_FALSE(is_fork(q));
    for (auto const& x : trajectory(q, s)) EXPECT_FALSE(is_fork(x)) << s.to_string();
  }
}

TEST(Forkless, ForkStartLeavesThroughPointOfReturn) {
  // K is a fork with point of return 3; its reddening sequences start and
  // end at 3 and stay forkless in between.
  auto k = catalog::quiver_k();
  EXPECT_EQ(classify(k).fork_returns, std::set<Label>{3});
  for (auto const& s : {seq("3,2,1,2,3,2,3"), seq("3,2,1,2,3,1,2,1,2,3")}) {
    auto traj = trajectory(k, s);
    EXPECT_TRUE(is_fork(traj.back()));
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) EXPECT_FALSE(is_fork(traj[i])) << i;
  }
}
