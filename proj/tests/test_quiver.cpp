#include <gtest/gtest.h>

#include "support.hpp"

using namespace redcycle;
using testsupport::oracle_mutate;
using testsupport::same;
using testsupport::to_arrow_quiver;

namespace {

Quiver k_prime() { return Quiver::from_arrows({1, 2, 3}, {{1, 2, 1}, {2, 3, 4}, {1, 3, 5}}); }
Quiver k() { return Quiver::from_arrows({1, 2, 3}, {{1, 2, 35}, {2, 3, 4}, {3, 1, 9}}); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::internal_contradiction;
}

}  // namespace

TEST(Quiver, RejectsTwoCyclesAndLoops) {
  EXPECT_EQ(kind_of([] { Quiver::from_arrows({1, 2}, {{1, 2, 1}, {2, 1, 1}}); }), ErrorKind::invalid_quiver);
  EXPECT_EQ(kind_of([] { Quiver::from_arrows({1, 2}, {{1, 1, 1}}); }), ErrorKind::invalid_quiver);
  EXPECT_EQ(kind_of([] { Quiver::from_arrows({1, 2}, {{1, 3, 1}}); }), ErrorKind::unknown_vertex);
}

TEST(Quiver, RepeatedArrowsAccumulate) {
  auto q = Quiver::from_arrows({1, 2}, {{1, 2, 1}, {1, 2, 2}});
  EXPECT_EQ(q.b(1, 2), 3);
  EXPECT_EQ(q.b(2, 1), -3);
}

TEST(Quiver, NonContiguousLabels) {
  auto q = Quiver::from_arrows({9, 2, 5}, {{9, 2, 1}});
  EXPECT_EQ(q.labels(), (std::vector<Label>{2, 5, 9}));
  EXPECT_EQ(q.rank(), 3u);
}

TEST(Mutate, KPrimeAtTwo) {
  auto got = mutate(k_prime(), 2);
  auto want = Quiver::from_arrows({1, 2, 3}, {{2, 1, 1}, {3, 2, 4}, {1, 3, 9}});
  EXPECT_EQ(got, want);
  EXPECT_TRUE(same(oracle_mutate(to_arrow_quiver(k_prime()), 2), got));
}

TEST(Mutate, KPrimeToK) { EXPECT_EQ(mutate_seq(k_prime(), {2, 3}), k()); }

TEST(Mutate, Involution) {
  for (Label v : {1, 2, 3}) EXPECT_EQ(mutate(mutate(k(), v), v), k());
}

TEST(Mutate, SinkReversesOnlyItsArrows) {
  auto q = Quiver::from_arrows({1, 2, 3, 4}, {{1, 4, 2}, {2, 4, 1}, {1, 2, 3}, {3, 2, 1}});
  auto m = mutate(q, 4);
  EXPECT_EQ(m, Quiver::from_arrows({1, 2, 3, 4}, {{4, 1, 2}, {4, 2, 1}, {1, 2, 3}, {3, 2, 1}}));
}

TEST(Mutate, Errors) {
  EXPECT_EQ(kind_of([] { mutate(k(), 7); }), ErrorKind::unknown_vertex);
  auto f = framed(k());
  EXPECT_EQ(kind_of([&] { mutate(f, f.frozen_labels().front()); }), ErrorKind::frozen_vertex);
}

TEST(Mutate, OverflowIsAnError) {
  Entry big = Entry{1} << 40;
  auto q = Quiver::from_arrows({1, 2, 3}, {{1, 2, big}, {2, 3, big}});
  EXPECT_EQ(kind_of([&] { mutate(q, 2); }), ErrorKind::overflow);
}

TEST(Mutate, InputUnchanged) {
  auto q = k();
  auto copy = q;
  (void)mutate(q, 1);
  EXPECT_EQ(q, copy);
}

TEST(MutateSeq, TrajectoryHasAllSteps) {
  std::vector<Quiver> traj;
  auto end = mutate_seq(k_prime(), {2, 3}, &traj);
  ASSERT_EQ(traj.size(), 3u);
  EXPECT_EQ(traj.front(), k_prime());
  EXPECT_EQ(traj.back(), end);
  EXPECT_EQ(mutate_seq(k(), {}), k());
  EXPECT_EQ(trajectory(k(), {1, 2}).size(), 3u);
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce({1, 2, 2, 1, 3}), (MutationSequence{3}));
  EXPECT_EQ(reduce({1, 2, 1}), (MutationSequence{1, 2, 1}));
  EXPECT_EQ(reduce(MutationSequence::parse("3,2,1,2,3,1,2,1,2,1,1,3")),
            MutationSequence::parse("3,2,1,2,3,1,2,1,2,3"));
  EXPECT_EQ(reduce({}), MutationSequence{});
}

TEST(Sequence, ParseAndPrint) {
  auto s = MutationSequence::parse(" 4, 3,2 ");
  EXPECT_EQ(s, (MutationSequence{4, 3, 2}));
  EXPECT_EQ(s.to_string(), "4,3,2");
  EXPECT_EQ(s.reversed(), (MutationSequence{2, 3, 4}));
  EXPECT_EQ(MutationSequence::parse(""), MutationSequence{});
  EXPECT_EQ(kind_of([] { MutationSequence::parse("1,,2"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { MutationSequence::parse("1,x"); }), ErrorKind::parse_error);
}

TEST(Permutation, ParseOrderCompose) {
  auto s = Permutation::parse("(1,4)(2,3)");
  EXPECT_EQ(s(1), 4);
  EXPECT_EQ(s(4), 1);
  EXPECT_EQ(s(9), 9);
  EXPECT_EQ(s.order(), 2);
  auto r = Permutation::parse("(13,15,14)");
  EXPECT_EQ(r(13), 15);
  EXPECT_EQ(r(15), 14);
  EXPECT_EQ(r.order(), 3);
  EXPECT_EQ((r * r * r), Permutation{});
  EXPECT_EQ(r.inverse() * r, Permutation{});
  EXPECT_EQ(r.to_string(), "(13,15,14)");
  EXPECT_EQ(Permutation::parse("()").to_string(), "()");
  EXPECT_EQ(kind_of([] { Permutation::parse("(1,2"); }), ErrorKind::parse_error);
}

TEST(Restrict, HalfFiniteQuiver) {
  auto p = catalog::half_finite_15();
  std::vector<Label> keep;
  for (Label x = 1; x <= 12; ++x) keep.push_back(x);
  auto q = restrict(p, keep);
  EXPECT_EQ(q.size(), 12u);
  EXPECT_EQ(restrict(p, p.labels()), p);
  EXPECT_EQ(kind_of([&] { restrict(p, {1, 99}); }), ErrorKind::unknown_vertex);
}

TEST(Restrict, CommutesWithMutation) {
  auto q = catalog::r33();
  std::vector<Label> keep{1, 2, 4, 5, 9};
  for (Label v : keep) EXPECT_EQ(restrict(mutate(q, v), keep), mutate(restrict(q, keep), v));
}

TEST(Equals, NonEqualPair) {
  auto left = Quiver::from_arrows({1, 2, 3}, {{1, 2, 4}, {2, 3, 4}, {3, 1, 4}});
  auto right = Quiver::from_arrows({1, 2, 3}, {{3, 2, 4}, {2, 1, 4}, {1, 3, 4}});
  EXPECT_FALSE(equals(left, right));
  EXPECT_TRUE(equals(left, left));
  EXPECT_EQ(apply_permutation(left, Permutation::parse("(1,2)")), right);
  auto iso = find_isomorphism(left, right);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(apply_permutation(left, *iso), right);
}

TEST(Equals, AsymmetricVertexMoved) {
  auto q = Quiver::from_arrows({1, 2, 3}, {{1, 2, 1}, {2, 3, 2}});
  EXPECT_FALSE(equals(q, apply_permutation(q, Permutation::parse("(1,3)"))));
}

TEST(Isomorphism, Basics) {
  auto a = Quiver::from_arrows({1, 2}, {{1, 2, 1}});
  auto b = Quiver::from_arrows({1, 2}, {{1, 2, 2}});
  EXPECT_FALSE(find_isomorphism(a, b).has_value());
  EXPECT_EQ(find_isomorphism(a, a), Permutation{});
  EXPECT_NE(canonical_form(a), canonical_form(b));
  auto c = Quiver::from_arrows({1, 2}, {{2, 1, 1}});
  EXPECT_EQ(canonical_form(a), canonical_form(c));
}

TEST(ApplyPermutation, RoundTripAndDreadedTorus) {
  auto q = catalog::dreaded_torus(1);
  auto s = Permutation::parse("(1,4)(2,3)");
  EXPECT_EQ(apply_permutation(q, Permutation{}), q);
  EXPECT_EQ(apply_permutation(apply_permutation(q, s), s.inverse()), q);
  EXPECT_EQ(apply_permutation(coframed(q), s), mutate_seq(framed(q), {1, 3, 4, 2, 1, 3}));
  EXPECT_EQ(kind_of([&] { apply_permutation(q, Permutation::parse("(1,7)")); }), ErrorKind::unknown_vertex);
}

TEST(Opposite, Basics) {
  auto a = Quiver::from_arrows({1, 2}, {{1, 2, 1}});
  EXPECT_EQ(opposite(a), Quiver::from_arrows({1, 2}, {{2, 1, 1}}));
  EXPECT_EQ(opposite(opposite(k())), k());
  auto q = catalog::half_finite_12();
  EXPECT_EQ(mutate_seq(q, MutationSequence::parse("2,4,6,8,10,12")), opposite(q));
  EXPECT_EQ(mutate_seq(q, MutationSequence::parse("1,3,5,7,9,11")), opposite(q));
}

TEST(Predicates, AbundantAcyclic) {
  EXPECT_FALSE(is_acyclic(k()));
  EXPECT_TRUE(is_abundant(k()));
  EXPECT_TRUE(is_acyclic(k_prime()));
  EXPECT_FALSE(is_abundant(k_prime()));
}
