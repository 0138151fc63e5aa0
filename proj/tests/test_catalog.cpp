#include <gtest/gtest.h>

#include "support.hpp"

using namespace redcycle;
using namespace redcycle::catalog;

namespace {
MutationSequence seq(char const* s) { return MutationSequence::parse(s); }
Permutation perm(char const* s) { return Permutation::parse(s); }
}  // namespace

TEST(Chebyshev, Values) {
  for (Entry a : {2, 3, 7}) EXPECT_EQ(chebyshev_u(0, a), 1);
  EXPECT_EQ(chebyshev_u(-1, 2), 0);
  EXPECT_EQ(chebyshev_u(1, 2), 2);
  EXPECT_EQ(chebyshev_u(2, 2), 3);
  EXPECT_EQ(chebyshev_u(3, 2), 4);
  EXPECT_EQ(chebyshev_u(3, 3), 21);
  EXPECT_THROW(chebyshev_u(-2, 2), Error);
  EXPECT_THROW(chebyshev_u(200, 3), Error);
}

TEST(FordyMarsh, SmallestCase) {
  auto fm = fordy_marsh(2, 2, 2, 1);
  EXPECT_EQ(fm.alpha, 2);
  EXPECT_EQ(fm.beta, 6);
  EXPECT_EQ(fm.gamma, 2);
  EXPECT_EQ(fm.cycle, seq("2,4,1,3"));
  auto r = verify_cycle(fm.quiver, fm.cycle);
  EXPECT_TRUE(r.closes_equal);
  EXPECT_TRUE(r.simple);
}

TEST(FordyMarsh, LengthsAndFourCycles) {
  for (std::int64_t k = 1; k <= 5; ++k) {
    auto fm = fordy_marsh(3, 2, 3, k);
    EXPECT_EQ(fm.cycle.size(), static_cast<std::size_t>(2 * k + 2));
    for (auto const& q : trajectory(fm.quiver, fm.cycle)) EXPECT_TRUE(has_oriented_four_cycle(q));
  }
  EXPECT_THROW(fordy_marsh(1, 2, 2, 1), Error);
}

TEST(FourCycle, Detection) {
  EXPECT_TRUE(has_oriented_four_cycle(oriented_four_cycle()));
  EXPECT_FALSE(has_oriented_four_cycle(quiver_k()));
  EXPECT_FALSE(has_oriented_four_cycle(grid_quiver(1, 4)));
}

TEST(Grid, Sequences) {
  EXPECT_EQ(grid_reddening(3, 3), seq("7,4,1,8,7,5,4,2,1,9,8,7,6,5,4,3,2,1"));
  EXPECT_EQ(grid_reddening(1, 1), seq("1"));
  EXPECT_EQ(grid_reddening(2, 2).size(), 6u);
  EXPECT_TRUE(is_reddening(grid_quiver(2, 2), grid_reddening(2, 2)).has_value());
  EXPECT_THROW(grid_quiver(0, 2), Error);
}

TEST(PuncturedSphere, Sizes) {
  for (std::int64_t k = 4; k <= 7; ++k) {
    auto t = punctured_sphere(k);
    EXPECT_EQ(t.quiver.size(), static_cast<std::size_t>(3 * (k - 2)));
    EXPECT_EQ(is_maximal_green(t.quiver, t.sequence), t.permutation) << k;
  }
  EXPECT_THROW(punctured_sphere(3), Error);
}

TEST(PuncturedSphere, FiveMatchesLabels) {
  auto n = sphere_labels(5);
  EXPECT_EQ(n.v, (std::vector<Label>{1, 2}));
  EXPECT_EQ(n.u, (std::vector<Label>{3, 4}));
  EXPECT_EQ(n.w, (std::vector<Label>{5}));
  EXPECT_EQ(n.s, 6);
  EXPECT_EQ(n.t, 7);
  EXPECT_EQ(n.s_bar, 8);
  EXPECT_EQ(n.t_bar, 9);
  auto t = punctured_sphere(5);
  EXPECT_EQ(t.sequence, seq("5,8,9,3,1,4,2,5,6,7,1,2,9,4,3,8,4,9,2,1"));
  EXPECT_EQ(t.permutation, perm("(3,1,8,6)(7,9)(4,2)"));
}

TEST(DreadedTorus, Variants) {
  for (Entry a = 1; a <= 4; ++a)
    EXPECT_EQ(is_maximal_green(dreaded_torus(a), seq("1,3,4,2,1,3")), perm("(1,4)(2,3)"));
  EXPECT_THROW(dreaded_torus(0), Error);
}

TEST(Transcriptions, VertexCountsAndSymmetry) {
  auto check = [](Quiver const& q, std::size_t n) {
    EXPECT_EQ(q.size(), n);
    auto b = q.matrix();
    EXPECT_EQ(b, b.transposed().negated());
  };
  check(r33(), 9);
  check(r_prime(), 8);
  check(r_double_prime(), 8);
  EXPECT_FALSE(r_double_prime().contains(6));
  check(banff_q(), 6);
  check(half_finite_15(), 15);
  check(half_finite_12(), 12);
  check(triangular_extension(banff_extension_spec()), 14);
  check(triangular_extension(t5_r33_spec()), 18);
  check(triangular_extension(three_tori_spec()), 12);
}

TEST(Transcriptions, BanffCrossArrows) {
  auto spec = banff_extension_spec();
  auto q = triangular_extension(spec);
  std::size_t cross = 0;
  for (auto const& a : q.arrows()) {
    EXPECT_FALSE(spec.h.contains(a.from) && spec.t.contains(a.to));
    if (spec.t.contains(a.from) && spec.h.contains(a.to)) ++cross;
  }
  EXPECT_EQ(cross, 6u);
  EXPECT_TRUE(spec.a.all_nonnegative());
}

TEST(Plabic, Permutations) {
  EXPECT_EQ(is_reddening(r_prime(), seq("5,1,7,4,1,8,7,5,4,2,1,6,5,4,3,2,1,3,5")), perm("(1,3)(4,6)(7,8)"));
  // The computed 3-cycle runs 4 -> 7 -> 9.
  EXPECT_EQ(is_reddening(r_double_prime(), seq("7,4,1,8,7,5,4,1,9,8,7,2,5,4,3,1,7,8,5,3,1,7")),
            perm("(2,5)(3,8)(4,7,9)"));
}

TEST(Plabic, Subquivers) {
  std::vector<Label> no9{1, 2, 3, 4, 5, 6, 7, 8};
  auto iso = find_isomorphism(mutate_seq(r_prime(), {5, 1}), restrict(r33(), no9));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->is_identity());
  EXPECT_THROW(mutate_seq(r_double_prime(), {2, 6}), Error);
  std::vector<Label> no7{1, 2, 3, 4, 5, 6, 8, 9};
  EXPECT_EQ(canonical_form(mutate_seq(r_double_prime(), {7, 4})), canonical_form(restrict(r33(), no7)));
}

TEST(Banff, ConjugatedSequence) {
  auto n = banff_n();
  EXPECT_EQ(n.size(), 34u);
  EXPECT_EQ(is_reddening(banff_q(), n), Permutation{});
}

TEST(Registry, NamesAndLookup) {
  auto names = item_names();
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  for (auto const& n : names) EXPECT_EQ(paper_item(n).name, n);
  try {
    paper_item("nope");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_name);
  }
  EXPECT_THROW((void)paper_item("R33").quiver("missing"), Error);
}

TEST(Registry, SelfChecks) {
  // Three stated values do not reproduce; everything else must pass.
  std::set<std::pair<std::string, std::string>> known{
      {"Rdoubleprime", "Sdoubleprime"}, {"dreaded_tori_3", "cycle"}, {"dreaded_tori_3", "S reddening"}};
  for (auto const& n : item_names()) {
    for (auto const& c : paper_item(n).verify()) {
      if (known.contains({n, c.name})) {
        EXPECT_FALSE(c.ok) << n << ": " << c.name;
      } else {
        EXPECT_TRUE(c.ok) << n << ": " << c.name << " " << c.detail;
      }
    }
  }
}
