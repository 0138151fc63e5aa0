#include <gtest/gtest.h>

#include "properties.hpp"

using namespace redcycle;
using namespace testsupport;

namespace {

void expect_holds(PropertyResult const& r) {
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
  EXPECT_EQ(r.cases, kPropertyCases);
  EXPECT_LT(r.skipped, r.cases / 10);
}

}  // namespace

TEST(Property, MutationInvolution) { expect_holds(prop_mutation_involution(1)); }

TEST(Property, RestrictionCommutes) { expect_holds(prop_restriction_commutes(2)); }

TEST(Property, SignCoherence) { expect_holds(prop_sign_coherence(3)); }

TEST(Property, BlockLaw) { expect_holds(prop_block_law(4)); }

TEST(Property, RedStates) { expect_holds(prop_red_states(5)); }

TEST(Property, Conjugation) { expect_holds(prop_conjugation(6)); }

TEST(Property, ForkClosure) { expect_holds(prop_fork_closure(7)); }

TEST(Property, CanonicalAgreement) { expect_holds(prop_canonical_agreement(8)); }

TEST(Property, ReduceIdempotent) {
  expect_holds(run_property(9, [](std::mt19937_64& rng) -> std::string {
    auto q = random_quiver(rng, pick(rng, 2, 5), 3);
    auto s = random_sequence(rng, q.labels(), pick(rng, 0, 10), false);
    auto r = reduce(s);
    if (!r.is_reduced()) return "not reduced";
    if (reduce(r) != r) return "not idempotent";
    if (mutate_seq(q, r) != mutate_seq(q, s)) return "changes the result";
    return {};
  }));
}

TEST(Property, JsonRoundTrip) {
  expect_holds(run_property(10, [](std::mt19937_64& rng) -> std::string {
    auto q = random_quiver(rng, pick(rng, 1, 6), 20);
    if (uniform(rng, 0, 1) == 1) q = framed(q);
    if (io::parse_quiver(io::print_quiver(q)) != q) return "round trip changed the quiver";
    if (io::quiver_from_json(io::json::parse(io::print_quiver(q))) != q) return "parse differs";
    return {};
  }));
}

TEST(Property, FrameOffsetIsAboveLabels) {
  expect_holds(run_property(11, [](std::mt19937_64& rng) -> std::string {
    auto q = random_quiver(rng, pick(rng, 1, 6), 2);
    auto f = framed(q);
    for (Label v : f.frozen_labels())
      for (Label w : q.labels())
        if (v <= w) return "frozen label below a mutable one";
    return {};
  }));
}
