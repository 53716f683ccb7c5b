#include <gtest/gtest.h>

#include "quantcat/error.hpp"
#include "quantcat/lattice.hpp"

using namespace quantcat;

namespace {

// Least upper bound by scanning every element.
ElementId brute_join(const FiniteLattice& l, ElementId a, ElementId b) {
  std::optional<ElementId> best;
  for (ElementId c = 0; c < l.size(); ++c) {
    if (!l.leq(a, c) || !l.leq(b, c)) continue;
    if (!best || l.leq(c, *best)) best = c;
  }
  return *best;
}

ElementId brute_meet(const FiniteLattice& l, ElementId a, ElementId b) {
  std::optional<ElementId> best;
  for (ElementId c = 0; c < l.size(); ++c) {
    if (!l.leq(c, a) || !l.leq(c, b)) continue;
    if (!best || l.leq(*best, c)) best = c;
  }
  return *best;
}

}  // namespace

TEST(Lattice, JoinAndMeetMatchBruteForce) {
  for (const FiniteLattice& l : {FiniteLattice::chain({"0", "h", "1"}), FiniteLattice::boolean(3),
                                 FiniteLattice::diamond_m3()}) {
    for (ElementId a = 0; a < l.size(); ++a) {
      for (ElementId b = 0; b < l.size(); ++b) {
        EXPECT_EQ(l.join(a, b), brute_join(l, a, b));
        EXPECT_EQ(l.meet(a, b), brute_meet(l, a, b));
      }
    }
  }
}

TEST(Lattice, EmptyJoinIsBottomAndEmptyMeetIsTop) {
  const FiniteLattice l = FiniteLattice::boolean(2);
  EXPECT_EQ(l.join(std::span<const ElementId>{}), l.bottom());
  EXPECT_EQ(l.meet(std::span<const ElementId>{}), l.top());
}

TEST(Lattice, DistributivityWitness) {
  EXPECT_TRUE(FiniteLattice::chain({"0", "1", "2", "3"}).is_completely_distributive());
  EXPECT_TRUE(FiniteLattice::boolean(3).is_completely_distributive());
  const FiniteLattice m3 = FiniteLattice::diamond_m3();
  const auto w = m3.distributivity_witness();
  ASSERT_TRUE(w.has_value());
  const auto [a, b, c] = *w;
  EXPECT_NE(m3.meet(a, m3.join(b, c)), m3.join(m3.meet(a, b), m3.meet(a, c)));
}

TEST(Lattice, MissingReflexivePairIsRejected) {
  try {
    FiniteLattice({"0", "1"}, {{0, 0}, {0, 1}});
    FAIL() << "expected InvalidLattice";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_lattice);
    EXPECT_NE(std::string(e.what()).find("missing reflexive pair"), std::string::npos);
  }
}

TEST(Lattice, NonLatticeOrderIsRejected) {
  // Two incomparable maximal elements: no top.
  EXPECT_THROW(FiniteLattice({"0", "a", "b"}, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}}), Error);
}

TEST(Lattice, UnknownNameThrows) {
  const FiniteLattice l = FiniteLattice::chain({"0", "1"});
  EXPECT_EQ(l.id("1"), 1u);
  EXPECT_FALSE(l.find("x").has_value());
  try {
    l.id("x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_element);
  }
}
