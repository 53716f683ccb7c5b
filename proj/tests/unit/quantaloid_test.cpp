#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "quantcat/error.hpp"
#include "quantcat/quantaloid.hpp"

using namespace quantcat;

class EnumerableQuantaloid : public ::testing::TestWithParam<std::string> {};

TEST_P(EnumerableQuantaloid, AxiomsHoldExhaustively) {
  QuantaloidPtr q = builtin_quantaloid(GetParam());
  const Report r = verify_quantaloid(*q);
  EXPECT_TRUE(r.passed()) << to_table(r);
  for (const auto& c : r.checks) EXPECT_FALSE(c.sampled) << c.name;
}

TEST_P(EnumerableQuantaloid, ResidualsMatchBruteForce) {
  QuantaloidPtr q = builtin_quantaloid(GetParam());
  const auto n = static_cast<ObjectId>(q->object_count());
  for (ObjectId p = 0; p < n; ++p) {
    for (ObjectId m = 0; m < n; ++m) {
      for (ObjectId r = 0; r < n; ++r) {
        for (Value gamma : q->elements(p, r)) {
          for (Value alpha : q->elements(p, m)) {
            EXPECT_EQ(q->left_residual(p, m, r, gamma, alpha), oracle::left_residual(*q, p, m, r, gamma, alpha));
          }
          for (Value beta : q->elements(m, r)) {
            EXPECT_EQ(q->right_residual(p, m, r, beta, gamma), oracle::right_residual(*q, p, m, r, beta, gamma));
          }
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Builtins, EnumerableQuantaloid,
                         ::testing::Values("2", "chain3", "lukasiewicz3", "m3arrow", "2obj"));

TEST(Lawvere, SampledAxiomsPass) {
  VerifyOptions options;
  options.samples = 1000;
  const Report r = verify_quantaloid(*lawvere_quantale(), options);
  EXPECT_TRUE(r.passed()) << to_table(r);
  bool any_sampled = false;
  for (const auto& c : r.checks) any_sampled = any_sampled || c.sampled;
  EXPECT_TRUE(any_sampled);
}

TEST(Lawvere, OrderIsReversedAndCompositionIsAddition) {
  const auto l = lawvere_quantale();
  const Value two = l->value(ExtRational(2));
  const Value three = l->value(ExtRational(3));
  const Value inf = l->value(ExtRational::infinity());
  EXPECT_TRUE(l->leq(0, 0, three, two));
  EXPECT_FALSE(l->leq(0, 0, two, three));
  EXPECT_EQ(l->join(0, 0, two, three), two);
  EXPECT_EQ(l->meet(0, 0, two, three), three);
  EXPECT_EQ(l->number(l->compose(0, 0, 0, two, three)), ExtRational(5));
  EXPECT_EQ(l->bottom(0, 0), inf);
  EXPECT_EQ(l->top(0, 0), l->unit(0));
}

TEST(Lawvere, ResidualIsTruncatedSubtraction) {
  const auto l = lawvere_quantale();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const ExtRational g(Rational(static_cast<long long>(rng() % 40), 1 + static_cast<long long>(rng() % 4)));
    const ExtRational a(Rational(static_cast<long long>(rng() % 40), 1 + static_cast<long long>(rng() % 4)));
    const Value r = l->left_residual(0, 0, 0, l->value(g), l->value(a));
    EXPECT_EQ(l->number(r), g.truncated_minus(a));
    EXPECT_EQ(l->right_residual(0, 0, 0, l->value(a), l->value(g)), r);
  }
  const Value inf = l->value(ExtRational::infinity());
  const Value one = l->value(ExtRational(1));
  EXPECT_EQ(l->left_residual(0, 0, 0, inf, one), inf);
  EXPECT_EQ(l->number(l->left_residual(0, 0, 0, one, inf)), ExtRational(0));
  EXPECT_EQ(l->number(l->left_residual(0, 0, 0, inf, inf)), ExtRational(0));
}

TEST(Lawvere, ValuesAreExactRationals) {
  const auto l = lawvere_quantale();
  const Value a = l->parse(0, 0, "1/3");
  const Value b = l->parse(0, 0, "2/3");
  EXPECT_EQ(l->format(0, 0, l->compose(0, 0, 0, a, b)), "1");
  EXPECT_EQ(l->format(0, 0, l->parse(0, 0, "1.25")), "5/4");
  EXPECT_THROW(l->parse(0, 0, "-1"), Error);
}

TEST(Distributivity, M3HomIsReported) {
  const auto failure = builtin_quantaloid("m3arrow")->distributivity_failure();
  ASSERT_TRUE(failure.has_value());
  EXPECT_FALSE(builtin_quantaloid("2")->distributivity_failure().has_value());
  EXPECT_TRUE(lawvere_quantale()->is_completely_distributive());
}

TEST(Quantale, InvalidTensorIsRejected) {
  // Meet on M3 does not preserve joins.
  FiniteLattice m3 = FiniteLattice::diamond_m3();
  std::vector<ElementId> tensor(m3.size() * m3.size());
  for (ElementId b = 0; b < m3.size(); ++b) {
    for (ElementId a = 0; a < m3.size(); ++a) tensor[b * m3.size() + a] = m3.meet(b, a);
  }
  try {
    one_object_wrap(UnitalQuantale{"m3meet", m3, tensor, m3.top()});
    FAIL() << "expected InvalidQuantaloid";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_quantaloid);
  }
}
