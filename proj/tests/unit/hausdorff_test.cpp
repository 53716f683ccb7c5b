#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "quantcat/corpus.hpp"
#include "quantcat/error.hpp"
#include "quantcat/hausdorff.hpp"

using namespace quantcat;

namespace {

Rational random_point(std::mt19937_64& rng) {
  return Rational(static_cast<long long>(rng() % 2001) - 1000, 1 + static_cast<long long>(rng() % 12));
}

}  // namespace

TEST(Hausdorff, RandomLineSetsMatchDoubleLoop) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 63;
    std::vector<Rational> points;
    while (points.size() < n) {
      const Rational p = random_point(rng);
      if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    const CategoryPtr x = line_category(points);
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 2) a.push_back(i);
      if (rng() % 3 == 0) b.push_back(i);
    }
    std::vector<Rational> pa, pb;
    for (auto i : a) pa.push_back(points[i]);
    for (auto i : b) pb.push_back(points[i]);
    const ExtRational fwd = oracle::directed_hausdorff(pa, pb);
    const ExtRational bwd = oracle::directed_hausdorff(pb, pa);
    const HausdorffDistance d = hausdorff_distance(*x, a, b);
    EXPECT_EQ(d.forward, fwd);
    EXPECT_EQ(d.backward, bwd);
    EXPECT_EQ(d.symmetric, std::max(fwd, bwd));
    EXPECT_EQ(hausdorff_distance_via_presheaves(*x, a, b), fwd);
    EXPECT_EQ(hausdorff_distance_via_presheaves(*x, b, a), bwd);
  }
}

TEST(Hausdorff, MetricThreeExample) {
  const CategoryPtr x = line_category({Rational(0), Rational(1), Rational(3)});
  const std::vector<std::size_t> a{0, 1}, b{2};
  const HausdorffDistance d = hausdorff_distance(*x, a, b);
  EXPECT_EQ(d.forward, ExtRational(3));
  EXPECT_EQ(d.backward, ExtRational(2));
  EXPECT_EQ(d.symmetric, ExtRational(3));
}

TEST(Hausdorff, EmptySetConventions) {
  const CategoryPtr x = line_category({Rational(0), Rational(2)});
  const std::vector<std::size_t> none, all{0, 1};
  EXPECT_EQ(hausdorff_distance(*x, none, all).forward, ExtRational(0));
  EXPECT_TRUE(hausdorff_distance(*x, all, none).forward.is_infinite());
}

TEST(Hausdorff, RequiresLawvere) {
  const CategoryPtr x = discrete_category(builtin_quantaloid("2"), TypedSet::uniform(2));
  const std::vector<std::size_t> a{0};
  EXPECT_THROW(hausdorff_distance(*x, a, a), Error);
}

TEST(Hausdorff, SpaceHomIsMeetOfJoins) {
  QuantaloidPtr q = builtin_quantaloid("chain3");
  for (const auto& x : all_categories(q, 2)) {
    const CategoryPtr hx = hausdorff_category(x);
    const SpaceInfo& info = space_info(*hx);
    for (std::size_t i = 0; i < hx->size(); ++i) {
      for (std::size_t j = 0; j < hx->size(); ++j) {
        EXPECT_EQ((*hx)(i, j), hausdorff_hom(*x, 0, info.generators[i], 0, info.generators[j]));
      }
    }
    const CategoryPtr cx = co_hausdorff_category(x);
    const SpaceInfo& cinfo = space_info(*cx);
    for (std::size_t i = 0; i < cx->size(); ++i) {
      for (std::size_t j = 0; j < cx->size(); ++j) {
        EXPECT_EQ((*cx)(i, j), co_hausdorff_hom(*x, 0, cinfo.generators[i], 0, cinfo.generators[j]));
      }
    }
  }
}

TEST(Hausdorff, ConicalityOverChain3) {
  // Over chain3 a presheaf with a middle value is not a join of representables.
  QuantaloidPtr q = builtin_quantaloid("chain3");
  const CategoryPtr x = discrete_category(q, TypedSet::uniform(1));
  const Table mid{q->parse(0, 0, "1/2")};
  EXPECT_TRUE(is_presheaf(*x, 0, mid));
  EXPECT_FALSE(is_conical(*x, Variance::presheaf, 0, mid));
  EXPECT_LT(hausdorff_category(x)->size(), presheaf_category(x)->size());
}

TEST(Hausdorff, ExtensionIsFlatOnLawvereFixtures) {
  for (const auto& x : lawvere_fixtures()) {
    const CategoryPtr hx = hausdorff_category(x);
    const Distributor ext = hausdorff_extension(identity_distributor(x));
    EXPECT_TRUE(same_distributor(ext, identity_distributor(hx)));
    const Distributor co = co_hausdorff_extension(identity_distributor(x));
    EXPECT_TRUE(same_distributor(co, identity_distributor(co_hausdorff_category(x))));
  }
}
