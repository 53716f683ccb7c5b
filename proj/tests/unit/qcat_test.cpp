#include <gtest/gtest.h>

#include "quantcat/corpus.hpp"
#include "quantcat/error.hpp"
#include "quantcat/qcat.hpp"

using namespace quantcat;

namespace {

Relation hom2(const QuantaloidPtr& q, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& ones) {
  Relation r = identity_relation(q, TypedSet::uniform(n));
  for (auto [x, y] : ones) r.set(x, y, q->top(0, 0));
  return r;
}

}  // namespace

TEST(Category, AllTwoElementCategoriesOverTwo) {
  // Preorders on 0, 1 and 2 labelled points.
  const auto cats = all_categories(builtin_quantaloid("2"), 2);
  std::size_t by_size[3] = {0, 0, 0};
  for (const auto& c : cats) ++by_size[c->size()];
  EXPECT_EQ(by_size[0], 1u);
  EXPECT_EQ(by_size[1], 1u);
  EXPECT_EQ(by_size[2], 4u);
}

TEST(Category, ViolationsAreNamed) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const CategoryCheck c = check_category(hom2(q, 3, {{0, 1}, {1, 2}}));
  ASSERT_FALSE(c.category);
  ASSERT_TRUE(c.violation);
  EXPECT_EQ(c.violation->kind, CategoryViolation::Kind::transitivity);
  Relation bad(q, TypedSet::uniform(1), TypedSet::uniform(1));
  const CategoryCheck d = check_category(bad);
  ASSERT_TRUE(d.violation);
  EXPECT_EQ(d.violation->kind, CategoryViolation::Kind::reflexivity);
  try {
    make_category(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_category);
  }
}

TEST(Functor, FourConditionsAgreeOnEveryMap) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const auto cats = all_categories(q, 2);
  std::size_t maps = 0;
  for (const auto& x : cats) {
    for (const auto& y : cats) {
      for (const TypedMap& m : all_typed_maps(x->carrier(), y->carrier())) {
        const Functor f{x, y, m.image};
        const FunctorConditions c = check_functor_all_conditions(f);
        EXPECT_TRUE(c.agree());
        ++maps;
      }
    }
  }
  EXPECT_GT(maps, 0u);
}

TEST(Functor, FourConditionsAgreeOnChain3AndTwoObjects) {
  for (const char* name : {"chain3", "2obj"}) {
    QuantaloidPtr q = builtin_quantaloid(name);
    const auto cats = all_categories(q, 2);
    for (const auto& x : cats) {
      for (const auto& y : cats) {
        for (const TypedMap& m : all_typed_maps(x->carrier(), y->carrier())) {
          EXPECT_TRUE(check_functor_all_conditions(Functor{x, y, m.image}).agree()) << name;
        }
      }
    }
  }
}

TEST(Functor, StarsAreAdjoint) {
  const Corpus corpus = category_corpus(builtin_quantaloid("chain3"), 2);
  for (const auto& [key, fs] : corpus.functors) {
    for (const Functor& f : fs) {
      const Distributor lower = lower_star(f);
      const Distributor upper = upper_star(f);
      EXPECT_TRUE(lower.valid());
      EXPECT_TRUE(upper.valid());
      EXPECT_TRUE(leq(identity_distributor(f.dom), compose(upper, lower)));
      EXPECT_TRUE(leq(compose(lower, upper), identity_distributor(f.cod)));
    }
  }
}

TEST(Functor, FullFidelity) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const CategoryPtr chain = make_category(hom2(q, 2, {{0, 1}}));
  const CategoryPtr disc = discrete_category(q, TypedSet::uniform(2));
  EXPECT_TRUE(is_fully_faithful(identity_functor(chain)));
  EXPECT_FALSE(is_fully_faithful(make_functor(disc, chain, {0, 1})));
  EXPECT_THROW(make_functor(chain, disc, {0, 1}), Error);
}

TEST(Distributor, ValidityAndClosure) {
  const Corpus corpus = category_corpus(builtin_quantaloid("2"), 2);
  for (const auto& [key, ds] : corpus.distributors) {
    for (const Distributor& d : ds) {
      EXPECT_TRUE(d.valid());
      const Distributor c = distributor_closure(d.dom(), d.cod(), d.rel());
      EXPECT_TRUE(same_distributor(c, d));
    }
  }
  QuantaloidPtr q = builtin_quantaloid("2");
  const CategoryPtr chain = make_category(hom2(q, 2, {{0, 1}}));
  Relation r(q, chain->carrier(), chain->carrier());
  r.set(1, 1, q->top(0, 0));
  // b . r . a adds (0, 1), so r alone is not a distributor.
  EXPECT_THROW(make_distributor(chain, chain, r), Error);
}

TEST(Distributor, CompositionWithIdentity) {
  const Corpus corpus = category_corpus(builtin_quantaloid("lukasiewicz3"), 2);
  for (const auto& [key, ds] : corpus.distributors) {
    for (const Distributor& d : ds) {
      EXPECT_TRUE(same_distributor(compose(identity_distributor(d.cod()), d), d));
      EXPECT_TRUE(same_distributor(compose(d, identity_distributor(d.dom())), d));
    }
  }
}
