#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "quantcat/corpus.hpp"
#include "quantcat/error.hpp"
#include "quantcat/presheaf.hpp"

using namespace quantcat;

namespace {

std::vector<Table> sorted(std::vector<Table> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Copresheaves on X are presheaves on the opposite category.
CategoryPtr opposite(const Category& x) {
  Relation r(x.quantaloid_ptr(), x.carrier(), x.carrier());
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) r.set(a, b, x(b, a));
  }
  return make_category(r);
}

}  // namespace

class PresheafEnumeration : public ::testing::TestWithParam<std::string> {};

TEST_P(PresheafEnumeration, MatchesNaiveFilter) {
  QuantaloidPtr q = builtin_quantaloid(GetParam());
  for (const auto& x : all_categories(q, 2)) {
    for (ObjectId s = 0; s < q->object_count(); ++s) {
      EXPECT_EQ(sorted(enumerate_presheaves(*x, s)), sorted(oracle::naive_presheaves(*x, s)));
      if (q->object_count() == 1) {
        EXPECT_EQ(sorted(enumerate_copresheaves(*x, s)), sorted(oracle::naive_presheaves(*opposite(*x), s)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Builtins, PresheafEnumeration, ::testing::Values("2", "chain3", "lukasiewicz3", "2obj"));

TEST(Presheaf, PredicatesAgreeWithEnumeration) {
  QuantaloidPtr q = builtin_quantaloid("chain3");
  for (const auto& x : all_categories(q, 2)) {
    for (const Table& t : enumerate_presheaves(*x, 0)) EXPECT_TRUE(is_presheaf(*x, 0, t));
    for (const Table& t : enumerate_copresheaves(*x, 0)) EXPECT_TRUE(is_copresheaf(*x, 0, t));
  }
}

TEST(Presheaf, YonedaIsFullyFaithful) {
  for (const char* name : {"2", "chain3", "2obj"}) {
    for (const auto& x : all_categories(builtin_quantaloid(name), 2)) {
      EXPECT_TRUE(is_fully_faithful(yoneda(x))) << name;
      EXPECT_TRUE(is_fully_faithful(co_yoneda(x))) << name;
    }
  }
}

TEST(Presheaf, YonedaLemma) {
  // PX(a(-, x), sigma) = sigma(x).
  QuantaloidPtr q = builtin_quantaloid("lukasiewicz3");
  for (const auto& x : all_categories(q, 2)) {
    for (const Table& sigma : enumerate_presheaves(*x, 0)) {
      for (std::size_t e = 0; e < x->size(); ++e) {
        Table rep(x->size());
        for (std::size_t i = 0; i < x->size(); ++i) rep[i] = (*x)(i, e);
        EXPECT_EQ(presheaf_hom(*x, 0, rep, 0, sigma), sigma[e]);
      }
    }
  }
}

TEST(Presheaf, SpaceHomMatchesResidualFormula) {
  QuantaloidPtr q = builtin_quantaloid("chain3");
  for (const auto& x : all_categories(q, 2)) {
    const CategoryPtr px = presheaf_category(x);
    const SpaceInfo& info = space_info(*px);
    for (std::size_t a = 0; a < px->size(); ++a) {
      for (std::size_t b = 0; b < px->size(); ++b) {
        Value expect = q->top(0, 0);
        for (std::size_t i = 0; i < x->size(); ++i) {
          expect = q->meet(0, 0, expect, q->left_residual(0, 0, 0, info.tables[b][i], info.tables[a][i]));
        }
        EXPECT_EQ((*px)(a, b), expect);
      }
    }
  }
}

TEST(Presheaf, ConicalSpaceIsJoinsOfRepresentables) {
  QuantaloidPtr q = builtin_quantaloid("2");
  for (const auto& x : all_categories(q, 2)) {
    const CategoryPtr hx = space_category(x, Variance::presheaf, true);
    const SpaceInfo& info = space_info(*hx);
    for (std::size_t e = 0; e < hx->size(); ++e) {
      const auto gens = conicality_certificate(*x, Variance::presheaf, hx->type(e), info.tables[e]);
      ASSERT_TRUE(gens.has_value());
      EXPECT_EQ(representable_join(*x, Variance::presheaf, hx->type(e), *gens), info.tables[e]);
    }
    // Over 2, every presheaf is a join of representables.
    EXPECT_EQ(hx->size(), presheaf_category(x)->size());
  }
}

TEST(Presheaf, LawvereSpacesAreRefused) {
  const auto x = line_category({Rational(0), Rational(1)});
  try {
    enumerate_presheaves(*x, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::enumeration_unsupported);
  }
}

TEST(Presheaf, EnumerationCapIsEnforced) {
  QuantaloidPtr q = builtin_quantaloid("chain3");
  Limits tiny;
  tiny.max_enum = 4;
  try {
    enumerate_presheaves(*discrete_category(q, TypedSet::uniform(3)), 0, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::enumeration_too_large);
  }
}

TEST(Presheaf, ActionsComposeTables) {
  const Corpus corpus = category_corpus(builtin_quantaloid("2"), 2);
  for (const auto& [key, ds] : corpus.distributors) {
    for (const Distributor& phi : ds) {
      const CategoryPtr px = presheaf_category(phi.dom());
      const CategoryPtr py = presheaf_category(phi.cod());
      const Functor act = presheaf_action(phi, py, px);
      EXPECT_TRUE(is_functor(act));
      const SpaceInfo& iy = space_info(*py);
      const SpaceInfo& ix = space_info(*px);
      for (std::size_t e = 0; e < py->size(); ++e) {
        EXPECT_EQ(ix.tables[act(e)], presheaf_compose(iy.tables[e], py->type(e), phi));
      }
    }
  }
}
