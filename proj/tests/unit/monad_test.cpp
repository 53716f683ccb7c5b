#include <gtest/gtest.h>

#include "quantcat/corpus.hpp"
#include "quantcat/error.hpp"
#include "quantcat/hausdorff.hpp"
#include "quantcat/monad.hpp"

using namespace quantcat;

namespace {

void expect_pass(const Report& r) {
  EXPECT_TRUE(r.passed()) << to_table(r);
  for (const char* law : {"left unit", "right unit", "associativity"}) {
    const CheckResult* c = r.find(law);
    ASSERT_NE(c, nullptr) << law;
    EXPECT_EQ(c->verdict, Verdict::pass) << law;
  }
}

}  // namespace

class OneLayerMonad : public ::testing::TestWithParam<std::string> {};

TEST_P(OneLayerMonad, LawsOverTwo) {
  const Corpus corpus = category_corpus(builtin_quantaloid("2"), 2);
  expect_pass(check_enriched_monad(*monad_by_name(GetParam()), corpus));
}

TEST_P(OneLayerMonad, LawsOverChain3) {
  const Corpus corpus = category_corpus(builtin_quantaloid("chain3"), 2);
  expect_pass(check_enriched_monad(*monad_by_name(GetParam()), corpus));
}

TEST_P(OneLayerMonad, LawsOverTwoObjects) {
  const Corpus corpus = category_corpus(builtin_quantaloid("2obj"), 1);
  expect_pass(check_enriched_monad(*monad_by_name(GetParam()), corpus));
}

INSTANTIATE_TEST_SUITE_P(Doctrines, OneLayerMonad, ::testing::Values("identity", "P", "Pdagger", "H", "Hdagger"));

TEST(DoubleMonad, LawsAndConicalityOverTwo) {
  const Corpus corpus = category_corpus(builtin_quantaloid("2"), 1);
  for (const char* name : {"HHdagger", "HdaggerH", "PPdagger", "PdaggerP"}) {
    const Report r = check_enriched_monad(*monad_by_name(name), corpus);
    expect_pass(r);
    if (name[0] == 'H') {
      const CheckResult* c = r.find("multiplication conicality");
      ASSERT_NE(c, nullptr);
      EXPECT_EQ(c->verdict, Verdict::pass) << name;
    }
  }
}

TEST(DoubleMonad, RefusesNonDistributiveQuantaloid) {
  QuantaloidPtr q = builtin_quantaloid("m3arrow");
  const CategoryPtr x = discrete_category(q, TypedSet(std::vector<ObjectId>{0, 1}));
  for (const char* name : {"HHdagger", "HdaggerH"}) {
    try {
      monad_by_name(name)->apply(x);
      FAIL() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::not_completely_distributive);
    }
  }
  // The single-layer doctrines do not need distributivity.
  EXPECT_NO_THROW(hausdorff_monad()->apply(x));
}

TEST(Monad, UnitIsYoneda) {
  for (const auto& x : all_categories(builtin_quantaloid("chain3"), 2)) {
    const Functor e = monad_by_name("P")->unit(x);
    EXPECT_TRUE(same_functor(e, yoneda(x)));
  }
}

TEST(Monad, MultiplicationOfSingletonLayerIsActionOfUnit) {
  const auto t = std::dynamic_pointer_cast<const DoctrineMonad>(monad_by_name("P"));
  ASSERT_TRUE(t);
  for (const auto& x : all_categories(builtin_quantaloid("2"), 2)) {
    EXPECT_TRUE(same_functor(t->mult_generator(x), t->unit(x)));
  }
}

TEST(Monad, UnknownNameIsRejected) {
  EXPECT_THROW(monad_by_name("Q"), Error);
  EXPECT_EQ(monad_names().size(), 9u);
}

TEST(Monad, HausdorffOverLawvereFixtures) {
  Corpus corpus = make_corpus(lawvere_quantale(), lawvere_fixtures());
  const Report r = check_enriched_monad(*hausdorff_monad(), corpus);
  EXPECT_TRUE(r.passed()) << to_table(r);
}
