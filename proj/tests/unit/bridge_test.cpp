#include <gtest/gtest.h>

#include "quantcat/bridge.hpp"
#include "quantcat/corpus.hpp"
#include "quantcat/error.hpp"
#include "quantcat/hausdorff.hpp"

using namespace quantcat;

namespace {

const DiscreteCorpus& discrete_two() {
  static const DiscreteCorpus corpus = [] {
    DiscreteCorpusOptions o;
    o.max_size = 3;
    return make_discrete_corpus(builtin_quantaloid("2"), o);
  }();
  return corpus;
}

const Corpus& two_corpus() {
  static const Corpus corpus = category_corpus(builtin_quantaloid("2"), 2);
  return corpus;
}

}  // namespace

TEST(Gamma, DeltaIsLeftInverse) {
  QuantaloidPtr q = builtin_quantaloid("2");
  for (const auto& e : {powerset_kleisli_extension(q), powerset_hat_extension(q), identity_extension(q)}) {
    const Report r = gamma_delta_identity_check(e, discrete_two());
    EXPECT_TRUE(r.passed()) << e->name() << "\n" << to_table(r);
  }
}

TEST(Gamma, DeltaIsLeftInverseOverLawvere) {
  QuantaloidPtr l = lawvere_quantale();
  const DiscreteCorpus corpus = make_discrete_corpus(l);
  for (const auto& e : {identity_extension(l), collapse_extension(l)}) {
    const Report r = gamma_delta_identity_check(e, corpus);
    EXPECT_TRUE(r.passed()) << e->name() << "\n" << to_table(r);
  }
}

TEST(Gamma, OfPresheafMonadsIsPowerset) {
  QuantaloidPtr q = builtin_quantaloid("2");
  DiscreteCorpusOptions o;
  o.max_size = 2;
  const DiscreteCorpus corpus = make_discrete_corpus(q, o);
  const auto pairs = std::vector<std::pair<const char*, DiscreteLaxExtensionPtr>>{
      {"P", powerset_kleisli_extension(q)},
      {"Pdagger", powerset_hat_extension(q)},
      {"H", powerset_kleisli_extension(q)},
      {"Hdagger", powerset_hat_extension(q)}};
  for (const auto& [name, expected] : pairs) {
    const Report r = compare_discrete(*gamma(closed_form_extension(name), q), *expected, corpus);
    EXPECT_TRUE(r.passed()) << name << "\n" << to_table(r);
  }
}

TEST(Gamma, OfHausdorffOverLawvereIsKleisli) {
  QuantaloidPtr l = lawvere_quantale();
  const DiscreteCorpus corpus = make_discrete_corpus(l);
  const Report r = compare_discrete(*gamma(closed_form_extension("H"), l), *powerset_kleisli_extension(l), corpus);
  EXPECT_TRUE(r.passed()) << to_table(r);
}

TEST(Gamma, DoubleHausdorffPairsWithPrintedUpsetForms) {
  QuantaloidPtr q = builtin_quantaloid("2");
  DiscreteCorpusOptions o;
  o.max_size = 2;
  const DiscreteCorpus corpus = make_discrete_corpus(q, o);
  const auto hhd = gamma(closed_form_extension("HHdagger"), q);
  const auto hdh = gamma(closed_form_extension("HdaggerH"), q);
  EXPECT_TRUE(compare_discrete(*hhd, *upset_all_sources_extension(q), corpus).passed());
  EXPECT_FALSE(compare_discrete(*hhd, *upset_all_targets_extension(q), corpus).passed());
  EXPECT_TRUE(compare_discrete(*hdh, *upset_all_targets_extension(q), corpus).passed());
  EXPECT_FALSE(compare_discrete(*hdh, *upset_all_sources_extension(q), corpus).passed());
}

TEST(Delta, LiftOfKleisliPassesEnrichedSuites) {
  const Lift l = delta(powerset_kleisli_extension(builtin_quantaloid("2")), &discrete_two());
  const Report m = check_enriched_monad(*l.monad, two_corpus());
  EXPECT_TRUE(m.passed()) << to_table(m);
  const Report e = check_enriched_lax_extension(*l.extension, two_corpus());
  EXPECT_TRUE(e.passed()) << to_table(e);
}

TEST(Delta, LiftOfKleisliIsEquivalentToHausdorff) {
  const Lift l = delta(powerset_kleisli_extension(builtin_quantaloid("2")));
  const Report r = compare_lift_with_doctrine(*l.monad, *hausdorff_monad(), two_corpus());
  EXPECT_EQ(r.find("component is a functor")->verdict, Verdict::pass);
  EXPECT_EQ(r.find("component is an equivalence")->verdict, Verdict::pass);
  EXPECT_EQ(r.find("component respects units")->verdict, Verdict::pass);
}

TEST(Delta, LiftOfIdentityIsIdentity) {
  const Lift l = delta(identity_extension(builtin_quantaloid("2")));
  for (const auto& x : two_corpus().categories) EXPECT_TRUE(same_category(l.monad->apply(x), x));
}

TEST(Delta, LiftOfCollapseOverLawvere) {
  const auto l = lawvere_quantale();
  const Lift lift = delta(collapse_extension(l));
  for (const auto& x : lawvere_fixtures()) {
    const CategoryPtr tx = lift.monad->apply(x);
    for (std::size_t i = 0; i < x->size(); ++i) {
      for (std::size_t j = 0; j < x->size(); ++j) {
        const ExtRational d = l->number((*x)(i, j));
        EXPECT_EQ(l->number((*tx)(i, j)), d.is_infinite() ? d : ExtRational(0));
      }
    }
  }
}

TEST(Counit, HausdorffOverTwo) {
  const Report r = counit_iota(closed_form_extension("H"), two_corpus());
  for (const char* name : {"iota is a functor", "iota is fully faithful", "iota is an equivalence",
                           "iota is natural", "iota at discrete categories is the identity",
                           "iota of a lift is the identity"}) {
    ASSERT_NE(r.find(name), nullptr) << name;
    EXPECT_EQ(r.find(name)->verdict, Verdict::pass) << name;
  }
}

TEST(Counit, HausdorffOverSymmetricLawvereFixtures) {
  auto fixtures = lawvere_fixtures();
  fixtures.pop_back();  // the quasi-metric
  const Corpus corpus = make_corpus(lawvere_quantale(), fixtures);
  const Report r = counit_iota(closed_form_extension("H"), corpus);
  EXPECT_TRUE(r.passed()) << to_table(r);
  const Report image = coreflective_image_check(closed_form_extension("H"), corpus);
  EXPECT_TRUE(image.passed()) << to_table(image);
}

TEST(Counit, IdentityMonad) {
  const Report r = counit_iota(closed_form_extension("identity"), two_corpus());
  EXPECT_TRUE(r.passed()) << to_table(r);
}

TEST(Counit, PresheafCarrierChangesOnNonDiscreteCategories) {
  const Report r = coreflective_image_check(closed_form_extension("P"), two_corpus());
  EXPECT_EQ(r.find("carrier agrees with the discrete case")->verdict, Verdict::fail);
  EXPECT_EQ(r.find("hom recovered from discrete data")->verdict, Verdict::pass);
}
