#include <gtest/gtest.h>

#include "quantcat/discrete.hpp"
#include "quantcat/error.hpp"

using namespace quantcat;

namespace {

DiscreteCheckOptions flat_required() {
  DiscreteCheckOptions o;
  o.require_flat = true;
  return o;
}

}  // namespace

TEST(DiscreteMonad, PowersetAndUpsetLaws) {
  const DiscreteCorpus corpus = make_discrete_corpus(builtin_quantaloid("2"));
  for (const DiscreteMonadPtr& t : {discrete_identity_monad(), powerset_monad(), upset_monad()}) {
    const Report r = check_discrete_monad(*t, corpus);
    EXPECT_TRUE(r.passed()) << t->name() << "\n" << to_table(r);
  }
}

TEST(DiscreteMonad, UpsetCarrierSizes) {
  const DiscreteMonadPtr u = upset_monad();
  // Up-sets of the powerset of a 0-, 1- and 2-element set.
  EXPECT_EQ(u->apply(TypedSet::uniform(0)).size(), 2u);
  EXPECT_EQ(u->apply(TypedSet::uniform(1)).size(), 3u);
  EXPECT_EQ(u->apply(TypedSet::uniform(2)).size(), 6u);
  EXPECT_THROW(u->apply(TypedSet::uniform(5)), Error);
}

TEST(DiscreteExtension, RegistryPassesLaxSuiteOverTwo) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const DiscreteCorpus corpus = make_discrete_corpus(q);
  for (const auto& e : {identity_extension(q), powerset_kleisli_extension(q), powerset_hat_extension(q),
                        upset_all_sources_extension(q), upset_all_targets_extension(q)}) {
    const Report r = check_discrete_lax_extension(*e, corpus);
    EXPECT_TRUE(r.passed()) << e->name() << "\n" << to_table(r);
  }
}

TEST(DiscreteExtension, KleisliAndHatDiffer) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const DiscreteCorpus corpus = make_discrete_corpus(q);
  const auto w = extension_difference(*powerset_kleisli_extension(q), *powerset_hat_extension(q), corpus);
  ASSERT_TRUE(w.has_value());
}

TEST(DiscreteExtension, KleisliFormula) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const auto e = powerset_kleisli_extension(q);
  // r = {(0, 1)} on 2 x 2; A = {0}, B = {1} gives 1, A = {0, 1} gives 0.
  Relation r(q, TypedSet::uniform(2), TypedSet::uniform(2));
  r.set(0, 1, q->top(0, 0));
  const Relation ext = e->extend(r);
  EXPECT_EQ(ext(0b01, 0b10), q->top(0, 0));
  EXPECT_EQ(ext(0b11, 0b10), q->bottom(0, 0));
  EXPECT_EQ(ext(0b00, 0b00), q->top(0, 0));
}

TEST(DiscreteExtension, PowersetExtensionsAreNotFlat) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const DiscreteCorpus corpus = make_discrete_corpus(q);
  const Report r = check_discrete_lax_extension(*powerset_kleisli_extension(q), corpus, flat_required());
  EXPECT_EQ(r.find("flatness")->verdict, Verdict::fail);
}

TEST(DiscreteExtension, TwoFlatExtensionsOfIdentityOverLawvere) {
  QuantaloidPtr l = lawvere_quantale();
  const DiscreteCorpus corpus = make_discrete_corpus(l);
  const auto id = identity_extension(l);
  const auto collapse = collapse_extension(l);
  for (const auto& e : {id, collapse}) {
    const Report r = check_discrete_lax_extension(*e, corpus, flat_required());
    EXPECT_TRUE(r.passed()) << e->name() << "\n" << to_table(r);
    EXPECT_EQ(r.find("flatness")->verdict, Verdict::pass);
  }
  EXPECT_TRUE(extension_difference(*id, *collapse, corpus).has_value());
}

TEST(DiscreteExtension, CollapseSendsFiniteToZero) {
  const auto l = lawvere_quantale();
  const auto e = collapse_extension(l);
  Relation r(l, TypedSet::uniform(1), TypedSet::uniform(2));
  r.set(0, 0, l->value(ExtRational(7)));
  const Relation ext = e->extend(r);
  EXPECT_EQ(l->number(ext(0, 0)), ExtRational(0));
  EXPECT_TRUE(l->number(ext(0, 1)).is_infinite());
}

TEST(DiscreteCorpus, SizeCap) {
  DiscreteCorpusOptions o;
  o.max_size = 9;
  EXPECT_THROW(make_discrete_corpus(builtin_quantaloid("2"), o), Error);
}
