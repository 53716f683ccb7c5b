#include <gtest/gtest.h>

#include "quantcat/corpus.hpp"
#include "quantcat/error.hpp"
#include "quantcat/hausdorff.hpp"
#include "quantcat/laxext.hpp"

using namespace quantcat;

namespace {

const Corpus& two_corpus() {
  static const Corpus corpus = category_corpus(builtin_quantaloid("2"), 2);
  return corpus;
}

}  // namespace

TEST(Minimal, EqualsClosedFormsOverTwo) {
  const EnrichedMonadPtr p = monad_by_name("P");
  const EnrichedMonadPtr pd = monad_by_name("Pdagger");
  std::size_t cases = 0;
  for (const auto& [key, ds] : two_corpus().distributors) {
    for (const Distributor& phi : ds) {
      EXPECT_TRUE(same_distributor(minimal_extension(*p, phi), presheaf_closed_form(phi)));
      EXPECT_TRUE(same_distributor(minimal_extension(*pd, phi), copresheaf_closed_form(phi)));
      ++cases;
    }
  }
  EXPECT_GT(cases, 0u);
}

TEST(Minimal, EqualsHausdorffClosedFormsOverChain3) {
  const Corpus corpus = category_corpus(builtin_quantaloid("chain3"), 2);
  const EnrichedMonadPtr h = monad_by_name("H");
  const EnrichedMonadPtr hd = monad_by_name("Hdagger");
  for (const auto& [key, ds] : corpus.distributors) {
    for (const Distributor& phi : ds) {
      EXPECT_TRUE(same_distributor(minimal_extension(*h, phi), hausdorff_extension(phi)));
      EXPECT_TRUE(same_distributor(minimal_extension(*hd, phi), co_hausdorff_extension(phi)));
    }
  }
}

class ClosedForm : public ::testing::TestWithParam<std::string> {};

TEST_P(ClosedForm, PassesLaxSuiteOverTwo) {
  const Report r = check_enriched_lax_extension(*closed_form_extension(GetParam()), two_corpus());
  EXPECT_TRUE(r.passed()) << to_table(r);
}

TEST_P(ClosedForm, FlatnessMatchesYonedaFullFidelity) {
  const LaxExtensionPtr e = closed_form_extension(GetParam());
  const Report lax = check_enriched_lax_extension(*e, two_corpus());
  const Report yon = check_yoneda_full_fidelity(*e->monad(), two_corpus());
  EXPECT_EQ(lax.find("flatness")->verdict, yon.checks.front().verdict);
}

INSTANTIATE_TEST_SUITE_P(Registry, ClosedForm, ::testing::Values("identity", "P", "Pdagger", "H", "Hdagger"));

TEST(ClosedForm, DoublesNeedDistributivity) {
  const LaxExtensionPtr e = closed_form_extension("HHdagger");
  QuantaloidPtr q = builtin_quantaloid("m3arrow");
  const CategoryPtr x = discrete_category(q, TypedSet(std::vector<ObjectId>{0, 1}));
  try {
    e->extend(identity_distributor(x));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::not_completely_distributive);
  }
}

TEST(ClosedForm, HausdorffOverLawvereFixtures) {
  const Corpus corpus = make_corpus(lawvere_quantale(), lawvere_fixtures());
  const Report r = check_enriched_lax_extension(*closed_form_extension("H"), corpus);
  EXPECT_TRUE(r.passed()) << to_table(r);
}

TEST(Largest, FailsFlatnessWithWitness) {
  const LaxExtensionPtr top = largest_extension(monad_by_name("P"));
  const Report r = check_enriched_lax_extension(*top, two_corpus());
  const CheckResult* flat = r.find("flatness");
  ASSERT_NE(flat, nullptr);
  EXPECT_EQ(flat->verdict, Verdict::fail);
  EXPECT_TRUE(flat->witness.is_object());
  EXPECT_FALSE(flat->witness.empty());
  for (const char* law : {"monotonicity", "lax functoriality", "lax identity"}) {
    ASSERT_NE(r.find(law), nullptr) << law;
    EXPECT_EQ(r.find(law)->verdict, Verdict::pass) << law;
  }
}

TEST(Largest, UniquenessProbeRefusesNonFlatCandidate) {
  const Report r = flat_uniqueness_probe(*largest_extension(monad_by_name("P")), two_corpus());
  const CheckResult* agree = r.find("agrees with the minimal extension");
  ASSERT_NE(agree, nullptr);
  EXPECT_EQ(agree->verdict, Verdict::skipped);
}

TEST(Minimal, IsLeastAmongRegistered) {
  const EnrichedMonadPtr p = monad_by_name("P");
  const Report r = least_extension_check(*minimal_extension(p), {closed_form_extension("P"), largest_extension(p)},
                                         two_corpus());
  EXPECT_TRUE(r.passed()) << to_table(r);
}

TEST(Minimal, FlatCandidateAgrees) {
  const Report r = flat_uniqueness_probe(*closed_form_extension("H"), two_corpus());
  EXPECT_TRUE(r.passed()) << to_table(r);
}

TEST(Morphism, HausdorffInclusion) {
  const MonadMorphism incl = hausdorff_inclusion();
  const Report r = check_monad_morphism(incl, two_corpus());
  EXPECT_TRUE(r.passed()) << to_table(r);
  const LaxExtensionPtr init = initial_extension(incl, closed_form_extension("P"));
  const Report lax = check_enriched_lax_extension(*init, two_corpus());
  EXPECT_TRUE(lax.passed()) << to_table(lax);
  // Over 2 every presheaf is conical, so the initial extension is H-bar.
  for (const auto& [key, ds] : two_corpus().distributors) {
    for (const Distributor& phi : ds) EXPECT_TRUE(same_distributor(init->extend(phi), hausdorff_extension(phi)));
  }
}

TEST(Morphism, MismatchedMonadsAreRejected) {
  EXPECT_THROW(initial_extension(hausdorff_inclusion(), closed_form_extension("Pdagger")), Error);
}

TEST(Meet, OfMinimalAndLargestIsMinimal) {
  const EnrichedMonadPtr p = monad_by_name("P");
  const LaxExtensionPtr m = meet_extension(closed_form_extension("P"), largest_extension(p));
  for (const auto& [key, ds] : two_corpus().distributors) {
    for (const Distributor& phi : ds) EXPECT_TRUE(same_distributor(m->extend(phi), presheaf_closed_form(phi)));
  }
}
