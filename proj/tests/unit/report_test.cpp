#include <gtest/gtest.h>

#include "quantcat/corpus.hpp"
#include "quantcat/laxext.hpp"
#include "quantcat/report.hpp"

using namespace quantcat;

TEST(Report, EmptyReportIsValidJson) {
  const Report r;
  EXPECT_EQ(Json::parse(to_json(r)), Json::parse(R"({"checks":[]})"));
  EXPECT_TRUE(r.passed());
}

TEST(Report, FailureCarriesWitness) {
  Report r;
  Check c("law");
  c.record(true, nullptr);
  c.record(false, [] { return Json{{"x", 1}}; });
  c.record(false, [] { return Json{{"x", 2}}; });
  r.add(c.finish());
  const Json j = Json::parse(to_json(r));
  EXPECT_EQ(j["checks"][0]["verdict"], "FAIL");
  EXPECT_EQ(j["checks"][0]["witness"]["x"], 1);
  EXPECT_EQ(j["checks"][0]["failures"], 2);
  EXPECT_FALSE(r.passed());
}

TEST(Report, SampledChecksAreLabelled) {
  Report r;
  Check c("law", true);
  c.record(true, nullptr);
  r.add(c.finish());
  EXPECT_EQ(Json::parse(to_json(r))["checks"][0]["sampled"], true);
  EXPECT_NE(to_table(r).find("sampled"), std::string::npos);
}

TEST(Report, CheckWithoutCasesIsSkipped) {
  Check c("law");
  EXPECT_EQ(c.finish().verdict, Verdict::skipped);
}

TEST(Report, TimingsStayOutOfJson) {
  Report r;
  r.timings.emplace_back("section", 1.5);
  EXPECT_EQ(to_json(r).find("section"), std::string::npos);
  EXPECT_NE(to_table(r).find("section"), std::string::npos);
}

TEST(Report, SuitesAreDeterministic) {
  const auto run = [] {
    const Corpus corpus = category_corpus(builtin_quantaloid("2"), 2);
    return to_json(check_enriched_lax_extension(*closed_form_extension("H"), corpus));
  };
  EXPECT_EQ(run(), run());
}
