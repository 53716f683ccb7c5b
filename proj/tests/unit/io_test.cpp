#include <gtest/gtest.h>

#include "quantcat/error.hpp"
#include "quantcat/io.hpp"

using namespace quantcat;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Io, MalformedJsonReportsPosition) {
  const std::string m = message_of([] { parse_json("{\n  \"a\": [1,\n}", "input.json"); });
  EXPECT_NE(m.find("input.json:3:"), std::string::npos) << m;
}

TEST(Io, MalformedLatticeNamesTheMissingPair) {
  const std::string m = message_of([] { parse_quantaloid(read_json_file(QUANTCAT_FIXTURES "/bad_lattice.json")); });
  EXPECT_NE(m.find("missing reflexive pair"), std::string::npos) << m;
}

TEST(Io, QuantaloidFromFileMatchesBuiltin) {
  QuantaloidPtr q = load_quantaloid(QUANTCAT_FIXTURES "/m3_quantaloid.json");
  EXPECT_EQ(q->object_count(), 2u);
  EXPECT_FALSE(q->is_completely_distributive());
  EXPECT_TRUE(verify_quantaloid(*q).passed());
  EXPECT_EQ(load_quantaloid("builtin:chain3")->name(), "chain3");
  EXPECT_EQ(load_quantaloid("lawvere")->name(), "lawvere");
  EXPECT_THROW(load_quantaloid("/no/such/file.json"), Error);
}

TEST(Io, CategoryRoundTrip) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const Json j = Json::parse(R"({"carrier": ["a", "b"], "hom": {"entries": [["a","a","1"],["b","b","1"],["a","b","1"]]}})");
  const CategoryPtr x = parse_category(q, j);
  ASSERT_EQ(x->size(), 2u);
  EXPECT_EQ((*x)(0, 1), q->top(0, 0));
  EXPECT_EQ((*x)(1, 0), q->bottom(0, 0));
  EXPECT_TRUE(same_category(parse_category(q, category_json(*x)), x));
}

TEST(Io, CategoryErrorsNameTheField) {
  QuantaloidPtr q = builtin_quantaloid("2");
  const std::string m = message_of([&] {
    parse_category(q, Json::parse(R"({"carrier": ["a"], "hom": {"entries": [["a","z","1"]]}})"));
  });
  EXPECT_NE(m.find("z"), std::string::npos) << m;
  const std::string v = message_of([&] {
    parse_category(q, Json::parse(R"({"carrier": ["a"], "hom": {"entries": [["a","a","2"]]}})"));
  });
  EXPECT_FALSE(v.empty());
}

TEST(Io, SpacesFromPointsAndMatrices) {
  const CategoryPtr line = parse_space(Json::parse(R"({"points": [0, "1/2", 3]})"));
  const auto l = lawvere_quantale();
  EXPECT_EQ(l->number((*line)(0, 2)), ExtRational(3));
  EXPECT_EQ(l->number((*line)(1, 0)), ExtRational::parse("1/2"));
  const CategoryPtr m = parse_space(Json::parse(R"({"distances": [["0","inf"],["1","0"]], "names": ["p","q"]})"));
  EXPECT_TRUE(l->number((*m)(0, 1)).is_infinite());
  EXPECT_EQ(parse_spaces(Json::parse(R"({"spaces": [{"points": [0]}, {"points": [1, 2]}]})")).size(), 2u);
  // Triangle inequality fails.
  EXPECT_THROW(parse_space(Json::parse(R"({"distances": [["0","1","5"],["1","0","1"],["5","1","0"]]})")), Error);
}
