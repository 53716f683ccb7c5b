#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "quantcat/cli.hpp"
#include "quantcat/report.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = quantcat::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string fixtures = QUANTCAT_FIXTURES;

}  // namespace

TEST(Cli, HausdorffOnMetric3) {
  const CliRun r = run({"hausdorff", "--space", fixtures + "/metric3.json", "--from", "0,1", "--to", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("forward   3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("backward  2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("symmetric 3"), std::string::npos) << r.out;
  const CliRun j = run({"hausdorff", "--space", fixtures + "/metric3.json", "--from", "0,1", "--to", "3", "--format",
                     "json"});
  EXPECT_EQ(quantcat::Json::parse(j.out)["backward"], "2");
}

TEST(Cli, VerifyMonadPasses) {
  const CliRun r = run({"verify-monad", "--monad", "P", "--quantaloid", "builtin:2", "--max-carrier", "2"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, MalformedLatticeExitsTwo) {
  const CliRun r = run({"check-quantaloid", "--quantaloid", fixtures + "/bad_lattice.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing reflexive pair"), std::string::npos) << r.err;
}

TEST(Cli, FailingCheckExitsOne) {
  const CliRun r = run({"check-category", fixtures + "/not_transitive.json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("transitivity"), std::string::npos) << r.out;
  const CliRun top = run({"verify-laxext", "--monad", "P", "--ext", "largest"});
  EXPECT_EQ(top.code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"verify-monad", "--max-carrier", "0", "--max-enum", "0"}).code, 2);
  EXPECT_EQ(run({"verify-monad", "--monad", "Q"}).code, 2);
  EXPECT_EQ(run({"hausdorff", "--space", fixtures + "/metric3.json", "--from", "7", "--to", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, NotCompletelyDistributiveExitsTwo) {
  const CliRun r = run({"verify-monad", "--monad", "HdaggerH", "--quantaloid", fixtures + "/m3_quantaloid.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotCompletelyDistributive"), std::string::npos) << r.err;
}

TEST(Cli, JsonReportsAreByteIdentical) {
  const std::vector<std::string> args{"verify-laxext", "--monad", "H", "--format", "json"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ReportFileMatchesStdout) {
  const std::string path = testing::TempDir() + "quantcat_report.json";
  const CliRun r = run({"check-quantaloid", "--quantaloid", "chain3", "--format", "json", "--report", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  EXPECT_EQ(file.str(), r.out);
  std::remove(path.c_str());
}

TEST(Cli, PresheafListing) {
  const std::string path = testing::TempDir() + "quantcat_chain.json";
  {
    std::ofstream f(path);
    f << R"({"carrier": ["a", "b"], "hom": {"entries": [["a","a","1"],["b","b","1"],["a","b","1"]]}})";
  }
  const CliRun r = run({"presheaf", "--category", path, "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(quantcat::Json::parse(r.out)["size"], 3);
  const CliRun l = run({"presheaf", "--category", path, "--list", "--copresheaf"});
  EXPECT_EQ(l.code, 0) << l.err;
  std::remove(path.c_str());
}

TEST(Cli, DiscretizeReportsPairing) {
  const CliRun r = run({"discretize", "--monad", "HdaggerH", "--format", "json"});
  const auto j = quantcat::Json::parse(r.out);
  bool found = false;
  for (const auto& c : j["checks"]) {
    if (c["name"] == "pairs with exactly one printed formula") {
      found = true;
      EXPECT_EQ(c["verdict"], "PASS");
      EXPECT_EQ(c["note"], "upset:all-targets");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, LiftAndCoreflection) {
  EXPECT_EQ(run({"lift", "--discrete", "identity", "--ext", "collapse", "--quantaloid", "lawvere"}).code, 0);
  EXPECT_EQ(run({"check-discrete", "--monad", "identity", "--ext", "collapse", "--quantaloid", "lawvere", "--flat"}).code,
            0);
  EXPECT_EQ(run({"coreflection", "--monad", "identity"}).code, 0);
}
