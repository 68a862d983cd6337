#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "qtutte/serialization.hpp"

namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qtutte::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("qtutte_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++) + ".json");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

const std::string kParallelLine = [] {
  auto lat = qtutte::shared_lattice(2, 3);
  return qtutte::matroid_to_json(qtutte::parallel_line(
      lat, lat->span_id(qtutte::GfMatrix{{0, 1, 0}, {0, 0, 1}})));
}();

TEST(Cli, LatticeInfoText) {
  Outcome o = run({"lattice", "info", "--q", "2", "--k", "3", "--format", "text"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("heights: 1 7 7 1"), std::string::npos);
  EXPECT_NE(o.out.find("pass: yes"), std::string::npos);
}

TEST(Cli, LatticeInfoJsonIsDeterministic) {
  Outcome a = run({"lattice", "info", "--q", "3", "--k", "2"});
  Outcome b = run({"lattice", "info", "--q", "3", "--k", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  json j = json::parse(a.out);
  EXPECT_EQ(j["command"], "lattice info");
  EXPECT_EQ(j["result"]["flats"], 6);
  EXPECT_FALSE(j.contains("elapsed_ms"));
  Outcome timed = run({"lattice", "info", "--q", "3", "--k", "2", "--timing"});
  EXPECT_TRUE(json::parse(timed.out).contains("elapsed_ms"));
}

TEST(Cli, TutteFromFile) {
  TempFile in(kParallelLine);
  Outcome o = run({"matroid", "tutte", "--in", in.path()});
  ASSERT_EQ(o.code, 0) << o.err;
  json j = json::parse(o.out);
  EXPECT_EQ(j["summary"], "x^2+x*y+3*x");
  EXPECT_EQ(j["result"]["beta_agrees"], true);
  EXPECT_EQ(j["result"]["round_trip"], true);
}

TEST(Cli, RgfTextRows) {
  TempFile in(kParallelLine);
  Outcome o = run({"matroid", "rgf", "--in", in.path(), "--format", "text"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("rgf: x^2+x*y+7*x+y+6"), std::string::npos);
  EXPECT_NE(o.out.find("  1 1\n"), std::string::npos);
  EXPECT_NE(o.out.find("  6 7 1\n"), std::string::npos);
}

TEST(Cli, SymbolicUniformTutte) {
  Outcome o = run({"matroid", "tutte", "--uniform", "2,3", "--symbolic"});
  ASSERT_EQ(o.code, 0) << o.err;
  json j = json::parse(o.out);
  EXPECT_EQ(j["result"]["tutte"]["coeffs"][0][0], json({-1, 1, 0, -1, 0, 1}));
  EXPECT_EQ(j["result"]["tutte"]["coeffs"][0][3], json({1}));
}

TEST(Cli, NumericUniformMatchesKnownValue) {
  Outcome o = run({"matroid", "tutte", "--uniform", "2,1", "--q", "2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(json::parse(o.out)["summary"], "x^2+4*x+y+1");
}

TEST(Cli, IdentitiesPass) {
  EXPECT_EQ(run({"verify", "identities", "--theorem4", "--n-max", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "kernel", "--a-max", "3", "--b-max", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "nmatrix", "--a-max", "3", "--b-max", "3"}).code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"lattice"}).code, 2);
  EXPECT_EQ(run({"lattice", "info", "--q", "6", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"matroid", "tutte"}).code, 2);
  TempFile in(kParallelLine);
  EXPECT_EQ(run({"matroid", "tutte", "--in", in.path(), "--symbolic"}).code, 2);
  EXPECT_EQ(run({"matroid", "tutte", "--in", "/nonexistent/file.json"}).code, 2);
}

TEST(Cli, InvalidMatroidExitsOne) {
  TempFile in(R"({"q": 2, "k": 1, "ranks": [0, 2]})");
  Outcome o = run({"matroid", "validate", "--in", in.path()});
  EXPECT_EQ(o.code, 1);
  json j = json::parse(o.out);
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["result"]["valid"], false);
  EXPECT_TRUE(j["result"].contains("axiom"));
}

TEST(Cli, ValidMatroidValidates) {
  TempFile in(kParallelLine);
  Outcome o = run({"matroid", "validate", "--in", in.path()});
  EXPECT_EQ(o.code, 0) << o.err;
}

TEST(Cli, BuildOutputRoundTrips) {
  Outcome built = run({"matroid", "build", "--q", "2", "--k", "3", "--kind",
                       "uniform", "--param", "2"});
  ASSERT_EQ(built.code, 0) << built.err;
  TempFile in(json::parse(built.out)["result"].dump());
  Outcome again = run({"matroid", "tutte", "--in", in.path()});
  EXPECT_EQ(json::parse(again.out)["summary"], "x^2+4*x+y+1");
}

TEST(Cli, PartitionFindAndCheck) {
  TempFile in(kParallelLine);
  Outcome found = run({"partition", "find", "--in", in.path()});
  ASSERT_EQ(found.code, 0) << found.err;
  json j = json::parse(found.out);
  EXPECT_EQ(j["result"]["certified"], true);
  const json& first = j["result"]["partitions"][0];
  EXPECT_EQ(first["is_tutte"], true);

  TempFile part(json{{"parts", first["parts"]}}.dump());
  Outcome checked = run({"partition", "check", "--in", in.path(), "--partition",
                         part.path()});
  EXPECT_EQ(checked.code, 0) << checked.err;

  json broken = first["parts"];
  broken.erase(broken.size() - 1);
  TempFile bad(json{{"parts", broken}}.dump());
  Outcome rejected = run({"partition", "check", "--in", in.path(), "--partition",
                          bad.path()});
  EXPECT_EQ(rejected.code, 1);
  EXPECT_EQ(json::parse(rejected.out)["result"]["valid"], false);
}

}  // namespace
