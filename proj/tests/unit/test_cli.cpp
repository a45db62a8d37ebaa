#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "family_dsl.hpp"
#include "fixtures.hpp"
#include "report.hpp"

using namespace indseq;
using namespace indseq::cli;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "indseq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json without_timings(Json j) {
  j.erase("timings");
  return j;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("indseq_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Dsl, BuildsFamilies) {
  EXPECT_EQ(build_family("path(4)").graph.vertex_count(), 4);
  const MarkedGraph ds = build_family("doublestar(s=0,e=1)");
  EXPECT_EQ(ds.graph.vertex_count(), 3);
  EXPECT_TRUE(ds.w.has_value());
  EXPECT_EQ(build_family("doublestar(1, 2)").graph.vertex_count(), 5);
  const MarkedGraph c = build_family("concat2(doublestar(1,2), n=3)");
  EXPECT_TRUE(isomorphic(c.graph, concat_two(double_star(1, 2), 3)));
  EXPECT_EQ(build_family("path(4, v=1, w=2)").v, 1);
  EXPECT_EQ(build_family("caterpillar(1,0,2)").graph.vertex_count(), 6);
  EXPECT_EQ(build_family("pendants(path(3), k=2)").graph.vertex_count(), 9);
}

TEST(Dsl, ErrorsCarryPositions) {
  try {
    build_family("path(4");
    FAIL();
  } catch (const DslError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  try {
    build_family("doublestar(1, x)");
    FAIL();
  } catch (const DslError& e) {
    // x reads as a family name, so the missing '(' is reported at ')'.
    EXPECT_EQ(e.position(), 15u);
    EXPECT_NE(std::string(e.what()).find("expected '('"), std::string::npos);
  }
  EXPECT_THROW(build_family("nosuch(3)"), DslError);
  EXPECT_THROW(build_family("path(4) extra"), DslError);
  EXPECT_THROW(build_family("path(k=4)"), std::exception);
}

TEST(Report, JsonRoundTrip) {
  const IntPoly p{1, -5, BigInt("123456789012345678901234567890")};
  EXPECT_EQ(int_poly_from_json(to_json(p)), p);
  const ParamPoly f = double_star_fq(0, 3);
  EXPECT_EQ(param_poly_from_json(to_json(f)), f);
  const std::vector<std::string> fields{"a", "b,c", "say \"hi\"", "", "two\nlines"};
  EXPECT_EQ(split_csv_line(csv_line(fields)), fields);
}

TEST(Cli, PolyCommand) {
  const CliRun r = run({"poly", "path(4)"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["tool"], "indseq");
  EXPECT_EQ(j["result"]["polynomial"], Json::parse(R"(["1","4","3"])"));
  EXPECT_EQ(j["result"]["alpha"], 2);
}

TEST(Cli, ExitCodes) {
  const CliRun bad = run({"poly", "path(4"});
  EXPECT_EQ(bad.code, kExitOperational);
  EXPECT_NE(bad.err.find("position 6"), std::string::npos);
  EXPECT_EQ(run({"poly"}).code, kExitOperational);
  EXPECT_EQ(run({"frobnicate"}).code, kExitOperational);
  EXPECT_EQ(run({"poly", "/nonexistent/file.txt"}).code, kExitOperational);
  EXPECT_EQ(run({"verify", "thm7", "--source", "doublestar(s=0,e=1)"}).code, kExitFinding);
  EXPECT_EQ(run({"verify", "thm7", "--source", "path(2, v=0, w=1)"}).code, kExitOk);
  EXPECT_EQ(run({"verify", "thm8-2", "--k-max", "300"}).code, kExitOperational);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, VerifyItemsSmallRange) {
  const CliRun r2 = run({"verify", "thm8-2", "--k-min", "2", "--k-max", "9", "--n-max", "6", "--ground-truth", "8"});
  ASSERT_EQ(r2.code, kExitOk) << r2.err;
  const Json j2 = Json::parse(r2.out);
  const CliRun r1 = run({"verify", "thm8-1", "--s-max", "2", "--e-max", "4", "--n-max", "6", "--ground-truth", "6",
                      "--format", "csv"});
  ASSERT_EQ(r1.code, kExitOk) << r1.err;
  EXPECT_NE(r1.out.find("0,1,true,clustering"), std::string::npos);
  const CliRun rel = run({"verify", "nine-relations", "--s-max", "3", "--e-max", "3", "--format", "csv"});
  EXPECT_EQ(rel.code, kExitOk);
  EXPECT_NE(rel.out.find("0,1,s<e,12,false,d3;e2"), std::string::npos);
}

TEST(Cli, SelftestAndCorruptedFixture) {
  const CliRun ok = run({"selftest"});
  ASSERT_EQ(ok.code, kExitOk) << ok.out;
  EXPECT_EQ(Json::parse(ok.out)["result"]["failed"], 0);

  const std::string dumped = temp_path("fixtures.json");
  ASSERT_EQ(run({"selftest", "--dump-fixtures", dumped}).code, kExitOk);
  Json fx = Json::parse(slurp(dumped));
  fx["indpoly"][0]["coefficients"][1] = "5";
  {
    std::ofstream f(dumped);
    f << fx.dump();
  }
  const CliRun bad = run({"selftest", "--fixtures", dumped});
  EXPECT_EQ(bad.code, kExitFinding);
  EXPECT_GE(Json::parse(bad.out)["result"]["failed"].get<int>(), 1);
  std::remove(dumped.c_str());
}

TEST(Cli, ScanDeterministicAcrossJobs) {
  const CliRun a = run({"scan", "random-trees", "--n", "12", "--count", "30", "--seed", "9", "--jobs", "1"});
  const CliRun b = run({"scan", "random-trees", "--n", "12", "--count", "30", "--seed", "9", "--jobs", "3"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  Json ja = without_timings(Json::parse(a.out));
  Json jb = without_timings(Json::parse(b.out));
  ja.erase("inputs");
  jb.erase("inputs");
  EXPECT_EQ(ja, jb);
  const CliRun c = run({"scan", "random-trees", "--n", "12", "--count", "30", "--seed", "10", "--format", "csv"});
  const CliRun d = run({"scan", "random-trees", "--n", "12", "--count", "30", "--seed", "9", "--format", "csv"});
  EXPECT_NE(c.out, d.out);
}

TEST(Cli, CsvResumeCompletesInterruptedScan) {
  const std::string full = temp_path("full.csv");
  const std::string part = temp_path("part.csv");
  std::remove(full.c_str());
  std::remove(part.c_str());
  const std::vector<std::string> base{"scan", "random-trees", "--n", "11", "--count", "40", "--seed", "3"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> v = base;
    v.insert(v.end(), extra.begin(), extra.end());
    return run(v);
  };
  ASSERT_EQ(with({"--out", full}).code, kExitOk);
  const std::string expected = slurp(full);

  // Keep the header and 12 rows, then a torn line.
  std::istringstream lines(expected);
  std::string line, truncated;
  for (int i = 0; i < 13 && std::getline(lines, line); ++i) truncated += line + "\n";
  std::getline(lines, line);
  truncated += line.substr(0, line.size() / 2);
  {
    std::ofstream f(part, std::ios::binary);
    f << truncated;
  }
  const CliRun r = with({"--out", part, "--resume"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["resumed_rows"], 12);
  EXPECT_EQ(slurp(part), expected);
  EXPECT_EQ(Json::parse(r.out)["summary"], Json::parse(with({"--out", full}).out)["summary"]);
  std::remove(full.c_str());
  std::remove(part.c_str());
}

TEST(Cli, SearchScans) {
  const CliRun k = run({"scan", "minimal-k", "--source", "star(6)", "--k-max", "4"});
  ASSERT_EQ(k.code, kExitOk) << k.err;
  EXPECT_EQ(Json::parse(k.out)["rows"].size(), 5u);
  const CliRun shift =
      run({"scan", "minimal-n", "--variant", "shift", "--g-poly", "1,1", "--h-poly", "0,1,1,1,60", "--n-max", "20"});
  ASSERT_EQ(shift.code, kExitOk) << shift.err;
  const CliRun fib = run({"scan", "fibonacci", "--n-max", "8"});
  EXPECT_EQ(fib.code, kExitOk);
  EXPECT_TRUE(Json::parse(fib.out)["summary"]["all_real_rooted"].get<bool>());
}
