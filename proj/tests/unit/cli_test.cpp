#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace mdd::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mddsim");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }
  ScopedEnv(const ScopedEnv&) = delete;
  ScopedEnv& operator=(const ScopedEnv&) = delete;

 private:
  const char* name_;
};

const std::string kThreeQuditPath = MDD_SOURCE_DIR "/circuits/three_qudit.qd";

TEST(Cli, GhzJsonHasExactKeys) {
  const auto r = invoke({"bench", "ghz", "--n", "5", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  const std::vector<std::string> want{"benchmark", "dims",    "distinct_complex", "nodes",
                                     "operations", "qudits", "runtime_seconds",  "samples"};
  EXPECT_EQ(keys, want);
  EXPECT_EQ(j["nodes"], 14);
  EXPECT_EQ(j["qudits"], 5);
  EXPECT_EQ(j["dims"]["3"], 5);
  EXPECT_EQ(j["dims"]["other"], 0);
  EXPECT_EQ(j["benchmark"], "ghz");
}

TEST(Cli, GhzDistinctComplexConstantAcrossSizes) {
  const auto a = nlohmann::json::parse(invoke({"bench", "ghz", "--n", "5", "--json"}).out);
  const auto b = nlohmann::json::parse(invoke({"bench", "ghz", "--n", "40", "--json"}).out);
  EXPECT_EQ(a["distinct_complex"], b["distinct_complex"]);
}

TEST(Cli, SimulateSamplesAreDeterministic) {
  const auto a = invoke({"simulate", kThreeQuditPath, "--samples", "10", "--seed", "7", "--json"});
  const auto b = invoke({"simulate", kThreeQuditPath, "--samples", "10", "--seed", "7", "--json"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const auto ja = nlohmann::json::parse(a.out);
  const auto jb = nlohmann::json::parse(b.out);
  ASSERT_EQ(ja["samples"].size(), 10U);
  EXPECT_EQ(ja["samples"], jb["samples"]);
  for (const auto& s : ja["samples"]) {
    ASSERT_EQ(s.size(), 3U);
    const int mid = s[1];
    EXPECT_EQ(s[0], mid == 1 ? 1 : 0);
    EXPECT_EQ(s[2], mid == 1 ? 1 : 0);
  }
}

TEST(Cli, TableOutputListsSamples) {
  const auto r = invoke({"simulate", kThreeQuditPath, "--samples", "3", "--seed", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("nodes"), std::string::npos);
  std::size_t kets = 0;
  for (std::size_t pos = 0; (pos = r.out.find('|', pos)) != std::string::npos; ++pos) ++kets;
  EXPECT_EQ(kets, 3U);
}

TEST(Cli, RandomBenchReportsRuntime) {
  const auto r = invoke({"bench", "random", "--dims", "3,3", "--ops", "2000", "--seed", "1", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GE(j["runtime_seconds"].get<double>(), 0.0);
  EXPECT_EQ(j["qudits"], 2);
}

TEST(Cli, WstateBench) {
  const auto r = invoke({"bench", "wstate", "--dims", "2,2,3,3", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dims"]["2"], 2);
  EXPECT_EQ(j["dims"]["3"], 2);
  EXPECT_LE(j["nodes"].get<int>(), 16);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({"bench", "ghz", "--n", "5", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bench", "ghz"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bench", "ghz", "--n", "5", "--tol", "-1"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("simulate"), std::string::npos);
}

TEST(Cli, SimulationErrorsExitTwo) {
  EXPECT_EQ(invoke({"simulate", "/nonexistent/file.qd"}).code, kExitSimulation);
  EXPECT_EQ(invoke({"bench", "ghz", "--n", "1"}).code, kExitSimulation);

  const auto path = std::filesystem::temp_directory_path() / "mddsim_cli_bad.qd";
  {
    std::ofstream f(path);
    f << "qudits 2 3 4\ngate h target=5\n";
  }
  const auto r = invoke({"simulate", path.string()});
  EXPECT_EQ(r.code, kExitSimulation);
  EXPECT_NE(r.err.find("line 2, column 15"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, ToleranceFallsBackToEnvironment) {
  {
    ScopedEnv env("MDDSIM_TOL", "1e-9");
    EXPECT_EQ(invoke({"bench", "ghz", "--n", "5", "--json"}).code, kExitOk);
  }
  {
    ScopedEnv env("MDDSIM_TOL", "not-a-number");
    EXPECT_EQ(invoke({"bench", "ghz", "--n", "5", "--json"}).code, kExitUsage);
    // An explicit flag wins over the environment.
    EXPECT_EQ(invoke({"bench", "ghz", "--n", "5", "--tol", "1e-12", "--json"}).code, kExitOk);
  }
}

}  // namespace
}  // namespace mdd::cli
