// Copyright 2026 The frobcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct Result {
  int rc = -1;
  std::string out;
  std::string err;
};

std::filesystem::path scratch() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("frobcode_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result run(const std::string& args) {
  const auto err = scratch() / "stderr.txt";
  const std::string cmd = std::string(FROBCODE_CLI) + " " + args + " 2>" + err.string();
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string write_code(const std::string& name, const std::string& construct_args) {
  const Result r = run("--format json construct " + construct_args);
  EXPECT_EQ(r.rc, 0) << r.err;
  const auto path = scratch() / name;
  std::ofstream(path) << r.out;
  return path.string();
}

TEST(Cli, EnumerateLengthFive) {
  const Result r = run("enumerate --n 5");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(lines(r.out).size(), 2U);
  EXPECT_EQ(lines(run("enumerate --n 5 --degenerate").out).size(), 3U);
}

TEST(Cli, RejectsImpossibleLengths) {
  const Result odd = run("enumerate --n 9 --d 2");
  EXPECT_EQ(odd.rc, 2);
  EXPECT_NE(odd.err.find("no even exponent"), std::string::npos) << odd.err;
  const Result bad = run("enumerate --n 7");
  EXPECT_EQ(bad.rc, 2);
  EXPECT_NE(bad.err.find("not a Frobenius length"), std::string::npos) << bad.err;
  EXPECT_EQ(run("").rc, 2);
  EXPECT_EQ(run("enumerate").rc, 2);
}

// The published parameters at n = 65 use the fixed-beta window.
TEST(Cli, EnumerateLengthSixtyFive) {
  std::set<std::pair<int, int>> seen;
  for (const auto& l : lines(run("--format json enumerate --n 65").out)) {
    const Json j = Json::parse(l);
    seen.emplace(j["params"][1].get<int>(), j["beta_window"]["delta"].get<int>());
  }
  for (auto kd : {std::pair{5, 13}, {13, 8}, {17, 9}, {17, 11}, {29, 7}, {41, 5}, {53, 3}}) {
    EXPECT_TRUE(seen.count(kd)) << "[[65," << kd.first << "," << kd.second << "]]";
  }
}

TEST(Cli, ConstructAndVerify) {
  const std::string code = write_code("c5.json", "--n 5 --g 0 --h 1");
  const Result r = run("--format json verify --code " + code);
  ASSERT_EQ(r.rc, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["params"], Json::parse("[5,1,3]"));
  EXPECT_EQ(j["isotropy"], true);
  EXPECT_EQ(j["centraliser_size"], "64");
  EXPECT_EQ(j["exact_distance"], 3);
  EXPECT_EQ(j["purity_checked_up_to"], 2);
  EXPECT_EQ(j["delta_pure"], true);
}

TEST(Cli, VerifyReadsStdin) {
  const std::string code = write_code("c9.json", "--n 9 --d 3 --g 0,3 --h 4");
  const Result r = run("--format json verify --samples 500 --code - < " + code);
  ASSERT_EQ(r.rc, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["params"], Json::parse("[9,3,3]"));
  EXPECT_GE(j["exact_distance"].get<int>(), 3);
  EXPECT_GE(j["sampled_distance_upper_bound"]["bound"].get<int>(), j["exact_distance"].get<int>());
}

TEST(Cli, TamperedDescriptor) {
  const std::string code = write_code("c13.json", "--n 13 --g 0 --h 2");
  Json j = Json::parse(slurp(code));
  j["params"][2] = 7;
  const auto bad = scratch() / "bad.json";
  std::ofstream(bad) << j.dump();
  const Result r = run("verify --code " + bad.string());
  EXPECT_EQ(r.rc, 1);
  EXPECT_NE(r.err.find("params"), std::string::npos) << r.err;
}

TEST(Cli, DecodeSim) {
  const std::string code = write_code("c13d.json", "--n 13 --g 0 --h 2");
  const Result r = run("--format json decode-sim --code " + code + " --trials 1000 --weight 2 --seed 5 --no-timing");
  ASSERT_EQ(r.rc, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["trials"], 1000);
  EXPECT_EQ(j["successes"], 1000);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_FALSE(j.contains("mean_time_us"));
  EXPECT_EQ(run("--format json decode-sim --code " + code + " --trials 1000 --weight 2 --seed 5 --no-timing").out, r.out);

  const Result over = run("--format json decode-sim --code " + code + " --trials 500 --weight 3 --no-timing");
  ASSERT_EQ(over.rc, 0) << over.err;
  const Json o = Json::parse(over.out);
  EXPECT_EQ(o["successes"].get<int>() + o["failures"].get<int>() + o["miscorrections"].get<int>(), 500);
  EXPECT_EQ(o["miscorrections_syndrome_consistent"], o["miscorrections"]);
}

TEST(Cli, Density) {
  const Result r = run("density --max 100");
  ASSERT_EQ(r.rc, 0);
  const auto ls = lines(r.out);
  ASSERT_FALSE(ls.empty());
  EXPECT_EQ(ls.front(), "x,total,even,odd");
  EXPECT_EQ(ls.back(), "100,23,11,12");
  EXPECT_EQ(run("density --max 1000 --qr-check").rc, 0);
}

TEST(Cli, Tables) {
  for (const auto& [which, file] : {std::pair{"I", "table1.txt"}, {"II", "table2.txt"}, {"III", "table3.txt"}}) {
    const Result r = run(std::string("tables ") + which + " --golden " + FROBCODE_GOLDEN_DIR);
    EXPECT_EQ(r.rc, 0) << which << ": " << r.err;
    EXPECT_EQ(r.out, slurp(std::filesystem::path(FROBCODE_GOLDEN_DIR) / file)) << which;
  }
}

}  // namespace
