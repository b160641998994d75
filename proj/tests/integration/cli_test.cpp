// Copyright 2026 The Stylomark Authors.
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


// Runs the stylomark executable as a subprocess.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "stylomark/toy_model.hpp"
#include "test_support.hpp"

namespace stylomark {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("stylomark_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome run(const std::string& args) const {
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = std::string("'") + STYLOMARK_CLI + "' " + args + " 2>'" + err.string() + "'";
    Outcome r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (p == nullptr) return r;
    char buf[4096];
    while (const std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
    const int st = ::pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.err = read_text_file(err);
    return r;
  }

  std::string norms_flags() const {
    return "--norms '" + testing::data_path("norms/toy_norms.csv").string() + "' --frequencies '" +
           testing::data_path("norms/toy_class_frequencies.csv").string() + "'";
  }

  fs::path dir_;
};

TEST_F(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(run("--help").status, 0);
  const auto help = run("detect --help");
  EXPECT_EQ(help.status, 0);
  EXPECT_NE(help.out.find("--alpha"), std::string::npos);
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("detect --bogus").status, 1);
  EXPECT_EQ(run("generate --setting extreme").status, 1);
  EXPECT_EQ(run("generate --delta-acro -1").status, 1);
}

TEST_F(Cli, MissingNormsForSensorimotorIsAUsageError) {
  const auto gen = run("generate --seed 1");
  EXPECT_EQ(gen.status, 1);
  EXPECT_NE(gen.err.find("norms"), std::string::npos) << gen.err;
  const auto det = run("detect --text-file '" + testing::data_path("fixtures/watermarked_strong.txt").string() + "'");
  EXPECT_EQ(det.status, 1);
  EXPECT_NE(det.err.find("--norms"), std::string::npos) << det.err;
}

TEST_F(Cli, DataErrorsExitTwo) {
  EXPECT_EQ(run("detect --norms /no/such/norms.csv --text-file /dev/null").status, 2);
  EXPECT_EQ(run("detect --features redgreen --text-file /no/such/text.txt").status, 2);
  EXPECT_EQ(run("--config /no/such/config.toml detect").status, 2);
  EXPECT_EQ(run("plot --input /no/such/long.csv").status, 2);
}

TEST_F(Cli, ZeroDeltaGenerationIsDeterministic) {
  const auto a = dir_ / "a.txt", b = dir_ / "b.txt";
  const std::string flags = "generate --delta-acro 0 --delta-senso 0 --delta-redgreen 0 --seed 7 -o ";
  ASSERT_EQ(run(flags + "'" + a.string() + "'").status, 0);
  ASSERT_EQ(run(flags + "'" + b.string() + "'").status, 0);
  EXPECT_FALSE(read_text_file(a).empty());
  EXPECT_EQ(read_text_file(a), read_text_file(b));
}

TEST_F(Cli, DetectsTheWatermarkedFixture) {
  const auto config = dir_ / "detect.toml";
  std::ofstream(config) << "[detect]\nnorms = \"" << testing::data_path("norms/toy_norms.csv").string()
                        << "\"\nfrequencies = \"" << testing::data_path("norms/toy_class_frequencies.csv").string()
                        << "\"\n";
  const auto r = run("--config '" + config.string() + "' detect --text-file '" +
                     testing::data_path("fixtures/watermarked_strong.txt").string() + "' --alpha 0.05");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "stylomark.detection/1");
  EXPECT_TRUE(j["verdict"].get<bool>());
  // Flags win over the config file.
  const auto weak = run("--config '" + config.string() + "' detect --features redgreen --alpha 1e-300 --text-file '" +
                        testing::data_path("fixtures/watermarked_strong.txt").string() + "'");
  ASSERT_EQ(weak.status, 0) << weak.err;
  EXPECT_EQ(nlohmann::json::parse(weak.out)["features"], "redgreen");
  EXPECT_FALSE(nlohmann::json::parse(weak.out)["verdict"].get<bool>());
}

TEST_F(Cli, GenerateDetectRoundTripAtStrongSetting) {
  const auto model = dir_ / "toy.model";
  ASSERT_EQ(run("train-toy -o '" + model.string() + "'").status, 0);
  int detected = 0;
  const int n = 10;
  for (int i = 0; i < n; ++i) {
    const auto prompt = dir_ / "prompt.txt";
    std::ofstream(prompt) << testing::fixture_prompt(static_cast<std::size_t>(i) * 7);
    const auto text = dir_ / "gen.txt";
    const std::string common = " --model '" + model.string() + "' " + norms_flags();
    ASSERT_EQ(run("generate --setting strong --seed " + std::to_string(i) + " --prompt-file '" + prompt.string() +
                  "' -o '" + text.string() + "'" + common)
                  .status,
              0);
    const auto r = run("detect --text-file '" + text.string() + "'" + common);
    ASSERT_EQ(r.status, 0) << r.err;
    detected += nlohmann::json::parse(r.out)["verdict"].get<bool>();
  }
  EXPECT_GE(detected, 9);
}

TEST_F(Cli, SavedModelMatchesTrainingOnTheFly) {
  const auto model = dir_ / "toy.model";
  ASSERT_EQ(run("train-toy -o '" + model.string() + "'").status, 0);
  const std::string flags = " --features redgreen --seed 5 --prompt 'The mayor said'";
  const auto a = run("generate --model '" + model.string() + "'" + flags);
  const auto b = run("generate" + flags);
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, TraceFileHasOneLinePerStep) {
  const auto trace = dir_ / "trace.jsonl";
  const auto r = run("generate --features acro,redgreen --max-tokens 25 --no-eos --trace '" + trace.string() + "'");
  ASSERT_EQ(r.status, 0) << r.err;
  std::ifstream in(trace);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["step"], lines);
    ++lines;
  }
  EXPECT_EQ(lines, 25);
}

TEST_F(Cli, AttackReportsReplacements) {
  const auto r = run("attack --text-file '" + testing::data_path("fixtures/watermarked_strong.txt").string() +
                     "' --seed 4");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GE(j["replaced_fraction"].get<double>(), 0.10);
  EXPECT_TRUE(j.contains("attacked_text"));
  EXPECT_EQ(run("attack --text-file /dev/null --substitution t5").status, 1);
}

TEST_F(Cli, EvalWritesResultsAndPlots) {
  const auto out = dir_ / "results";
  const auto r = run("eval --samples 3 --completion-len 40 --configurations acro redgreen --attack --ablation " +
                     norms_flags() + " --out '" + out.string() + "'");
  ASSERT_EQ(r.status, 0) << r.err;
  for (const char* f : {"results.csv", "aggregates.csv", "significance.csv", "long.csv", "results.json"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  const auto p = run("plot --input '" + (out / "long.csv").string() + "' --out '" + out.string() + "'");
  ASSERT_EQ(p.status, 0) << p.err;
  EXPECT_TRUE(fs::exists(out / "z_ecdf.svg"));
  EXPECT_TRUE(fs::exists(out / "perplexity_z.svg"));
  EXPECT_TRUE(fs::exists(out / "ablation.svg"));
}

}  // namespace
}  // namespace stylomark
