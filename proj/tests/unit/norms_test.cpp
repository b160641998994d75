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


#include "stylomark/norms.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "stylomark/error.hpp"
#include "test_support.hpp"

namespace stylomark {
namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

TEST(LoadNorms, FixtureMatchesExpectedTable) {
  const auto lex = load_norms(testing::data_path("fixtures/norms_50.csv"));
  EXPECT_EQ(lex.size(), 50u);
  const auto lines = detail::read_data_lines(testing::data_path("fixtures/norms_50_expected.csv"));
  std::size_t rows = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const auto f = detail::parse_csv_line(lines[i]);
    ASSERT_EQ(f.size(), 2u);
    const auto expected = class_from_name(f[1]);
    ASSERT_TRUE(expected.has_value()) << f[1];
    EXPECT_EQ(lex.class_of(f[0]), expected) << f[0];
    ++rows;
  }
  EXPECT_EQ(rows, 50u);
}

TEST(LoadNorms, LookupIsCaseInsensitiveAndUsesLemma) {
  const auto lex = load_norms(testing::data_path("fixtures/norms_50.csv"));
  EXPECT_EQ(lex.class_of("WHISPER"), lex.class_of("whisper"));
  EXPECT_EQ(lex.class_of("whispers,"), lex.class_of("whisper"));
  EXPECT_FALSE(lex.class_of("zzzz").has_value());
  EXPECT_FALSE(lex.class_of("...").has_value());
}

TEST(LoadNorms, TiesGoToLowerClassIndexAndZeroRowsAreDropped) {
  const auto path = write_temp("stylomark_ties.csv",
                               "word,touch,hearing,smell,taste,vision,interoception,mouth_throat,hand_arm,"
                               "foot_leg,head,torso\n"
                               "alpha,0,3,3,0,0,0,0,0,0,0,0\n"
                               "beta,0,0,0,0,0,0,0,0,0,0,0\n"
                               "gamma,1,1,1,1,1,1,1,1,1,1,1\n");
  const auto lex = load_norms(path);
  EXPECT_EQ(lex.class_of("alpha"), SensorimotorClass::kHearing);
  EXPECT_FALSE(lex.class_of("beta").has_value());
  EXPECT_EQ(lex.class_of("gamma"), SensorimotorClass::kTouch);
  std::filesystem::remove(path);
}

TEST(LoadNorms, LancasterHeadersAreRecognized) {
  const auto path = write_temp("stylomark_lancaster.csv",
                               "Word,Auditory.mean,Gustatory.mean,Haptic.mean,Interoceptive.mean,Olfactory.mean,"
                               "Visual.mean,Foot_leg.mean,Hand_arm.mean,Head.mean,Mouth.mean,Torso.mean,Extra\n"
                               "SHOUT,4.9,0.1,0.2,0.3,0.0,1.0,0.1,0.2,0.3,2.0,0.5,9\n");
  const auto lex = load_norms(path);
  EXPECT_EQ(lex.class_of("shout"), SensorimotorClass::kHearing);
  std::filesystem::remove(path);
}

TEST(LoadNorms, ErrorsNameTheLine) {
  const auto path = write_temp("stylomark_badnum.csv",
                               "word,touch,hearing,smell,taste,vision,interoception,mouth_throat,hand_arm,"
                               "foot_leg,head,torso\n"
                               "ok,1,0,0,0,0,0,0,0,0,0,0\n"
                               "bad,1,x,0,0,0,0,0,0,0,0,0\n");
  try {
    load_norms(path);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find(":3:"), std::string::npos) << e.what();
  }
  std::filesystem::remove(path);
}

TEST(LoadNorms, MissingClassColumnAndMissingFile) {
  const auto path = write_temp("stylomark_nocol.csv", "word,touch,hearing\nx,1,2\n");
  EXPECT_THROW(load_norms(path), DataError);
  std::filesystem::remove(path);
  EXPECT_THROW(load_norms("/nonexistent/norms.csv"), DataError);
}

TEST(LoadClassFrequencies, NormalizesCounts) {
  const auto b = load_class_frequencies(testing::data_path("fixtures/frequencies_toy.csv"));
  EXPECT_DOUBLE_EQ(b[index_of(SensorimotorClass::kVision)], 900.0 / 2000.0);
  EXPECT_DOUBLE_EQ(b[index_of(SensorimotorClass::kSmell)], 40.0 / 2000.0);
  double sum = 0.0;
  for (const double v : b) sum += v;
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(LoadClassFrequencies, SingleClassIsClampedAwayFromZeroAndOne) {
  const auto b = load_class_frequencies(testing::data_path("fixtures/frequencies_single.csv"));
  EXPECT_DOUBLE_EQ(b[index_of(SensorimotorClass::kVision)], 1.0 - kBaselineFloor);
  EXPECT_DOUBLE_EQ(b[index_of(SensorimotorClass::kTouch)], kBaselineFloor);
}

TEST(LoadClassFrequencies, RejectsUnknownClassAndNonPositiveCounts) {
  auto p1 = write_temp("stylomark_freq1.csv", "class,frequency\nsmelly,3\n");
  EXPECT_THROW(load_class_frequencies(p1), DataError);
  auto p2 = write_temp("stylomark_freq2.csv", "class,frequency\nvision,0\n");
  EXPECT_THROW(load_class_frequencies(p2), DataError);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST(ClassNames, RoundTrip) {
  for (std::size_t i = 0; i < kNumClasses; ++i) EXPECT_EQ(class_from_name(kClassNames[i]), class_at(i));
  EXPECT_THROW(class_at(11), ConfigError);
}

}  // namespace
}  // namespace stylomark
