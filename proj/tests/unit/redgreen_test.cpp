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


#include "stylomark/redgreen.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "stylomark/error.hpp"

namespace stylomark {
namespace {

TEST(SplitMix64, PinnedSequenceFromZero) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 16294208416658607535ULL);
  EXPECT_EQ(rng.next(), 7960286522194355700ULL);
  EXPECT_EQ(rng.next(), 487617019471545679ULL);
}

TEST(GreenList, PinnedListForThe) {
  const auto g = green_list("the", 32, 0.5);
  std::vector<std::uint32_t> ids = g.ids();
  std::sort(ids.begin(), ids.end());
  const std::vector<std::uint32_t> expected = {0, 2, 3, 5, 9, 13, 15, 16, 17, 18, 19, 20, 22, 23, 24, 26};
  EXPECT_EQ(ids, expected);
  EXPECT_EQ(green_seed("the"), static_cast<std::uint64_t>(hash_to_range("the", {0, 0xFFFFFFFFLL})));
}

TEST(GreenList, SeedIgnoresCase) {
  EXPECT_EQ(green_list("The", 100, 0.25).ids(), green_list("the", 100, 0.25).ids());
}

TEST(GreenList, FloorCardinalityAndBijection) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t v = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
    const double gamma = std::uniform_real_distribution<double>(0.01, 0.99)(rng);
    const std::string prev = "tok" + std::to_string(rng() % 1000);
    const auto g = green_list(prev, v, gamma);
    EXPECT_EQ(g.size(), static_cast<std::size_t>(std::floor(gamma * static_cast<double>(v))));
    auto perm = seeded_permutation(v, green_seed(prev));
    std::sort(perm.begin(), perm.end());
    for (std::size_t i = 0; i < v; ++i) ASSERT_EQ(perm[i], i);
    std::size_t members = 0;
    for (std::size_t id = 0; id < v; ++id) members += g.contains(id) ? 1 : 0;
    EXPECT_EQ(members, g.size());
  }
}

TEST(GreenList, SmallGammaCanBeEmpty) {
  EXPECT_EQ(green_list("x", 1, 0.5).size(), 0u);
  EXPECT_EQ(green_list("x", 3, 0.5).size(), 1u);
}

TEST(GreenList, InvalidParameters) {
  EXPECT_THROW(green_list("x", 0, 0.5), ConfigError);
  EXPECT_THROW(green_list("x", 10, 0.0), ConfigError);
  EXPECT_THROW(green_list("x", 10, 1.0), ConfigError);
  EXPECT_THROW(is_green("x", 10, 10, 0.5), ConfigError);
  EXPECT_THROW(is_green("x", -1, 10, 0.5), ConfigError);
}

TEST(GreenListCache, SameAnswersAsDirectComputation) {
  GreenListCache cache(64, 0.3, 4);
  for (const char* prev : {"a", "B", "c", "d", "e", "A", "f"}) {
    EXPECT_EQ(cache.get(prev)->ids(), green_list(prev, 64, 0.3).ids()) << prev;
  }
  for (std::int64_t id = 0; id < 64; ++id) EXPECT_EQ(cache.get("q")->contains(id), is_green("q", id, 64, 0.3));
}

}  // namespace
}  // namespace stylomark
