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


#include "stylomark/toy_model.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "stylomark/generator.hpp"
#include "test_support.hpp"

namespace stylomark {
namespace {

TokenId id(const ToyModel& m, const char* t) { return *m.vocabulary().find(t); }

TEST(ToyModel, BigramCountsWithAddOneSmoothing) {
  const auto m = train_toy_model_from_text("a b a b a b", 2, 1.0);
  ASSERT_EQ(m.vocabulary().size(), 4u);  // a, b, <unk>, </s>
  const std::vector<TokenId> ctx{id(m, "a")};
  EXPECT_NEAR(m.probability(ctx, id(m, "b")), 4.0 / 7.0, 1e-15);
  EXPECT_NEAR(std::exp(m.next_logits(ctx)[static_cast<std::size_t>(id(m, "b"))]), 4.0 / 7.0, 1e-15);
}

TEST(ToyModel, UnseenContextIsUniform) {
  const auto m = train_toy_model_from_text("a b a b a b", 2, 1.0);
  const std::vector<TokenId> ctx{*m.vocabulary().unk_id()};
  for (const double l : m.next_logits(ctx)) EXPECT_NEAR(std::exp(l), 0.25, 1e-15);
}

TEST(ToyModel, TrigramContextsIncludeSequenceStart) {
  const auto m = train_toy_model_from_text("x y z", 3, 0.5);
  // V = 5; the start context (BOS, BOS) has seen only "x".
  EXPECT_NEAR(m.probability({}, id(m, "x")), 1.5 / 3.5, 1e-15);
  const std::vector<TokenId> xy{id(m, "x"), id(m, "y")};
  EXPECT_NEAR(m.probability(xy, id(m, "z")), 1.5 / 3.5, 1e-15);
  EXPECT_NEAR(m.probability(xy, id(m, "x")), 0.5 / 3.5, 1e-15);
}

TEST(ToyModel, LogitsAreNormalized) {
  const auto& m = testing::fixture_model();
  const auto ids = m.encode(testing::fixture_prompt(3, 40));
  for (std::size_t n = 0; n <= ids.size(); n += 7) {
    const auto logits = m.next_logits(std::span<const TokenId>(ids.data(), n));
    ASSERT_EQ(logits.size(), m.vocabulary().size());
    double sum = 0.0;
    for (const double l : logits) sum += std::exp(l);
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(ToyModel, VocabularyIsSortedTypesThenSpecials) {
  const auto m = train_toy_model_from_text("b a. c\n\nb", 2, 1.0);
  const auto& v = m.vocabulary();
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v.token(0), "a.");
  EXPECT_EQ(v.token(1), "b");
  EXPECT_EQ(v.token(2), "c");
  EXPECT_EQ(v.token(*v.unk_id()), "<unk>");
  EXPECT_EQ(v.token(*v.eos_id()), "</s>");
}

TEST(ToyModel, EosEndsEachDocument) {
  const auto m = train_toy_model_from_text("a b\n\na c", 2, 1.0);
  const auto eos = *m.vocabulary().eos_id();
  // "b" and "c" were each followed once by the end of their document.
  EXPECT_NEAR(m.probability(std::vector<TokenId>{id(m, "b")}, eos), 2.0 / 6.0, 1e-15);
}

TEST(ToyModel, SaveLoadRoundTrip) {
  const auto m = train_toy_model_from_text(read_text_file(testing::corpus_path()).substr(0, 20000), 3, 0.25);
  std::stringstream a;
  m.save(a);
  const auto loaded = ToyModel::load(a);
  std::stringstream b;
  loaded.save(b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(loaded.order(), 3);
  EXPECT_EQ(loaded.smoothing(), 0.25);
  const auto ids = m.encode("The city council met today.");
  EXPECT_EQ(loaded.next_logits(ids), m.next_logits(ids));
}

TEST(ToyModel, RebuildIsDeterministic) {
  const std::string text = read_text_file(testing::corpus_path()).substr(0, 30000);
  std::stringstream a, b;
  train_toy_model_from_text(text).save(a);
  train_toy_model_from_text(text).save(b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(ToyModel, InvalidParametersAndInputs) {
  EXPECT_THROW(train_toy_model_from_text("a b", 4, 1.0), ConfigError);
  EXPECT_THROW(train_toy_model_from_text("a b", 1, 1.0), ConfigError);
  EXPECT_THROW(train_toy_model_from_text("a b", 2, 0.0), ConfigError);
  EXPECT_THROW(train_toy_model_from_text("  \n\n ", 2, 1.0), DataError);
  EXPECT_THROW(train_toy_model(testing::data_path("no/such/corpus.txt")), DataError);
  std::stringstream bad("stylomark-toy-model 1\norder 2\nsmoothing x\n");
  EXPECT_THROW(ToyModel::load(bad), DataError);
  std::stringstream other("something else\n");
  EXPECT_THROW(ToyModel::load(other), DataError);
}

TEST(ToyModel, UnknownWordsEncodeAsUnk) {
  const auto m = train_toy_model_from_text("a b", 2, 1.0);
  const auto ids = m.encode("a zebra");
  ASSERT_EQ(ids.size(), 2u);
  EXPECT_EQ(ids[1], *m.vocabulary().unk_id());
}

TEST(ToyTokenize, SentencePunctuationOnlyAtTheEnd) {
  const auto toks = toy_tokenize("He said \"Go!\" then left... e.g. now?");
  for (const auto& t : toks) {
    const auto core_end = t.find_last_not_of(".!?\"')");
    for (std::size_t i = 0; i < core_end && core_end != std::string::npos; ++i) {
      EXPECT_FALSE(t[i] == '.' || t[i] == '!' || t[i] == '?') << t;
    }
  }
  EXPECT_EQ(toks.back(), "now?");
}

TEST(SplitDocuments, BlankLinesSeparateDocuments) {
  const auto docs = split_documents("a b\nc\n\n  \n\nd e.\n");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0], (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(docs[1], (std::vector<std::string>{"d", "e."}));
}

TEST(Perplexity, HandComputedBigramValue) {
  const auto m = train_toy_model_from_text("a b a b a b", 2, 1.0);
  // P(a | start) = 2/5, P(b | a) = 4/7.
  EXPECT_NEAR(perplexity(m, "a b"), std::sqrt(35.0 / 8.0), 1e-12);
}

TEST(Perplexity, UniformAndSingleTokenCases) {
  const auto m = train_toy_model_from_text("a b a b a b", 2, 1.0);
  EXPECT_NEAR(perplexity(m, "<unk> <unk> <unk>", "<unk>"), 4.0, 1e-12);
  EXPECT_NEAR(perplexity(m, "b", "a"), 7.0 / 4.0, 1e-12);
}

}  // namespace
}  // namespace stylomark
