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


#include "stylomark/text_core.hpp"

#include <string>

#include <gtest/gtest.h>

namespace stylomark {
namespace {

std::string concat(const std::vector<SentenceSpan>& spans) {
  std::string out;
  for (const auto& s : spans) out += s.text;
  return out;
}

TEST(SplitSentences, EllipsisFoldsIntoPreviousSentence) {
  const auto spans = split_sentences("One. Two... Three");
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(spans[0].text, "One.");
  EXPECT_EQ(spans[1].text, " Two...");
  EXPECT_EQ(spans[2].text, " Three");
  EXPECT_EQ(spans[0].terminal_punct, '.');
  EXPECT_FALSE(spans[2].terminal_punct.has_value());
  for (const auto& s : spans) EXPECT_EQ(s.words.size(), 1u);
}

TEST(SplitSentences, LeadingPunctuationJoinsFirstSentence) {
  const auto spans = split_sentences("?! Hello there. \"Quoted!\" she said");
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(spans[0].text, "?! Hello there.");
  EXPECT_EQ(spans[1].words.front().core, "Quoted");
  EXPECT_EQ(spans[2].text, "\" she said");
  EXPECT_EQ(spans[2].words.front().core, "she");
}

TEST(SplitSentences, ConcatenationReproducesInput) {
  // Holds for every text with at least one word.
  const std::vector<std::string> inputs = {"... a",   "  a  ",
                                           "A. B! C?", "x.y.z",        "Mr. Smith ran. Fast!",
                                           "\xE2\x80\x9CHi.\xE2\x80\x9D Bye.", "tab\tsep.\nnew line"};
  for (const auto& in : inputs) EXPECT_EQ(concat(split_sentences(in)), in) << in;
}

TEST(SplitSentences, WordlessTextHasNoSentences) {
  EXPECT_TRUE(split_sentences("").empty());
  EXPECT_TRUE(split_sentences(" .. !? ").empty());
}

TEST(SplitWords, CoresDropOuterPunctuationOnly) {
  const auto words = split_words("\"Well-known,\" (he) said... 42");
  ASSERT_EQ(words.size(), 4u);
  EXPECT_EQ(words[0].core, "Well-known");
  EXPECT_EQ(words[1].core, "he");
  EXPECT_EQ(words[2].core, "said");
  EXPECT_EQ(words[3].core, "42");
  EXPECT_EQ(words[0].surface, "\"Well-known,\"");
}

TEST(SplitWords, UnicodeSpaceSeparatesAndUnicodeQuotesArePunctuation) {
  const auto words = split_words("\xE2\x80\x9Chello\xE2\x80\x9D\xC2\xA0world");
  ASSERT_EQ(words.size(), 2u);
  EXPECT_EQ(words[0].core, "hello");
  EXPECT_EQ(words[1].core, "world");
}

TEST(FirstLetter, SkipsNonLetters) {
  EXPECT_EQ(first_letter_index("Cat"), 2);
  EXPECT_EQ(first_letter_index("\"42nd"), 13);
  EXPECT_FALSE(first_letter_index("1999").has_value());
  EXPECT_FALSE(first_letter_index("").has_value());
}

TEST(FoldWord, LowercasesAndDropsPunctuation) {
  EXPECT_EQ(fold_word("Well-Known"), "wellknown");
  EXPECT_EQ(fold_word("don't"), "dont");
  EXPECT_EQ(fold_word("\"CAT.\""), "cat");
  EXPECT_EQ(fold_word("..."), "");
}

TEST(EndsSentence, OnlyTrailingBoundariesCount) {
  EXPECT_TRUE(ends_sentence("ran."));
  EXPECT_TRUE(ends_sentence("said?\""));
  EXPECT_TRUE(ends_sentence("."));
  EXPECT_FALSE(ends_sentence("a.b"));
  EXPECT_FALSE(ends_sentence("word,"));
}

}  // namespace
}  // namespace stylomark
