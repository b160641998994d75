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

#ifndef STYLOMARK_TESTS_TEST_SUPPORT_HPP_
#define STYLOMARK_TESTS_TEST_SUPPORT_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "stylomark/normalizer.hpp"
#include "stylomark/norms.hpp"
#include "stylomark/toy_model.hpp"

namespace stylomark::testing {

inline std::filesystem::path data_path(const std::filesystem::path& rel) { return data_dir() / rel; }

inline std::filesystem::path corpus_path() { return data_path("corpus/news_fixture.txt"); }

// Default toy model on the fixture corpus, trained once per process.
inline const ToyModel& fixture_model() {
  static const ToyModel model = train_toy_model(corpus_path());
  return model;
}

// Toy norms with corpus class frequencies as detection baselines.
inline const NormsLexicon& fixture_lexicon() {
  static const NormsLexicon lexicon = [] {
    auto lex = load_norms(data_path("norms/toy_norms.csv"));
    lex.set_baselines(load_class_frequencies(data_path("norms/toy_class_frequencies.csv")));
    return lex;
  }();
  return lexicon;
}

inline const std::vector<std::vector<std::string>>& fixture_documents() {
  static const auto docs = split_documents(read_text_file(corpus_path()));
  return docs;
}

// First `n` tokens of document `d`, joined by spaces.
inline std::string fixture_prompt(std::size_t d, std::size_t n = 30) {
  const auto& doc = fixture_documents().at(d);
  std::string out;
  for (std::size_t i = 0; i < n && i < doc.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += doc[i];
  }
  return out;
}

}  // namespace stylomark::testing

#endif  // STYLOMARK_TESTS_TEST_SUPPORT_HPP_
