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

// Stopword filtering and rule-based lemmatization.
//
// The two data files (data/text/stopwords.txt, data/text/lemma_rules.txt)
// are part of the keystream contract: every sentence hash depends on them.

#ifndef STYLOMARK_NORMALIZER_HPP_
#define STYLOMARK_NORMALIZER_HPP_

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "stylomark/error.hpp"
#include "stylomark/text_core.hpp"

#ifndef STYLOMARK_DEFAULT_DATA_DIR
#define STYLOMARK_DEFAULT_DATA_DIR "data"
#endif

namespace stylomark {

namespace detail {

inline std::vector<std::string> read_data_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

inline std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string f;
  while (in >> f) out.push_back(f);
  return out;
}

inline bool is_plain_key(std::string_view w) {
  if (w.empty()) return false;
  for (const char c : w) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
  }
  return true;
}

}  // namespace detail

// Directory holding text/ and norms/ data. STYLOMARK_DATA_DIR overrides the
// build-time default.
inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("STYLOMARK_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return STYLOMARK_DEFAULT_DATA_DIR;
}

class Lemmatizer {
 public:
  struct SuffixRule {
    std::string suffix;
    std::string replacement;
    std::size_t min_stem = 1;
    bool undouble = false;
  };

  static Lemmatizer load(const std::filesystem::path& path) {
    Lemmatizer lem;
    const auto lines = detail::read_data_lines(path);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto f = detail::split_fields(lines[i]);
      if (f.empty() || f[0].starts_with('#')) continue;
      auto fail = [&](const std::string& why) {
        throw DataError(path.string() + ":" + std::to_string(i + 1) + ": " + why);
      };
      if (f[0] == "keep" && f.size() == 2) {
        lem.keep_.insert(f[1]);
      } else if (f[0] == "irregular" && f.size() == 3) {
        if (!lem.irregular_.emplace(f[1], f[2]).second) fail("duplicate irregular form " + f[1]);
      } else if (f[0] == "undouble" && f.size() == 2) {
        lem.undouble_ = f[1];
      } else if (f[0] == "suffix" && (f.size() == 4 || (f.size() == 5 && f[4] == "undouble"))) {
        SuffixRule r;
        r.suffix = f[1];
        r.replacement = f[2] == "-" ? "" : f[2];
        try {
          r.min_stem = std::stoul(f[3]);
        } catch (const std::exception&) {
          fail("bad min_stem '" + f[3] + "'");
        }
        r.undouble = f.size() == 5;
        lem.rules_.push_back(std::move(r));
      } else {
        fail("unrecognised rule '" + lines[i] + "'");
      }
    }
    return lem;
  }

  // Applies rules until none fires. Input is expected to be folded
  // (lowercase, no punctuation). The result is a fixed point, so
  // lemmatize(lemmatize(w)) == lemmatize(w).
  std::string lemmatize(std::string_view folded) const {
    std::string w(folded);
    for (int iter = 0; iter < 32; ++iter) {
      if (keep_.contains(w)) return w;
      if (auto it = irregular_.find(w); it != irregular_.end()) return it->second;
      std::string next;
      bool fired = false;
      for (const auto& r : rules_) {
        if (w.size() < r.suffix.size() || !w.ends_with(r.suffix)) continue;
        if (w.size() - r.suffix.size() < r.min_stem) continue;
        std::string stem = w.substr(0, w.size() - r.suffix.size());
        if (r.undouble && stem.size() >= 2 && stem.back() == stem[stem.size() - 2] &&
            undouble_.find(stem.back()) != std::string::npos) {
          stem.pop_back();
        }
        next = stem + r.replacement;
        fired = true;
        break;
      }
      if (!fired || next == w) return w;
      w = std::move(next);
    }
    return w;
  }

  const std::unordered_map<std::string, std::string>& irregular_forms() const { return irregular_; }

 private:
  std::unordered_set<std::string> keep_;
  std::unordered_map<std::string, std::string> irregular_;
  std::string undouble_;
  std::vector<SuffixRule> rules_;
};

class TextNormalizer {
 public:
  TextNormalizer(std::unordered_set<std::string> stopwords, Lemmatizer lemmatizer)
      : stopwords_(std::move(stopwords)), lemmatizer_(std::move(lemmatizer)) {}

  static TextNormalizer load(const std::filesystem::path& stopwords_file,
                             const std::filesystem::path& rules_file) {
    std::unordered_set<std::string> stop;
    const auto lines = detail::read_data_lines(stopwords_file);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto f = detail::split_fields(lines[i]);
      if (f.empty() || f[0].starts_with('#')) continue;
      if (f.size() != 1 || !detail::is_plain_key(f[0])) {
        throw DataError(stopwords_file.string() + ":" + std::to_string(i + 1) +
                        ": stopword must be a single folded word");
      }
      stop.insert(f[0]);
    }
    return TextNormalizer(std::move(stop), Lemmatizer::load(rules_file));
  }

  static TextNormalizer load_from(const std::filesystem::path& dir) {
    return load(dir / "text" / "stopwords.txt", dir / "text" / "lemma_rules.txt");
  }

  // Normalizer backed by the shipped data files; loaded once.
  static const TextNormalizer& standard() {
    static const TextNormalizer instance = load_from(data_dir());
    return instance;
  }

  bool is_stopword(std::string_view folded) const { return stopwords_.contains(std::string(folded)); }

  std::string lemmatize(std::string_view folded) const { return lemmatizer_.lemmatize(folded); }

  // Lowercased, punctuation-free, lemmatized form used for word hashing and
  // lexicon lookup.
  std::string word_key(std::string_view word) const { return lemmatize(fold_word(word)); }

  // s' for sentence hashing: content-word lemmas joined by single spaces.
  std::string normalize_words(const std::vector<Word>& words) const {
    std::string out;
    for (const auto& w : words) {
      const std::string folded = fold_word(w.core);
      if (folded.empty() || is_stopword(folded)) continue;
      const std::string lemma = lemmatize(folded);
      if (lemma.empty() || is_stopword(lemma)) continue;
      if (!out.empty()) out.push_back(' ');
      out += lemma;
    }
    return out;
  }

  std::string normalize_sentence(const SentenceSpan& sentence) const { return normalize_words(sentence.words); }

  std::string normalize_sentence(std::string_view sentence) const { return normalize_words(split_words(sentence)); }

  std::size_t stopword_count() const { return stopwords_.size(); }
  const Lemmatizer& lemmatizer() const { return lemmatizer_; }

 private:
  std::unordered_set<std::string> stopwords_;
  Lemmatizer lemmatizer_;
};

inline std::string normalize_sentence(const SentenceSpan& sentence) {
  return TextNormalizer::standard().normalize_sentence(sentence);
}

}  // namespace stylomark

#endif  // STYLOMARK_NORMALIZER_HPP_
