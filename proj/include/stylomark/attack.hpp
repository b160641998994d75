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

// Word-substitution attacks on watermarked text.
//
// Word positions are visited in a seeded random order. Each visit proposes
// one replacement for the word's core; a proposal counts only if it differs
// from the original (case-insensitively). Visiting stops once
// replaced / total >= min_fraction or every position has been tried.
// Punctuation around each core is kept, so word count, sentence count and
// terminal punctuation never change.

#ifndef STYLOMARK_ATTACK_HPP_
#define STYLOMARK_ATTACK_HPP_

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "stylomark/error.hpp"
#include "stylomark/normalizer.hpp"
#include "stylomark/norms.hpp"
#include "stylomark/redgreen.hpp"
#include "stylomark/text_core.hpp"
#include "stylomark/vocabulary.hpp"

namespace stylomark {

enum class Substitution : std::uint8_t { kSynonymTable, kRandomVocab };

inline Substitution parse_substitution(std::string_view name) {
  const std::string n = ascii_lower(name);
  if (n == "synonym" || n == "synonyms" || n == "synonym-table") return Substitution::kSynonymTable;
  if (n == "random" || n == "random-vocab") return Substitution::kRandomVocab;
  throw ConfigError("unknown substitution source '" + std::string(name) + "' (expected synonym or random)");
}

struct AttackConfig {
  double min_fraction = 0.10;
  Substitution substitution = Substitution::kSynonymTable;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(min_fraction > 0.0 && min_fraction < 1.0)) throw ConfigError("attack min_fraction must lie in (0, 1)");
  }
};

struct AttackResult {
  std::string attacked_text;
  std::size_t replaced_count = 0;
  std::size_t total_words = 0;

  double replaced_fraction() const {
    return total_words == 0 ? 0.0 : static_cast<double>(replaced_count) / static_cast<double>(total_words);
  }
};

namespace detail {

// A replacement must be one word with no sentence boundary inside it.
inline bool is_single_word(std::string_view w) {
  const auto words = split_words(w);
  if (words.size() != 1 || words.front().surface != w) return false;
  for (const char c : w) {
    if (is_sentence_boundary(c)) return false;
  }
  return true;
}

// Copies the capitalization pattern of `like` onto `word`.
inline std::string match_case(std::string word, std::string_view like) {
  bool has_lower = false, has_upper = false;
  for (const char c : like) {
    if (c >= 'a' && c <= 'z') has_lower = true;
    if (c >= 'A' && c <= 'Z') has_upper = true;
  }
  if (has_upper && !has_lower && like.size() > 1) {
    for (char& c : word) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
  } else if (!like.empty() && like.front() >= 'A' && like.front() <= 'Z' && !word.empty() && word.front() >= 'a' &&
             word.front() <= 'z') {
    word.front() = static_cast<char>(word.front() - 'a' + 'A');
  }
  return word;
}

}  // namespace detail

// Two-column CSV "word,synonym"; one row per pair, a word may repeat.
class SynonymTable {
 public:
  void add(std::string_view word, std::string_view synonym) {
    const std::string w = fold_word(word);
    const std::string s = fold_word(synonym);
    if (w.empty() || s.empty() || w == s) return;
    auto& list = table_[w];
    if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
  }

  const std::vector<std::string>* candidates(std::string_view folded) const {
    auto it = table_.find(std::string(folded));
    return it == table_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return table_.size(); }
  std::size_t pair_count() const {
    std::size_t n = 0;
    for (const auto& [_, v] : table_) n += v.size();
    return n;
  }

  static SynonymTable load(const std::filesystem::path& path) {
    const auto lines = detail::read_data_lines(path);
    SynonymTable t;
    bool first = true;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].find_first_not_of(" \t") == std::string::npos) continue;
      const std::string where = path.string() + ":" + std::to_string(i + 1);
      const auto f = detail::parse_csv_line(lines[i]);
      if (first) {
        first = false;
        if (f.size() == 2 && ascii_lower(f[0]) == "word") continue;
      }
      if (f.size() != 2) throw DataError(where + ": expected 'word,synonym'");
      if (!detail::is_single_word(f[0]) || !detail::is_single_word(f[1])) {
        throw DataError(where + ": synonyms must be single words without sentence punctuation");
      }
      t.add(f[0], f[1]);
    }
    if (t.size() == 0) throw DataError(path.string() + ": no synonym pairs");
    return t;
  }

 private:
  std::map<std::string, std::vector<std::string>> table_;
};

// `vocabulary` is required for random substitution and `synonyms` for the
// synonym table.
inline AttackResult paraphrase_attack(std::string_view text, const AttackConfig& config,
                                      const Vocabulary* vocabulary, const SynonymTable* synonyms,
                                      const TextNormalizer& normalizer = TextNormalizer::standard()) {
  config.validate();
  if (config.substitution == Substitution::kSynonymTable && synonyms == nullptr) {
    throw ConfigError("synonym substitution needs a synonym table");
  }
  if (config.substitution == Substitution::kRandomVocab && vocabulary == nullptr) {
    throw ConfigError("random substitution needs a vocabulary");
  }
  const auto locs = locate_words(text);
  if (locs.empty()) throw ConfigError("paraphrase_attack: text has no words");

  std::vector<std::string> cores;
  cores.reserve(locs.size());
  for (const auto& l : locs) cores.emplace_back(text.substr(l.core_begin, l.core_end - l.core_begin));

  std::vector<std::size_t> order(locs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(config.seed ^ 0xA77AC4ED5EEDULL);
  for (std::size_t i = order.size(); i-- > 1;) std::swap(order[i], order[rng.next() % (i + 1)]);

  // Single-word vocabulary entries usable as random replacements.
  std::vector<TokenId> pool;
  if (config.substitution == Substitution::kRandomVocab) {
    for (std::size_t i = 0; i < vocabulary->size(); ++i) {
      const auto id = static_cast<TokenId>(i);
      if (!vocabulary->is_special(id) && detail::is_single_word(vocabulary->token(id))) pool.push_back(id);
    }
    if (pool.empty()) throw ConfigError("random substitution: vocabulary has no usable words");
  }

  auto propose = [&](const std::string& core) -> std::optional<std::string> {
    const std::string folded = fold_word(core);
    if (config.substitution == Substitution::kSynonymTable) {
      const auto* cands = synonyms->candidates(folded);
      if (cands == nullptr) cands = synonyms->candidates(normalizer.lemmatize(folded));
      if (cands == nullptr || cands->empty()) return std::nullopt;
      const std::string& pick = (*cands)[rng.next() % cands->size()];
      if (pick == folded) return std::nullopt;
      return detail::match_case(pick, core);
    }
    for (int attempt = 0; attempt < 16; ++attempt) {
      const std::string& tok = vocabulary->token(pool[rng.next() % pool.size()]);
      const auto w = split_words(tok);
      const std::string cand = w.front().core;
      if (fold_word(cand) != folded) return detail::match_case(cand, core);
    }
    return std::nullopt;
  };

  AttackResult result;
  result.total_words = locs.size();
  const double total = static_cast<double>(locs.size());
  for (const std::size_t pos : order) {
    if (static_cast<double>(result.replaced_count) / total >= config.min_fraction) break;
    if (auto r = propose(cores[pos])) {
      cores[pos] = std::move(*r);
      ++result.replaced_count;
    }
  }

  std::string& out = result.attacked_text;
  out.reserve(text.size() + 16);
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < locs.size(); ++i) {
    out.append(text.substr(cursor, locs[i].core_begin - cursor));
    out.append(cores[i]);
    cursor = locs[i].core_end;
  }
  out.append(text.substr(cursor));
  return result;
}

// Runs `command` through the shell with {"text": ...} on standard input and
// reads {"attacked_text": ...} from its standard output.
class ExternalAttacker {
 public:
  explicit ExternalAttacker(std::string command) : command_(std::move(command)) {
    if (command_.empty()) throw ConfigError("external attacker command is empty");
  }

  AttackResult run(std::string_view text) const {
    std::string tmpl = (std::filesystem::temp_directory_path() / "stylomark-attack-XXXXXX").string();
    const int fd = ::mkstemp(tmpl.data());
    if (fd < 0) throw DataError("cannot create a temporary file for the external attacker");
    ::close(fd);
    const std::filesystem::path input(tmpl);
    struct Cleanup {
      std::filesystem::path p;
      ~Cleanup() {
        std::error_code ec;
        std::filesystem::remove(p, ec);
      }
    } cleanup{input};
    {
      std::ofstream f(input, std::ios::binary);
      f << nlohmann::json{{"text", text}}.dump();
      if (!f) throw DataError("cannot write external attacker input");
    }
    const std::string cmd = command_ + " < '" + input.string() + "'";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw DataError("cannot start external attacker: " + command_);
    std::string output;
    char buf[4096];
    while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) output.append(buf, n);
    const int status = ::pclose(pipe);
    if (status != 0) throw DataError("external attacker exited with status " + std::to_string(status));
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(output);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("external attacker wrote invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("attacked_text") || !j["attacked_text"].is_string()) {
      throw DataError("external attacker output lacks a string 'attacked_text'");
    }
    AttackResult r;
    r.attacked_text = j["attacked_text"].get<std::string>();
    const auto before = split_words(text);
    const auto after = split_words(r.attacked_text);
    r.total_words = before.size();
    const std::size_t common = std::min(before.size(), after.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (fold_word(before[i].core) != fold_word(after[i].core)) ++r.replaced_count;
    }
    r.replaced_count += std::max(before.size(), after.size()) - common;
    return r;
  }

 private:
  std::string command_;
};

}  // namespace stylomark

#endif  // STYLOMARK_ATTACK_HPP_
