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

// Sensorimotor lexicon: word -> dominant class, plus per-class baselines.
//
// Norms CSV contract: a header row whose first column holds the word and
// which names all eleven classes; further columns are ignored. Class columns
// are matched by name, so both the short names used by the fixtures
//
//   word,touch,hearing,smell,taste,vision,interoception,
//        mouth_throat,hand_arm,foot_leg,head,torso
//
// and the Lancaster release headers (Haptic.mean, Auditory.mean, ...)
// load without conversion.
//
// Class-frequency CSV contract: header "class,frequency", then one row per
// class with a positive occurrence count. Classes not listed count as zero.

#ifndef STYLOMARK_NORMS_HPP_
#define STYLOMARK_NORMS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stylomark/error.hpp"
#include "stylomark/normalizer.hpp"
#include "stylomark/text_core.hpp"

namespace stylomark {

enum class SensorimotorClass : std::uint8_t {
  kTouch = 0,
  kHearing,
  kSmell,
  kTaste,
  kVision,
  kInteroception,
  kMouthThroat,
  kHandArm,
  kFootLeg,
  kHead,
  kTorso,
};

inline constexpr std::size_t kNumClasses = 11;

inline constexpr std::array<std::string_view, kNumClasses> kClassNames = {
    "touch", "hearing", "smell", "taste", "vision", "interoception",
    "mouth_throat", "hand_arm", "foot_leg", "head", "torso"};

constexpr std::size_t index_of(SensorimotorClass c) { return static_cast<std::size_t>(c); }

constexpr std::string_view class_name(SensorimotorClass c) { return kClassNames[index_of(c)]; }

inline SensorimotorClass class_at(std::size_t index) {
  if (index >= kNumClasses) throw ConfigError("sensorimotor class index out of range");
  return static_cast<SensorimotorClass>(index);
}

// Accepts the short names, "mouth/throat"-style spellings, and the
// Lancaster column names with or without a ".mean" suffix.
inline std::optional<SensorimotorClass> class_from_name(std::string_view name) {
  std::string n = ascii_lower(name);
  if (n.ends_with(".mean")) n.resize(n.size() - 5);
  std::replace(n.begin(), n.end(), '/', '_');
  std::replace(n.begin(), n.end(), '-', '_');
  static const std::unordered_map<std::string, SensorimotorClass> kAliases = {
      {"haptic", SensorimotorClass::kTouch},      {"auditory", SensorimotorClass::kHearing},
      {"olfactory", SensorimotorClass::kSmell},   {"gustatory", SensorimotorClass::kTaste},
      {"visual", SensorimotorClass::kVision},     {"interoceptive", SensorimotorClass::kInteroception},
      {"mouth", SensorimotorClass::kMouthThroat}, {"mouth_throat", SensorimotorClass::kMouthThroat},
  };
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    if (n == kClassNames[i]) return class_at(i);
  }
  if (auto it = kAliases.find(n); it != kAliases.end()) return it->second;
  return std::nullopt;
}

// p_c for every class.
using ClassBaselines = std::array<double, kNumClasses>;

inline constexpr double kBaselineFloor = 1e-6;

inline ClassBaselines uniform_baselines() {
  ClassBaselines b;
  b.fill(1.0 / static_cast<double>(kNumClasses));
  return b;
}

namespace detail {

// Splits one CSV record; supports double-quoted fields with "" escapes.
inline std::vector<std::string> parse_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  out.push_back(std::move(field));
  for (auto& f : out) {
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? std::string() : f.substr(b, e - b + 1);
  }
  return out;
}

inline double parse_number(const std::string& s, const std::string& where) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DataError(where + ": '" + s + "' is not a number");
  }
  if (used != s.size() || !std::isfinite(v)) throw DataError(where + ": '" + s + "' is not a number");
  return v;
}

}  // namespace detail

class NormsLexicon {
 public:
  NormsLexicon() : baselines_(uniform_baselines()) {}

  // Inserts a folded word. Returns false if the word is already present.
  bool insert(std::string folded_word, SensorimotorClass c) { return entries_.emplace(std::move(folded_word), c).second; }

  // Lemma lookup first, then the folded surface form, so that both
  // "whispers" (lemma) and a listed inflection such as "lips" resolve.
  std::optional<SensorimotorClass> class_of(std::string_view word,
                                            const TextNormalizer& normalizer = TextNormalizer::standard()) const {
    const std::string folded = fold_word(word);
    if (folded.empty()) return std::nullopt;
    if (auto it = entries_.find(normalizer.lemmatize(folded)); it != entries_.end()) return it->second;
    if (auto it = entries_.find(folded); it != entries_.end()) return it->second;
    return std::nullopt;
  }

  double baseline(SensorimotorClass c) const { return baselines_[index_of(c)]; }
  const ClassBaselines& baselines() const { return baselines_; }
  void set_baselines(const ClassBaselines& b) { baselines_ = b; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::unordered_map<std::string, SensorimotorClass>& entries() const { return entries_; }

 private:
  std::unordered_map<std::string, SensorimotorClass> entries_;
  ClassBaselines baselines_;
};

inline std::optional<SensorimotorClass> class_of(const NormsLexicon& lexicon, std::string_view word) {
  return lexicon.class_of(word);
}

// Dominant class = argmax over the eleven ratings, lowest index on ties.
// Rows whose ratings are all zero are dropped.
inline NormsLexicon load_norms(const std::filesystem::path& path) {
  const auto lines = detail::read_data_lines(path);
  std::size_t header_line = 0;
  while (header_line < lines.size() && lines[header_line].find_first_not_of(" \t") == std::string::npos) {
    ++header_line;
  }
  if (header_line == lines.size()) throw DataError(path.string() + ": empty norms file");
  const auto header = detail::parse_csv_line(lines[header_line]);
  std::array<std::size_t, kNumClasses> column{};
  column.fill(std::string::npos);
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (auto c = class_from_name(header[i]); c && column[index_of(*c)] == std::string::npos) {
      column[index_of(*c)] = i;
    }
  }
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    if (column[c] == std::string::npos) {
      throw DataError(path.string() + ":" + std::to_string(header_line + 1) + ": header has no column for class '" +
                      std::string(kClassNames[c]) + "'");
    }
  }
  const std::size_t needed = *std::max_element(column.begin(), column.end()) + 1;

  NormsLexicon lexicon;
  for (std::size_t li = header_line + 1; li < lines.size(); ++li) {
    if (lines[li].find_first_not_of(" \t") == std::string::npos) continue;
    const std::string where = path.string() + ":" + std::to_string(li + 1);
    const auto fields = detail::parse_csv_line(lines[li]);
    if (fields.size() < needed) {
      throw DataError(where + ": expected at least " + std::to_string(needed) + " columns, got " +
                      std::to_string(fields.size()));
    }
    const std::string word = fold_word(fields[0]);
    if (word.empty()) throw DataError(where + ": empty word");
    std::size_t best = 0;
    double best_value = 0.0;
    bool any_nonzero = false;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      const double v = detail::parse_number(fields[column[c]], where);
      if (v != 0.0) any_nonzero = true;
      if (c == 0 || v > best_value) {
        best = c;
        best_value = v;
      }
    }
    if (!any_nonzero) continue;
    if (!lexicon.insert(word, class_at(best))) throw DataError(where + ": duplicate word '" + word + "'");
  }
  return lexicon;
}

// p_c = count_c / sum of counts, clamped to [1e-6, 1 - 1e-6].
inline ClassBaselines load_class_frequencies(const std::filesystem::path& path) {
  const auto lines = detail::read_data_lines(path);
  std::array<double, kNumClasses> counts{};
  bool seen_header = false;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    if (lines[li].find_first_not_of(" \t") == std::string::npos) continue;
    const std::string where = path.string() + ":" + std::to_string(li + 1);
    const auto fields = detail::parse_csv_line(lines[li]);
    if (!seen_header) {
      seen_header = true;
      if (fields.size() >= 2 && ascii_lower(fields[0]) == "class") continue;
    }
    if (fields.size() != 2) throw DataError(where + ": expected 'class,frequency'");
    const auto c = class_from_name(fields[0]);
    if (!c) throw DataError(where + ": unknown class '" + fields[0] + "'");
    const double f = detail::parse_number(fields[1], where);
    if (!(f > 0.0)) throw DataError(where + ": frequency must be positive");
    counts[index_of(*c)] += f;
  }
  double total = 0.0;
  for (const double v : counts) total += v;
  if (!(total > 0.0)) throw DataError(path.string() + ": no class frequencies");
  ClassBaselines b;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    b[c] = std::clamp(counts[c] / total, kBaselineFloor, 1.0 - kBaselineFloor);
  }
  return b;
}

}  // namespace stylomark

#endif  // STYLOMARK_NORMS_HPP_
