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

// Model-free detection.
//
// The key is rebuilt from the text, then three one-sided tests run over it:
//
//   acrostic      n first-word checks on sentences 2.., k letter matches,
//                 p = P(Binom(n, 1/26) >= k)
//   sensorimotor  per class c: n_c lexicon words read under class c, k_c of
//                 them in class c, p_c = P(Binom(n_c, base_c) >= k_c);
//                 combined p = product over classes
//   red-green     T word transitions, G green words,
//                 Z = (G - gamma T) / sqrt(T gamma (1 - gamma)), p = 1 - Phi(Z)
//
// final_score is the product of the selected p-values. Every p-value is also
// kept as a logarithm, so strongly marked texts do not underflow to zero.

#ifndef STYLOMARK_DETECTOR_HPP_
#define STYLOMARK_DETECTOR_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "stylomark/error.hpp"
#include "stylomark/generator.hpp"
#include "stylomark/keystream.hpp"
#include "stylomark/norms.hpp"
#include "stylomark/stats.hpp"
#include "stylomark/text_core.hpp"
#include "stylomark/vocabulary.hpp"

namespace stylomark {

inline constexpr double kAcrosticChance = 1.0 / 26.0;
inline constexpr const char* kDetectionSchema = "stylomark.detection/1";

struct AcrosticResult {
  std::size_t checks = 0;
  std::size_t matches = 0;
  double p_value = 1.0;
  double log_p = 0.0;
};

struct ClassResult {
  std::size_t checks = 0;
  std::size_t matches = 0;
  double baseline = 0.0;
  double p_value = 1.0;
  double log_p = 0.0;
};

struct SensorimotorResult {
  std::array<ClassResult, kNumClasses> classes{};
  double p_value = 1.0;
  double log_p = 0.0;
};

struct RedGreenResult {
  std::size_t transitions = 0;
  std::size_t green = 0;
  double z_score = 0.0;
  double p_value = 1.0;
  double log_p = 0.0;
};

struct DetectionReport {
  AcrosticResult acro;
  SensorimotorResult senso;
  RedGreenResult redgreen;
  FeatureSet features = FeatureSet::all();
  double gamma = 0.5;
  double alpha = 0.05;
  double log_final_score = 0.0;
  double final_score = 1.0;
  double log10_final_score = 0.0;
  double equivalent_z = 0.0;
  bool verdict = false;
  std::size_t sentences = 0;
  std::size_t words = 0;

  FeatureCounters counters() const {
    FeatureCounters c;
    c.acro_checks = acro.checks;
    c.acro_matches = acro.matches;
    for (std::size_t i = 0; i < kNumClasses; ++i) {
      c.class_checks[i] = senso.classes[i].checks;
      c.class_matches[i] = senso.classes[i].matches;
    }
    c.transitions = redgreen.transitions;
    c.green = redgreen.green;
    return c;
  }
};

// Key and position of every word as the detector read it.
struct DetectedWord {
  std::string surface;
  KeyState key_before;
  std::size_t sentence_index = 0;
};

struct DetectionDetail {
  DetectionReport report;
  std::vector<DetectedWord> words;
};

struct DetectorConfig {
  double gamma = 0.5;
  double alpha = 0.05;
  FeatureSet features = FeatureSet::all();

  void validate() const {
    if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("gamma must lie in (0, 1)");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  }
};

inline bool verdict(double final_score, double alpha) { return final_score < alpha; }

inline bool verdict(const DetectionReport& report, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  return report.log_final_score < std::log(alpha);
}

// Phi^{-1} of a score given as a natural log, bounded so that a score of
// exactly 1 maps to a finite value.
inline double equivalent_z_from_log(double log_score) {
  constexpr double kTop = -1.1102230246251565e-16;  // log(1 - 2^-53)
  return normal_quantile_from_log(std::min(log_score, kTop));
}

inline double red_green_z(std::size_t transitions, std::size_t green, double gamma) {
  if (transitions == 0) return 0.0;
  const double t = static_cast<double>(transitions);
  return (static_cast<double>(green) - gamma * t) / std::sqrt(t * gamma * (1.0 - gamma));
}

// Log of the product of the p-values of the selected features.
inline double combined_log_score(const DetectionReport& r, FeatureSet features) {
  double s = 0.0;
  if (features.acro) s += r.acro.log_p;
  if (features.senso) s += r.senso.log_p;
  if (features.redgreen) s += r.redgreen.log_p;
  return s;
}

inline double score_from_log(double log_score) {
  return std::max(std::exp(log_score), std::numeric_limits<double>::denorm_min());
}

// Recomputes the p-values and the final score from the raw counters.
inline void finalize_report(DetectionReport& r) {
  r.acro.log_p = log_binomial_sf(r.acro.checks, r.acro.matches, kAcrosticChance);
  r.acro.p_value = std::exp(r.acro.log_p);
  r.senso.log_p = 0.0;
  for (auto& c : r.senso.classes) {
    c.log_p = log_binomial_sf(c.checks, c.matches, c.baseline);
    c.p_value = std::exp(c.log_p);
    r.senso.log_p += c.log_p;
  }
  r.senso.p_value = std::exp(r.senso.log_p);
  auto& rg = r.redgreen;
  if (rg.transitions == 0) {
    rg.z_score = 0.0;
    rg.log_p = 0.0;
  } else {
    rg.z_score = red_green_z(rg.transitions, rg.green, r.gamma);
    rg.log_p = log_normal_sf(rg.z_score);
  }
  rg.p_value = std::exp(rg.log_p);
  r.log_final_score = combined_log_score(r, r.features);
  r.final_score = score_from_log(r.log_final_score);
  r.log10_final_score = r.log_final_score / std::numbers::ln10;
  r.equivalent_z = equivalent_z_from_log(r.log_final_score);
  r.verdict = r.log_final_score < std::log(r.alpha);
}

// `lexicon` may be null, in which case every n_c is 0. The vocabulary maps
// words to ids for the green-list test; unknown words map to UNK, and when
// there is no UNK they count as red.
inline DetectionDetail detect_detailed(std::string_view text, const NormsLexicon* lexicon,
                                       const Vocabulary& vocabulary, const DetectorConfig& config = {},
                                       const TextNormalizer& normalizer = TextNormalizer::standard(),
                                       const GreenListCache* cache = nullptr) {
  config.validate();
  std::optional<GreenListCache> local;
  if (cache == nullptr || cache->vocab_size() != vocabulary.size() || cache->gamma() != config.gamma) {
    local.emplace(vocabulary.size(), config.gamma);
    cache = &*local;
  }
  DetectionDetail out;
  DetectionReport& r = out.report;
  r.gamma = config.gamma;
  r.alpha = config.alpha;
  r.features = config.features;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    r.senso.classes[c].baseline = lexicon != nullptr ? lexicon->baselines()[c] : uniform_baselines()[c];
  }

  const auto sentences = split_sentences(text);
  r.sentences = sentences.size();
  KeyState key = init_key();
  const std::string* prev_surface = nullptr;
  for (std::size_t si = 0; si < sentences.size(); ++si) {
    const auto& s = sentences[si];
    if (si > 0) {
      ++r.acro.checks;
      if (first_letter_index(s.words.front().core) == static_cast<int>(key.acro_letter)) ++r.acro.matches;
    }
    for (const auto& w : s.words) {
      out.words.push_back({w.surface, key, si});
      if (lexicon != nullptr) {
        if (auto cls = lexicon->class_of(w.core, normalizer)) {
          auto& cr = r.senso.classes[key.senso_class];
          ++cr.checks;
          if (index_of(*cls) == key.senso_class) ++cr.matches;
        }
      }
      if (prev_surface != nullptr) {
        ++r.redgreen.transitions;
        const auto id = vocabulary.id_or_unk(w.surface);
        if (id && cache->get(*prev_surface)->contains(static_cast<std::size_t>(*id))) ++r.redgreen.green;
      }
      prev_surface = &w.surface;
      key = update_on_word(key, w.core, normalizer);
    }
    key = update_on_sentence(key, s, normalizer);
  }
  r.words = out.words.size();
  finalize_report(r);
  return out;
}

inline DetectionReport detect(std::string_view text, const NormsLexicon* lexicon, const Vocabulary& vocabulary,
                              const DetectorConfig& config = {},
                              const TextNormalizer& normalizer = TextNormalizer::standard(),
                              const GreenListCache* cache = nullptr) {
  return detect_detailed(text, lexicon, vocabulary, config, normalizer, cache).report;
}

inline DetectionDetail detect_detailed(std::string_view text, const WatermarkContext& ctx, DetectorConfig config) {
  config.gamma = ctx.gamma();
  return detect_detailed(text, ctx.lexicon(), ctx.vocabulary(), config, ctx.normalizer(), &ctx.green_cache());
}

inline DetectionReport detect(std::string_view text, const WatermarkContext& ctx, const DetectorConfig& config) {
  return detect_detailed(text, ctx, config).report;
}

inline nlohmann::json to_json(const DetectionReport& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const auto& cr = r.senso.classes[c];
    classes.push_back({{"class", kClassNames[c]},
                       {"n", cr.checks},
                       {"k", cr.matches},
                       {"baseline", cr.baseline},
                       {"p_value", cr.p_value},
                       {"log_p", cr.log_p}});
  }
  return {
      {"schema", kDetectionSchema},
      {"features", r.features.name()},
      {"gamma", r.gamma},
      {"alpha", r.alpha},
      {"sentences", r.sentences},
      {"words", r.words},
      {"acrostic",
       {{"n", r.acro.checks}, {"k", r.acro.matches}, {"p_value", r.acro.p_value}, {"log_p", r.acro.log_p}}},
      {"sensorimotor", {{"classes", classes}, {"p_value", r.senso.p_value}, {"log_p", r.senso.log_p}}},
      {"redgreen",
       {{"T", r.redgreen.transitions},
        {"G", r.redgreen.green},
        {"z_score", r.redgreen.z_score},
        {"p_value", r.redgreen.p_value},
        {"log_p", r.redgreen.log_p}}},
      {"final_score", r.final_score},
      {"log10_final_score", r.log10_final_score},
      {"equivalent_z", r.equivalent_z},
      {"verdict", r.verdict},
  };
}

}  // namespace stylomark

#endif  // STYLOMARK_DETECTOR_HPP_
