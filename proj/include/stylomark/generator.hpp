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

// Watermarked generation against a pluggable logit source.
//
// Each step fetches logits, adds the boosts selected by the current key and
// samples one token:
//
//   sentence start and acrostic on:   +delta_acro  to tokens whose first
//                                     letter is the key letter
//   otherwise, sensorimotor on:       +delta_senso to lexicon tokens of the
//                                     key class
//   red-green on (every step):        +delta_redgreen to the green list of
//                                     the previous token
//
// The key advances from the emitted text itself, through the same
// segmentation the detector uses.

#ifndef STYLOMARK_GENERATOR_HPP_
#define STYLOMARK_GENERATOR_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "stylomark/error.hpp"
#include "stylomark/keystream.hpp"
#include "stylomark/normalizer.hpp"
#include "stylomark/norms.hpp"
#include "stylomark/redgreen.hpp"
#include "stylomark/text_core.hpp"
#include "stylomark/vocabulary.hpp"

namespace stylomark {

enum class Feature : std::uint8_t { kAcrostic, kSensorimotor, kRedGreen };

struct FeatureSet {
  bool acro = false;
  bool senso = false;
  bool redgreen = false;

  static constexpr FeatureSet all() { return {true, true, true}; }
  static constexpr FeatureSet none() { return {}; }

  constexpr bool contains(Feature f) const {
    switch (f) {
      case Feature::kAcrostic: return acro;
      case Feature::kSensorimotor: return senso;
      case Feature::kRedGreen: return redgreen;
    }
    return false;
  }
  constexpr bool empty() const { return !acro && !senso && !redgreen; }

  // "acro+senso+redgreen", "redgreen", or "none".
  std::string name() const {
    std::string out;
    auto add = [&](bool on, const char* n) {
      if (!on) return;
      if (!out.empty()) out += '+';
      out += n;
    };
    add(acro, "acro");
    add(senso, "senso");
    add(redgreen, "redgreen");
    return out.empty() ? "none" : out;
  }

  // Accepts "all", "none", and lists joined by ',' or '+'.
  static FeatureSet parse(std::string_view text) {
    const std::string t = ascii_lower(text);
    if (t == "all") return all();
    if (t == "none" || t.empty()) return none();
    FeatureSet fs;
    std::size_t start = 0;
    while (start <= t.size()) {
      std::size_t end = t.find_first_of(",+", start);
      if (end == std::string::npos) end = t.size();
      const std::string item = t.substr(start, end - start);
      if (item == "acro" || item == "acrostic") fs.acro = true;
      else if (item == "senso" || item == "sensorimotor") fs.senso = true;
      else if (item == "redgreen" || item == "red-green" || item == "rg") fs.redgreen = true;
      else throw ConfigError("unknown watermark feature '" + item + "' (expected acro, senso, redgreen)");
      start = end + 1;
    }
    return fs;
  }

  // The seven non-empty subsets, singles first.
  static std::vector<FeatureSet> nonempty_subsets() {
    return {{true, false, false}, {false, true, false}, {false, false, true}, {true, true, false},
            {true, false, true},  {false, true, true},  {true, true, true}};
  }

  friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
};

struct Strengths {
  double senso = 2.5;
  double acro = 20.0;
  double redgreen = 2.0;

  static constexpr Strengths weak() { return {1.0, 10.0, 1.0}; }
  static constexpr Strengths medium() { return {2.5, 20.0, 2.0}; }
  static constexpr Strengths strong() { return {5.0, 40.0, 10.0}; }

  static Strengths named(std::string_view name) {
    const std::string n = ascii_lower(name);
    if (n == "weak") return weak();
    if (n == "medium" || n == "middle") return medium();
    if (n == "strong") return strong();
    throw ConfigError("unknown strength setting '" + std::string(name) + "' (expected weak, medium, strong)");
  }

  friend bool operator==(const Strengths&, const Strengths&) = default;
};

struct SamplerConfig {
  enum class Kind : std::uint8_t { kGreedy, kMultinomial };
  Kind kind = Kind::kMultinomial;
  double temperature = 1.0;
  std::uint64_t seed = 0;

  static SamplerConfig greedy() { return {Kind::kGreedy, 1.0, 0}; }
  static SamplerConfig multinomial(double temperature, std::uint64_t seed) {
    return {Kind::kMultinomial, temperature, seed};
  }
};

struct WatermarkConfig {
  double delta_acro = 20.0;
  double delta_senso = 2.5;
  double delta_redgreen = 2.0;
  double gamma = 0.5;
  FeatureSet enabled = FeatureSet::all();
  std::size_t max_tokens = 200;
  std::size_t max_sentences = 0;  // 0: no sentence cap
  bool allow_eos = true;          // stop on the source's end-of-text token
  SamplerConfig sampler;

  static WatermarkConfig with_strengths(const Strengths& s, FeatureSet features = FeatureSet::all()) {
    WatermarkConfig c;
    c.delta_acro = s.acro;
    c.delta_senso = s.senso;
    c.delta_redgreen = s.redgreen;
    c.enabled = features;
    return c;
  }

  Strengths strengths() const { return {delta_senso, delta_acro, delta_redgreen}; }

  void validate() const {
    auto check_delta = [](double d, const char* name) {
      if (!(d >= 0.0) || !std::isfinite(d)) throw ConfigError(std::string(name) + " must be a finite value >= 0");
    };
    check_delta(delta_acro, "delta_acro");
    check_delta(delta_senso, "delta_senso");
    check_delta(delta_redgreen, "delta_redgreen");
    if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("gamma must lie in (0, 1)");
    if (max_tokens == 0) throw ConfigError("max_tokens must be positive");
    if (sampler.kind == SamplerConfig::Kind::kMultinomial &&
        !(sampler.temperature > 0.0 && std::isfinite(sampler.temperature))) {
      throw ConfigError("sampler temperature must be positive");
    }
  }
};

// Anything that produces next-token logits over a fixed vocabulary.
// Implementations must be safe for concurrent const use.
class LogitSource {
 public:
  virtual ~LogitSource() = default;

  virtual const Vocabulary& vocabulary() const = 0;

  // Length == vocabulary().size(), finite or -inf.
  virtual std::vector<double> next_logits(std::span<const TokenId> context) const = 0;

  // Whitespace tokenization with UNK fallback. Word-level sources override
  // this with their own canonical tokenizer.
  virtual std::vector<TokenId> encode(std::string_view text) const {
    std::vector<TokenId> ids;
    for (const auto& loc : locate_words(text)) {
      const auto surface = text.substr(loc.begin, loc.end - loc.begin);
      const auto id = vocabulary().id_or_unk(surface);
      if (!id) throw DataError("token '" + std::string(surface) + "' is not in the vocabulary and there is no UNK");
      ids.push_back(*id);
    }
    return ids;
  }
};

// Per-token facts the boosts depend on, computed once per vocabulary.
//
// Word mode (no token carries a word-start marker): every token is a word
// and the text is the tokens joined by single spaces. Subword mode (tokens
// marked with U+2581 or U+0120 start a word): acrostic boosts go to
// word-initial tokens only, and sensorimotor boosts to word-initial tokens
// that are a prefix (3+ letters, or the whole word) of a lexicon word.
class TokenTable {
 public:
  static constexpr std::int8_t kNoLetter = -1;

  TokenTable(const Vocabulary& vocabulary, const NormsLexicon* lexicon,
             const TextNormalizer& normalizer = TextNormalizer::standard()) {
    const std::size_t v = vocabulary.size();
    for (const auto& t : vocabulary.tokens()) {
      if (marker_length(t) > 0) {
        subword_ = true;
        break;
      }
    }
    letter_.assign(v, kNoLetter);
    classes_.assign(v, 0);
    starts_word_.assign(v, 0);
    pieces_.resize(v);

    std::vector<std::pair<std::string, SensorimotorClass>> lexicon_words;
    if (subword_ && lexicon != nullptr) {
      lexicon_words.assign(lexicon->entries().begin(), lexicon->entries().end());
      std::sort(lexicon_words.begin(), lexicon_words.end());
    }

    for (std::size_t i = 0; i < v; ++i) {
      const auto id = static_cast<TokenId>(i);
      const std::string& tok = vocabulary.token(id);
      if (vocabulary.is_special(id)) continue;
      std::string_view body = tok;
      bool starts = true;
      if (subword_) {
        const std::size_t m = marker_length(tok);
        starts = m > 0;
        body.remove_prefix(m);
        pieces_[i] = (starts ? " " : "") + std::string(body);
      } else {
        pieces_[i] = tok;
      }
      const auto words = split_words(body);
      if (words.empty()) continue;
      starts_word_[i] = starts ? 1 : 0;
      if (!starts) continue;
      if (auto l = first_letter_index(words.front().core)) letter_[i] = static_cast<std::int8_t>(*l);
      if (lexicon == nullptr) continue;
      if (!subword_) {
        if (auto c = lexicon->class_of(words.front().core, normalizer)) classes_[i] = bit(*c);
        continue;
      }
      const std::string prefix = fold_word(words.front().core);
      if (auto c = lexicon->class_of(prefix, normalizer)) classes_[i] |= bit(*c);
      if (prefix.size() >= 3) {
        auto it = std::lower_bound(lexicon_words.begin(), lexicon_words.end(),
                                   std::pair<std::string, SensorimotorClass>{prefix, SensorimotorClass::kTouch});
        for (; it != lexicon_words.end() && it->first.starts_with(prefix); ++it) classes_[i] |= bit(it->second);
      }
    }
  }

  std::size_t size() const { return letter_.size(); }
  bool subword() const { return subword_; }

  std::optional<int> first_letter(TokenId id) const {
    const auto l = letter_[static_cast<std::size_t>(id)];
    if (l == kNoLetter) return std::nullopt;
    return l;
  }
  bool in_class(TokenId id, SensorimotorClass c) const { return (classes_[static_cast<std::size_t>(id)] & bit(c)) != 0; }
  bool starts_word(TokenId id) const { return starts_word_[static_cast<std::size_t>(id)] != 0; }

  // Text appended to the output when `id` is emitted.
  std::string piece(TokenId id, bool first) const {
    const std::string& p = pieces_[static_cast<std::size_t>(id)];
    if (subword_) return first && p.starts_with(' ') ? p.substr(1) : p;
    return first ? p : " " + p;
  }

 private:
  static std::uint16_t bit(SensorimotorClass c) { return static_cast<std::uint16_t>(1u << index_of(c)); }

  static std::size_t marker_length(std::string_view t) {
    if (t.starts_with("\xE2\x96\x81")) return 3;  // U+2581
    if (t.starts_with("\xC4\xA0")) return 2;      // U+0120
    return 0;
  }

  bool subword_ = false;
  std::vector<std::int8_t> letter_;
  std::vector<std::uint16_t> classes_;
  std::vector<std::uint8_t> starts_word_;
  std::vector<std::string> pieces_;
};

// Everything generation and detection share for one vocabulary: lexicon,
// normalizer, token facts and the green-list cache. Immutable after
// construction apart from the internally locked cache.
class WatermarkContext {
 public:
  WatermarkContext(const Vocabulary& vocabulary, const NormsLexicon* lexicon, double gamma,
                   const TextNormalizer& normalizer = TextNormalizer::standard())
      : vocabulary_(&vocabulary),
        lexicon_(lexicon),
        normalizer_(&normalizer),
        gamma_(gamma),
        table_(vocabulary, lexicon, normalizer),
        greens_(vocabulary.size(), gamma) {}

  const Vocabulary& vocabulary() const { return *vocabulary_; }
  const NormsLexicon* lexicon() const { return lexicon_; }
  const TextNormalizer& normalizer() const { return *normalizer_; }
  double gamma() const { return gamma_; }
  const TokenTable& tokens() const { return table_; }
  std::shared_ptr<const GreenList> green_list_after(std::string_view prev_token) const {
    return greens_.get(prev_token);
  }
  const GreenListCache& green_cache() const { return greens_; }

 private:
  const Vocabulary* vocabulary_;
  const NormsLexicon* lexicon_;
  const TextNormalizer* normalizer_;
  double gamma_;
  TokenTable table_;
  GreenListCache greens_;
};

struct BoostCounts {
  bool acro_applied = false;
  std::size_t acro = 0;
  std::size_t senso = 0;
  std::size_t green = 0;
};

// Adds the boosts for one step to `logits` in place. With no previous token
// (nullopt) the red-green boost is skipped.
inline BoostCounts apply_boosts(std::span<double> logits, const KeyState& state, bool sentence_start,
                                std::optional<std::string_view> prev_token, const WatermarkConfig& config,
                                const WatermarkContext& ctx) {
  const TokenTable& table = ctx.tokens();
  if (logits.size() != table.size()) {
    throw ConfigError("adjust_logits: got " + std::to_string(logits.size()) + " logits for a vocabulary of " +
                      std::to_string(table.size()));
  }
  BoostCounts counts;
  const auto v = static_cast<TokenId>(logits.size());
  if (sentence_start && config.enabled.acro) {
    counts.acro_applied = true;
    for (TokenId id = 0; id < v; ++id) {
      if (table.first_letter(id) == static_cast<int>(state.acro_letter)) {
        logits[static_cast<std::size_t>(id)] += config.delta_acro;
        ++counts.acro;
      }
    }
  } else if (config.enabled.senso) {
    const auto cls = class_at(state.senso_class);
    for (TokenId id = 0; id < v; ++id) {
      if (table.in_class(id, cls)) {
        logits[static_cast<std::size_t>(id)] += config.delta_senso;
        ++counts.senso;
      }
    }
  }
  if (config.enabled.redgreen && prev_token) {
    const auto greens = ctx.green_list_after(*prev_token);
    for (const auto id : greens->ids()) logits[id] += config.delta_redgreen;
    counts.green = greens->size();
  }
  return counts;
}

inline std::vector<double> adjust_logits(std::span<const double> logits, const KeyState& state, bool sentence_start,
                                         std::optional<std::string_view> prev_token, const WatermarkConfig& config,
                                         const WatermarkContext& ctx) {
  std::vector<double> out(logits.begin(), logits.end());
  apply_boosts(out, state, sentence_start, prev_token, config, ctx);
  return out;
}

// Standalone form; builds the token table on every call.
inline std::vector<double> adjust_logits(std::span<const double> logits, const KeyState& state, bool sentence_start,
                                         std::string_view prev_token, const WatermarkConfig& config,
                                         const NormsLexicon* lexicon, const Vocabulary& vocabulary) {
  const WatermarkContext ctx(vocabulary, lexicon, config.gamma);
  return adjust_logits(logits, state, sentence_start, std::optional<std::string_view>(prev_token), config, ctx);
}

// Draws from softmax(logits / T), or takes the argmax (lowest id on ties).
// Tokens at -inf are never chosen.
inline TokenId sample_token(std::span<const double> logits, const SamplerConfig& sampler, SplitMix64& rng) {
  double top = -std::numeric_limits<double>::infinity();
  std::size_t arg = logits.size();
  for (std::size_t i = 0; i < logits.size(); ++i) {
    if (logits[i] > top) {
      top = logits[i];
      arg = i;
    }
  }
  if (arg == logits.size()) throw Error("sampler: every token is masked");
  if (sampler.kind == SamplerConfig::Kind::kGreedy) return static_cast<TokenId>(arg);
  std::vector<double> weights(logits.size());
  double total = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    weights[i] = std::exp((logits[i] - top) / sampler.temperature);
    total += weights[i];
  }
  const double u = rng.next_double() * total;
  double acc = 0.0;
  std::size_t last = arg;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0.0) continue;
    acc += weights[i];
    last = i;
    if (u < acc) return static_cast<TokenId>(i);
  }
  return static_cast<TokenId>(last);
}

struct TraceStep {
  TokenId token_id = 0;
  std::string token;
  KeyState key_before;
  bool sentence_start = false;
  std::size_t sentence_index = 0;
  bool acro_boost_applied = false;
  std::size_t acro_boost_count = 0;
  std::size_t senso_boost_count = 0;
  std::size_t green_boost_count = 0;
};

// One completed word of the output, with what the detector will see for it.
struct TraceWord {
  std::string surface;
  KeyState key_before;
  std::size_t sentence_index = 0;
  bool first_in_sentence = false;
  std::optional<SensorimotorClass> lexicon_class;
  std::optional<bool> green;       // absent for the first word (no transition)
  std::optional<bool> acro_match;  // set on the first word of sentences after the first
};

// Raw counts behind the three p-values.
struct FeatureCounters {
  std::size_t acro_checks = 0;
  std::size_t acro_matches = 0;
  std::array<std::size_t, kNumClasses> class_checks{};
  std::array<std::size_t, kNumClasses> class_matches{};
  std::size_t transitions = 0;
  std::size_t green = 0;

  friend bool operator==(const FeatureCounters&, const FeatureCounters&) = default;
};

inline void to_json(nlohmann::json& j, const FeatureCounters& c) {
  j = nlohmann::json{{"acro_checks", c.acro_checks}, {"acro_matches", c.acro_matches},
                     {"class_checks", c.class_checks}, {"class_matches", c.class_matches},
                     {"transitions", c.transitions}, {"green", c.green}};
}

struct GenerationTrace {
  std::vector<TraceStep> steps;
  std::vector<TraceWord> words;
  bool stopped_on_eos = false;

  std::size_t size() const { return steps.size(); }

  FeatureCounters counters() const {
    FeatureCounters c;
    for (const auto& w : words) {
      if (w.acro_match) {
        ++c.acro_checks;
        if (*w.acro_match) ++c.acro_matches;
      }
      if (w.lexicon_class) {
        ++c.class_checks[w.key_before.senso_class];
        if (index_of(*w.lexicon_class) == w.key_before.senso_class) ++c.class_matches[w.key_before.senso_class];
      }
      if (w.green) {
        ++c.transitions;
        if (*w.green) ++c.green;
      }
    }
    return c;
  }
};

inline nlohmann::json to_json(const TraceStep& s) {
  return {{"token_id", s.token_id},
          {"token", s.token},
          {"senso_class", s.key_before.senso_class},
          {"acro_letter", std::string(1, s.key_before.letter())},
          {"sentence_start", s.sentence_start},
          {"sentence_index", s.sentence_index},
          {"acro_boost_applied", s.acro_boost_applied},
          {"acro_boost_count", s.acro_boost_count},
          {"senso_boost_count", s.senso_boost_count},
          {"green_boost_count", s.green_boost_count}};
}

// One JSON object per line, one line per step.
inline void write_trace_jsonl(std::ostream& out, const GenerationTrace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    auto j = to_json(trace.steps[i]);
    j["step"] = i;
    out << j.dump() << '\n';
  }
}

struct GenerationResult {
  std::string text;
  std::vector<TokenId> tokens;
  GenerationTrace trace;
};

// A zero sensorimotor boost changes nothing, so it needs no lexicon.
inline void require_lexicon_if_needed(const WatermarkConfig& config, const NormsLexicon* lexicon) {
  if (config.enabled.senso && config.delta_senso > 0.0 && (lexicon == nullptr || lexicon->empty())) {
    throw ConfigError("the sensorimotor feature is enabled but no norms lexicon was loaded; pass a norms file "
                      "or disable the feature");
  }
}

// Streaming watermarked generation. The prompt only conditions the model:
// the key starts from init_key() at the first generated token, and the
// returned text is the completion alone.
inline GenerationResult generate(const LogitSource& model, std::string_view prompt, const WatermarkConfig& config,
                                 const WatermarkContext& ctx) {
  config.validate();
  require_lexicon_if_needed(config, ctx.lexicon());
  const Vocabulary& vocab = model.vocabulary();
  if (vocab.size() != ctx.vocabulary().size()) throw ConfigError("generate: context built for another vocabulary");

  std::vector<TokenId> context = model.encode(prompt);
  const std::size_t prompt_len = context.size();
  std::optional<std::string> prev_token;
  if (prompt_len > 0) prev_token = vocab.token(context.back());

  GenerationResult result;
  KeystreamTracker tracker(ctx.normalizer());
  SplitMix64 rng(config.sampler.seed);
  std::optional<std::string> prev_word;

  const auto& lexicon = ctx.lexicon();
  auto on_word = [&](const StreamWord& ev) {
    TraceWord w;
    w.surface = ev.word.surface;
    w.key_before = ev.key_before;
    w.sentence_index = ev.sentence_index;
    w.first_in_sentence = ev.first_in_sentence;
    if (lexicon != nullptr) w.lexicon_class = lexicon->class_of(ev.word.core, ctx.normalizer());
    if (prev_word) {
      const auto id = vocab.id_or_unk(ev.word.surface);
      w.green = id && ctx.green_list_after(*prev_word)->contains(static_cast<std::size_t>(*id));
    }
    if (ev.first_in_sentence && ev.sentence_index > 0) {
      w.acro_match = first_letter_index(ev.word.core) == static_cast<int>(ev.key_before.acro_letter);
    }
    prev_word = ev.word.surface;
    result.trace.words.push_back(std::move(w));
  };

  for (std::size_t step = 0; step < config.max_tokens; ++step) {
    if (config.max_sentences > 0 && tracker.sentence_index() >= config.max_sentences) break;
    std::vector<double> logits;
    try {
      logits = model.next_logits(context);
    } catch (const std::exception& e) {
      throw Error("generate: logit source failed at step " + std::to_string(step) + ": " + e.what());
    }
    if (logits.size() != vocab.size()) {
      throw Error("generate: logit source returned " + std::to_string(logits.size()) + " values at step " +
                  std::to_string(step) + ", expected " + std::to_string(vocab.size()));
    }
    TraceStep rec;
    rec.key_before = tracker.preview_key();
    rec.sentence_start = tracker.preview_sentence_start();
    rec.sentence_index = tracker.sentence_index();
    std::optional<std::string_view> prev;
    if (prev_token) prev = *prev_token;
    const auto counts = apply_boosts(logits, rec.key_before, rec.sentence_start, prev, config, ctx);
    rec.acro_boost_applied = counts.acro_applied;
    rec.acro_boost_count = counts.acro;
    rec.senso_boost_count = counts.senso;
    rec.green_boost_count = counts.green;
    if (auto unk = vocab.unk_id()) logits[static_cast<std::size_t>(*unk)] = -std::numeric_limits<double>::infinity();
    const auto eos = vocab.eos_id();
    if (eos && !config.allow_eos) logits[static_cast<std::size_t>(*eos)] = -std::numeric_limits<double>::infinity();

    const TokenId id = sample_token(logits, config.sampler, rng);
    if (eos && id == *eos) {
      result.trace.stopped_on_eos = true;
      break;
    }
    const std::string piece = ctx.tokens().piece(id, result.tokens.empty());
    tracker.feed(piece, on_word);
    result.text += piece;
    rec.token_id = id;
    rec.token = vocab.token(id);
    result.trace.steps.push_back(std::move(rec));
    result.tokens.push_back(id);
    context.push_back(id);
    prev_token = vocab.token(id);
  }
  tracker.finish(on_word);
  return result;
}

inline GenerationResult generate(const LogitSource& model, std::string_view prompt, const WatermarkConfig& config,
                                 const NormsLexicon* lexicon = nullptr) {
  config.validate();
  require_lexicon_if_needed(config, lexicon);
  const WatermarkContext ctx(model.vocabulary(), lexicon, config.gamma);
  return generate(model, prompt, config, ctx);
}

// exp(mean negative log-probability) of `text` under the unadjusted model,
// optionally conditioned on a preceding context.
inline double perplexity(const LogitSource& model, std::string_view text, std::string_view context_text = {}) {
  const auto tokens = model.encode(text);
  if (tokens.empty()) throw ConfigError("perplexity: text has no tokens");
  std::vector<TokenId> context = context_text.empty() ? std::vector<TokenId>{} : model.encode(context_text);
  double nll = 0.0;
  for (const TokenId t : tokens) {
    const auto logits = model.next_logits(context);
    if (logits.size() != model.vocabulary().size()) throw Error("perplexity: logit source returned wrong length");
    double top = -std::numeric_limits<double>::infinity();
    for (const double l : logits) top = std::max(top, l);
    double sum = 0.0;
    for (const double l : logits) sum += std::exp(l - top);
    nll -= logits[static_cast<std::size_t>(t)] - top - std::log(sum);
    context.push_back(t);
  }
  return std::exp(nll / static_cast<double>(tokens.size()));
}

}  // namespace stylomark

#endif  // STYLOMARK_GENERATOR_HPP_
