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

// Experiment harness: prompts from a corpus, one generation per
// (configuration, sample), optional attack, detection and perplexity, then
// aggregation and pairwise significance.
//
// Row order and every number in the output depend only on the spec and its
// seeds. Samples run in parallel; results are stored by sample index and
// reduced in that order.

#ifndef STYLOMARK_EVAL_HPP_
#define STYLOMARK_EVAL_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "stylomark/attack.hpp"
#include "stylomark/detector.hpp"
#include "stylomark/error.hpp"
#include "stylomark/generator.hpp"
#include "stylomark/norms.hpp"
#include "stylomark/stats.hpp"
#include "stylomark/toy_model.hpp"

namespace stylomark {

inline constexpr const char* kResultsSchema = "stylomark.results/1";
inline constexpr const char* kHumanConfig = "human";
inline constexpr const char* kUnwatermarkedConfig = "unwatermarked";

struct Prompt {
  std::size_t document = 0;
  std::string prompt;
  std::string human_completion;
  std::size_t prompt_tokens = 0;
  std::size_t completion_tokens = 0;
};

struct PromptSet {
  std::vector<Prompt> prompts;
  std::size_t skipped = 0;  // documents too short for the requested split
  std::vector<std::string> warnings;
};

inline std::string join_tokens(const std::vector<std::string>& toks, std::size_t begin, std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out.push_back(' ');
    out += toks[i];
  }
  return out;
}

// Picks n documents in seeded random order. The last completion_len tokens
// of each become the human completion and up to prompt_len tokens before
// them the prompt (prompt_len 0: everything before).
inline PromptSet make_prompts(const std::vector<std::vector<std::string>>& documents, std::size_t n,
                              std::size_t prompt_len, std::size_t completion_len, std::uint64_t seed) {
  if (completion_len == 0) throw ConfigError("make_prompts: completion length must be positive");
  PromptSet out;
  std::vector<std::size_t> eligible;
  const std::size_t min_prompt = std::max<std::size_t>(prompt_len, 1);
  for (std::size_t d = 0; d < documents.size(); ++d) {
    if (documents[d].size() >= completion_len + min_prompt) {
      eligible.push_back(d);
    } else {
      ++out.skipped;
    }
  }
  if (out.skipped > 0) {
    out.warnings.push_back(std::to_string(out.skipped) + " document(s) shorter than " +
                           std::to_string(completion_len + min_prompt) + " tokens were skipped");
  }
  if (n > eligible.size()) {
    throw ConfigError("make_prompts: requested " + std::to_string(n) + " prompts but only " +
                      std::to_string(eligible.size()) + " document(s) are long enough (short by " +
                      std::to_string(n - eligible.size()) + ")");
  }
  SplitMix64 rng(seed ^ 0x9E0F7D3A11C4B5ULL);
  for (std::size_t i = eligible.size(); i-- > 1;) std::swap(eligible[i], eligible[rng.next() % (i + 1)]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& toks = documents[eligible[i]];
    const std::size_t split = toks.size() - completion_len;
    const std::size_t start = prompt_len == 0 ? 0 : split - std::min(prompt_len, split);
    Prompt p;
    p.document = eligible[i];
    p.prompt = join_tokens(toks, start, split);
    p.human_completion = join_tokens(toks, split, toks.size());
    p.prompt_tokens = split - start;
    p.completion_tokens = completion_len;
    out.prompts.push_back(std::move(p));
  }
  return out;
}

inline PromptSet make_prompts(const std::filesystem::path& corpus, std::size_t n, std::size_t prompt_len,
                              std::size_t completion_len, std::uint64_t seed) {
  return make_prompts(split_documents(read_text_file(corpus)), n, prompt_len, completion_len, seed);
}

struct ExperimentSpec {
  std::string setting = "strong";  // weak, medium, strong or custom
  Strengths strengths = Strengths::strong();
  std::vector<FeatureSet> configurations = FeatureSet::nonempty_subsets();
  bool include_human = true;
  std::size_t n_samples = 100;
  std::size_t prompt_len = 50;
  std::size_t completion_len = 200;
  double alpha = 0.05;
  double gamma = 0.5;
  double temperature = 1.0;
  std::uint64_t seed = 1;
  bool attack = false;
  AttackConfig attack_config;
  bool ablation = false;
  std::size_t threads = 0;  // 0: hardware concurrency

  void validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
    if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("gamma must lie in (0, 1)");
    if (!(temperature > 0.0)) throw ConfigError("temperature must be positive");
    if (completion_len == 0) throw ConfigError("completion length must be positive");
    for (const auto& c : configurations) {
      if (c.empty()) throw ConfigError("experiment configurations must be non-empty feature subsets");
    }
    if (attack) attack_config.validate();
  }

  WatermarkConfig watermark(FeatureSet features, std::uint64_t sample_seed) const {
    auto c = WatermarkConfig::with_strengths(strengths, features);
    c.gamma = gamma;
    c.max_tokens = completion_len;
    c.allow_eos = false;  // completions have a fixed length, like the human ones
    c.sampler = SamplerConfig::multinomial(temperature, sample_seed);
    return c;
  }
};

// One generated (or human) text under one condition.
struct ResultRow {
  std::string configuration;
  std::string condition = "clean";  // or "attacked"
  std::size_t sample = 0;
  std::size_t document = 0;
  std::uint64_t seed = 0;
  double final_score = std::numeric_limits<double>::quiet_NaN();
  double log10_final_score = std::numeric_limits<double>::quiet_NaN();
  double equivalent_z = std::numeric_limits<double>::quiet_NaN();
  double p_acro = std::numeric_limits<double>::quiet_NaN();
  double p_senso = std::numeric_limits<double>::quiet_NaN();
  double p_redgreen = std::numeric_limits<double>::quiet_NaN();
  std::size_t acro_n = 0, acro_k = 0, senso_n = 0, senso_k = 0, transitions = 0, green = 0;
  double perplexity = std::numeric_limits<double>::quiet_NaN();
  bool detected = false;
  std::size_t sentences = 0;
  std::size_t words = 0;
  std::size_t replaced = 0;
  std::string error;
  std::string text;  // kept in memory for ablation; not written to CSV

  bool ok() const { return error.empty(); }
};

struct Aggregate {
  std::string configuration;
  std::string condition;
  std::size_t n = 0;
  std::size_t failed = 0;
  std::size_t detected = 0;
  double detection_rate = 0.0;
  double detection_se = 0.0;
  double mean_z = 0.0;
  double mean_perplexity = 0.0;
  double se_perplexity = 0.0;
  double perplexity_delta = 0.0;  // vs the unwatermarked rows of the same condition
  double acro_match_rate = 0.0, acro_match_se = 0.0;
  double senso_match_rate = 0.0, senso_match_se = 0.0;
  double green_fraction = 0.0, green_fraction_se = 0.0;
};

struct Significance {
  std::string a;
  std::string b;
  std::string condition;
  double u = 0.0;
  double p_value = 1.0;
  double p_adjusted = 1.0;
};

struct AblationPoint {
  std::string configuration;
  std::size_t sentences = 0;  // m
  std::size_t n_texts = 0;
  std::size_t detected = 0;
  double rate = 0.0;
  double se = 0.0;
};

struct ResultsTable {
  ExperimentSpec spec;
  std::vector<ResultRow> rows;
  std::vector<Aggregate> aggregates;
  std::vector<Significance> significance;
  std::vector<AblationPoint> ablation;
  std::vector<std::string> warnings;
};

namespace detail {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

inline MeanSe mean_se(const std::vector<double>& xs) {
  MeanSe r;
  if (xs.empty()) return r;
  const double n = static_cast<double>(xs.size());
  r.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (const double x : xs) ss += (x - r.mean) * (x - r.mean);
    r.se = std::sqrt(ss / (n - 1.0) / n);
  }
  return r;
}

inline double binomial_se(double rate, std::size_t n) {
  return n == 0 ? 0.0 : std::sqrt(rate * (1.0 - rate) / static_cast<double>(n));
}

inline std::uint64_t sample_seed(std::uint64_t base, std::size_t sample) {
  SplitMix64 rng(base * 0x100000001B3ULL + sample);
  return rng.next();
}

}  // namespace detail

// Aggregates depend on rows alone, grouped by (configuration, condition) in
// order of first appearance.
inline std::vector<Aggregate> aggregate(const std::vector<ResultRow>& rows) {
  std::vector<std::pair<std::string, std::string>> keys;
  std::map<std::pair<std::string, std::string>, std::vector<const ResultRow*>> groups;
  for (const auto& r : rows) {
    auto key = std::make_pair(r.configuration, r.condition);
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) keys.push_back(key);
    it->second.push_back(&r);
  }
  std::map<std::string, double> reference_ppl;
  std::vector<Aggregate> out;
  for (const auto& key : keys) {
    const auto& g = groups[key];
    Aggregate a;
    a.configuration = key.first;
    a.condition = key.second;
    a.n = g.size();
    std::vector<double> z, ppl, acro, senso, green;
    for (const ResultRow* r : g) {
      if (!r->ok()) {
        ++a.failed;
        continue;
      }
      if (r->detected) ++a.detected;
      z.push_back(r->equivalent_z);
      ppl.push_back(r->perplexity);
      if (r->acro_n > 0) acro.push_back(static_cast<double>(r->acro_k) / static_cast<double>(r->acro_n));
      if (r->senso_n > 0) senso.push_back(static_cast<double>(r->senso_k) / static_cast<double>(r->senso_n));
      if (r->transitions > 0) green.push_back(static_cast<double>(r->green) / static_cast<double>(r->transitions));
    }
    a.detection_rate = a.n == 0 ? 0.0 : static_cast<double>(a.detected) / static_cast<double>(a.n);
    a.detection_se = detail::binomial_se(a.detection_rate, a.n);
    a.mean_z = detail::mean_se(z).mean;
    const auto p = detail::mean_se(ppl);
    a.mean_perplexity = p.mean;
    a.se_perplexity = p.se;
    const auto ac = detail::mean_se(acro), se = detail::mean_se(senso), gr = detail::mean_se(green);
    a.acro_match_rate = ac.mean;
    a.acro_match_se = ac.se;
    a.senso_match_rate = se.mean;
    a.senso_match_se = se.se;
    a.green_fraction = gr.mean;
    a.green_fraction_se = gr.se;
    if (a.configuration == kUnwatermarkedConfig) reference_ppl[a.condition] = a.mean_perplexity;
    out.push_back(a);
  }
  for (auto& a : out) {
    auto it = reference_ppl.find(a.condition);
    a.perplexity_delta = it == reference_ppl.end() ? 0.0 : a.mean_perplexity - it->second;
  }
  return out;
}

// Pairwise two-sided Mann-Whitney tests on equivalent_z between the
// watermarked configurations of each condition, Bonferroni-adjusted over all
// pairs tested.
inline std::vector<Significance> pairwise_significance(const std::vector<ResultRow>& rows) {
  std::vector<std::string> conditions;
  std::map<std::string, std::vector<std::string>> configs;
  std::map<std::pair<std::string, std::string>, std::vector<double>> samples;
  for (const auto& r : rows) {
    if (!r.ok() || r.configuration == kHumanConfig || r.configuration == kUnwatermarkedConfig) continue;
    if (std::find(conditions.begin(), conditions.end(), r.condition) == conditions.end()) {
      conditions.push_back(r.condition);
    }
    auto& list = configs[r.condition];
    if (std::find(list.begin(), list.end(), r.configuration) == list.end()) list.push_back(r.configuration);
    samples[{r.configuration, r.condition}].push_back(r.equivalent_z);
  }
  std::vector<Significance> out;
  for (const auto& cond : conditions) {
    const auto& list = configs[cond];
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const auto& a = samples[{list[i], cond}];
        const auto& b = samples[{list[j], cond}];
        const auto mw = mann_whitney_u(a, b);
        out.push_back({list[i], list[j], cond, mw.u, mw.p_value, mw.p_value});
      }
    }
  }
  std::vector<double> ps;
  for (const auto& s : out) ps.push_back(s.p_value);
  const auto adj = bonferroni(ps);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].p_adjusted = adj[i];
  return out;
}

// Detection on the first m sentences of each text, m from its full length
// down to 1, pooled per m over the texts long enough for it. With
// max_sentences > 0 only m <= max_sentences is evaluated.
inline std::vector<AblationPoint> ablate_lengths(const std::vector<std::string>& texts, const WatermarkContext& ctx,
                                                 const DetectorConfig& config, std::size_t max_sentences = 0,
                                                 const std::string& configuration = {}) {
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> per_m;  // m -> (texts, detected)
  for (const auto& text : texts) {
    const auto spans = split_sentences(text);
    std::size_t top = spans.size();
    if (max_sentences > 0) top = std::min(top, max_sentences);
    std::string prefix;
    std::vector<std::string> prefixes;
    for (std::size_t m = 0; m < top; ++m) {
      prefix += spans[m].text;
      prefixes.push_back(prefix);
    }
    for (std::size_t m = top; m >= 1; --m) {
      const auto r = detect(prefixes[m - 1], ctx, config);
      auto& slot = per_m[m];
      ++slot.first;
      if (r.verdict) ++slot.second;
    }
  }
  std::vector<AblationPoint> out;
  for (const auto& [m, counts] : per_m) {
    AblationPoint p;
    p.configuration = configuration;
    p.sentences = m;
    p.n_texts = counts.first;
    p.detected = counts.second;
    p.rate = static_cast<double>(p.detected) / static_cast<double>(p.n_texts);
    p.se = detail::binomial_se(p.rate, p.n_texts);
    out.push_back(p);
  }
  return out;
}

namespace detail {

inline void fill_detection(ResultRow& row, const DetectionReport& d) {
  row.final_score = d.final_score;
  row.log10_final_score = d.log10_final_score;
  row.equivalent_z = d.equivalent_z;
  row.p_acro = d.acro.p_value;
  row.p_senso = d.senso.p_value;
  row.p_redgreen = d.redgreen.p_value;
  row.acro_n = d.acro.checks;
  row.acro_k = d.acro.matches;
  row.senso_n = row.senso_k = 0;
  for (const auto& c : d.senso.classes) {
    row.senso_n += c.checks;
    row.senso_k += c.matches;
  }
  row.transitions = d.redgreen.transitions;
  row.green = d.redgreen.green;
  row.detected = d.verdict;
  row.sentences = d.sentences;
  row.words = d.words;
}

}  // namespace detail

// `synonyms` is needed only when the spec attacks with the synonym table.
inline ResultsTable run_experiment(const ExperimentSpec& spec, const PromptSet& prompts, const LogitSource& model,
                                   const NormsLexicon* lexicon, const SynonymTable* synonyms = nullptr) {
  spec.validate();
  for (const auto& c : spec.configurations) {
    if (c.senso) require_lexicon_if_needed(WatermarkConfig::with_strengths(spec.strengths, c), lexicon);
  }
  if (spec.attack && spec.attack_config.substitution == Substitution::kSynonymTable && synonyms == nullptr) {
    throw ConfigError("the attack uses the synonym table but none was loaded");
  }
  if (prompts.prompts.size() < spec.n_samples) {
    throw ConfigError("run_experiment: " + std::to_string(spec.n_samples) + " samples requested but only " +
                      std::to_string(prompts.prompts.size()) + " prompts available");
  }
  const WatermarkContext ctx(model.vocabulary(), lexicon, spec.gamma);

  struct Job {
    std::string name;
    std::optional<FeatureSet> features;  // nullopt: human completion
  };
  std::vector<Job> jobs;
  if (spec.include_human) jobs.push_back({kHumanConfig, std::nullopt});
  jobs.push_back({kUnwatermarkedConfig, FeatureSet::none()});
  for (const auto& c : spec.configurations) jobs.push_back({c.name(), c});

  const std::size_t conditions = spec.attack ? 2 : 1;
  // per_sample[s][job * conditions + condition]
  std::vector<std::vector<ResultRow>> per_sample(spec.n_samples);

  auto run_sample = [&](std::size_t s) {
    const Prompt& prompt = prompts.prompts[s];
    const std::uint64_t seed = detail::sample_seed(spec.seed, s);
    auto& out = per_sample[s];
    out.reserve(jobs.size() * conditions);
    for (const auto& job : jobs) {
      ResultRow clean;
      clean.configuration = job.name;
      clean.sample = s;
      clean.document = prompt.document;
      clean.seed = seed;
      ResultRow attacked = clean;
      attacked.condition = "attacked";
      DetectorConfig dc{spec.gamma, spec.alpha, FeatureSet::all()};
      if (job.features && !job.features->empty()) dc.features = *job.features;
      try {
        if (job.features) {
          clean.text = generate(model, prompt.prompt, spec.watermark(*job.features, seed), ctx).text;
        } else {
          clean.text = prompt.human_completion;
        }
        detail::fill_detection(clean, detect(clean.text, ctx, dc));
        clean.perplexity = perplexity(model, clean.text, prompt.prompt);
      } catch (const std::exception& e) {
        clean.error = e.what();
      }
      if (spec.attack) {
        if (!clean.ok()) {
          attacked.error = clean.error;
        } else {
          try {
            AttackConfig ac = spec.attack_config;
            ac.seed = detail::sample_seed(spec.attack_config.seed, s);
            const auto a = paraphrase_attack(clean.text, ac, &model.vocabulary(), synonyms, ctx.normalizer());
            attacked.text = a.attacked_text;
            attacked.replaced = a.replaced_count;
            detail::fill_detection(attacked, detect(attacked.text, ctx, dc));
            attacked.perplexity = perplexity(model, attacked.text, prompt.prompt);
          } catch (const std::exception& e) {
            attacked.error = e.what();
          }
        }
      }
      out.push_back(std::move(clean));
      if (spec.attack) out.push_back(std::move(attacked));
    }
  };

  std::size_t workers = spec.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : spec.threads;
  workers = std::min(workers, std::max<std::size_t>(spec.n_samples, 1));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t s = next++; s < spec.n_samples; s = next++) run_sample(s);
      });
    }
  }

  ResultsTable table;
  table.spec = spec;
  table.warnings = prompts.warnings;
  for (std::size_t j = 0; j < jobs.size() * conditions; ++j) {
    for (std::size_t s = 0; s < spec.n_samples; ++s) table.rows.push_back(per_sample[s][j]);
  }
  table.aggregates = aggregate(table.rows);
  table.significance = spec.n_samples > 0 ? pairwise_significance(table.rows) : std::vector<Significance>{};
  if (spec.ablation) {
    for (const auto& job : jobs) {
      if (!job.features || job.features->empty()) continue;
      std::vector<std::string> texts;
      for (const auto& r : table.rows) {
        if (r.configuration == job.name && r.condition == "clean" && r.ok()) texts.push_back(r.text);
      }
      const auto pts = ablate_lengths(texts, ctx, {spec.gamma, spec.alpha, *job.features}, 0, job.name);
      table.ablation.insert(table.ablation.end(), pts.begin(), pts.end());
    }
  }
  return table;
}

inline ResultsTable run_experiment(const ExperimentSpec& spec, const std::filesystem::path& corpus,
                                   const LogitSource& model, const NormsLexicon* lexicon,
                                   const SynonymTable* synonyms = nullptr) {
  const auto prompts = make_prompts(corpus, spec.n_samples, spec.prompt_len, spec.completion_len, spec.seed);
  return run_experiment(spec, prompts, model, lexicon, synonyms);
}

// ---- output ---------------------------------------------------------------

inline std::string format_number(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Quotes a CSV field when it holds a comma, quote or newline.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_results_csv(std::ostream& out, const ResultsTable& t) {
  out << "configuration,condition,sample,document,seed,final_score,log10_final_score,equivalent_z,p_acro,p_senso,"
         "p_redgreen,acro_n,acro_k,senso_n,senso_k,transitions,green,perplexity,detected,sentences,words,"
         "replaced,error\n";
  for (const auto& r : t.rows) {
    out << csv_field(r.configuration) << ',' << r.condition << ',' << r.sample << ',' << r.document << ',' << r.seed
        << ',' << format_number(r.final_score) << ',' << format_number(r.log10_final_score) << ','
        << format_number(r.equivalent_z) << ',' << format_number(r.p_acro) << ',' << format_number(r.p_senso) << ','
        << format_number(r.p_redgreen) << ',' << r.acro_n << ',' << r.acro_k << ',' << r.senso_n << ','
        << r.senso_k << ',' << r.transitions << ',' << r.green << ',' << format_number(r.perplexity) << ','
        << (r.detected ? 1 : 0) << ',' << r.sentences << ',' << r.words << ',' << r.replaced << ','
        << csv_field(r.error) << '\n';
  }
}

inline void write_aggregates_csv(std::ostream& out, const ResultsTable& t) {
  out << "configuration,condition,n,failed,detected,detection_rate,detection_se,mean_z,mean_perplexity,"
         "se_perplexity,perplexity_delta,acro_match_rate,acro_match_se,senso_match_rate,senso_match_se,"
         "green_fraction,green_fraction_se\n";
  for (const auto& a : t.aggregates) {
    out << csv_field(a.configuration) << ',' << a.condition << ',' << a.n << ',' << a.failed << ',' << a.detected
        << ',' << format_number(a.detection_rate) << ',' << format_number(a.detection_se) << ','
        << format_number(a.mean_z) << ',' << format_number(a.mean_perplexity) << ','
        << format_number(a.se_perplexity) << ',' << format_number(a.perplexity_delta) << ','
        << format_number(a.acro_match_rate) << ',' << format_number(a.acro_match_se) << ','
        << format_number(a.senso_match_rate) << ',' << format_number(a.senso_match_se) << ','
        << format_number(a.green_fraction) << ',' << format_number(a.green_fraction_se) << '\n';
  }
}

inline void write_significance_csv(std::ostream& out, const ResultsTable& t) {
  out << "a,b,condition,u,p_value,p_bonferroni\n";
  for (const auto& s : t.significance) {
    out << s.a << ',' << s.b << ',' << s.condition << ',' << format_number(s.u) << ',' << format_number(s.p_value)
        << ',' << format_number(s.p_adjusted) << '\n';
  }
}

// Long format for plotting: one value per line.
//   metric in {equivalent_z, perplexity, detection_rate}
//   sample is empty for per-length detection rates, sentences is empty for
//   per-sample values.
inline void write_long_csv(std::ostream& out, const ResultsTable& t) {
  out << "metric,configuration,condition,sample,sentences,value\n";
  for (const auto& r : t.rows) {
    if (!r.ok()) continue;
    out << "equivalent_z," << r.configuration << ',' << r.condition << ',' << r.sample << ",,"
        << format_number(r.equivalent_z) << '\n';
    out << "perplexity," << r.configuration << ',' << r.condition << ',' << r.sample << ",,"
        << format_number(r.perplexity) << '\n';
  }
  for (const auto& p : t.ablation) {
    out << "detection_rate," << p.configuration << ",clean,," << p.sentences << ',' << format_number(p.rate) << '\n';
  }
}

inline nlohmann::json to_json(const ResultsTable& t) {
  const auto& s = t.spec;
  nlohmann::json configs = nlohmann::json::array();
  for (const auto& c : s.configurations) configs.push_back(c.name());
  nlohmann::json j;
  j["schema"] = kResultsSchema;
  j["equivalent_z"] = "inverse standard normal CDF of final_score";
  j["spec"] = {{"setting", s.setting},
               {"delta_senso", s.strengths.senso},
               {"delta_acro", s.strengths.acro},
               {"delta_redgreen", s.strengths.redgreen},
               {"configurations", configs},
               {"include_human", s.include_human},
               {"samples", s.n_samples},
               {"prompt_len", s.prompt_len},
               {"completion_len", s.completion_len},
               {"alpha", s.alpha},
               {"gamma", s.gamma},
               {"temperature", s.temperature},
               {"seed", s.seed},
               {"attack", s.attack},
               {"attack_min_fraction", s.attack_config.min_fraction},
               {"ablation", s.ablation}};
  nlohmann::json aggs = nlohmann::json::array();
  for (const auto& a : t.aggregates) {
    aggs.push_back({{"configuration", a.configuration},
                    {"condition", a.condition},
                    {"n", a.n},
                    {"failed", a.failed},
                    {"detected", a.detected},
                    {"detection_rate", a.detection_rate},
                    {"detection_se", a.detection_se},
                    {"mean_z", a.mean_z},
                    {"mean_perplexity", a.mean_perplexity},
                    {"perplexity_delta", a.perplexity_delta},
                    {"acro_match_rate", a.acro_match_rate},
                    {"senso_match_rate", a.senso_match_rate},
                    {"green_fraction", a.green_fraction}});
  }
  j["aggregates"] = aggs;
  nlohmann::json sig = nlohmann::json::array();
  for (const auto& x : t.significance) {
    sig.push_back({{"a", x.a}, {"b", x.b}, {"condition", x.condition}, {"u", x.u}, {"p_value", x.p_value},
                   {"p_bonferroni", x.p_adjusted}});
  }
  j["significance"] = sig;
  nlohmann::json abl = nlohmann::json::array();
  for (const auto& p : t.ablation) {
    abl.push_back({{"configuration", p.configuration}, {"sentences", p.sentences}, {"n_texts", p.n_texts},
                   {"detected", p.detected}, {"rate", p.rate}});
  }
  j["ablation"] = abl;
  j["warnings"] = t.warnings;
  std::size_t failed = 0;
  for (const auto& r : t.rows) failed += r.ok() ? 0 : 1;
  j["failed_rows"] = failed;
  return j;
}

// Writes results.csv, aggregates.csv, significance.csv, long.csv and
// results.json into `dir`.
inline void write_results(const std::filesystem::path& dir, const ResultsTable& t) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
  auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw DataError("cannot write " + (dir / name).string());
    return f;
  };
  {
    auto f = open("results.csv");
    write_results_csv(f, t);
  }
  {
    auto f = open("aggregates.csv");
    write_aggregates_csv(f, t);
  }
  {
    auto f = open("significance.csv");
    write_significance_csv(f, t);
  }
  {
    auto f = open("long.csv");
    write_long_csv(f, t);
  }
  {
    auto f = open("results.json");
    f << to_json(t).dump(2) << '\n';
  }
}

}  // namespace stylomark

#endif  // STYLOMARK_EVAL_HPP_
