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


// stylomark: generate, detect, attack, eval, train-toy, plot.
//
// Every subcommand reads its flags from an optional TOML file given with
// --config (one [subcommand] table per subcommand). Flags on the command
// line win over the file.
//
// Exit status: 0 success, 1 usage or configuration error, 2 data or I/O
// error. detect reports its verdict in the JSON, not in the exit status.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stylomark/stylomark.hpp"

namespace fs = std::filesystem;
using namespace stylomark;

namespace {

struct ModelOptions {
  std::string model;
  std::string corpus;
  int order = 2;
  double smoothing = 0.001;

  void add(CLI::App* app) {
    app->add_option("--model", model, "Toy model file written by train-toy");
    app->add_option("--corpus", corpus, "Plain-text corpus; blank lines separate documents")
        ->capture_default_str();
    app->add_option("--order", order, "N-gram order when training from --corpus (2 or 3)")->capture_default_str();
    app->add_option("--smoothing", smoothing, "Add-k smoothing when training from --corpus")
        ->capture_default_str();
  }

  fs::path corpus_path() const { return corpus.empty() ? data_dir() / "corpus" / "news_fixture.txt" : fs::path(corpus); }

  ToyModel load() const {
    if (!model.empty()) return ToyModel::load(fs::path(model));
    return train_toy_model(corpus_path(), order, smoothing);
  }
};

struct LexiconOptions {
  std::string norms;
  std::string frequencies;

  void add(CLI::App* app) {
    app->add_option("--norms", norms, "Sensorimotor norms CSV (word plus eleven rating columns)");
    app->add_option("--frequencies", frequencies, "Class frequency CSV (class,frequency) for detection baselines");
  }

  std::optional<NormsLexicon> load() const {
    if (norms.empty()) {
      if (!frequencies.empty()) throw ConfigError("--frequencies needs --norms");
      return std::nullopt;
    }
    auto lex = load_norms(fs::path(norms));
    if (!frequencies.empty()) lex.set_baselines(load_class_frequencies(fs::path(frequencies)));
    return lex;
  }
};

struct StrengthOptions {
  std::string setting = "medium";
  std::optional<double> delta_acro, delta_senso, delta_redgreen;

  void add(CLI::App* app) {
    app->add_option("--setting", setting, "Boost preset: weak, medium or strong")->capture_default_str();
    app->add_option("--delta-acro", delta_acro, "Acrostic boost, overrides the preset");
    app->add_option("--delta-senso", delta_senso, "Sensorimotor boost, overrides the preset");
    app->add_option("--delta-redgreen", delta_redgreen, "Red-green boost, overrides the preset");
  }

  Strengths resolve() const {
    Strengths s = Strengths::named(setting);
    if (delta_acro) s.acro = *delta_acro;
    if (delta_senso) s.senso = *delta_senso;
    if (delta_redgreen) s.redgreen = *delta_redgreen;
    return s;
  }

  bool custom() const { return delta_acro || delta_senso || delta_redgreen; }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return read_text_file(fs::path(path));
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!(f << content)) throw DataError("cannot write " + path);
}

void require_norms(FeatureSet features, const std::optional<NormsLexicon>& lex) {
  if (features.senso && !lex) {
    throw ConfigError("the sensorimotor feature needs a norms lexicon: pass --norms FILE (and --frequencies FILE), "
                      "or choose --features without senso");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ensemble text watermark: generation, detection, attacks and evaluation"};
  app.set_config("--config", "", "TOML file with one [subcommand] table of flag values; flags win");
  app.require_subcommand(1);
  app.set_version_flag("--version", "stylomark 0.1.0");

  // ---- generate ----
  auto* gen = app.add_subcommand("generate", "Generate watermarked text with the toy model");
  ModelOptions gen_model;
  LexiconOptions gen_lex;
  StrengthOptions gen_strength;
  std::string gen_prompt, gen_prompt_file, gen_features = "all", gen_output, gen_trace, gen_sampler = "multinomial";
  double gen_gamma = 0.5, gen_temperature = 1.0;
  std::size_t gen_max_tokens = 200, gen_max_sentences = 0;
  std::uint64_t gen_seed = 0;
  bool gen_no_eos = false;
  gen_model.add(gen);
  gen_lex.add(gen);
  gen_strength.add(gen);
  gen->add_option("--prompt", gen_prompt, "Prompt text");
  gen->add_option("--prompt-file", gen_prompt_file, "Read the prompt from a file");
  gen->add_option("--features", gen_features, "Enabled features: all, none, or a list like acro,redgreen")
      ->capture_default_str();
  gen->add_option("--gamma", gen_gamma, "Green-list fraction")->capture_default_str();
  gen->add_option("--max-tokens", gen_max_tokens, "Token cap")->capture_default_str();
  gen->add_option("--max-sentences", gen_max_sentences, "Sentence cap (0: none)")->capture_default_str();
  gen->add_flag("--no-eos", gen_no_eos, "Never emit the end-of-text token");
  gen->add_option("--sampler", gen_sampler, "greedy or multinomial")->capture_default_str();
  gen->add_option("--temperature", gen_temperature, "Sampling temperature")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Sampler seed")->capture_default_str();
  gen->add_option("--output,-o", gen_output, "Write the text here instead of standard output");
  gen->add_option("--trace", gen_trace, "Write the per-step trace as JSON lines");

  // ---- detect ----
  auto* det = app.add_subcommand("detect", "Detect the watermark in a text and print a JSON report");
  ModelOptions det_model;
  LexiconOptions det_lex;
  std::string det_text_file = "-", det_features = "all", det_output;
  double det_alpha = 0.05, det_gamma = 0.5;
  det_model.add(det);
  det_lex.add(det);
  det->add_option("--text-file", det_text_file, "Text to test ('-' for standard input)")->capture_default_str();
  det->add_option("--features", det_features, "Features to combine")->capture_default_str();
  det->add_option("--alpha", det_alpha, "Significance level")->capture_default_str();
  det->add_option("--gamma", det_gamma, "Green-list fraction")->capture_default_str();
  det->add_option("--output,-o", det_output, "Write the report here instead of standard output");

  // ---- attack ----
  auto* att = app.add_subcommand("attack", "Replace words until a fraction of the text has changed");
  ModelOptions att_model;
  std::string att_text_file = "-", att_substitution = "synonym", att_synonyms, att_external, att_output;
  double att_fraction = 0.10;
  std::uint64_t att_seed = 0;
  att_model.add(att);
  att->add_option("--text-file", att_text_file, "Text to attack ('-' for standard input)")->capture_default_str();
  att->add_option("--min-fraction", att_fraction, "Stop once this fraction of words is replaced")
      ->capture_default_str();
  att->add_option("--substitution", att_substitution, "synonym or random")->capture_default_str();
  att->add_option("--synonyms", att_synonyms, "Synonym CSV (word,synonym); defaults to the bundled table");
  att->add_option("--external", att_external,
                  "Shell command reading {\"text\"} JSON on stdin and writing {\"attacked_text\"} JSON");
  att->add_option("--seed", att_seed, "Position-order seed")->capture_default_str();
  att->add_option("--output,-o", att_output, "Write the attacked text here; the summary goes to standard output");

  // ---- eval ----
  auto* ev = app.add_subcommand("eval", "Run a configuration grid and write CSV / JSON results");
  ModelOptions ev_model;
  LexiconOptions ev_lex;
  StrengthOptions ev_strength;
  ev_strength.setting = "strong";
  ExperimentSpec ev_spec;
  std::string ev_prompts, ev_out = "results", ev_substitution = "synonym", ev_synonyms;
  std::vector<std::string> ev_configs;
  bool ev_no_human = false;
  ev_model.add(ev);
  ev_lex.add(ev);
  ev_strength.add(ev);
  ev->add_option("--configurations", ev_configs, "Feature subsets to run (default: all seven)");
  ev->add_flag("--no-human", ev_no_human, "Skip the human baseline rows");
  ev->add_option("--prompts", ev_prompts, "Prompt corpus (defaults to the training corpus)");
  ev->add_option("--samples", ev_spec.n_samples, "Samples per configuration")->capture_default_str();
  ev->add_option("--prompt-len", ev_spec.prompt_len, "Prompt tokens (0: all tokens before the completion)")
      ->capture_default_str();
  ev->add_option("--completion-len", ev_spec.completion_len, "Completion tokens")->capture_default_str();
  ev->add_option("--alpha", ev_spec.alpha, "Significance level")->capture_default_str();
  ev->add_option("--gamma", ev_spec.gamma, "Green-list fraction")->capture_default_str();
  ev->add_option("--temperature", ev_spec.temperature, "Sampling temperature")->capture_default_str();
  ev->add_option("--seed", ev_spec.seed, "Experiment seed")->capture_default_str();
  ev->add_flag("--attack", ev_spec.attack, "Also score every text after the built-in lexical attack");
  ev->add_option("--min-fraction", ev_spec.attack_config.min_fraction, "Attack stop fraction")
      ->capture_default_str();
  ev->add_option("--substitution", ev_substitution, "Attack substitution source: synonym or random")
      ->capture_default_str();
  ev->add_option("--synonyms", ev_synonyms, "Synonym CSV; defaults to the bundled table");
  ev->add_option("--attack-seed", ev_spec.attack_config.seed, "Attack seed")->capture_default_str();
  ev->add_flag("--ablation", ev_spec.ablation, "Also compute detection rate by sentence count");
  ev->add_option("--threads", ev_spec.threads, "Worker threads (0: all cores); results do not depend on it")
      ->capture_default_str();
  ev->add_option("--out", ev_out, "Output directory")->capture_default_str();

  // ---- train-toy ----
  auto* tr = app.add_subcommand("train-toy", "Train the n-gram toy model and save it");
  ModelOptions tr_model;
  std::string tr_output;
  tr->add_option("--corpus", tr_model.corpus, "Plain-text corpus");
  tr->add_option("--order", tr_model.order, "N-gram order (2 or 3)")->capture_default_str();
  tr->add_option("--smoothing", tr_model.smoothing, "Add-k smoothing")->capture_default_str();
  tr->add_option("--output,-o", tr_output, "Model file")->required();

  // ---- plot ----
  auto* pl = app.add_subcommand("plot", "Write SVG charts from long.csv");
  std::string pl_input, pl_out = ".";
  pl->add_option("--input", pl_input, "long.csv written by eval")->required();
  pl->add_option("--out", pl_out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::FileError& e) {
    app.exit(e);
    return 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) {
      const auto features = FeatureSet::parse(gen_features);
      auto config = WatermarkConfig::with_strengths(gen_strength.resolve(), features);
      config.gamma = gen_gamma;
      config.max_tokens = gen_max_tokens;
      config.max_sentences = gen_max_sentences;
      config.allow_eos = !gen_no_eos;
      if (ascii_lower(gen_sampler) == "greedy") {
        config.sampler = SamplerConfig::greedy();
      } else if (ascii_lower(gen_sampler) == "multinomial") {
        config.sampler = SamplerConfig::multinomial(gen_temperature, gen_seed);
      } else {
        throw ConfigError("unknown sampler '" + gen_sampler + "' (expected greedy or multinomial)");
      }
      if (!gen_prompt.empty() && !gen_prompt_file.empty()) throw ConfigError("give --prompt or --prompt-file, not both");
      const std::string prompt = gen_prompt_file.empty() ? gen_prompt : read_input(gen_prompt_file);
      const auto lex = gen_lex.load();
      config.validate();
      require_lexicon_if_needed(config, lex ? &*lex : nullptr);
      const auto model = gen_model.load();
      const WatermarkContext ctx(model.vocabulary(), lex ? &*lex : nullptr, config.gamma);
      const auto result = generate(model, prompt, config, ctx);
      write_output(gen_output, result.text + "\n");
      if (!gen_trace.empty()) {
        std::ofstream f(gen_trace, std::ios::binary);
        write_trace_jsonl(f, result.trace);
        if (!f) throw DataError("cannot write " + gen_trace);
      }
    } else if (det->parsed()) {
      DetectorConfig config{det_gamma, det_alpha, FeatureSet::parse(det_features)};
      config.validate();
      if (config.features.empty()) throw ConfigError("--features must name at least one feature");
      const auto lex = det_lex.load();
      require_norms(config.features, lex);
      const std::string text = read_input(det_text_file);
      const auto model = det_model.load();
      const WatermarkContext ctx(model.vocabulary(), lex ? &*lex : nullptr, config.gamma);
      write_output(det_output, to_json(detect(text, ctx, config)).dump(2) + "\n");
    } else if (att->parsed()) {
      const std::string text = read_input(att_text_file);
      AttackResult r;
      if (!att_external.empty()) {
        r = ExternalAttacker(att_external).run(text);
      } else {
        AttackConfig config{att_fraction, parse_substitution(att_substitution), att_seed};
        config.validate();
        std::optional<SynonymTable> syn;
        std::optional<ToyModel> model;
        if (config.substitution == Substitution::kSynonymTable) {
          syn = SynonymTable::load(att_synonyms.empty() ? data_dir() / "synonyms.csv" : fs::path(att_synonyms));
        } else {
          model = att_model.load();
        }
        r = paraphrase_attack(text, config, model ? &model->vocabulary() : nullptr, syn ? &*syn : nullptr);
      }
      nlohmann::json j{{"replaced_count", r.replaced_count},
                       {"total_words", r.total_words},
                       {"replaced_fraction", r.replaced_fraction()}};
      if (att_output.empty()) {
        j["attacked_text"] = r.attacked_text;
      } else {
        write_output(att_output, r.attacked_text);
      }
      std::cout << j.dump(2) << "\n";
    } else if (ev->parsed()) {
      ev_spec.setting = ev_strength.custom() ? "custom" : ascii_lower(ev_strength.setting);
      ev_spec.strengths = ev_strength.resolve();
      ev_spec.include_human = !ev_no_human;
      ev_spec.attack_config.substitution = parse_substitution(ev_substitution);
      if (!ev_configs.empty()) {
        ev_spec.configurations.clear();
        for (const auto& c : ev_configs) ev_spec.configurations.push_back(FeatureSet::parse(c));
      }
      ev_spec.validate();
      const auto lex = ev_lex.load();
      for (const auto& c : ev_spec.configurations) {
        if (c.senso) {
          require_norms(c, lex);
          break;
        }
      }
      std::optional<SynonymTable> syn;
      if (ev_spec.attack && ev_spec.attack_config.substitution == Substitution::kSynonymTable) {
        syn = SynonymTable::load(ev_synonyms.empty() ? data_dir() / "synonyms.csv" : fs::path(ev_synonyms));
      }
      const auto model = ev_model.load();
      const fs::path prompts = ev_prompts.empty() ? ev_model.corpus_path() : fs::path(ev_prompts);
      const auto table = run_experiment(ev_spec, prompts, model, lex ? &*lex : nullptr, syn ? &*syn : nullptr);
      for (const auto& w : table.warnings) std::cerr << "warning: " << w << "\n";
      write_results(fs::path(ev_out), table);
      for (const auto& a : table.aggregates) {
        std::fprintf(stderr, "%-22s %-8s detection %.3f  mean z %8.3f  ppl %8.2f\n", a.configuration.c_str(),
                     a.condition.c_str(), a.detection_rate, a.mean_z, a.mean_perplexity);
      }
    } else if (tr->parsed()) {
      tr_model.load().save(fs::path(tr_output));
    } else if (pl->parsed()) {
      for (const auto& p : write_plots(fs::path(pl_input), fs::path(pl_out))) std::cout << p.string() << "\n";
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
