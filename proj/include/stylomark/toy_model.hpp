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

// Word-level n-gram model with add-k smoothing.
//
//   P(t | ctx) = (count(ctx, t) + k) / (count(ctx) + k V)
//
// Documents in a corpus file are separated by blank lines. Every document
// starts from an all-BOS context and ends with the end-of-text token. The
// vocabulary is the sorted set of corpus tokens followed by <unk> and </s>.

#ifndef STYLOMARK_TOY_MODEL_HPP_
#define STYLOMARK_TOY_MODEL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stylomark/error.hpp"
#include "stylomark/generator.hpp"
#include "stylomark/text_core.hpp"
#include "stylomark/vocabulary.hpp"

namespace stylomark {

inline constexpr std::string_view kUnkToken = "<unk>";
inline constexpr std::string_view kEosToken = "</s>";

// Canonical word tokens: whitespace runs with a non-empty core, with every
// '.', '!' and '?' removed except in the trailing punctuation. A token can
// therefore only close a sentence at its end, which keeps generation-side
// and detection-side segmentation aligned.
inline std::vector<std::string> toy_tokenize(std::string_view text) {
  std::vector<std::string> out;
  auto strip = [](std::string_view s) {
    std::string r;
    r.reserve(s.size());
    for (const char c : s) {
      if (!detail::is_sentence_boundary(c)) r.push_back(c);
    }
    return r;
  };
  for (const auto& loc : locate_words(text)) {
    std::string tok = strip(text.substr(loc.begin, loc.core_end - loc.begin));
    tok.append(text.substr(loc.core_end, loc.end - loc.core_end));
    out.push_back(std::move(tok));
  }
  return out;
}

// Blank-line separated documents, each as canonical tokens. Empty
// documents are dropped.
inline std::vector<std::vector<std::string>> split_documents(std::string_view text) {
  std::vector<std::vector<std::string>> docs;
  std::string current;
  auto flush = [&] {
    auto toks = toy_tokenize(current);
    if (!toks.empty()) docs.push_back(std::move(toks));
    current.clear();
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = text.substr(pos, nl - pos);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      flush();
    } else {
      current.append(line);
      current.push_back('\n');
    }
    pos = nl + 1;
  }
  flush();
  return docs;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class ToyModel : public LogitSource {
 public:
  struct Row {
    std::uint64_t total = 0;
    std::vector<std::pair<TokenId, std::uint32_t>> counts;  // sorted by id
  };

  ToyModel(Vocabulary vocabulary, int order, double smoothing, std::unordered_map<std::uint64_t, Row> rows)
      : vocab_(std::move(vocabulary)), order_(order), smoothing_(smoothing), rows_(std::move(rows)) {
    validate_params(order_, smoothing_);
    if (!vocab_.unk_id() || !vocab_.eos_id()) throw ConfigError("toy model vocabulary needs <unk> and </s>");
  }

  static void validate_params(int order, double smoothing) {
    if (order != 2 && order != 3) throw ConfigError("toy model order must be 2 or 3");
    if (!(smoothing > 0.0) || !std::isfinite(smoothing)) throw ConfigError("toy model smoothing must be positive");
  }

  const Vocabulary& vocabulary() const override { return vocab_; }
  int order() const { return order_; }
  double smoothing() const { return smoothing_; }
  std::size_t context_count() const { return rows_.size(); }

  std::vector<double> next_logits(std::span<const TokenId> context) const override {
    const double v = static_cast<double>(vocab_.size());
    const Row* row = find_row(context);
    const double total = row ? static_cast<double>(row->total) : 0.0;
    const double denom = std::log(total + smoothing_ * v);
    std::vector<double> logits(vocab_.size(), std::log(smoothing_) - denom);
    if (row) {
      for (const auto& [id, c] : row->counts) {
        logits[static_cast<std::size_t>(id)] = std::log(static_cast<double>(c) + smoothing_) - denom;
      }
    }
    return logits;
  }

  double probability(std::span<const TokenId> context, TokenId token) const {
    const Row* row = find_row(context);
    double c = 0.0;
    double total = 0.0;
    if (row) {
      total = static_cast<double>(row->total);
      auto it = std::lower_bound(row->counts.begin(), row->counts.end(), std::pair<TokenId, std::uint32_t>{token, 0});
      if (it != row->counts.end() && it->first == token) c = it->second;
    }
    return (c + smoothing_) / (total + smoothing_ * static_cast<double>(vocab_.size()));
  }

  std::vector<TokenId> encode(std::string_view text) const override { return encode_tokens(toy_tokenize(text)); }

  std::vector<TokenId> encode_tokens(const std::vector<std::string>& tokens) const {
    std::vector<TokenId> ids;
    ids.reserve(tokens.size());
    for (const auto& t : tokens) ids.push_back(*vocab_.id_or_unk(t));
    return ids;
  }

  // Context key over the last order-1 ids; positions before the start of
  // the sequence hold BOS (encoded as 0, real ids as id + 1).
  std::uint64_t context_key(std::span<const TokenId> context) const {
    const std::uint64_t base = vocab_.size() + 1;
    std::uint64_t key = 0;
    const std::size_t n = static_cast<std::size_t>(order_ - 1);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t back = n - i;  // 1-based distance from the end
      const std::uint64_t digit =
          context.size() >= back ? static_cast<std::uint64_t>(context[context.size() - back]) + 1 : 0;
      key = key * base + digit;
    }
    return key;
  }

  // Versioned text format; contexts are written in key order so the output
  // is a pure function of the model.
  void save(std::ostream& out) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", smoothing_);
    out << "stylomark-toy-model 1\n"
        << "order " << order_ << "\n"
        << "smoothing " << buf << "\n"
        << "vocab " << vocab_.size() << "\n";
    for (const auto& t : vocab_.tokens()) out << t << "\n";
    std::vector<std::uint64_t> keys;
    keys.reserve(rows_.size());
    for (const auto& [k, _] : rows_) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    out << "contexts " << keys.size() << "\n";
    for (const auto k : keys) {
      const Row& r = rows_.at(k);
      out << k << ' ' << r.counts.size();
      for (const auto& [id, c] : r.counts) out << ' ' << id << ' ' << c;
      out << "\n";
    }
  }

  void save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    save(out);
    if (!out) throw DataError("failed writing " + path.string());
  }

  static ToyModel load(std::istream& in, const std::string& name = "<stream>") {
    auto fail = [&](const std::string& why) -> DataError { return DataError(name + ": " + why); };
    std::string line;
    if (!std::getline(in, line) || line != "stylomark-toy-model 1") throw fail("not a stylomark toy model (version 1)");
    auto read_field = [&](const char* key) {
      if (!std::getline(in, line)) throw fail(std::string("missing '") + key + "'");
      std::istringstream ls(line);
      std::string k, v;
      if (!(ls >> k >> v) || k != key) throw fail(std::string("expected '") + key + "', got '" + line + "'");
      return v;
    };
    int order = 0;
    double smoothing = 0.0;
    std::size_t vsize = 0;
    try {
      order = std::stoi(read_field("order"));
      smoothing = std::stod(read_field("smoothing"));
      vsize = std::stoul(read_field("vocab"));
    } catch (const std::logic_error&) {
      throw fail("malformed header");
    }
    std::vector<std::string> tokens;
    tokens.reserve(vsize);
    for (std::size_t i = 0; i < vsize; ++i) {
      if (!std::getline(in, line)) throw fail("truncated vocabulary");
      tokens.push_back(line);
    }
    auto unk = std::find(tokens.begin(), tokens.end(), kUnkToken);
    auto eos = std::find(tokens.begin(), tokens.end(), kEosToken);
    if (unk == tokens.end() || eos == tokens.end()) throw fail("vocabulary lacks <unk> or </s>");
    Vocabulary vocab(tokens, static_cast<TokenId>(unk - tokens.begin()), static_cast<TokenId>(eos - tokens.begin()));
    std::size_t n = 0;
    try {
      n = std::stoul(read_field("contexts"));
    } catch (const std::logic_error&) {
      throw fail("malformed context count");
    }
    std::unordered_map<std::uint64_t, Row> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::getline(in, line)) throw fail("truncated context table");
      std::istringstream ls(line);
      std::uint64_t key = 0;
      std::size_t m = 0;
      if (!(ls >> key >> m)) throw fail("malformed context row " + std::to_string(i));
      Row r;
      r.counts.reserve(m);
      for (std::size_t j = 0; j < m; ++j) {
        std::int64_t id = 0;
        std::uint32_t c = 0;
        if (!(ls >> id >> c) || id < 0 || static_cast<std::size_t>(id) >= vsize) {
          throw fail("malformed context row " + std::to_string(i));
        }
        r.counts.emplace_back(static_cast<TokenId>(id), c);
        r.total += c;
      }
      rows.emplace(key, std::move(r));
    }
    try {
      return ToyModel(std::move(vocab), order, smoothing, std::move(rows));
    } catch (const ConfigError& e) {
      throw fail(e.what());
    }
  }

  static ToyModel load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    return load(in, path.string());
  }

 private:
  const Row* find_row(std::span<const TokenId> context) const {
    auto it = rows_.find(context_key(context));
    return it == rows_.end() ? nullptr : &it->second;
  }

  Vocabulary vocab_;
  int order_;
  double smoothing_;
  std::unordered_map<std::uint64_t, Row> rows_;
};

inline ToyModel train_toy_model_from_documents(const std::vector<std::vector<std::string>>& docs, int order,
                                               double smoothing) {
  ToyModel::validate_params(order, smoothing);
  std::set<std::string> types;
  for (const auto& d : docs) types.insert(d.begin(), d.end());
  types.erase(std::string(kUnkToken));
  types.erase(std::string(kEosToken));
  if (types.empty()) throw DataError("toy model corpus is empty");
  std::vector<std::string> tokens(types.begin(), types.end());
  const auto unk = static_cast<TokenId>(tokens.size());
  tokens.emplace_back(kUnkToken);
  tokens.emplace_back(kEosToken);
  Vocabulary vocab(std::move(tokens), unk, unk + 1);

  // Keying needs a model instance; counts are accumulated into an ordered
  // map first so the rows come out sorted by id.
  ToyModel keyer(vocab, order, smoothing, {});
  std::unordered_map<std::uint64_t, std::map<TokenId, std::uint32_t>> acc;
  std::vector<TokenId> ids;
  for (const auto& d : docs) {
    ids.clear();
    for (const auto& t : d) ids.push_back(*vocab.find(t));
    ids.push_back(*vocab.eos_id());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto key = keyer.context_key(std::span<const TokenId>(ids.data(), i));
      ++acc[key][ids[i]];
    }
  }
  std::unordered_map<std::uint64_t, ToyModel::Row> rows;
  rows.reserve(acc.size());
  for (auto& [key, m] : acc) {
    ToyModel::Row r;
    r.counts.assign(m.begin(), m.end());
    for (const auto& [_, c] : r.counts) r.total += c;
    rows.emplace(key, std::move(r));
  }
  return ToyModel(std::move(vocab), order, smoothing, std::move(rows));
}

inline ToyModel train_toy_model_from_text(std::string_view corpus, int order = 2, double smoothing = 0.001) {
  return train_toy_model_from_documents(split_documents(corpus), order, smoothing);
}

inline ToyModel train_toy_model(const std::filesystem::path& corpus, int order = 2, double smoothing = 0.001) {
  return train_toy_model_from_text(read_text_file(corpus), order, smoothing);
}

}  // namespace stylomark

#endif  // STYLOMARK_TOY_MODEL_HPP_
