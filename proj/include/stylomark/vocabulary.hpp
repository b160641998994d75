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

#ifndef STYLOMARK_VOCABULARY_HPP_
#define STYLOMARK_VOCABULARY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stylomark/error.hpp"

namespace stylomark {

using TokenId = std::int32_t;

// Dense token strings, id == position. Lookup is exact (case-sensitive).
class Vocabulary {
 public:
  Vocabulary() = default;

  explicit Vocabulary(std::vector<std::string> tokens, std::optional<TokenId> unk = std::nullopt,
                      std::optional<TokenId> eos = std::nullopt)
      : tokens_(std::move(tokens)), unk_(unk), eos_(eos) {
    if (tokens_.empty()) throw ConfigError("vocabulary must not be empty");
    index_.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (!index_.emplace(tokens_[i], static_cast<TokenId>(i)).second) {
        throw ConfigError("duplicate vocabulary token '" + tokens_[i] + "'");
      }
    }
    auto check = [&](std::optional<TokenId> id, const char* what) {
      if (id && (*id < 0 || static_cast<std::size_t>(*id) >= tokens_.size())) {
        throw ConfigError(std::string("vocabulary: ") + what + " id out of range");
      }
    };
    check(unk_, "unk");
    check(eos_, "eos");
  }

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(TokenId id) const { return tokens_.at(static_cast<std::size_t>(id)); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::optional<TokenId> find(std::string_view surface) const {
    if (auto it = index_.find(std::string(surface)); it != index_.end()) return it->second;
    return std::nullopt;
  }

  // Exact match, else the UNK id when the vocabulary has one.
  std::optional<TokenId> id_or_unk(std::string_view surface) const {
    if (auto id = find(surface)) return id;
    return unk_;
  }

  std::optional<TokenId> unk_id() const { return unk_; }
  std::optional<TokenId> eos_id() const { return eos_; }
  bool is_special(TokenId id) const { return (unk_ && id == *unk_) || (eos_ && id == *eos_); }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> index_;
  std::optional<TokenId> unk_;
  std::optional<TokenId> eos_;
};

}  // namespace stylomark

#endif  // STYLOMARK_VOCABULARY_HPP_
