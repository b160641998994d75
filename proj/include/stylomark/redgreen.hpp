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

// Green lists seeded by the previous token.
//
// seed    = hash_to_range(lowercase(prev_token), [0, 2^32 - 1])
// shuffle = Fisher-Yates over ids [0, V), i from V-1 down to 1,
//           j = splitmix64() mod (i + 1)
// green   = first floor(gamma * V) ids of the shuffled sequence
//
// The PRNG and shuffle order are fixed here rather than left to a platform
// generator; any other implementation has to reproduce them bit for bit.

#ifndef STYLOMARK_REDGREEN_HPP_
#define STYLOMARK_REDGREEN_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stylomark/error.hpp"
#include "stylomark/hash.hpp"
#include "stylomark/text_core.hpp"

namespace stylomark {

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  constexpr double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

inline void validate_green_params(std::size_t vocab_size, double gamma) {
  if (vocab_size < 1) throw ConfigError("green list: vocabulary size must be >= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("green list: gamma must lie in (0, 1)");
}

inline std::size_t green_list_size(std::size_t vocab_size, double gamma) {
  return static_cast<std::size_t>(std::floor(gamma * static_cast<double>(vocab_size)));
}

inline std::uint64_t green_seed(std::string_view prev_token) {
  return static_cast<std::uint64_t>(hash_to_range(ascii_lower(prev_token), HashRange{0, 0xFFFFFFFFLL}));
}

// Fisher-Yates permutation of [0, n) driven by splitmix64(seed).
inline std::vector<std::uint32_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  SplitMix64 rng(seed);
  for (std::size_t i = n; i-- > 1;) {
    const std::size_t j = static_cast<std::size_t>(rng.next() % (i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

class GreenList {
 public:
  GreenList(std::size_t vocab_size, double gamma, std::vector<bool> membership, std::vector<std::uint32_t> ids)
      : vocab_size_(vocab_size), gamma_(gamma), membership_(std::move(membership)), ids_(std::move(ids)) {}

  bool contains(std::size_t token_id) const { return token_id < vocab_size_ && membership_[token_id]; }
  std::size_t size() const { return ids_.size(); }
  std::size_t vocab_size() const { return vocab_size_; }
  double gamma() const { return gamma_; }
  // Green ids in shuffle order.
  const std::vector<std::uint32_t>& ids() const { return ids_; }

 private:
  std::size_t vocab_size_;
  double gamma_;
  std::vector<bool> membership_;
  std::vector<std::uint32_t> ids_;
};

inline GreenList green_list(std::string_view prev_token, std::size_t vocab_size, double gamma) {
  validate_green_params(vocab_size, gamma);
  auto perm = seeded_permutation(vocab_size, green_seed(prev_token));
  perm.resize(green_list_size(vocab_size, gamma));
  std::vector<bool> member(vocab_size, false);
  for (const auto id : perm) member[id] = true;
  return GreenList(vocab_size, gamma, std::move(member), std::move(perm));
}

inline bool is_green(std::string_view prev_token, std::int64_t token_id, std::size_t vocab_size, double gamma) {
  validate_green_params(vocab_size, gamma);
  if (token_id < 0 || static_cast<std::size_t>(token_id) >= vocab_size) {
    throw ConfigError("is_green: token id " + std::to_string(token_id) + " outside [0, V-1]");
  }
  return green_list(prev_token, vocab_size, gamma).contains(static_cast<std::size_t>(token_id));
}

// Memoizes green lists per lowercased previous token for one (V, gamma).
// Results are identical with or without the cache; `capacity` bounds the
// number of stored lists (the cache is flushed when it fills up).
class GreenListCache {
 public:
  GreenListCache(std::size_t vocab_size, double gamma, std::size_t capacity = 1u << 16)
      : vocab_size_(vocab_size), gamma_(gamma), capacity_(capacity) {
    validate_green_params(vocab_size, gamma);
  }

  std::shared_ptr<const GreenList> get(std::string_view prev_token) const {
    std::string key = ascii_lower(prev_token);
    {
      std::shared_lock lock(mutex_);
      if (auto it = lists_.find(key); it != lists_.end()) return it->second;
    }
    auto list = std::make_shared<const GreenList>(green_list(key, vocab_size_, gamma_));
    std::unique_lock lock(mutex_);
    if (lists_.size() >= capacity_) lists_.clear();
    return lists_.emplace(std::move(key), std::move(list)).first->second;
  }

  std::size_t vocab_size() const { return vocab_size_; }
  double gamma() const { return gamma_; }

 private:
  std::size_t vocab_size_;
  double gamma_;
  std::size_t capacity_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const GreenList>> lists_;
};

}  // namespace stylomark

#endif  // STYLOMARK_REDGREEN_HPP_
