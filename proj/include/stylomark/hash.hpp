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

#ifndef STYLOMARK_HASH_HPP_
#define STYLOMARK_HASH_HPP_

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <string_view>

#include "stylomark/error.hpp"

namespace stylomark {

using Sha256Digest = std::array<std::uint8_t, 32>;

inline Sha256Digest sha256(std::string_view payload) {
  Sha256Digest digest{};
  unsigned int len = 0;
  if (EVP_Digest(payload.data(), payload.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != digest.size()) {
    throw Error("sha256: EVP_Digest failed");
  }
  return digest;
}

// Inclusive integer range [lo, hi].
struct HashRange {
  std::int64_t lo;
  std::int64_t hi;

  constexpr std::uint64_t width() const { return static_cast<std::uint64_t>(hi - lo) + 1; }
};

// The digest read as a big-endian integer, reduced mod 2^32. Only the last
// four bytes survive the reduction.
inline std::uint32_t digest_mod_2_32(const Sha256Digest& d) {
  return (std::uint32_t{d[28]} << 24) | (std::uint32_t{d[29]} << 16) |
         (std::uint32_t{d[30]} << 8) | std::uint32_t{d[31]};
}

// ((SHA256(payload) mod 2^32) mod (hi - lo + 1)) + lo.
inline std::int64_t hash_to_range(std::string_view payload, HashRange range) {
  if (range.lo > range.hi) throw ConfigError("hash_to_range: lo > hi");
  const std::uint64_t low32 = digest_mod_2_32(sha256(payload));
  return static_cast<std::int64_t>(low32 % range.width()) + range.lo;
}

}  // namespace stylomark

#endif  // STYLOMARK_HASH_HPP_
