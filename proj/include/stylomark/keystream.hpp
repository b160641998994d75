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

// The rolling key shared by generator and detector.
//
// The sensorimotor class is re-derived from every completed word and the
// acrostic letter from every completed sentence. The key is computed from
// the text alone, so anyone holding this code can recompute it.

#ifndef STYLOMARK_KEYSTREAM_HPP_
#define STYLOMARK_KEYSTREAM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stylomark/hash.hpp"
#include "stylomark/normalizer.hpp"
#include "stylomark/text_core.hpp"

namespace stylomark {

inline constexpr HashRange kClassRange{0, 10};
inline constexpr HashRange kLetterRange{0, 25};

struct KeyState {
  std::uint8_t senso_class = 0;  // [0, 10]
  std::uint8_t acro_letter = 0;  // [0, 25], 0 = 'a'

  char letter() const { return static_cast<char>('a' + acro_letter); }

  friend auto operator<=>(const KeyState&, const KeyState&) = default;
};

inline KeyState init_key() {
  return {static_cast<std::uint8_t>(hash_to_range("init", kClassRange)),
          static_cast<std::uint8_t>(hash_to_range("init", kLetterRange))};
}

// Words whose key form is empty leave the state unchanged.
inline KeyState update_on_word(KeyState state, std::string_view word,
                               const TextNormalizer& normalizer = TextNormalizer::standard()) {
  const std::string key = normalizer.word_key(word);
  if (key.empty()) return state;
  state.senso_class = static_cast<std::uint8_t>(hash_to_range(key, kClassRange));
  return state;
}

inline KeyState update_on_sentence(KeyState state, const SentenceSpan& sentence,
                                   const TextNormalizer& normalizer = TextNormalizer::standard()) {
  state.acro_letter = static_cast<std::uint8_t>(hash_to_range(normalizer.normalize_sentence(sentence), kLetterRange));
  return state;
}

// A word completed inside a stream, with the key in force before it.
struct StreamWord {
  Word word;
  KeyState key_before;
  std::size_t sentence_index = 0;
  bool first_in_sentence = false;
};

// Incremental form of the segmentation rules in text_core.hpp: a word ends
// at whitespace or right after a '.', '!' or '?', and a sentence ends at a
// boundary character once it holds at least one word. Feeding a text in any
// number of pieces yields the same words and keys as segmenting it whole.
class KeystreamTracker {
 public:
  using WordSink = std::function<void(const StreamWord&)>;

  explicit KeystreamTracker(const TextNormalizer& normalizer = TextNormalizer::standard())
      : normalizer_(&normalizer), key_(init_key()) {}

  void feed(std::string_view piece, const WordSink& sink = {}) {
    carry_.append(piece);
    std::size_t pos = 0;
    while (pos < carry_.size()) {
      const auto lead = static_cast<unsigned char>(carry_[pos]);
      std::size_t need = 1;
      if ((lead & 0xE0) == 0xC0) need = 2;
      else if ((lead & 0xF0) == 0xE0) need = 3;
      else if ((lead & 0xF8) == 0xF0) need = 4;
      if (pos + need > carry_.size()) break;  // incomplete UTF-8 sequence; wait for more
      const auto cp = detail::decode_utf8(carry_, pos);
      if (detail::is_space(cp.value)) {
        finish_word(sink);
      } else {
        pending_.append(carry_, pos, cp.length);
        if (cp.length == 1 && detail::is_sentence_boundary(carry_[pos])) {
          finish_word(sink);
          finish_sentence();
        }
      }
      pos += cp.length;
    }
    carry_.erase(0, pos);
  }

  // Flushes a trailing partial word. The tracker stays usable.
  void finish(const WordSink& sink = {}) {
    if (!carry_.empty()) {
      pending_.append(carry_);
      carry_.clear();
    }
    finish_word(sink);
  }

  const KeyState& key() const { return key_; }

  // Key and sentence-start flag as they would be if the partial word ended
  // now. This is what the next word-initial token is scored against.
  KeyState preview_key() const {
    const auto w = pending_word();
    return w ? update_on_word(key_, w->core, *normalizer_) : key_;
  }

  bool preview_sentence_start() const { return sentence_words_.empty() && !pending_word(); }

  std::size_t sentence_index() const { return sentence_index_; }
  std::size_t word_count() const { return word_count_; }

 private:
  std::optional<Word> pending_word() const {
    if (pending_.empty()) return std::nullopt;
    auto words = split_words(pending_);
    if (words.empty()) return std::nullopt;
    return words.front();
  }

  void finish_word(const WordSink& sink) {
    if (pending_.empty()) return;
    auto words = split_words(pending_);
    pending_.clear();
    if (words.empty()) return;
    StreamWord ev{std::move(words.front()), key_, sentence_index_, sentence_words_.empty()};
    key_ = update_on_word(key_, ev.word.core, *normalizer_);
    ++word_count_;
    if (sink) sink(ev);
    sentence_words_.push_back(std::move(ev.word));
  }

  void finish_sentence() {
    if (sentence_words_.empty()) return;
    SentenceSpan span;
    span.words = std::move(sentence_words_);
    sentence_words_.clear();
    key_ = update_on_sentence(key_, span, *normalizer_);
    ++sentence_index_;
  }

  const TextNormalizer* normalizer_;
  KeyState key_;
  std::string carry_;
  std::string pending_;
  std::vector<Word> sentence_words_;
  std::size_t sentence_index_ = 0;
  std::size_t word_count_ = 0;
};

}  // namespace stylomark

#endif  // STYLOMARK_KEYSTREAM_HPP_
