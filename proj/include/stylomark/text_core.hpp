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

// Sentence and word segmentation shared by generation and detection.
//
// Both sides of the watermark must cut text at exactly the same places, so
// the rules here are deliberately mechanical:
//
//   * a sentence boundary falls immediately after every '.', '!' or '?';
//   * a word is a maximal run of non-whitespace code points whose core
//     (the run with leading and trailing punctuation removed) is non-empty;
//   * a boundary segment that contains no word ("..", " !") is folded into
//     the preceding sentence, or into the following one at the very start,
//     so that concatenating all spans still reproduces the input.
//
// Input is treated as UTF-8. Invalid bytes are kept as ordinary word
// characters, which keeps every function total.

#ifndef STYLOMARK_TEXT_CORE_HPP_
#define STYLOMARK_TEXT_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stylomark {

namespace detail {

struct CodePoint {
  char32_t value;
  std::size_t length;  // bytes consumed
};

// Decodes one code point at text[pos]. Malformed sequences decode as a
// single byte with value 0xFFFD-equivalent semantics (treated as a letter).
inline CodePoint decode_utf8(std::string_view text, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t i) -> int {
    if (pos + i >= text.size()) return -1;
    const auto b = static_cast<unsigned char>(text[pos + i]);
    return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
  };
  if ((b0 & 0xE0) == 0xC0) {
    const int c1 = cont(1);
    if (c1 >= 0 && b0 >= 0xC2) return {static_cast<char32_t>(((b0 & 0x1F) << 6) | c1), 2};
  } else if ((b0 & 0xF0) == 0xE0) {
    const int c1 = cont(1), c2 = cont(2);
    if (c1 >= 0 && c2 >= 0) {
      const char32_t v = ((b0 & 0x0F) << 12) | (c1 << 6) | c2;
      if (v >= 0x800) return {v, 3};
    }
  } else if ((b0 & 0xF8) == 0xF0) {
    const int c1 = cont(1), c2 = cont(2), c3 = cont(3);
    if (c1 >= 0 && c2 >= 0 && c3 >= 0) {
      const char32_t v = ((b0 & 0x07) << 18) | (c1 << 12) | (c2 << 6) | c3;
      if (v >= 0x10000 && v <= 0x10FFFF) return {v, 4};
    }
  }
  return {0xFFFD, 1};
}

inline bool is_space(char32_t c) {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 ||
         c == 0x1680 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 ||
         c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

inline bool is_punct(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  return c == 0xA1 || c == 0xA7 || c == 0xAB || c == 0xB6 || c == 0xB7 ||
         c == 0xBB || c == 0xBF || (c >= 0x2010 && c <= 0x2027) ||
         (c >= 0x2030 && c <= 0x205E) || (c >= 0x3001 && c <= 0x3003) ||
         (c >= 0x3008 && c <= 0x3011);
}

inline bool is_sentence_boundary(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace detail

// Byte offsets of one whitespace-delimited word inside some larger text.
struct WordLocation {
  std::size_t begin;       // surface [begin, end)
  std::size_t end;
  std::size_t core_begin;  // core [core_begin, core_end)
  std::size_t core_end;
};

struct Word {
  std::string surface;  // as written, punctuation included
  std::string core;     // leading/trailing punctuation stripped

  friend bool operator==(const Word&, const Word&) = default;
};

struct SentenceSpan {
  std::string text;  // exact slice of the input, separators included
  std::vector<Word> words;
  std::optional<char> terminal_punct;  // absent for a trailing fragment
};

// All words in `text`, in order, with their byte offsets.
inline std::vector<WordLocation> locate_words(std::string_view text) {
  std::vector<WordLocation> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto cp = detail::decode_utf8(text, pos);
    if (detail::is_space(cp.value)) {
      pos += cp.length;
      continue;
    }
    const std::size_t begin = pos;
    std::size_t core_begin = std::string::npos;
    std::size_t core_end = begin;
    while (pos < text.size()) {
      cp = detail::decode_utf8(text, pos);
      if (detail::is_space(cp.value)) break;
      if (!detail::is_punct(cp.value)) {
        if (core_begin == std::string::npos) core_begin = pos;
        core_end = pos + cp.length;
      }
      pos += cp.length;
    }
    if (core_begin != std::string::npos) {
      out.push_back({begin, pos, core_begin, core_end});
    }
  }
  return out;
}

inline std::vector<Word> split_words(std::string_view sentence) {
  std::vector<Word> words;
  for (const auto& loc : locate_words(sentence)) {
    words.push_back({std::string(sentence.substr(loc.begin, loc.end - loc.begin)),
                     std::string(sentence.substr(loc.core_begin, loc.core_end - loc.core_begin))});
  }
  return words;
}

inline std::vector<SentenceSpan> split_sentences(std::string_view text) {
  std::vector<SentenceSpan> spans;
  std::string pending;  // word-less material seen before the first sentence
  auto emit = [&](std::string_view segment, std::optional<char> punct) {
    auto words = split_words(segment);
    if (words.empty()) {
      if (spans.empty()) {
        pending.append(segment);
      } else {
        spans.back().text.append(segment);
      }
      return;
    }
    SentenceSpan span;
    span.text = pending;
    span.text.append(segment);
    pending.clear();
    span.words = std::move(words);
    span.terminal_punct = punct;
    spans.push_back(std::move(span));
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (detail::is_sentence_boundary(text[i])) {
      emit(text.substr(start, i + 1 - start), text[i]);
      start = i + 1;
    }
  }
  if (start < text.size()) emit(text.substr(start), std::nullopt);
  return spans;
}

// Letter index 0..25 of the first ASCII letter in `word`, if any. Digits
// and non-ASCII code points are skipped.
inline std::optional<int> first_letter_index(std::string_view word) {
  for (const char ch : word) {
    if (ch >= 'a' && ch <= 'z') return ch - 'a';
    if (ch >= 'A' && ch <= 'Z') return ch - 'A';
  }
  return std::nullopt;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// Lowercases and removes every punctuation code point, including interior
// apostrophes and hyphens: "Well-known" -> "wellknown".
inline std::string fold_word(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  std::size_t pos = 0;
  while (pos < word.size()) {
    const auto cp = detail::decode_utf8(word, pos);
    if (!detail::is_punct(cp.value) && !detail::is_space(cp.value)) {
      if (cp.length == 1) {
        char c = word[pos];
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        out.push_back(c);
      } else {
        out.append(word.substr(pos, cp.length));
      }
    }
    pos += cp.length;
  }
  return out;
}

// True when the punctuation trailing the core of `token` contains a
// sentence boundary character ("ran.", "said.\"", "."). Tokens with a
// boundary inside their core ("a.b") are not treated as sentence-final;
// the detector would cut such a token in two.
inline bool ends_sentence(std::string_view token) {
  const auto locs = locate_words(token);
  const std::size_t tail = locs.empty() ? 0 : locs.back().core_end;
  for (std::size_t i = tail; i < token.size(); ++i) {
    if (detail::is_sentence_boundary(token[i])) return true;
  }
  return false;
}

}  // namespace stylomark

#endif  // STYLOMARK_TEXT_CORE_HPP_
