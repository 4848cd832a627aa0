// Copyright 2026 The editspan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDITSPAN_TEXT_HPP_
#define EDITSPAN_TEXT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace editspan {

// A whitespace-free surface form and its 0-based position in the sentence.
//
// Gap positions (used by edit spans) are numbered around tokens: gap 0 sits
// before token 0, gap i after token i-1, and gap N after the last token.
struct Token {
  std::string surface;
  std::size_t index = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// An immutable tokenized sentence.
class Sentence {
 public:
  Sentence() = default;

  // Builds a sentence from surfaces. Throws ContractViolation if a surface
  // is empty or contains whitespace.
  static Sentence FromSurfaces(std::span<const std::string> surfaces);

  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }

  // The untokenized input, empty when built from surfaces.
  const std::string& raw() const { return raw_; }

  std::vector<std::string> surfaces() const;

  // Token-level equality; raw text is ignored.
  friend bool operator==(const Sentence& a, const Sentence& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  friend Sentence tokenize(std::string_view text);

  std::vector<Token> tokens_;
  std::string raw_;
};

// Splits on runs of ASCII whitespace (space, \t, \n, \v, \f, \r).
Sentence tokenize(std::string_view text);

// Joins surfaces with single spaces.
std::string detokenize(const Sentence& sentence);

bool is_ascii_space(char c);

// Decodes UTF-8 into code points. Bytes that do not start a valid sequence
// are passed through as their byte value.
std::vector<char32_t> decode_utf8(std::string_view text);

// Lowercases ASCII letters and the Latin-1/Latin Extended-A, Greek and
// Cyrillic capital ranges; other bytes are copied.
std::string to_lower(std::string_view text);

}  // namespace editspan

#endif  // EDITSPAN_TEXT_HPP_
