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

#include "editspan/text.hpp"

#include <string>
#include <utility>

#include "editspan/error.hpp"
#include "utf8.hpp"

namespace editspan {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\v' || c == '\f' ||
         c == '\r';
}

Sentence Sentence::FromSurfaces(std::span<const std::string> surfaces) {
  Sentence s;
  s.tokens_.reserve(surfaces.size());
  for (const std::string& surface : surfaces) {
    if (surface.empty()) {
      throw ContractViolation("token " + std::to_string(s.tokens_.size()) +
                              " is empty");
    }
    for (char c : surface) {
      if (is_ascii_space(c)) {
        throw ContractViolation("token '" + surface +
                                "' contains whitespace");
      }
    }
    s.tokens_.push_back(Token{surface, s.tokens_.size()});
  }
  return s;
}

std::vector<std::string> Sentence::surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens_.size());
  for (const Token& t : tokens_) out.push_back(t.surface);
  return out;
}

Sentence tokenize(std::string_view text) {
  Sentence s;
  s.raw_ = std::string(text);
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_ascii_space(text[j])) ++j;
    if (j > i) {
      s.tokens_.push_back(Token{std::string(text.substr(i, j - i)),
                                s.tokens_.size()});
    }
    i = j;
  }
  return s;
}

std::string detokenize(const Sentence& sentence) {
  std::string out;
  for (const Token& t : sentence.tokens()) {
    if (!out.empty()) out.push_back(' ');
    out += t.surface;
  }
  return out;
}

std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const internal::Utf8Step step = internal::next_code_point(text, i);
    out.push_back(step.code_point);
    i += step.length;
  }
  return out;
}

namespace {

char32_t lower_code_point(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c < 0x80) return c;
  // Latin-1 capitals, excluding the multiplication sign.
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  // Latin Extended-A pairs (capital on the even code point).
  if (c >= 0x100 && c <= 0x137 && c % 2 == 0) return c + 1;
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 0x20;
  if (c >= 0x410 && c <= 0x42F) return c + 0x20;
  if (c >= 0x400 && c <= 0x40F) return c + 0x50;
  return c;
}

}  // namespace

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const internal::Utf8Step step = internal::next_code_point(text, i);
    if (step.valid) {
      internal::append_utf8(out, lower_code_point(step.code_point));
    } else {
      out.push_back(text[i]);
    }
    i += step.length;
  }
  return out;
}

}  // namespace editspan
