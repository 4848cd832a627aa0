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

#ifndef EDITSPAN_ANNOTATION_HPP_
#define EDITSPAN_ANNOTATION_HPP_

#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "editspan/text.hpp"

namespace editspan {

// Coarse part-of-speech labels. Alignment only tests them for equality.
enum class Pos {
  kNoun,
  kVerb,
  kAdj,
  kAdv,
  kPron,
  kDet,
  kAdp,
  kConj,
  kNum,
  kPunct,
  kOther,
};

std::string_view to_string(Pos pos);
// Accepts the upper-case label names ("NOUN", "PUNCT", ...).
std::optional<Pos> parse_pos(std::string_view label);

enum class CharClass { kAlphabetic, kNumeric, kPunctuation, kMixed };

std::string_view to_string(CharClass cls);

// All code points alphabetic -> kAlphabetic, all ASCII digits -> kNumeric,
// all punctuation/symbols -> kPunctuation, anything else -> kMixed.
// Non-ASCII code points outside the known punctuation blocks count as
// alphabetic.
CharClass classify_chars(std::string_view surface);

struct AnnotatedToken {
  Token token;
  std::string lemma;
  Pos pos = Pos::kOther;
  CharClass char_class = CharClass::kMixed;

  friend bool operator==(const AnnotatedToken&,
                         const AnnotatedToken&) = default;
};

// Maps tokens to annotated tokens. Output has the same length and order as
// the input and carries each Token through unmodified. Implementations must
// be safe to call concurrently.
class AnnotationProvider {
 public:
  virtual ~AnnotationProvider() = default;
  virtual std::string_view name() const = 0;
  virtual std::vector<AnnotatedToken> annotate(
      std::span<const Token> tokens) const = 0;
};

// lemma = lowercased surface; pos = PUNCT / NUM / OTHER from the character
// class.
class NaiveProvider final : public AnnotationProvider {
 public:
  std::string_view name() const override { return "naive"; }
  std::vector<AnnotatedToken> annotate(
      std::span<const Token> tokens) const override;
};

// Per-token lemma and POS read from a tab-separated sidecar file:
//
//   surface<TAB>lemma<TAB>pos
//
// one token per line, sentences separated by blank lines. A sentence is
// looked up by its exact surface sequence; annotating a sentence that the
// sidecar does not contain throws DataError. char_class is always derived
// from the surface.
class SidecarProvider final : public AnnotationProvider {
 public:
  struct Entry {
    std::string lemma;
    Pos pos;
  };

  static SidecarProvider Load(std::istream& in);
  static SidecarProvider LoadFile(const std::filesystem::path& path);

  std::string_view name() const override { return "sidecar"; }
  std::vector<AnnotatedToken> annotate(
      std::span<const Token> tokens) const override;

  std::size_t sentence_count() const { return sentences_.size(); }

 private:
  // Keyed by the space-joined surfaces.
  std::map<std::string, std::vector<Entry>, std::less<>> sentences_;
};

struct ProviderOptions {
  std::optional<std::filesystem::path> annotations;
};

// Provider registry. Known names: "naive", "sidecar" (requires
// options.annotations). Unknown names throw ConfigError.
std::shared_ptr<const AnnotationProvider> make_provider(
    std::string_view name, const ProviderOptions& options = {});

std::vector<std::string> registered_providers();

std::vector<AnnotatedToken> annotate(const Sentence& sentence,
                                     const AnnotationProvider& provider);

}  // namespace editspan

#endif  // EDITSPAN_ANNOTATION_HPP_
