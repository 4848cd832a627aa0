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

#include "editspan/annotation.hpp"

#include <array>
#include <fstream>
#include <string>
#include <utility>

#include "editspan/error.hpp"

namespace editspan {

namespace {

constexpr std::array<std::pair<Pos, std::string_view>, 11> kPosNames = {{
    {Pos::kNoun, "NOUN"},
    {Pos::kVerb, "VERB"},
    {Pos::kAdj, "ADJ"},
    {Pos::kAdv, "ADV"},
    {Pos::kPron, "PRON"},
    {Pos::kDet, "DET"},
    {Pos::kAdp, "ADP"},
    {Pos::kConj, "CONJ"},
    {Pos::kNum, "NUM"},
    {Pos::kPunct, "PUNCT"},
    {Pos::kOther, "OTHER"},
}};

enum class CodePointKind { kAlpha, kDigit, kPunct, kOther };

bool is_punct_code_point(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  // Latin-1 punctuation and symbols (minus ª µ º).
  if (c >= 0xA1 && c <= 0xBF) return c != 0xAA && c != 0xB5 && c != 0xBA;
  if (c == 0xD7 || c == 0xF7) return true;
  if (c >= 0x2010 && c <= 0x2BFF) return true;  // punctuation .. symbols
  if (c >= 0x3000 && c <= 0x303F) return true;  // CJK punctuation
  if (c >= 0xFE30 && c <= 0xFE4F) return true;
  if (c >= 0xFF01 && c <= 0xFF0F) return true;  // fullwidth forms
  if (c >= 0xFF1A && c <= 0xFF20) return true;
  if (c >= 0xFF3B && c <= 0xFF40) return true;
  if (c >= 0xFF5B && c <= 0xFF65) return true;
  return false;
}

CodePointKind kind_of(char32_t c) {
  if (c >= U'0' && c <= U'9') return CodePointKind::kDigit;
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) {
    return CodePointKind::kAlpha;
  }
  if (is_punct_code_point(c)) return CodePointKind::kPunct;
  if (c < 0xA0) return CodePointKind::kOther;  // controls, DEL, C1
  return CodePointKind::kAlpha;
}

Pos naive_pos(CharClass cls) {
  switch (cls) {
    case CharClass::kPunctuation:
      return Pos::kPunct;
    case CharClass::kNumeric:
      return Pos::kNum;
    default:
      return Pos::kOther;
  }
}

std::string join_surfaces(std::span<const Token> tokens) {
  std::string key;
  for (const Token& t : tokens) {
    if (!key.empty()) key.push_back(' ');
    key += t.surface;
  }
  return key;
}

}  // namespace

std::string_view to_string(Pos pos) {
  for (const auto& [p, name] : kPosNames) {
    if (p == pos) return name;
  }
  return "OTHER";
}

std::optional<Pos> parse_pos(std::string_view label) {
  for (const auto& [p, name] : kPosNames) {
    if (name == label) return p;
  }
  return std::nullopt;
}

std::string_view to_string(CharClass cls) {
  switch (cls) {
    case CharClass::kAlphabetic:
      return "alphabetic";
    case CharClass::kNumeric:
      return "numeric";
    case CharClass::kPunctuation:
      return "punctuation";
    case CharClass::kMixed:
      return "mixed";
  }
  return "mixed";
}

CharClass classify_chars(std::string_view surface) {
  const std::vector<char32_t> cps = decode_utf8(surface);
  if (cps.empty()) return CharClass::kMixed;
  const CodePointKind first = kind_of(cps.front());
  for (char32_t c : cps) {
    if (kind_of(c) != first) return CharClass::kMixed;
  }
  switch (first) {
    case CodePointKind::kAlpha:
      return CharClass::kAlphabetic;
    case CodePointKind::kDigit:
      return CharClass::kNumeric;
    case CodePointKind::kPunct:
      return CharClass::kPunctuation;
    case CodePointKind::kOther:
      return CharClass::kMixed;
  }
  return CharClass::kMixed;
}

std::vector<AnnotatedToken> NaiveProvider::annotate(
    std::span<const Token> tokens) const {
  std::vector<AnnotatedToken> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) {
    const CharClass cls = classify_chars(t.surface);
    out.push_back(AnnotatedToken{t, to_lower(t.surface), naive_pos(cls), cls});
  }
  return out;
}

SidecarProvider SidecarProvider::Load(std::istream& in) {
  SidecarProvider provider;
  std::vector<std::string> surfaces;
  std::vector<Entry> entries;
  auto flush = [&] {
    if (surfaces.empty()) return;
    std::string key;
    for (const std::string& s : surfaces) {
      if (!key.empty()) key.push_back(' ');
      key += s;
    }
    provider.sentences_.try_emplace(std::move(key), std::move(entries));
    surfaces.clear();
    entries.clear();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 =
        t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw DataError("sidecar line " + std::to_string(line_no) +
                      ": expected surface<TAB>lemma<TAB>pos");
    }
    std::string surface = line.substr(0, t1);
    std::string lemma = line.substr(t1 + 1, t2 - t1 - 1);
    const std::string label = line.substr(t2 + 1);
    const std::optional<Pos> pos = parse_pos(label);
    if (surface.empty() || lemma.empty()) {
      throw DataError("sidecar line " + std::to_string(line_no) +
                      ": empty surface or lemma");
    }
    if (!pos) {
      throw DataError("sidecar line " + std::to_string(line_no) +
                      ": unknown POS label '" + label + "'");
    }
    surfaces.push_back(std::move(surface));
    entries.push_back(Entry{std::move(lemma), *pos});
  }
  flush();
  return provider;
}

SidecarProvider SidecarProvider::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open annotations file " + path.string());
  return Load(in);
}

std::vector<AnnotatedToken> SidecarProvider::annotate(
    std::span<const Token> tokens) const {
  const std::string key = join_surfaces(tokens);
  const auto it = sentences_.find(key);
  if (it == sentences_.end()) {
    throw DataError("no sidecar annotations for sentence: " + key);
  }
  std::vector<AnnotatedToken> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Entry& e = it->second[i];
    out.push_back(AnnotatedToken{tokens[i], e.lemma, e.pos,
                                 classify_chars(tokens[i].surface)});
  }
  return out;
}

std::shared_ptr<const AnnotationProvider> make_provider(
    std::string_view name, const ProviderOptions& options) {
  if (name == "naive") return std::make_shared<NaiveProvider>();
  if (name == "sidecar") {
    if (!options.annotations) {
      throw ConfigError("provider 'sidecar' requires an annotations file");
    }
    return std::make_shared<SidecarProvider>(
        SidecarProvider::LoadFile(*options.annotations));
  }
  throw ConfigError("unknown annotation provider '" + std::string(name) + "'");
}

std::vector<std::string> registered_providers() { return {"naive", "sidecar"}; }

std::vector<AnnotatedToken> annotate(const Sentence& sentence,
                                     const AnnotationProvider& provider) {
  std::vector<AnnotatedToken> out = provider.annotate(sentence.tokens());
  if (out.size() != sentence.size()) {
    throw ContractViolation("provider '" + std::string(provider.name()) +
                            "' changed the token count");
  }
  return out;
}

}  // namespace editspan
