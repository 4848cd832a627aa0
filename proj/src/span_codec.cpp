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

#include "editspan/span_codec.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>

#include "editspan/error.hpp"

namespace editspan {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of an optionally signed integer at s[pos], or 0.
std::size_t scan_int(std::string_view s, std::size_t pos) {
  std::size_t i = pos;
  if (i < s.size() && s[i] == '-') ++i;
  const std::size_t digits = i;
  while (i < s.size() && is_digit(s[i])) ++i;
  return i == digits ? 0 : i - pos;
}

// True when s[pos..] reads `ws* int ws+ int` and the second integer is
// followed by whitespace, a comma or the end of text.
bool starts_fragment(std::string_view s, std::size_t pos) {
  while (pos < s.size() && is_ascii_space(s[pos])) ++pos;
  std::size_t len = scan_int(s, pos);
  if (len == 0) return false;
  pos += len;
  const std::size_t gap = pos;
  while (pos < s.size() && is_ascii_space(s[pos])) ++pos;
  if (pos == gap) return false;
  len = scan_int(s, pos);
  if (len == 0) return false;
  pos += len;
  return pos == s.size() || is_ascii_space(s[pos]) || s[pos] == ',';
}

std::vector<std::string_view> split_fragments(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == ',' && starts_fragment(text, i + 1)) {
      out.push_back(text.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  out.push_back(text.substr(begin));
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ascii_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_ascii_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Position {
  bool negative = false;
  std::uint64_t value = 0;  // saturates on overflow
};

std::optional<Position> parse_position(std::string_view tok) {
  if (tok.empty() || scan_int(tok, 0) != tok.size()) return std::nullopt;
  Position p;
  if (tok.front() == '-') {
    p.negative = true;
    tok.remove_prefix(1);
  }
  const auto result =
      std::from_chars(tok.data(), tok.data() + tok.size(), p.value);
  if (result.ec == std::errc::result_out_of_range) {
    p.value = std::numeric_limits<std::uint64_t>::max();
  }
  if (p.value == 0) p.negative = false;  // "-0"
  return p;
}

bool conflicts(const EditSpan& a, const EditSpan& b) {
  return a.start == b.start || (a.start < b.end && b.start < a.end);
}

}  // namespace

std::string EditScript::check() const {
  for (std::size_t k = 0; k < spans.size(); ++k) {
    const EditSpan& s = spans[k];
    const std::string where = "span " + std::to_string(k) + ": ";
    if (s.start > s.end) return where + "start > end";
    if (s.end > source_len) return where + "end beyond source length";
    if (s.is_insertion() && s.is_deletion()) return where + "empty insertion";
    for (const std::string& tok : s.replacement) {
      if (tok.empty() ||
          std::any_of(tok.begin(), tok.end(), is_ascii_space)) {
        return where + "replacement token is empty or contains whitespace";
      }
    }
    if (k > 0) {
      const EditSpan& prev = spans[k - 1];
      if (prev.end > s.start) return where + "overlaps previous span";
      if (prev.start == s.start) return where + "shares a start gap";
    }
  }
  return {};
}

std::string serialize(const EditScript& script) {
  if (script.spans.empty()) return "None";
  std::string out;
  for (const EditSpan& span : script.spans) {
    if (!out.empty()) out += ", ";
    out += std::to_string(span.start);
    out.push_back(' ');
    out += std::to_string(span.end);
    for (const std::string& tok : span.replacement) {
      out.push_back(' ');
      out += tok;
    }
  }
  return out;
}

std::string_view to_string(DiscardReason reason) {
  switch (reason) {
    case DiscardReason::kMissingPositions:
      return "missing start/end positions";
    case DiscardReason::kNegativePosition:
      return "negative position";
    case DiscardReason::kStartAfterEnd:
      return "start after end";
    case DiscardReason::kEndOutOfRange:
      return "end beyond source length";
    case DiscardReason::kEmptyInsertion:
      return "empty insertion";
    case DiscardReason::kOverlap:
      return "overlaps an earlier edit";
  }
  return "?";
}

ParseReport parse(std::string_view text, std::size_t source_len) {
  ParseReport report;
  report.script.source_len = source_len;
  const std::string_view body = trim(text);
  if (body == "None") return report;
  if (body.empty()) {
    report.notes.push_back({0, std::nullopt, {}, "empty output"});
    return report;
  }

  std::vector<EditSpan> kept;
  const std::vector<std::string_view> fragments = split_fragments(body);
  report.fragments = fragments.size();
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    const std::string_view frag = trim(fragments[f]);
    auto discard = [&](DiscardReason reason) {
      report.notes.push_back({f, reason, std::string(frag),
                              "discarded fragment " + std::to_string(f) +
                                  " '" + std::string(frag) +
                                  "': " + std::string(to_string(reason))});
      ++report.ignored;
    };

    const std::vector<std::string_view> fields = split_ws(frag);
    std::optional<Position> start;
    std::optional<Position> end;
    if (fields.size() >= 2) {
      start = parse_position(fields[0]);
      end = parse_position(fields[1]);
    }
    if (!start || !end) {
      discard(DiscardReason::kMissingPositions);
      continue;
    }
    if (start->negative || end->negative) {
      discard(DiscardReason::kNegativePosition);
      continue;
    }
    if (start->value > end->value) {
      discard(DiscardReason::kStartAfterEnd);
      continue;
    }
    if (end->value > source_len) {
      discard(DiscardReason::kEndOutOfRange);
      continue;
    }
    EditSpan span{static_cast<std::size_t>(start->value),
                  static_cast<std::size_t>(end->value),
                  {fields.begin() + 2, fields.end()}};
    if (span.is_insertion() && span.is_deletion()) {
      discard(DiscardReason::kEmptyInsertion);
      continue;
    }
    if (std::any_of(kept.begin(), kept.end(),
                    [&](const EditSpan& k) { return conflicts(k, span); })) {
      discard(DiscardReason::kOverlap);
      continue;
    }
    kept.push_back(std::move(span));
  }
  std::sort(kept.begin(), kept.end(), [](const EditSpan& a, const EditSpan& b) {
    return std::tie(a.start, a.end) < std::tie(b.start, b.end);
  });
  report.script.spans = std::move(kept);
  return report;
}

Sentence apply(const EditScript& script, const Sentence& src) {
  if (script.source_len != src.size()) {
    throw ContractViolation("script expects " +
                            std::to_string(script.source_len) +
                            " source tokens, sentence has " +
                            std::to_string(src.size()));
  }
  if (const std::string problem = script.check(); !problem.empty()) {
    throw ContractViolation("invalid edit script: " + problem);
  }
  std::vector<std::string> tokens = src.surfaces();
  for (auto it = script.spans.rbegin(); it != script.spans.rend(); ++it) {
    const auto first = tokens.begin() + static_cast<std::ptrdiff_t>(it->start);
    const auto last = tokens.begin() + static_cast<std::ptrdiff_t>(it->end);
    const auto pos = tokens.erase(first, last);
    tokens.insert(pos, it->replacement.begin(), it->replacement.end());
  }
  return Sentence::FromSurfaces(tokens);
}

EditScript canonicalize(const EditScript& script, const Sentence& src,
                        const AnnotationProvider& provider,
                        const CostWeights& w) {
  return extract_spans(src, apply(script, src), provider, w);
}

}  // namespace editspan
