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

#ifndef EDITSPAN_SPAN_CODEC_HPP_
#define EDITSPAN_SPAN_CODEC_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "editspan/alignment.hpp"
#include "editspan/annotation.hpp"
#include "editspan/text.hpp"

namespace editspan {

// One edit over source gap positions:
//   start == end            insertion of `replacement` (non-empty)
//   start <  end, empty     deletion of tokens [start, end)
//   start <  end, non-empty replacement of tokens [start, end)
struct EditSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<std::string> replacement;

  bool is_insertion() const { return start == end; }
  bool is_deletion() const { return replacement.empty(); }

  friend bool operator==(const EditSpan&, const EditSpan&) = default;
  friend auto operator<=>(const EditSpan&, const EditSpan&) = default;
};

// Spans sorted by start, a.end <= b.start for neighbours, and no two spans
// starting at the same gap.
struct EditScript {
  std::vector<EditSpan> spans;
  std::size_t source_len = 0;

  bool empty() const { return spans.empty(); }
  // Empty string when valid, otherwise a description of the first problem.
  std::string check() const;
  bool valid() const { return check().empty(); }

  friend bool operator==(const EditScript&, const EditScript&) = default;
};

// `<start> <end>[ <tok>...]` joined by ", ", or "None" for no edits.
std::string serialize(const EditScript& script);

enum class DiscardReason {
  kMissingPositions,
  kNegativePosition,
  kStartAfterEnd,
  kEndOutOfRange,
  kEmptyInsertion,
  kOverlap,
};

std::string_view to_string(DiscardReason reason);

// A parse diagnostic. Notes without a reason are informational.
struct ParseNote {
  std::size_t fragment = 0;  // 0-based fragment index in scan order
  std::optional<DiscardReason> reason;
  std::string text;  // the fragment, trimmed
  std::string message;

  bool discarded() const { return reason.has_value(); }
};

struct ParseReport {
  EditScript script;
  std::size_t fragments = 0;
  std::size_t ignored = 0;
  std::vector<ParseNote> notes;
};

// Never fails. "None" (after trimming) is the empty script; otherwise the
// text is split into fragments at commas followed by `int ws int`, and every
// fragment without two leading integers, with a negative position,
// start > end, end > source_len, an empty insertion, or overlapping an
// earlier survivor, is discarded with a note.
ParseReport parse(std::string_view text, std::size_t source_len);

// Applies spans in descending start order. Throws ContractViolation when
// script.source_len differs from src.size() or the script is invalid.
Sentence apply(const EditScript& script, const Sentence& src);

// extract_spans(src, apply(script, src)).
EditScript canonicalize(const EditScript& script, const Sentence& src,
                        const AnnotationProvider& provider,
                        const CostWeights& w);

}  // namespace editspan

#endif  // EDITSPAN_SPAN_CODEC_HPP_
