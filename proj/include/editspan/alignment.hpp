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

#ifndef EDITSPAN_ALIGNMENT_HPP_
#define EDITSPAN_ALIGNMENT_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "editspan/annotation.hpp"

namespace editspan {

// Weights of the linguistically discounted edit cost model.
//
// Substituting a for b costs 0 when the surfaces are identical, otherwise
//
//   base_sub - w_lemma*[lemma equal] - w_pos*[pos equal]
//            - w_char*char_similarity(a, b)
//
// clamped to [sub_floor, base_sub], where base_sub = insert + delete.
struct CostWeights {
  double w_lemma = 0.5;
  double w_pos = 0.4;
  double w_char = 0.6;
  double insert_cost = 1.0;
  double delete_cost = 1.0;
  double transpose_cost = 1.1;
  double sub_floor = 0.1;

  double base_sub() const { return insert_cost + delete_cost; }

  // Throws ConfigError when a weight is negative, a cost is not positive, or
  // sub_floor is outside (0, base_sub].
  void validate() const;

  friend bool operator==(const CostWeights&, const CostWeights&) = default;
};

// Reads `key = value` lines (blank lines and `#` comments allowed) over the
// defaults. Keys are the field names above. Throws ConfigError on unknown
// keys or unparsable values.
CostWeights load_cost_weights(std::istream& in);
CostWeights load_cost_weights_file(const std::filesystem::path& path);

// Code-point Levenshtein distance.
std::size_t char_levenshtein(std::string_view a, std::string_view b);

// 1 - levenshtein / max length; 1 for two empty strings.
double char_similarity(std::string_view a, std::string_view b);

double sub_cost(const AnnotatedToken& a, const AnnotatedToken& b,
                const CostWeights& w);

enum class OpKind { kMatch, kSub, kIns, kDel, kTrans };

std::string_view to_string(OpKind kind);

// Half-open token interval.
struct Range {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }

  friend bool operator==(const Range&, const Range&) = default;
};

struct AlignOp {
  OpKind kind = OpKind::kMatch;
  Range src;
  Range tgt;

  friend bool operator==(const AlignOp&, const AlignOp&) = default;
};

struct Alignment {
  std::vector<AlignOp> ops;
  double total_cost = 0.0;
};

// Cost of one primitive op under `w`; used to check Alignment::total_cost.
double op_cost(const AlignOp& op, std::span<const AnnotatedToken> src,
               std::span<const AnnotatedToken> tgt, const CostWeights& w);

// Minimum-cost alignment by the O(N*M) restricted Damerau-Levenshtein
// program. MATCH requires equal surfaces; TRANS swaps an adjacent pair whose
// surfaces equal the target pair crosswise. Ties in the backtrace resolve
// MATCH > SUB > TRANS > DEL > INS.
Alignment align(std::span<const AnnotatedToken> src,
                std::span<const AnnotatedToken> tgt, const CostWeights& w);

enum class MergeStrategy {
  // Coalesce every maximal run of consecutive non-MATCH ops into one op.
  kMaximalRun,
};

std::string_view to_string(MergeStrategy strategy);
// Throws ConfigError for unknown names.
MergeStrategy parse_merge_strategy(std::string_view name);

std::vector<AlignOp> merge_ops(
    const Alignment& alignment,
    MergeStrategy strategy = MergeStrategy::kMaximalRun);

struct EditScript;

// annotate -> align -> merge_ops -> one EditSpan per merged edit op.
EditScript extract_spans(const Sentence& src, const Sentence& tgt,
                         const AnnotationProvider& provider,
                         const CostWeights& w,
                         MergeStrategy strategy = MergeStrategy::kMaximalRun);

}  // namespace editspan

#endif  // EDITSPAN_ALIGNMENT_HPP_
