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

#ifndef EDITSPAN_METRICS_HPP_
#define EDITSPAN_METRICS_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "editspan/alignment.hpp"
#include "editspan/span_codec.hpp"
#include "editspan/text.hpp"

namespace editspan {

// Length of a serialized span string relative to the target sentence.
// Token counts are the primary measure. Character counts (code points of the
// trimmed span text and of the detokenized target) are reported alongside.
struct CompressionStat {
  std::size_t span_tokens = 0;
  std::size_t target_tokens = 0;
  double ratio = 0.0;  // span_tokens / max(target_tokens, 1)
  std::size_t span_chars = 0;
  std::size_t target_chars = 0;
  double char_ratio = 0.0;  // span_chars / max(target_chars, 1)
};

// Whitespace tokens of `span_text` ("None" counts one; commas count with
// the token they are glued to) against the tokens of `target`.
CompressionStat compression(std::string_view span_text, const Sentence& target);

// True iff `hyp` equals its canonical form span for span.
bool agreement(const EditScript& hyp, const Sentence& src,
               const AnnotationProvider& provider, const CostWeights& w);

// Edit-level exact-match scores. This is a surrogate for M2 scoring: spans
// are compared as (start, end, replacement) tuples with no chart search over
// equivalent edit sequences.
struct EditScore {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f05 = 1.0;

  // Fills precision/recall/f05 from the counts.
  static EditScore FromCounts(std::size_t tp, std::size_t fp, std::size_t fn);
};

double f_beta(double precision, double recall, double beta);

// Throws ContractViolation when the source lengths differ.
EditScore edit_f05(const EditScript& hyp, const EditScript& gold);

// Corpus-level accumulator. merge() is associative and commutative so
// per-pair results can be reduced in any order.
struct CorpusScore {
  std::size_t pairs = 0;
  std::size_t agreed = 0;
  double ratio_sum = 0.0;
  double char_ratio_sum = 0.0;
  std::size_t span_tokens = 0;
  std::size_t target_tokens = 0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t ignored_fragments = 0;

  void add_pair(bool agreed_pair, const CompressionStat& stat,
                const EditScore& score, std::size_t ignored);
  void merge(const CorpusScore& other);

  double agreement_rate() const;
  double mean_ratio() const;
  double mean_char_ratio() const;
  double mean_span_tokens() const;
  double mean_target_tokens() const;
  EditScore edit_score() const;

  // Single-line JSON object.
  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace editspan

#endif  // EDITSPAN_METRICS_HPP_
