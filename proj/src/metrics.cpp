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

#include "editspan/metrics.hpp"

#include <set>
#include <sstream>

#include "editspan/error.hpp"
#include "json.hpp"

namespace editspan {

namespace {

std::size_t count_ws_tokens(std::string_view s) {
  std::size_t n = 0;
  bool in_token = false;
  for (char c : s) {
    const bool space = is_ascii_space(c);
    if (!space && !in_token) ++n;
    in_token = !space;
  }
  return n;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
  return s;
}

double ratio_of(std::size_t num, std::size_t den) {
  return static_cast<double>(num) /
         static_cast<double>(std::max<std::size_t>(den, 1));
}

}  // namespace

CompressionStat compression(std::string_view span_text,
                            const Sentence& target) {
  CompressionStat stat;
  stat.span_tokens = count_ws_tokens(span_text);
  stat.target_tokens = target.size();
  stat.ratio = ratio_of(stat.span_tokens, stat.target_tokens);
  stat.span_chars = decode_utf8(trim(span_text)).size();
  stat.target_chars = decode_utf8(detokenize(target)).size();
  stat.char_ratio = ratio_of(stat.span_chars, stat.target_chars);
  return stat;
}

bool agreement(const EditScript& hyp, const Sentence& src,
               const AnnotationProvider& provider, const CostWeights& w) {
  return canonicalize(hyp, src, provider, w).spans == hyp.spans;
}

double f_beta(double precision, double recall, double beta) {
  const double b2 = beta * beta;
  const double denom = b2 * precision + recall;
  if (denom == 0.0) return 0.0;
  return (1.0 + b2) * precision * recall / denom;
}

EditScore EditScore::FromCounts(std::size_t tp, std::size_t fp,
                                std::size_t fn) {
  EditScore s;
  s.tp = tp;
  s.fp = fp;
  s.fn = fn;
  s.precision = tp + fp == 0 ? 1.0 : static_cast<double>(tp) / (tp + fp);
  s.recall = tp + fn == 0 ? 1.0 : static_cast<double>(tp) / (tp + fn);
  s.f05 = f_beta(s.precision, s.recall, 0.5);
  return s;
}

EditScore edit_f05(const EditScript& hyp, const EditScript& gold) {
  if (hyp.source_len != gold.source_len) {
    throw ContractViolation("hypothesis and gold scripts cover different "
                            "source lengths");
  }
  const std::set<EditSpan> gold_set(gold.spans.begin(), gold.spans.end());
  const std::set<EditSpan> hyp_set(hyp.spans.begin(), hyp.spans.end());
  std::size_t tp = 0;
  for (const EditSpan& s : hyp_set) tp += gold_set.count(s);
  return EditScore::FromCounts(tp, hyp_set.size() - tp, gold_set.size() - tp);
}

void CorpusScore::add_pair(bool agreed_pair, const CompressionStat& stat,
                           const EditScore& score, std::size_t ignored) {
  ++pairs;
  agreed += agreed_pair ? 1 : 0;
  ratio_sum += stat.ratio;
  char_ratio_sum += stat.char_ratio;
  span_tokens += stat.span_tokens;
  target_tokens += stat.target_tokens;
  tp += score.tp;
  fp += score.fp;
  fn += score.fn;
  ignored_fragments += ignored;
}

void CorpusScore::merge(const CorpusScore& other) {
  pairs += other.pairs;
  agreed += other.agreed;
  ratio_sum += other.ratio_sum;
  char_ratio_sum += other.char_ratio_sum;
  span_tokens += other.span_tokens;
  target_tokens += other.target_tokens;
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  ignored_fragments += other.ignored_fragments;
}

double CorpusScore::agreement_rate() const {
  return pairs == 0 ? 0.0 : static_cast<double>(agreed) / pairs;
}
double CorpusScore::mean_ratio() const {
  return pairs == 0 ? 0.0 : ratio_sum / pairs;
}
double CorpusScore::mean_char_ratio() const {
  return pairs == 0 ? 0.0 : char_ratio_sum / pairs;
}
double CorpusScore::mean_span_tokens() const {
  return pairs == 0 ? 0.0 : static_cast<double>(span_tokens) / pairs;
}
double CorpusScore::mean_target_tokens() const {
  return pairs == 0 ? 0.0 : static_cast<double>(target_tokens) / pairs;
}
EditScore CorpusScore::edit_score() const {
  return EditScore::FromCounts(tp, fp, fn);
}

std::string CorpusScore::to_json() const {
  const EditScore score = edit_score();
  nlohmann::ordered_json j;
  j["pairs"] = pairs;
  j["agreement_rate"] = agreement_rate();
  j["mean_ratio"] = mean_ratio();
  j["precision"] = score.precision;
  j["recall"] = score.recall;
  j["f05"] = score.f05;
  j["ignored_fragments"] = ignored_fragments;
  j["f05_kind"] = "edit-level exact match (M2 surrogate)";
  j["tp"] = tp;
  j["fp"] = fp;
  j["fn"] = fn;
  j["mean_span_tokens"] = mean_span_tokens();
  j["mean_target_tokens"] = mean_target_tokens();
  j["mean_char_ratio"] = mean_char_ratio();
  return j.dump();
}

std::string CorpusScore::to_text() const {
  const EditScore score = edit_score();
  std::ostringstream out;
  out << "pairs              " << pairs << '\n'
      << "agreement_rate     " << agreement_rate() << '\n'
      << "mean_ratio         " << mean_ratio() << '\n'
      << "mean_char_ratio    " << mean_char_ratio() << '\n'
      << "mean_span_tokens   " << mean_span_tokens() << '\n'
      << "mean_target_tokens " << mean_target_tokens() << '\n'
      << "precision          " << score.precision << '\n'
      << "recall             " << score.recall << '\n'
      << "f05                " << score.f05
      << "  (edit-level exact match, M2 surrogate)\n"
      << "ignored_fragments  " << ignored_fragments << '\n';
  return out.str();
}

}  // namespace editspan
