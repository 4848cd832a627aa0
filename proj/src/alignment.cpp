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

#include "editspan/alignment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <string>

#include "editspan/error.hpp"
#include "editspan/span_codec.hpp"

namespace editspan {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
  return s;
}

// Row-major (rows x cols) table.
template <typename T>
class Table {
 public:
  Table(std::size_t rows, std::size_t cols, T init = T{})
      : cols_(cols), data_(rows * cols, init) {}
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t cols_;
  std::vector<T> data_;
};

bool same_surface(const AnnotatedToken& a, const AnnotatedToken& b) {
  return a.token.surface == b.token.surface;
}

// Source pair (i-2, i-1) equals target pair (j-1, j-2).
bool transposable(std::span<const AnnotatedToken> src,
                  std::span<const AnnotatedToken> tgt, std::size_t i,
                  std::size_t j) {
  return i >= 2 && j >= 2 && same_surface(src[i - 1], tgt[j - 2]) &&
         same_surface(src[i - 2], tgt[j - 1]);
}

}  // namespace

void CostWeights::validate() const {
  if (w_lemma < 0 || w_pos < 0 || w_char < 0) {
    throw ConfigError("feature weights must be non-negative");
  }
  if (!(insert_cost > 0) || !(delete_cost > 0) || !(transpose_cost > 0)) {
    throw ConfigError("insert, delete and transpose costs must be positive");
  }
  if (!(sub_floor > 0) || sub_floor > base_sub()) {
    throw ConfigError("sub_floor must be in (0, insert_cost + delete_cost]");
  }
}

CostWeights load_cost_weights(std::istream& in) {
  CostWeights w;
  const std::pair<std::string_view, double CostWeights::*> fields[] = {
      {"w_lemma", &CostWeights::w_lemma},
      {"w_pos", &CostWeights::w_pos},
      {"w_char", &CostWeights::w_char},
      {"insert_cost", &CostWeights::insert_cost},
      {"delete_cost", &CostWeights::delete_cost},
      {"transpose_cost", &CostWeights::transpose_cost},
      {"sub_floor", &CostWeights::sub_floor},
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const std::size_t hash = view.find('#'); hash != view.npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const std::size_t eq = view.find('=');
    const std::string where = "weights line " + std::to_string(line_no);
    if (eq == view.npos) throw ConfigError(where + ": expected key = value");
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));
    if (key == "base_sub") {
      throw ConfigError(where +
                        ": base_sub is derived from insert_cost + delete_cost");
    }
    auto field = std::find_if(std::begin(fields), std::end(fields),
                              [&](const auto& f) { return f.first == key; });
    if (field == std::end(fields)) {
      throw ConfigError(where + ": unknown key '" + std::string(key) + "'");
    }
    double parsed = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw ConfigError(where + ": bad number '" + std::string(value) + "'");
    }
    w.*(field->second) = parsed;
  }
  w.validate();
  return w;
}

CostWeights load_cost_weights_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open weights file " + path.string());
  return load_cost_weights(in);
}

std::size_t char_levenshtein(std::string_view a, std::string_view b) {
  const std::vector<char32_t> s = decode_utf8(a);
  const std::vector<char32_t> t = decode_utf8(b);
  std::vector<std::size_t> row(t.size() + 1);
  for (std::size_t j = 0; j <= t.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1,
                         diag + (s[i - 1] == t[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[t.size()];
}

double char_similarity(std::string_view a, std::string_view b) {
  const std::size_t longest =
      std::max(decode_utf8(a).size(), decode_utf8(b).size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(char_levenshtein(a, b)) /
                   static_cast<double>(longest);
}

double sub_cost(const AnnotatedToken& a, const AnnotatedToken& b,
                const CostWeights& w) {
  if (same_surface(a, b)) return 0.0;
  double cost = w.base_sub();
  if (a.lemma == b.lemma) cost -= w.w_lemma;
  if (a.pos == b.pos) cost -= w.w_pos;
  cost -= w.w_char * char_similarity(a.token.surface, b.token.surface);
  return std::clamp(cost, w.sub_floor, w.base_sub());
}

std::string_view to_string(OpKind kind) {
  switch (kind) {
    case OpKind::kMatch:
      return "MATCH";
    case OpKind::kSub:
      return "SUB";
    case OpKind::kIns:
      return "INS";
    case OpKind::kDel:
      return "DEL";
    case OpKind::kTrans:
      return "TRANS";
  }
  return "?";
}

double op_cost(const AlignOp& op, std::span<const AnnotatedToken> src,
               std::span<const AnnotatedToken> tgt, const CostWeights& w) {
  switch (op.kind) {
    case OpKind::kMatch:
      return 0.0;
    case OpKind::kSub:
      return sub_cost(src[op.src.begin], tgt[op.tgt.begin], w);
    case OpKind::kIns:
      return w.insert_cost * static_cast<double>(op.tgt.size());
    case OpKind::kDel:
      return w.delete_cost * static_cast<double>(op.src.size());
    case OpKind::kTrans:
      return w.transpose_cost;
  }
  return 0.0;
}

Alignment align(std::span<const AnnotatedToken> src,
                std::span<const AnnotatedToken> tgt, const CostWeights& w) {
  const std::size_t n = src.size();
  const std::size_t m = tgt.size();

  Table<double> sub(n + 1, m + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      sub(i, j) = sub_cost(src[i - 1], tgt[j - 1], w);
    }
  }

  Table<double> dist(n + 1, m + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    dist(i, 0) = dist(i - 1, 0) + w.delete_cost;
  }
  for (std::size_t j = 1; j <= m; ++j) {
    dist(0, j) = dist(0, j - 1) + w.insert_cost;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      double best = dist(i - 1, j - 1) + sub(i, j);
      if (transposable(src, tgt, i, j)) {
        best = std::min(best, dist(i - 2, j - 2) + w.transpose_cost);
      }
      best = std::min(best, dist(i - 1, j) + w.delete_cost);
      best = std::min(best, dist(i, j - 1) + w.insert_cost);
      dist(i, j) = best;
    }
  }

  // Backtrace. Each candidate is recomputed exactly as in the forward pass,
  // so equality against dist(i, j) is exact.
  Alignment out;
  out.total_cost = dist(n, m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const double here = dist(i, j);
    if (i > 0 && j > 0 && dist(i - 1, j - 1) + sub(i, j) == here) {
      const OpKind kind =
          same_surface(src[i - 1], tgt[j - 1]) ? OpKind::kMatch : OpKind::kSub;
      out.ops.push_back({kind, {i - 1, i}, {j - 1, j}});
      --i, --j;
    } else if (transposable(src, tgt, i, j) &&
               dist(i - 2, j - 2) + w.transpose_cost == here) {
      out.ops.push_back({OpKind::kTrans, {i - 2, i}, {j - 2, j}});
      i -= 2, j -= 2;
    } else if (i > 0 && dist(i - 1, j) + w.delete_cost == here) {
      out.ops.push_back({OpKind::kDel, {i - 1, i}, {j, j}});
      --i;
    } else {
      out.ops.push_back({OpKind::kIns, {i, i}, {j - 1, j}});
      --j;
    }
  }
  std::reverse(out.ops.begin(), out.ops.end());
  return out;
}

std::string_view to_string(MergeStrategy strategy) {
  switch (strategy) {
    case MergeStrategy::kMaximalRun:
      return "maximal-run";
  }
  return "?";
}

MergeStrategy parse_merge_strategy(std::string_view name) {
  if (name == "maximal-run") return MergeStrategy::kMaximalRun;
  throw ConfigError("unknown merge strategy '" + std::string(name) + "'");
}

std::vector<AlignOp> merge_ops(const Alignment& alignment,
                               MergeStrategy strategy) {
  (void)strategy;  // kMaximalRun is the only strategy.
  std::vector<AlignOp> out;
  out.reserve(alignment.ops.size());
  std::size_t run_len = 0;
  for (const AlignOp& op : alignment.ops) {
    if (op.kind == OpKind::kMatch) {
      out.push_back(op);
      run_len = 0;
      continue;
    }
    if (run_len == 0) {
      out.push_back(op);
    } else {
      AlignOp& run = out.back();
      run.src.end = op.src.end;
      run.tgt.end = op.tgt.end;
      run.kind = run.src.empty()   ? OpKind::kIns
                 : run.tgt.empty() ? OpKind::kDel
                                   : OpKind::kSub;
    }
    ++run_len;
  }
  return out;
}

EditScript extract_spans(const Sentence& src, const Sentence& tgt,
                         const AnnotationProvider& provider,
                         const CostWeights& w, MergeStrategy strategy) {
  const std::vector<AnnotatedToken> a = annotate(src, provider);
  const std::vector<AnnotatedToken> b = annotate(tgt, provider);
  EditScript script;
  script.source_len = src.size();
  for (const AlignOp& op : merge_ops(align(a, b, w), strategy)) {
    if (op.kind == OpKind::kMatch) continue;
    EditSpan span{op.src.begin, op.src.end, {}};
    for (std::size_t k = op.tgt.begin; k < op.tgt.end; ++k) {
      span.replacement.push_back(tgt[k].surface);
    }
    script.spans.push_back(std::move(span));
  }
  return script;
}

}  // namespace editspan
