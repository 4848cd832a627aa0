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

#include "editspan/dataset.hpp"

#include <fstream>
#include <limits>
#include <random>
#include <utility>

#include "editspan/error.hpp"
#include "editspan/parallel.hpp"
#include "editspan/span_codec.hpp"
#include "json.hpp"

namespace editspan {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
  return s;
}

// Uniform integer in [0, n) by rejection; std::uniform_int_distribution is
// implementation-defined and would make output depend on the standard
// library.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % n;
  }
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[bounded(rng, i)]);
  }
}

// k distinct indices out of [0, n) in draw order.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k,
                                        std::mt19937_64& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(idx[i], idx[i + bounded(rng, n - i)]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace

std::string_view to_string(Task task) {
  switch (task) {
    case Task::kGec:
      return "gec";
    case Task::kParaphrase:
      return "paraphrase";
    case Task::kStyle:
      return "style";
    case Task::kSimplify:
      return "simplify";
    case Task::kOpenEnded:
      return "open_ended";
  }
  return "?";
}

std::optional<Task> parse_task(std::string_view label) {
  for (Task t : {Task::kGec, Task::kParaphrase, Task::kStyle, Task::kSimplify,
                 Task::kOpenEnded}) {
    if (to_string(t) == label) return t;
  }
  return std::nullopt;
}

std::string_view default_instruction(Task task) {
  switch (task) {
    case Task::kGec:
      return "Rewrite the input text into grammatically correct text.";
    case Task::kParaphrase:
      return "Rewrite the input text into paraphrased text.";
    case Task::kStyle:
      return "Rewrite the input text into formal text.";
    case Task::kSimplify:
      return "Rewrite the input text into simpler text.";
    case Task::kOpenEnded:
      return "";
  }
  return "";
}

InstructionSet::InstructionSet() {
  for (Task t : kSpanTasks) text_[t] = std::string(default_instruction(t));
}

InstructionSet InstructionSet::Load(std::istream& in) {
  InstructionSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const std::size_t eq = view.find('=');
    const std::string where = "instructions line " + std::to_string(line_no);
    if (eq == view.npos) throw ConfigError(where + ": expected key = value");
    const std::optional<Task> task = parse_task(trim(view.substr(0, eq)));
    if (!task || *task == Task::kOpenEnded) {
      throw ConfigError(where + ": unknown task '" +
                        std::string(trim(view.substr(0, eq))) + "'");
    }
    set.set(*task, std::string(trim(view.substr(eq + 1))));
  }
  return set;
}

InstructionSet InstructionSet::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open instructions file " + path.string());
  return Load(in);
}

const std::string& InstructionSet::get(Task task) const {
  const auto it = text_.find(task);
  if (it == text_.end()) {
    throw ContractViolation("no instruction for task " +
                            std::string(to_string(task)));
  }
  return it->second;
}

void InstructionSet::set(Task task, std::string text) {
  text_[task] = std::move(text);
}

std::string to_jsonl_line(const DatasetRecord& record) {
  ordered_json j;
  j["instruction"] = record.instruction;
  j["input"] = record.input;
  j["output"] = record.output;
  j["task"] = to_string(record.task);
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

void write_jsonl(std::ostream& out, std::span<const DatasetRecord> records) {
  for (const DatasetRecord& r : records) out << to_jsonl_line(r) << '\n';
}

std::optional<ParallelPair> parse_parallel_line(std::string_view line,
                                                std::size_t line_no) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const std::size_t tab = line.find('\t');
  if (tab == line.npos || line.find('\t', tab + 1) != line.npos) {
    return std::nullopt;
  }
  return ParallelPair{std::string(line.substr(0, tab)),
                      std::string(line.substr(tab + 1)), line_no};
}

ParallelCorpus read_parallel(std::istream& in) {
  ParallelCorpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pair = parse_parallel_line(line, line_no)) {
      corpus.pairs.push_back(std::move(*pair));
    } else {
      corpus.malformed.push_back(
          {line_no, "expected exactly one tab separating source and target"});
    }
  }
  return corpus;
}

ParallelCorpus read_parallel_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open parallel corpus " + path.string());
  return read_parallel(in);
}

OpenEndedSet read_open_ended(std::istream& in) {
  OpenEndedSet set;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    auto text_field = [&](const char* key) -> const std::string* {
      if (!j.is_object()) return nullptr;
      const auto it = j.find(key);
      if (it == j.end() || !it->is_string()) return nullptr;
      return it->get_ptr<const std::string*>();
    };
    const std::string* instruction = text_field("instruction");
    const std::string* output = text_field("output");
    const std::string* input = text_field("input");
    const bool input_ok = j.is_object() && (!j.contains("input") || input);
    if (!instruction || !output || !input_ok) {
      set.malformed.push_back(
          {line_no, "expected a JSON object with string instruction/output"});
      continue;
    }
    set.records.push_back(DatasetRecord{*instruction, input ? *input : "",
                                        *output, Task::kOpenEnded,
                                        std::nullopt});
  }
  return set;
}

OpenEndedSet read_open_ended_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open open-ended set " + path.string());
  return read_open_ended(in);
}

BuildResult build_task_records(std::span<const ParallelPair> pairs, Task task,
                               const AnnotationProvider& provider,
                               const CostWeights& w,
                               const InstructionSet& instructions,
                               std::size_t jobs) {
  if (task == Task::kOpenEnded) {
    throw ContractViolation("open-ended records are not built from pairs");
  }
  const std::string& instruction = instructions.get(task);
  std::vector<std::optional<DatasetRecord>> slots(pairs.size());
  std::vector<std::string> errors(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    const ParallelPair& p = pairs[i];
    try {
      const EditScript script =
          extract_spans(tokenize(p.source), tokenize(p.target), provider, w);
      slots[i] = DatasetRecord{instruction, p.source, serialize(script), task,
                               p.target};
    } catch (const DataError& e) {
      errors[i] = e.what();
    }
  });

  BuildResult result;
  result.records.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (slots[i]) {
      result.records.push_back(std::move(*slots[i]));
    } else {
      result.skipped.push_back({pairs[i].line, errors[i]});
    }
  }
  return result;
}

std::vector<DatasetRecord> mix_and_sample(
    const std::array<std::vector<DatasetRecord>, 4>& task_sets,
    std::span<const DatasetRecord> open_ended, const MixSpec& spec) {
  for (std::size_t t = 0; t < task_sets.size(); ++t) {
    if (task_sets[t].size() < spec.per_task_count) {
      throw DataError("insufficient records in set '" +
                      std::string(to_string(kSpanTasks[t])) + "': need " +
                      std::to_string(spec.per_task_count) + ", have " +
                      std::to_string(task_sets[t].size()));
    }
  }
  if (open_ended.size() < spec.open_ended_count) {
    throw DataError("insufficient records in set 'open_ended': need " +
                    std::to_string(spec.open_ended_count) + ", have " +
                    std::to_string(open_ended.size()));
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<DatasetRecord> out;
  out.reserve(4 * spec.per_task_count + spec.open_ended_count);
  for (const std::vector<DatasetRecord>& set : task_sets) {
    for (std::size_t i :
         sample_indices(set.size(), spec.per_task_count, rng)) {
      out.push_back(set[i]);
    }
  }
  for (std::size_t i :
       sample_indices(open_ended.size(), spec.open_ended_count, rng)) {
    out.push_back(open_ended[i]);
  }
  shuffle(out, rng);
  return out;
}

ValidationReport validate_dataset(std::span<const DatasetRecord> records) {
  ValidationReport report;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const DatasetRecord& r = records[i];
    if (r.task == Task::kOpenEnded) continue;
    ++report.checked;
    const Sentence input = tokenize(r.input);
    const ParseReport parsed = parse(r.output, input.size());
    if (parsed.ignored > 0) {
      report.failures.push_back(
          {i, std::to_string(parsed.ignored) + " fragment(s) ignored; " +
                  parsed.notes.front().message});
      continue;
    }
    if (!r.reference) continue;
    ++report.roundtrip_checked;
    if (apply(parsed.script, input) != tokenize(*r.reference)) {
      report.failures.push_back(
          {i, "applying the output does not reproduce the target"});
    }
  }
  return report;
}

}  // namespace editspan
