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

#ifndef EDITSPAN_DATASET_HPP_
#define EDITSPAN_DATASET_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "editspan/alignment.hpp"
#include "editspan/annotation.hpp"

namespace editspan {

enum class Task { kGec, kParaphrase, kStyle, kSimplify, kOpenEnded };

inline constexpr std::array<Task, 4> kSpanTasks = {
    Task::kGec, Task::kParaphrase, Task::kStyle, Task::kSimplify};

std::string_view to_string(Task task);  // "gec", "paraphrase", ...
std::optional<Task> parse_task(std::string_view label);

// Default instruction text per span task.
std::string_view default_instruction(Task task);

// Per-task instruction strings, defaulting to the built-in ones.
class InstructionSet {
 public:
  InstructionSet();
  // `key = value` lines with keys gec/paraphrase/style/simplify.
  static InstructionSet Load(std::istream& in);
  static InstructionSet LoadFile(const std::filesystem::path& path);

  const std::string& get(Task task) const;
  void set(Task task, std::string text);

 private:
  std::map<Task, std::string> text_;
};

struct DatasetRecord {
  std::string instruction;
  std::string input;
  std::string output;
  Task task = Task::kOpenEnded;
  // Original target of a span-task record. Carried for validation only and
  // never written out.
  std::optional<std::string> reference;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

// One JSON object with keys in the order instruction, input, output, task.
std::string to_jsonl_line(const DatasetRecord& record);
void write_jsonl(std::ostream& out, std::span<const DatasetRecord> records);

struct ParallelPair {
  std::string source;
  std::string target;
  std::size_t line = 0;  // 1-based line number in the input
};

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

struct ParallelCorpus {
  std::vector<ParallelPair> pairs;
  std::vector<Diagnostic> malformed;
};

// `source<TAB>target` per line; a line with no tab or more than one tab is
// malformed. A trailing '\r' is stripped.
std::optional<ParallelPair> parse_parallel_line(std::string_view line,
                                                std::size_t line_no);
ParallelCorpus read_parallel(std::istream& in);
ParallelCorpus read_parallel_file(const std::filesystem::path& path);

struct OpenEndedSet {
  std::vector<DatasetRecord> records;
  std::vector<Diagnostic> malformed;
};

// JSON Lines with string fields instruction/input/output. Other fields are
// dropped; task is always open_ended.
OpenEndedSet read_open_ended(std::istream& in);
OpenEndedSet read_open_ended_file(const std::filesystem::path& path);

struct BuildResult {
  std::vector<DatasetRecord> records;
  std::vector<Diagnostic> skipped;
};

// One record per pair: output = serialize(extract_spans(source, target)).
// Throws ContractViolation for kOpenEnded. `jobs` > 1 builds in parallel
// with input order preserved.
BuildResult build_task_records(std::span<const ParallelPair> pairs, Task task,
                               const AnnotationProvider& provider,
                               const CostWeights& w,
                               const InstructionSet& instructions = {},
                               std::size_t jobs = 1);

struct MixSpec {
  std::size_t per_task_count = 3000;
  std::size_t open_ended_count = 13000;
  std::uint64_t seed = 0;
};

// Samples per_task_count records from each span-task set and
// open_ended_count open-ended records without replacement, then shuffles
// the union. Deterministic in spec.seed. Throws DataError naming the first
// set that is too small.
std::vector<DatasetRecord> mix_and_sample(
    const std::array<std::vector<DatasetRecord>, 4>& task_sets,
    std::span<const DatasetRecord> open_ended, const MixSpec& spec);

struct ValidationFailure {
  std::size_t record = 0;  // 0-based index into the validated sequence
  std::string reason;
};

struct ValidationReport {
  std::size_t checked = 0;  // span-task records examined
  std::size_t roundtrip_checked = 0;
  std::vector<ValidationFailure> failures;

  bool ok() const { return failures.empty(); }
};

// For each span-task record: output must parse cleanly against the input's
// token count, and when the reference target is present, applying the
// parsed script must reproduce it token for token.
ValidationReport validate_dataset(std::span<const DatasetRecord> records);

}  // namespace editspan

#endif  // EDITSPAN_DATASET_HPP_
