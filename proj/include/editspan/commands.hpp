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

#ifndef EDITSPAN_COMMANDS_HPP_
#define EDITSPAN_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "editspan/alignment.hpp"
#include "editspan/annotation.hpp"
#include "editspan/dataset.hpp"

// Stream-level implementations of the command-line subcommands. Data goes
// to `out`, diagnostics to `err`.
namespace editspan::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
};

enum class ReportFormat { kJson, kText };

struct Context {
  std::shared_ptr<const AnnotationProvider> provider;
  CostWeights weights;
  std::size_t jobs = 1;
  ReportFormat report = ReportFormat::kJson;
  // Lines processed per parallel batch; bounds memory use.
  std::size_t batch_lines = 4096;
};

// Parallel TSV in, one serialized span string per line out.
int run_extract(std::istream& tsv, std::ostream& out, std::ostream& err,
                const Context& ctx);

// Line-aligned sources and span strings in, edited sentences out. A summary
// of ignored fragments goes to `err`.
int run_apply(std::istream& sources, std::istream& spans, std::ostream& out,
              std::ostream& err, const Context& ctx);

// Line-aligned sources, hypothesis span strings and gold target sentences
// in; one report out.
int run_score(std::istream& sources, std::istream& hyp, std::istream& gold,
              std::ostream& out, std::ostream& err, const Context& ctx);

// Extracts, serializes, parses and applies every pair and compares the
// result with the target. When `spans` is given its lines are used in place
// of the extracted strings. Exit 0 iff every pair reproduces its target.
int run_roundtrip(std::istream& tsv, std::istream* spans, std::ostream& out,
                  std::ostream& err, const Context& ctx);

struct BuildDatasetOptions {
  std::optional<std::filesystem::path> gec;
  std::optional<std::filesystem::path> paraphrase;
  std::optional<std::filesystem::path> style;
  std::optional<std::filesystem::path> simplify;
  std::optional<std::filesystem::path> open_ended;
  std::optional<std::filesystem::path> instructions;
  MixSpec mix;
};

// Writes the mixed dataset as JSON Lines to `out` and per-task counts to
// `err`.
int run_build_dataset(const BuildDatasetOptions& options, std::ostream& out,
                      std::ostream& err, const Context& ctx);

}  // namespace editspan::cli

#endif  // EDITSPAN_COMMANDS_HPP_
