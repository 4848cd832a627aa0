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

// editspan: extract, apply, score and package edit spans.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "editspan/commands.hpp"
#include "editspan/error.hpp"
#include "editspan/parallel.hpp"

namespace {

using editspan::cli::kExitData;
using editspan::cli::kExitOk;
using editspan::cli::kExitUsage;

struct CommonFlags {
  std::optional<std::filesystem::path> weights;
  std::string provider = "naive";
  std::optional<std::filesystem::path> annotations;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string report = "json";
  std::optional<std::filesystem::path> output;
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--weights", flags.weights, "Cost weights (key = value)")
      ->check(CLI::ExistingFile);
  cmd.add_option("--provider", flags.provider, "Annotation provider")
      ->check(CLI::IsMember({"naive", "sidecar"}));
  cmd.add_option("--annotations", flags.annotations,
                 "Sidecar annotations (surface<TAB>lemma<TAB>pos)")
      ->check(CLI::ExistingFile);
  cmd.add_option("--seed", flags.seed, "Random seed");
  cmd.add_option("--jobs", flags.jobs, "Worker threads (0 = all cores)");
  cmd.add_option("--report", flags.report, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd.add_option("-o,--output", flags.output, "Output file (default stdout)");
}

editspan::cli::Context make_context(const CommonFlags& flags) {
  editspan::cli::Context ctx;
  ctx.provider = editspan::make_provider(
      flags.provider, editspan::ProviderOptions{flags.annotations});
  if (flags.weights) {
    ctx.weights = editspan::load_cost_weights_file(*flags.weights);
  }
  ctx.jobs = editspan::resolve_jobs(flags.jobs);
  ctx.report = flags.report == "text" ? editspan::cli::ReportFormat::kText
                                      : editspan::cli::ReportFormat::kJson;
  return ctx;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw editspan::DataError("cannot open " + path.string());
  return in;
}

// Fills options of `cmd` that were not given on the command line from a
// `key = value` file (INI syntax, optional [build-dataset] section). Relative
// paths are taken relative to the file's directory.
void apply_config_file(CLI::App& cmd, const std::filesystem::path& path) {
  static const std::set<std::string> kPathKeys = {
      "gec",     "paraphrase", "style",       "simplify", "open-ended",
      "instructions", "weights", "annotations", "output"};
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path.string());
  } catch (const CLI::Error& e) {
    throw editspan::ConfigError(path.string() + ": " + e.what());
  }
  for (const CLI::ConfigItem& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    if (!item.parents.empty() &&
        (item.parents.size() != 1 || item.parents[0] != cmd.get_name())) {
      throw editspan::ConfigError(path.string() + ": unexpected section '" +
                                  item.parents[0] + "'");
    }
    CLI::Option* opt = cmd.get_option_no_throw("--" + item.name);
    if (opt == nullptr || item.name == "config") {
      throw editspan::ConfigError(path.string() + ": unknown key '" +
                                  item.name + "'");
    }
    if (opt->count() > 0) continue;  // the command line wins
    for (std::string value : item.inputs) {
      if (kPathKeys.contains(item.name) &&
          std::filesystem::path(value).is_relative()) {
        value = (path.parent_path() / value).string();
      }
      opt->add_result(value);
    }
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw editspan::ConfigError(path.string() + ": " + e.what());
    }
  }
}

// Runs `body` with the selected output stream.
template <typename Body>
int with_output(const CommonFlags& flags, Body&& body) {
  if (!flags.output) return body(std::cout);
  std::ofstream out(*flags.output, std::ios::binary);
  if (!out) {
    throw editspan::ConfigError("cannot create " + flags.output->string());
  }
  return body(out);
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Edit-span extraction, application, scoring and datasets"};
  app.require_subcommand(1);

  CommonFlags flags;

  std::filesystem::path tsv;
  auto* extract = app.add_subcommand(
      "extract", "Parallel TSV -> one serialized span string per line");
  extract->add_option("input", tsv, "source<TAB>target file")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(*extract, flags);

  std::filesystem::path sources;
  std::filesystem::path spans;
  auto* apply_cmd = app.add_subcommand(
      "apply", "Apply span strings to line-aligned source sentences");
  apply_cmd->add_option("sources", sources)->required()->check(
      CLI::ExistingFile);
  apply_cmd->add_option("spans", spans)->required()->check(CLI::ExistingFile);
  add_common(*apply_cmd, flags);

  std::filesystem::path hyp;
  std::filesystem::path gold;
  auto* score = app.add_subcommand(
      "score", "Agreement, compression and edit-level F0.5 report");
  score->add_option("sources", sources)->required()->check(CLI::ExistingFile);
  score->add_option("hyp", hyp, "Hypothesis span strings")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("gold", gold, "Gold target sentences")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(*score, flags);

  editspan::cli::BuildDatasetOptions build;
  auto* build_cmd = app.add_subcommand(
      "build-dataset", "Mixed instruction-tuning dataset as JSON Lines");
  std::optional<std::filesystem::path> build_config;
  build_cmd->add_option("--config", build_config,
                        "key = value file supplying any of these options")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--gec", build.gec, "Grammar correction TSV")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--paraphrase", build.paraphrase, "Paraphrase TSV")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--style", build.style, "Formality transfer TSV")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--simplify", build.simplify, "Simplification TSV")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--open-ended", build.open_ended,
                        "Open-ended JSON Lines (instruction/input/output)")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--instructions", build.instructions,
                        "Instruction overrides (task = text)")
      ->check(CLI::ExistingFile);
  build_cmd->add_option("--per-task", build.mix.per_task_count,
                        "Records sampled per span task")
      ->capture_default_str();
  build_cmd->add_option("--open-ended-count", build.mix.open_ended_count,
                        "Open-ended records sampled")
      ->capture_default_str();
  add_common(*build_cmd, flags);

  std::optional<std::filesystem::path> check_spans;
  auto* roundtrip = app.add_subcommand(
      "roundtrip", "Check that extracted (or given) spans reproduce targets");
  roundtrip->add_option("input", tsv, "source<TAB>target file")
      ->required()
      ->check(CLI::ExistingFile);
  roundtrip->add_option("--spans", check_spans,
                        "Span strings to check instead of extracting")
      ->check(CLI::ExistingFile);
  add_common(*roundtrip, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build_cmd && build_config) {
      apply_config_file(*build_cmd, *build_config);
    }
    const editspan::cli::Context ctx = make_context(flags);
    if (*extract) {
      std::ifstream in = open_input(tsv);
      return with_output(flags, [&](std::ostream& out) {
        return editspan::cli::run_extract(in, out, std::cerr, ctx);
      });
    }
    if (*apply_cmd) {
      std::ifstream src = open_input(sources);
      std::ifstream sp = open_input(spans);
      return with_output(flags, [&](std::ostream& out) {
        return editspan::cli::run_apply(src, sp, out, std::cerr, ctx);
      });
    }
    if (*score) {
      std::ifstream src = open_input(sources);
      std::ifstream h = open_input(hyp);
      std::ifstream g = open_input(gold);
      return with_output(flags, [&](std::ostream& out) {
        return editspan::cli::run_score(src, h, g, out, std::cerr, ctx);
      });
    }
    if (*build_cmd) {
      build.mix.seed = flags.seed;
      return with_output(flags, [&](std::ostream& out) {
        return editspan::cli::run_build_dataset(build, out, std::cerr, ctx);
      });
    }
    if (*roundtrip) {
      std::ifstream in = open_input(tsv);
      std::optional<std::ifstream> sp;
      if (check_spans) sp = open_input(*check_spans);
      return with_output(flags, [&](std::ostream& out) {
        return editspan::cli::run_roundtrip(in, sp ? &*sp : nullptr, out,
                                            std::cerr, ctx);
      });
    }
  } catch (const editspan::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
