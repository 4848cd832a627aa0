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

#include "editspan/commands.hpp"

#include <array>
#include <string>
#include <vector>

#include "editspan/error.hpp"
#include "editspan/metrics.hpp"
#include "editspan/parallel.hpp"
#include "editspan/span_codec.hpp"
#include "json.hpp"

namespace editspan::cli {

namespace {

// Reads up to `limit` lines from each stream in lockstep. Returns false and
// sets `mismatch` when one stream ends before the others.
template <std::size_t K>
bool read_batch(std::array<std::istream*, K> streams, std::size_t limit,
                std::vector<std::array<std::string, K>>& batch,
                bool& mismatch) {
  batch.clear();
  mismatch = false;
  while (batch.size() < limit) {
    std::array<std::string, K> row;
    std::size_t ended = 0;
    for (std::size_t k = 0; k < K; ++k) {
      if (!std::getline(*streams[k], row[k])) ++ended;
    }
    if (ended == K) return false;
    if (ended != 0) {
      mismatch = true;
      return false;
    }
    batch.push_back(std::move(row));
  }
  return true;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

struct LineResult {
  std::string text;
  std::vector<std::string> notes;
  std::size_t ignored = 0;
  bool ok = true;
};

}  // namespace

int run_extract(std::istream& tsv, std::ostream& out, std::ostream& err,
                const Context& ctx) {
  std::vector<std::array<std::string, 1>> batch;
  std::vector<std::optional<ParallelPair>> pairs;
  std::vector<std::string> results;
  std::size_t line_base = 0;
  bool mismatch = false;
  for (bool more = true; more;) {
    more = read_batch<1>({&tsv}, ctx.batch_lines, batch, mismatch);
    pairs.clear();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      pairs.push_back(parse_parallel_line(batch[i][0], line_base + i + 1));
      if (!pairs.back()) {
        err << "extract: line " << line_base + i + 1
            << ": expected source<TAB>target\n";
        return kExitData;
      }
    }
    results.assign(batch.size(), {});
    parallel_for(batch.size(), ctx.jobs, [&](std::size_t i) {
      results[i] = serialize(extract_spans(tokenize(pairs[i]->source),
                                           tokenize(pairs[i]->target),
                                           *ctx.provider, ctx.weights));
    });
    for (const std::string& r : results) out << r << '\n';
    line_base += batch.size();
  }
  out.flush();
  return kExitOk;
}

int run_apply(std::istream& sources, std::istream& spans, std::ostream& out,
              std::ostream& err, const Context& ctx) {
  std::vector<std::array<std::string, 2>> batch;
  std::vector<LineResult> results;
  std::size_t line_base = 0;
  std::size_t ignored = 0;
  std::size_t lines_with_ignored = 0;
  bool mismatch = false;
  for (bool more = true; more;) {
    more = read_batch<2>({&sources, &spans}, ctx.batch_lines, batch, mismatch);
    results.assign(batch.size(), {});
    parallel_for(batch.size(), ctx.jobs, [&](std::size_t i) {
      const Sentence src = tokenize(batch[i][0]);
      const ParseReport report = parse(batch[i][1], src.size());
      results[i].text = detokenize(apply(report.script, src));
      results[i].ignored = report.ignored;
      for (const ParseNote& note : report.notes) {
        if (note.discarded()) results[i].notes.push_back(note.message);
      }
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      out << results[i].text << '\n';
      for (const std::string& note : results[i].notes) {
        err << "apply: line " << line_base + i + 1 << ": " << note << '\n';
      }
      ignored += results[i].ignored;
      lines_with_ignored += results[i].ignored > 0 ? 1 : 0;
    }
    line_base += batch.size();
  }
  out.flush();
  if (mismatch) {
    err << "apply: sources and spans differ in line count (after line "
        << line_base << ")\n";
    return kExitData;
  }
  err << "apply: " << line_base << " lines, " << ignored
      << " fragment(s) ignored on " << lines_with_ignored << " line(s)\n";
  return kExitOk;
}

int run_score(std::istream& sources, std::istream& hyp, std::istream& gold,
              std::ostream& out, std::ostream& err, const Context& ctx) {
  std::vector<std::array<std::string, 3>> batch;
  std::vector<CorpusScore> partial;
  CorpusScore total;
  bool mismatch = false;
  for (bool more = true; more;) {
    more = read_batch<3>({&sources, &hyp, &gold}, ctx.batch_lines, batch,
                         mismatch);
    partial.assign(batch.size(), {});
    parallel_for(batch.size(), ctx.jobs, [&](std::size_t i) {
      const Sentence src = tokenize(batch[i][0]);
      const std::string hyp_text = strip_cr(batch[i][1]);
      const Sentence target = tokenize(batch[i][2]);
      const ParseReport report = parse(hyp_text, src.size());
      const EditScript gold_script =
          extract_spans(src, target, *ctx.provider, ctx.weights);
      const bool agreed =
          agreement(report.script, src, *ctx.provider, ctx.weights);
      partial[i].add_pair(agreed, compression(hyp_text, target),
                          edit_f05(report.script, gold_script),
                          report.ignored);
    });
    for (const CorpusScore& p : partial) total.merge(p);
  }
  if (mismatch) {
    err << "score: sources, hypotheses and gold targets differ in line count "
           "(after line "
        << total.pairs << ")\n";
    return kExitData;
  }
  out << (ctx.report == ReportFormat::kJson ? total.to_json() + "\n"
                                            : total.to_text());
  out.flush();
  return kExitOk;
}

int run_roundtrip(std::istream& tsv, std::istream* spans, std::ostream& out,
                  std::ostream& err, const Context& ctx) {
  std::vector<std::array<std::string, 2>> batch;
  std::vector<LineResult> results;
  std::size_t line_base = 0;
  std::size_t passed = 0;
  std::vector<std::pair<std::size_t, std::string>> failures;
  bool mismatch = false;
  for (bool more = true; more;) {
    if (spans) {
      more = read_batch<2>({&tsv, spans}, ctx.batch_lines, batch, mismatch);
    } else {
      std::vector<std::array<std::string, 1>> single;
      more = read_batch<1>({&tsv}, ctx.batch_lines, single, mismatch);
      batch.clear();
      for (auto& row : single) batch.push_back({std::move(row[0]), {}});
    }
    results.assign(batch.size(), {});
    parallel_for(batch.size(), ctx.jobs, [&](std::size_t i) {
      LineResult& r = results[i];
      const auto pair = parse_parallel_line(batch[i][0], line_base + i + 1);
      if (!pair) {
        r.ok = false;
        r.text = "expected source<TAB>target";
        return;
      }
      const Sentence src = tokenize(pair->source);
      const Sentence tgt = tokenize(pair->target);
      const std::string span_text =
          spans ? batch[i][1]
                : serialize(extract_spans(src, tgt, *ctx.provider,
                                          ctx.weights));
      const ParseReport report = parse(span_text, src.size());
      if (report.ignored > 0) {
        r.ok = false;
        r.text = report.notes.front().message;
        return;
      }
      if (apply(report.script, src) != tgt) {
        r.ok = false;
        r.text = "applied spans '" + span_text + "' do not reproduce target";
      }
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].ok) {
        ++passed;
      } else {
        failures.emplace_back(line_base + i + 1, results[i].text);
      }
    }
    line_base += batch.size();
  }
  if (mismatch) {
    err << "roundtrip: corpus and spans differ in line count (after line "
        << line_base << ")\n";
    return kExitData;
  }
  if (ctx.report == ReportFormat::kJson) {
    nlohmann::ordered_json j;
    j["pairs"] = line_base;
    j["passed"] = passed;
    j["failed"] = failures.size();
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& [line, reason] : failures) {
      j["failures"].push_back({{"line", line}, {"reason", reason}});
    }
    out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
        << '\n';
  } else {
    out << "pairs " << line_base << ", passed " << passed << ", failed "
        << failures.size() << '\n';
    for (const auto& [line, reason] : failures) {
      out << "line " << line << ": " << reason << '\n';
    }
  }
  out.flush();
  return failures.empty() ? kExitOk : kExitData;
}

int run_build_dataset(const BuildDatasetOptions& options, std::ostream& out,
                      std::ostream& err, const Context& ctx) {
  const InstructionSet instructions =
      options.instructions ? InstructionSet::LoadFile(*options.instructions)
                           : InstructionSet{};
  const std::array<const std::optional<std::filesystem::path>*, 4> paths = {
      &options.gec, &options.paraphrase, &options.style, &options.simplify};

  std::array<std::vector<DatasetRecord>, 4> task_sets;
  for (std::size_t t = 0; t < kSpanTasks.size(); ++t) {
    const std::string_view name = to_string(kSpanTasks[t]);
    if (!*paths[t]) {
      if (options.mix.per_task_count > 0) {
        throw ConfigError("missing corpus for task '" + std::string(name) +
                          "'");
      }
      continue;
    }
    const ParallelCorpus corpus = read_parallel_file(**paths[t]);
    for (const Diagnostic& d : corpus.malformed) {
      err << "build-dataset: " << name << " line " << d.line << ": "
          << d.message << " (skipped)\n";
    }
    BuildResult built =
        build_task_records(corpus.pairs, kSpanTasks[t], *ctx.provider,
                           ctx.weights, instructions, ctx.jobs);
    for (const Diagnostic& d : built.skipped) {
      err << "build-dataset: " << name << " line " << d.line << ": "
          << d.message << " (skipped)\n";
    }
    task_sets[t] = std::move(built.records);
  }

  std::vector<DatasetRecord> open_ended;
  if (options.open_ended) {
    OpenEndedSet set = read_open_ended_file(*options.open_ended);
    for (const Diagnostic& d : set.malformed) {
      err << "build-dataset: open_ended line " << d.line << ": " << d.message
          << " (skipped)\n";
    }
    open_ended = std::move(set.records);
  } else if (options.mix.open_ended_count > 0) {
    throw ConfigError("missing open-ended set");
  }

  const std::vector<DatasetRecord> mixed =
      mix_and_sample(task_sets, open_ended, options.mix);
  const ValidationReport validation = validate_dataset(mixed);
  if (!validation.ok()) {
    for (const ValidationFailure& f : validation.failures) {
      err << "build-dataset: record " << f.record << ": " << f.reason << '\n';
    }
    return kExitData;
  }
  write_jsonl(out, mixed);
  out.flush();

  nlohmann::ordered_json counts;
  for (Task t : kSpanTasks) counts[std::string(to_string(t))] = 0;
  counts["open_ended"] = 0;
  for (const DatasetRecord& r : mixed) {
    counts[std::string(to_string(r.task))] =
        counts[std::string(to_string(r.task))].get<std::size_t>() + 1;
  }
  counts["total"] = mixed.size();
  counts["validated"] = validation.checked;
  if (ctx.report == ReportFormat::kJson) {
    err << counts.dump() << '\n';
  } else {
    for (const auto& [key, value] : counts.items()) {
      err << key << ' ' << value << '\n';
    }
  }
  return kExitOk;
}

}  // namespace editspan::cli
