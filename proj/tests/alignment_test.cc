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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "editspan/error.hpp"
#include "editspan/parallel.hpp"
#include "editspan/span_codec.hpp"
#include "support/oracle.hpp"
#include "support/synth.hpp"

namespace editspan {
namespace {

const NaiveProvider kNaive;

std::vector<AnnotatedToken> Ann(const std::string& text) {
  return annotate(tokenize(text), kNaive);
}

std::vector<AnnotatedToken> Ann(const std::vector<std::string>& tokens) {
  return annotate(Sentence::FromSurfaces(tokens), kNaive);
}

TEST(CharSimilarityTest, Levenshtein) {
  EXPECT_EQ(char_levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(char_levenshtein("", "abc"), 3u);
  EXPECT_EQ(char_levenshtein("café", "cafe"), 1u);
  EXPECT_DOUBLE_EQ(char_similarity("", ""), 1.0);
  EXPECT_DOUBLE_EQ(char_similarity("abcd", "abcd"), 1.0);
  EXPECT_DOUBLE_EQ(char_similarity("cat", ","), 0.0);
}

TEST(SubCostTest, IdenticalSurfacesAreFree) {
  const auto a = Ann("the the");
  EXPECT_EQ(sub_cost(a[0], a[1], CostWeights{}), 0.0);
}

TEST(SubCostTest, IsVersusWas) {
  // lemma differs; POS both OTHER (-0.4); lev("is","was") = 2 over max length
  // 3, so char similarity 1/3 (-0.2). 2.0 - 0.4 - 0.2 = 1.4.
  const auto a = Ann("is was");
  const double cost = sub_cost(a[0], a[1], CostWeights{});
  EXPECT_NEAR(cost, 1.4, 1e-12);
  EXPECT_LT(cost, CostWeights{}.base_sub());
}

TEST(SubCostTest, UnrelatedTokensCostBaseSub) {
  // No lemma match, OTHER vs PUNCT, char similarity 0.
  const auto a = Ann("cat ,");
  EXPECT_DOUBLE_EQ(sub_cost(a[0], a[1], CostWeights{}), 2.0);
}

TEST(SubCostTest, ClampedToFloor) {
  CostWeights w;
  w.w_lemma = 5.0;
  const auto a = Ann("The the");
  EXPECT_DOUBLE_EQ(sub_cost(a[0], a[1], w), w.sub_floor);
}

TEST(CostWeightsTest, LoadsKeyValueFile) {
  std::istringstream in(
      "# weights\n"
      "w_lemma = 0.25\n"
      "insert_cost=1.5   # trailing comment\n"
      "\n"
      "transpose_cost = 2\n");
  const CostWeights w = load_cost_weights(in);
  EXPECT_DOUBLE_EQ(w.w_lemma, 0.25);
  EXPECT_DOUBLE_EQ(w.insert_cost, 1.5);
  EXPECT_DOUBLE_EQ(w.transpose_cost, 2.0);
  EXPECT_DOUBLE_EQ(w.delete_cost, 1.0);
  EXPECT_DOUBLE_EQ(w.base_sub(), 2.5);
}

TEST(CostWeightsTest, RejectsBadInput) {
  for (const char* text : {"w_lemma 0.5\n", "w_typo = 1\n", "w_pos = abc\n",
                           "insert_cost = 0\n", "w_char = -1\n",
                           "sub_floor = 5\n", "base_sub = 2\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(load_cost_weights(in), ConfigError) << text;
  }
}

TEST(AlignTest, IdentityIsAllMatch) {
  const auto a = Ann("the cat sat on the mat");
  const Alignment al = align(a, a, CostWeights{});
  EXPECT_EQ(al.total_cost, 0.0);
  ASSERT_EQ(al.ops.size(), a.size());
  for (const AlignOp& op : al.ops) EXPECT_EQ(op.kind, OpKind::kMatch);
}

TEST(AlignTest, EmptySourceIsAllInsertions) {
  const auto tgt = Ann("x y z");
  const Alignment al = align({}, tgt, CostWeights{});
  ASSERT_EQ(al.ops.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(al.ops[k].kind, OpKind::kIns);
    EXPECT_EQ(al.ops[k].tgt, (Range{k, k + 1}));
    EXPECT_TRUE(al.ops[k].src.empty());
  }
  EXPECT_DOUBLE_EQ(al.total_cost, 3.0);
}

TEST(AlignTest, EmptyTargetIsAllDeletions) {
  const Alignment al = align(Ann("x y"), {}, CostWeights{});
  ASSERT_EQ(al.ops.size(), 2u);
  EXPECT_EQ(al.ops[0].kind, OpKind::kDel);
  EXPECT_DOUBLE_EQ(al.total_cost, 2.0);
  EXPECT_TRUE(align({}, {}, CostWeights{}).ops.empty());
}

TEST(AlignTest, AdjacentSwapIsOneTransposition) {
  const Alignment al = align(Ann("x a b y"), Ann("x b a y"), CostWeights{});
  ASSERT_EQ(al.ops.size(), 3u);
  EXPECT_EQ(al.ops[1].kind, OpKind::kTrans);
  EXPECT_EQ(al.ops[1].src, (Range{1, 3}));
  EXPECT_EQ(al.ops[1].tgt, (Range{1, 3}));
  EXPECT_DOUBLE_EQ(al.total_cost, 1.1);
}

TEST(AlignTest, BacktracePrefersMatchAtTheEnd) {
  // "a" -> "a a": the source token matches the last target token.
  const Alignment al = align(Ann("a"), Ann("a a"), CostWeights{});
  ASSERT_EQ(al.ops.size(), 2u);
  EXPECT_EQ(al.ops[0].kind, OpKind::kIns);
  EXPECT_EQ(al.ops[1].kind, OpKind::kMatch);
  EXPECT_EQ(al.ops[1].tgt, (Range{1, 2}));
}

TEST(AlignTest, SubstitutionWinsTieAgainstDeleteInsert) {
  CostWeights w;
  w.w_lemma = w.w_pos = w.w_char = 0.0;  // every substitution costs 2
  const Alignment al = align(Ann("x"), Ann("y"), w);
  ASSERT_EQ(al.ops.size(), 1u);
  EXPECT_EQ(al.ops[0].kind, OpKind::kSub);
  EXPECT_DOUBLE_EQ(al.total_cost, 2.0);
}

TEST(AlignTest, DeleteWinsTieAgainstInsert) {
  // "x y" -> "y x" with transposition priced out and substitutions at 2:
  // several optimal scripts cost 2; the backtrace settles on deleting the
  // final "y" and later inserting the leading "y".
  CostWeights w;
  w.w_lemma = w.w_pos = w.w_char = 0.0;
  w.transpose_cost = 10.0;
  const Alignment al = align(Ann("x y"), Ann("y x"), w);
  EXPECT_DOUBLE_EQ(al.total_cost, 2.0);
  ASSERT_EQ(al.ops.size(), 3u);
  EXPECT_EQ(al.ops[0].kind, OpKind::kIns);
  EXPECT_EQ(al.ops[1].kind, OpKind::kMatch);
  EXPECT_EQ(al.ops[2].kind, OpKind::kDel);
}

// Ops tile both sequences and sum to total_cost.
void ExpectWellFormed(const Alignment& al,
                      const std::vector<AnnotatedToken>& src,
                      const std::vector<AnnotatedToken>& tgt,
                      const CostWeights& w) {
  std::size_t i = 0;
  std::size_t j = 0;
  double sum = 0.0;
  for (const AlignOp& op : al.ops) {
    ASSERT_EQ(op.src.begin, i);
    ASSERT_EQ(op.tgt.begin, j);
    switch (op.kind) {
      case OpKind::kMatch:
        EXPECT_EQ(src[i].token.surface, tgt[j].token.surface);
        [[fallthrough]];
      case OpKind::kSub:
        EXPECT_EQ(op.src.size(), 1u);
        EXPECT_EQ(op.tgt.size(), 1u);
        break;
      case OpKind::kIns:
        EXPECT_TRUE(op.src.empty());
        EXPECT_EQ(op.tgt.size(), 1u);
        break;
      case OpKind::kDel:
        EXPECT_EQ(op.src.size(), 1u);
        EXPECT_TRUE(op.tgt.empty());
        break;
      case OpKind::kTrans:
        EXPECT_EQ(op.src.size(), 2u);
        EXPECT_EQ(op.tgt.size(), 2u);
        break;
    }
    sum += op_cost(op, src, tgt, w);
    i = op.src.end;
    j = op.tgt.end;
  }
  EXPECT_EQ(i, src.size());
  EXPECT_EQ(j, tgt.size());
  EXPECT_EQ(sum, al.total_cost);
}

TEST(AlignTest, MatchesBruteForceOnSmallInputs) {
  testing::Synth synth(20240);
  const CostWeights w;
  for (int trial = 0; trial < 300; ++trial) {
    const auto src = Ann(synth.tiny_sentence(6));
    const auto tgt = Ann(synth.tiny_sentence(6));
    const Alignment al = align(src, tgt, w);
    testing::BruteForceAligner oracle(src, tgt, w);
    EXPECT_EQ(al.total_cost, oracle.min_cost()) << "trial " << trial;
    ExpectWellFormed(al, src, tgt, w);
  }
}

TEST(AlignTest, MatchesBruteForceUnderOtherWeights) {
  testing::Synth synth(77);
  CostWeights w;
  w.insert_cost = 0.7;
  w.delete_cost = 1.3;
  w.transpose_cost = 0.5;
  w.w_char = 1.2;
  for (int trial = 0; trial < 200; ++trial) {
    const auto src = Ann(synth.tiny_sentence(5));
    const auto tgt = Ann(synth.tiny_sentence(5));
    testing::BruteForceAligner oracle(src, tgt, w);
    EXPECT_EQ(align(src, tgt, w).total_cost, oracle.min_cost());
  }
}

TEST(AlignTest, WellFormedOnSyntheticPairs) {
  testing::Synth synth(5);
  const CostWeights w;
  for (int trial = 0; trial < 300; ++trial) {
    const testing::SynthPair p = synth.pair();
    const auto src = Ann(p.src);
    const auto tgt = Ann(p.tgt);
    ExpectWellFormed(align(src, tgt, w), src, tgt, w);
  }
}

TEST(MergeOpsTest, CoalescesReplaceAndInsert) {
  Alignment al;
  al.ops = {{OpKind::kMatch, {7, 8}, {7, 8}},
            {OpKind::kSub, {8, 9}, {8, 9}},
            {OpKind::kIns, {9, 9}, {9, 10}},
            {OpKind::kMatch, {9, 10}, {10, 11}}};
  const std::vector<AlignOp> merged = merge_ops(al);
  ASSERT_EQ(merged.size(), 3u);
  EXPECT_EQ(merged[1], (AlignOp{OpKind::kSub, {8, 9}, {8, 10}}));
  EXPECT_EQ(merged[0], al.ops[0]);
  EXPECT_EQ(merged[2], al.ops[3]);
}

TEST(MergeOpsTest, AllMatchUnchanged) {
  const auto a = Ann("a b c");
  const Alignment al = align(a, a, CostWeights{});
  EXPECT_EQ(merge_ops(al), al.ops);
}

TEST(MergeOpsTest, DeletionRunBecomesOneDeletion) {
  Alignment al;
  al.ops = {{OpKind::kDel, {0, 1}, {0, 0}}, {OpKind::kDel, {1, 2}, {0, 0}}};
  const std::vector<AlignOp> merged = merge_ops(al);
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged[0], (AlignOp{OpKind::kDel, {0, 2}, {0, 0}}));
}

TEST(MergeOpsTest, InsertionRunBecomesOneInsertion) {
  Alignment al;
  al.ops = {{OpKind::kIns, {0, 0}, {0, 1}}, {OpKind::kIns, {0, 0}, {1, 2}}};
  EXPECT_EQ(merge_ops(al),
            (std::vector<AlignOp>{{OpKind::kIns, {0, 0}, {0, 2}}}));
}

TEST(MergeOpsTest, MonotoneAndTilingProperty) {
  testing::Synth synth(99);
  for (int trial = 0; trial < 300; ++trial) {
    const testing::SynthPair p = synth.pair();
    const Alignment al = align(Ann(p.src), Ann(p.tgt), CostWeights{});
    const std::vector<AlignOp> merged = merge_ops(al);
    EXPECT_LE(merged.size(), al.ops.size());
    const auto matches = [](const std::vector<AlignOp>& ops) {
      return std::count_if(ops.begin(), ops.end(), [](const AlignOp& op) {
        return op.kind == OpKind::kMatch;
      });
    };
    EXPECT_EQ(matches(merged), matches(al.ops));
    std::size_t i = 0;
    std::size_t j = 0;
    for (std::size_t k = 0; k < merged.size(); ++k) {
      EXPECT_EQ(merged[k].src.begin, i);
      EXPECT_EQ(merged[k].tgt.begin, j);
      if (k > 0 && merged[k].kind != OpKind::kMatch) {
        EXPECT_EQ(merged[k - 1].kind, OpKind::kMatch);
      }
      i = merged[k].src.end;
      j = merged[k].tgt.end;
    }
    EXPECT_EQ(i, p.src.size());
    EXPECT_EQ(j, p.tgt.size());
  }
}

TEST(MergeStrategyTest, Names) {
  EXPECT_EQ(to_string(MergeStrategy::kMaximalRun), "maximal-run");
  EXPECT_EQ(parse_merge_strategy("maximal-run"), MergeStrategy::kMaximalRun);
  EXPECT_THROW(parse_merge_strategy("pos-split"), ConfigError);
}

TEST(ExtractSpansTest, MultiEditGoldenPair) {
  const Sentence src = tokenize(
      "Through thousands of years , most Chinese scholars are greatly "
      "affected by the Confucianism .");
  const Sentence tgt = tokenize(
      "Through the thousands of years , most Chinese scholars have been "
      "greatly affected by Confucianism .");
  const EditScript script = extract_spans(src, tgt, kNaive, CostWeights{});
  EXPECT_EQ(script.source_len, 15u);
  ASSERT_EQ(script.spans.size(), 3u);
  EXPECT_EQ(script.spans[0], (EditSpan{1, 1, {"the"}}));
  EXPECT_EQ(script.spans[1], (EditSpan{8, 9, {"have", "been"}}));
  EXPECT_EQ(script.spans[2], (EditSpan{12, 13, {}}));
}

TEST(ExtractSpansTest, SingleInsertion) {
  const Sentence src = tokenize(
      "Since we do not to bring cash to pay for the transportation fee , "
      "enormous time has been saved for everybody .");
  const Sentence tgt = tokenize(
      "Since we do not need to bring cash to pay for the transportation fee "
      ", enormous time has been saved for everybody .");
  const EditScript script = extract_spans(src, tgt, kNaive, CostWeights{});
  ASSERT_EQ(script.spans.size(), 1u);
  EXPECT_EQ(script.spans[0], (EditSpan{4, 4, {"need"}}));
}

TEST(ExtractSpansTest, IdenticalPairHasNoSpans) {
  const Sentence s = tokenize("nothing to change here .");
  EXPECT_TRUE(extract_spans(s, s, kNaive, CostWeights{}).empty());
  EXPECT_TRUE(extract_spans(Sentence{}, Sentence{}, kNaive, CostWeights{})
                  .empty());
}

TEST(ExtractSpansTest, TranspositionBecomesReplacementSpan) {
  const EditScript script = extract_spans(
      tokenize("I only have two"), tokenize("I have only two"), kNaive,
      CostWeights{});
  ASSERT_EQ(script.spans.size(), 1u);
  EXPECT_EQ(script.spans[0], (EditSpan{1, 3, {"have", "only"}}));
}

TEST(ExtractSpansTest, RoundTripAndWellFormedProperty) {
  testing::Synth synth(123);
  for (int trial = 0; trial < 1000; ++trial) {
    const testing::SynthPair p = synth.pair();
    const Sentence src = Sentence::FromSurfaces(p.src);
    const Sentence tgt = Sentence::FromSurfaces(p.tgt);
    const EditScript script = extract_spans(src, tgt, kNaive, CostWeights{});
    ASSERT_EQ(script.check(), "") << trial;
    for (std::size_t k = 1; k < script.spans.size(); ++k) {
      // Merged runs are separated by at least one match.
      EXPECT_LT(script.spans[k - 1].end, script.spans[k].start);
    }
    EXPECT_EQ(apply(script, src), tgt) << trial;
  }
}

TEST(ExtractSpansTest, DeterministicAcrossThreadCounts) {
  testing::Synth synth(8);
  std::vector<testing::SynthPair> pairs;
  for (int i = 0; i < 200; ++i) pairs.push_back(synth.pair());
  auto run = [&](std::size_t jobs) {
    std::vector<std::string> out(pairs.size());
    parallel_for(pairs.size(), jobs, [&](std::size_t i) {
      out[i] = serialize(extract_spans(Sentence::FromSurfaces(pairs[i].src),
                                       Sentence::FromSurfaces(pairs[i].tgt),
                                       kNaive, CostWeights{}));
    });
    return out;
  };
  const auto serial = run(1);
  EXPECT_EQ(run(4), serial);
  EXPECT_EQ(run(1), serial);
}

}  // namespace
}  // namespace editspan
