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

#include "editspan/text.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "editspan/error.hpp"
#include "support/synth.hpp"

namespace editspan {
namespace {

std::vector<std::string> Surfaces(const Sentence& s) { return s.surfaces(); }

TEST(TokenizeTest, SplitsPreTokenizedText) {
  const Sentence s = tokenize("Since we do not to bring cash");
  EXPECT_EQ(Surfaces(s), (std::vector<std::string>{"Since", "we", "do", "not",
                                                   "to", "bring", "cash"}));
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i].index, i);
  EXPECT_EQ(s.raw(), "Since we do not to bring cash");
}

TEST(TokenizeTest, EmptyInput) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize(" \t\r\n ").empty());
}

TEST(TokenizeTest, CollapsesWhitespaceRuns) {
  EXPECT_EQ(Surfaces(tokenize("a  b")), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(Surfaces(tokenize("\ta\t\tb\r\n")),
            (std::vector<std::string>{"a", "b"}));
}

TEST(TokenizeTest, NonBreakingSpaceStaysInsideToken) {
  EXPECT_EQ(tokenize("a b c").size(), 2u);
}

TEST(DetokenizeTest, JoinsWithSingleSpaces) {
  EXPECT_EQ(detokenize(tokenize("Since  we do")), "Since we do");
  EXPECT_EQ(detokenize(Sentence{}), "");
}

TEST(DetokenizeTest, RoundTripProperty) {
  testing::Synth synth(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Sentence s = Sentence::FromSurfaces(synth.sentence(0, 30));
    EXPECT_EQ(tokenize(detokenize(s)), s);
    const std::string once = detokenize(s);
    EXPECT_EQ(detokenize(tokenize(once)), once);
  }
}

TEST(SentenceTest, FromSurfacesRejectsBadTokens) {
  const std::vector<std::string> empty_token = {"a", ""};
  EXPECT_THROW(Sentence::FromSurfaces(empty_token), ContractViolation);
  const std::vector<std::string> spaced = {"a b"};
  EXPECT_THROW(Sentence::FromSurfaces(spaced), ContractViolation);
}

TEST(Utf8Test, DecodesAndPassesInvalidBytesThrough) {
  EXPECT_EQ(decode_utf8("aé日"),
            (std::vector<char32_t>{U'a', 0xE9, 0x65E5}));
  EXPECT_EQ(decode_utf8("\xff" "a"), (std::vector<char32_t>{0xFF, U'a'}));
  // Truncated two-byte sequence.
  EXPECT_EQ(decode_utf8("\xc3"), (std::vector<char32_t>{0xC3}));
}

TEST(ToLowerTest, AsciiAndCommonScripts) {
  EXPECT_EQ(to_lower("Running"), "running");
  EXPECT_EQ(to_lower("ÉTÉ"), "été");
  EXPECT_EQ(to_lower("Ж"), "ж");
  EXPECT_EQ(to_lower("\xff"), "\xff");
}

}  // namespace
}  // namespace editspan
