// Copyright 2026 The Clash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include "clash/text_pipeline.hpp"

namespace clash {
namespace {

TokenSeq tok(std::string_view text, const TokenizerConfig& config = {}) { return tokenize(text, config); }

TEST(Tokenize, StopwordsAndPunctuation) {
  TokenizerConfig config(true, true, {"the"});
  EXPECT_EQ(tok("The Cat, sat.", config), (TokenSeq{"cat", "sat"}));
}

TEST(Tokenize, EmptyInput) {
  EXPECT_TRUE(tok("").empty());
  EXPECT_TRUE(tok(" \t\n ").empty());
}

TEST(Tokenize, LowercaseKeepsMultiplicity) {
  EXPECT_EQ(tok("Hello HELLO hello"), (TokenSeq{"hello", "hello", "hello"}));
}

TEST(Tokenize, InteriorPunctuationIsRemoved) {
  EXPECT_EQ(tok("don't e-mail (x)"), (TokenSeq{"dont", "email", "x"}));
}

TEST(Tokenize, PunctuationOnlyTokensVanish) {
  EXPECT_EQ(tok("a -- ... b"), (TokenSeq{"a", "b"}));
}

TEST(Tokenize, UnicodeWhitespaceAndPunctuation) {
  // U+00A0 no-break space, U+3000 ideographic space, U+2014 em dash, U+00BF.
  EXPECT_EQ(tok("uno\xC2\xA0" "dos\xE3\x80\x80tres\xE2\x80\x94" "cuatro \xC2\xBFqu\xC3\xA9?"),
            (TokenSeq{"uno", "dos", "trescuatro", "qu\xC3\xA9"}));
}

TEST(Tokenize, UnicodeLowercase) {
  EXPECT_EQ(tok("\xC3\x89T\xC3\x89 \xCE\xA3\xCE\x9F\xCE\xA6"),
            (TokenSeq{"\xC3\xA9t\xC3\xA9", "\xCF\x83\xCE\xBF\xCF\x86"}));
}

TEST(Tokenize, FlagsOff) {
  TokenizerConfig config(false, false, {});
  EXPECT_EQ(tok("The Cat, sat.", config), (TokenSeq{"The", "Cat,", "sat."}));
}

TEST(Tokenize, StopwordsMatchAfterLowercasing) {
  TokenizerConfig config(true, true, {"THE", "A"});
  EXPECT_TRUE(config.is_stopword("the"));
  EXPECT_EQ(tok("A cat and THE dog", config), (TokenSeq{"cat", "and", "dog"}));
}

TEST(Tokenize, InvalidUtf8IsNotFatal) {
  const auto tokens = tok("ab\xFF" "cd \xE2\x82");
  EXPECT_EQ(tokens.size(), 2u);
}

TEST(Tokenize, Idempotent) {
  const std::string text = "It's a Test, of THE tokenizer; really!  Twice\tover.";
  const TokenSeq once = tok(text);
  std::string joined;
  for (const auto& t : once) joined += t + " ";
  EXPECT_EQ(tok(joined), once);
}

TEST(Stopwords, ReadSkipsCommentsAndBlanks) {
  std::istringstream in("# comment\nthe\n\n  and \nA\n");
  const auto words = read_stopwords(in);
  EXPECT_EQ(words.size(), 3u);
  EXPECT_TRUE(words.count("the"));
  EXPECT_TRUE(words.count("and"));
}

TEST(Stopwords, MissingFileThrows) {
  EXPECT_THROW(load_stopwords("/nonexistent/stopwords.txt"), std::runtime_error);
}

TEST(Utf8, RoundTrip) {
  for (char32_t cp : {U'a', U'é', U'€', U'\U0001F600'}) {
    std::string s;
    unicode::append_utf8(s, cp);
    std::size_t pos = 0;
    EXPECT_EQ(unicode::decode_utf8(s, pos), cp);
    EXPECT_EQ(pos, s.size());
  }
}

TEST(Unicode, Classes) {
  EXPECT_TRUE(unicode::is_white_space(U' '));
  EXPECT_TRUE(unicode::is_white_space(U' '));
  EXPECT_FALSE(unicode::is_white_space(U'x'));
  EXPECT_TRUE(unicode::is_punctuation(U'!'));
  EXPECT_TRUE(unicode::is_punctuation(U'¿'));
  EXPECT_FALSE(unicode::is_punctuation(U'$'));  // currency symbol, not punctuation
  EXPECT_FALSE(unicode::is_punctuation(U'+'));
  EXPECT_EQ(unicode::to_lower(U'A'), U'a');
  EXPECT_EQ(unicode::to_lower(U'İ'), U'i');
  EXPECT_EQ(unicode::to_lower(U'7'), U'7');
}

}  // namespace
}  // namespace clash
