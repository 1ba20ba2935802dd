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

// Raw text to token sequence: whitespace split, lower-casing, punctuation
// stripping and stop-word removal. Operates on UTF-8.

#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace clash {

using TokenSeq = std::vector<std::string>;

class TokenizerConfig {
 public:
  TokenizerConfig() = default;
  /// Stopwords are lower-cased on entry when `lowercase` is set, so matching
  /// happens against the already lower-cased token.
  TokenizerConfig(bool lowercase, bool strip_punctuation,
                  std::unordered_set<std::string> stopwords);

  bool lowercase() const { return lowercase_; }
  bool strip_punctuation() const { return strip_punctuation_; }
  const std::unordered_set<std::string>& stopwords() const { return stopwords_; }
  bool is_stopword(std::string_view token) const;

 private:
  bool lowercase_ = true;
  bool strip_punctuation_ = true;
  std::unordered_set<std::string> stopwords_;
};

TokenSeq tokenize(std::string_view text, const TokenizerConfig& config);

/// One word per line; blank lines and lines starting with '#' are skipped.
std::unordered_set<std::string> read_stopwords(std::istream& in);
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

namespace unicode {

bool is_white_space(char32_t cp);
bool is_punctuation(char32_t cp);
char32_t to_lower(char32_t cp);

/// Decodes one code point starting at `pos` and advances it. Invalid
/// sequences decode as U+FFFD consuming a single byte.
char32_t decode_utf8(std::string_view text, std::size_t& pos);
void append_utf8(std::string& out, char32_t cp);

}  // namespace unicode

}  // namespace clash
