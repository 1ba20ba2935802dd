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

#include "clash/text_pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "clash/errors.hpp"

namespace clash {
namespace unicode {
namespace {

struct CodepointRange {
  char32_t first;
  char32_t last;
};

struct CaseMapping {
  char32_t from;
  char32_t to;
};

#include "unicode_tables.inc"

template <std::size_t N>
bool in_ranges(const CodepointRange (&table)[N], char32_t cp) {
  auto it = std::upper_bound(std::begin(table), std::end(table), cp,
                             [](char32_t v, const CodepointRange& r) { return v < r.first; });
  if (it == std::begin(table)) return false;
  --it;
  return cp <= it->last;
}

}  // namespace

bool is_white_space(char32_t cp) { return in_ranges(kWhiteSpace, cp); }

bool is_punctuation(char32_t cp) { return in_ranges(kPunctuation, cp); }

char32_t to_lower(char32_t cp) {
  if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
  auto it = std::lower_bound(std::begin(kLowercase), std::end(kLowercase), cp,
                             [](const CaseMapping& m, char32_t v) { return m.from < v; });
  if (it != std::end(kLowercase) && it->from == cp) return it->to;
  return cp;
}

char32_t decode_utf8(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  const unsigned char lead = byte(pos);
  int extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + extra >= text.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (int i = 1; i <= extra; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  pos += extra + 1;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace unicode

namespace {

std::string lower_utf8(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t pos = 0; pos < word.size();) {
    unicode::append_utf8(out, unicode::to_lower(unicode::decode_utf8(word, pos)));
  }
  return out;
}

}  // namespace

TokenizerConfig::TokenizerConfig(bool lowercase, bool strip_punctuation,
                                 std::unordered_set<std::string> stopwords)
    : lowercase_(lowercase), strip_punctuation_(strip_punctuation) {
  for (const auto& w : stopwords) {
    stopwords_.insert(lowercase_ ? lower_utf8(w) : w);
  }
}

bool TokenizerConfig::is_stopword(std::string_view token) const {
  if (stopwords_.empty()) return false;
  return stopwords_.find(std::string(token)) != stopwords_.end();
}

TokenSeq tokenize(std::string_view text, const TokenizerConfig& config) {
  TokenSeq tokens;
  std::string current;
  const auto flush = [&] {
    if (!current.empty() && !config.is_stopword(current)) tokens.push_back(current);
    current.clear();
  };
  for (std::size_t pos = 0; pos < text.size();) {
    char32_t cp = unicode::decode_utf8(text, pos);
    if (unicode::is_white_space(cp)) {
      flush();
      continue;
    }
    if (config.strip_punctuation() && unicode::is_punctuation(cp)) continue;
    if (config.lowercase()) cp = unicode::to_lower(cp);
    unicode::append_utf8(current, cp);
  }
  flush();
  return tokens;
}

std::unordered_set<std::string> read_stopwords(std::istream& in) {
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    words.insert(line.substr(first, last - first + 1));
  }
  return words;
}

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stopword file: " + path.string());
  return read_stopwords(in);
}

}  // namespace clash
