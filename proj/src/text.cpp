// Copyright 2026 Codemix Authors
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

#include "codemix/text.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "codemix/error.hpp"
#include "codemix/log.hpp"
#include "codemix/unicode.hpp"

namespace codemix {

const char* lang_tag_name(LangTag tag) {
  return tag == LangTag::Bn ? "bn" : "en";
}

CharVocab::CharVocab(std::vector<char32_t> sorted_chars)
    : chars_(std::move(sorted_chars)) {
  index_.reserve(chars_.size());
  for (size_t i = 0; i < chars_.size(); ++i) {
    index_.emplace(chars_[i], kNumSpecials + static_cast<int>(i));
  }
}

int CharVocab::index_of(char32_t c) const {
  auto it = index_.find(c);
  return it == index_.end() ? kUnk : it->second;
}

std::optional<int> CharVocab::find(char32_t c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

char32_t CharVocab::char_of(int index) const {
  const int i = index - kNumSpecials;
  if (i < 0 || i >= static_cast<int>(chars_.size())) {
    raise(ErrorKind::VocabError,
          "no character at index " + std::to_string(index));
  }
  return chars_[static_cast<size_t>(i)];
}

std::vector<int> CharVocab::encode(const std::string& utf8) const {
  std::vector<int> out;
  const std::u32string cps = decode_utf8(utf8);
  out.reserve(cps.size());
  for (char32_t c : cps) out.push_back(index_of(c));
  return out;
}

std::string CharVocab::decode(const std::vector<int>& indices) const {
  std::u32string cps;
  cps.reserve(indices.size());
  for (int i : indices) {
    if (i == kUnk) {
      cps.push_back(0xFFFD);
    } else if (!is_special(i)) {
      cps.push_back(char_of(i));
    }
  }
  return encode_utf8(cps);
}

std::vector<Token> tokenize(const std::string& text) {
  const std::u32string cps = nfc(decode_utf8(text));

  std::vector<std::u32string> chunks;
  std::u32string current;
  for (char32_t c : cps) {
    if (is_space_char(c)) {
      if (!current.empty()) {
        chunks.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) chunks.push_back(std::move(current));
  if (chunks.empty()) {
    raise(ErrorKind::EmptyInput, "text contains no tokens");
  }

  std::vector<Token> tokens;
  for (const auto& chunk : chunks) {
    size_t begin = 0;
    size_t end = chunk.size();
    while (begin < end && is_punct_char(chunk[begin])) ++begin;
    while (end > begin && is_punct_char(chunk[end - 1])) --end;

    if (begin > 0) {
      tokens.push_back(
          {encode_utf8(chunk.substr(0, begin)), TokenKind::Punct});
    }
    if (begin < end) {
      tokens.push_back(
          {encode_utf8(chunk.substr(begin, end - begin)), TokenKind::Word});
    }
    if (end < chunk.size()) {
      tokens.push_back({encode_utf8(chunk.substr(end)), TokenKind::Punct});
    }
  }
  return tokens;
}

std::string detokenize(const std::vector<Token>& tokens) {
  if (tokens.empty()) {
    raise(ErrorKind::EmptyInput, "no tokens to join");
  }
  std::string out;
  bool first = true;
  for (const Token& t : tokens) {
    if (!first && t.kind == TokenKind::Word) out.push_back(' ');
    out += t.surface;
    first = false;
  }
  return out;
}

std::vector<std::string> token_surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

CharVocab build_char_vocab(const std::vector<std::string>& corpus) {
  if (corpus.empty()) {
    raise(ErrorKind::EmptyInput, "empty corpus");
  }
  std::set<char32_t> chars;
  for (const std::string& line : corpus) {
    for (char32_t c : decode_utf8(line)) chars.insert(c);
  }
  return CharVocab(std::vector<char32_t>(chars.begin(), chars.end()));
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    raise(ErrorKind::IoError, "cannot open " + path);
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    raise(ErrorKind::IoError, "cannot write " + path);
  }
  for (const std::string& line : lines) {
    out << line << '\n';
  }
}

namespace {

// Splits a line on its single TAB; more or fewer separators is a format
// error. Both fields are NFC-normalized and must be non-empty after
// trimming.
std::pair<std::string, std::string> split_tsv_line(const std::string& line,
                                                   size_t line_no,
                                                   const std::string& path) {
  const size_t tab = line.find('\t');
  if (tab == std::string::npos) {
    raise(ErrorKind::FormatError,
          path + ":" + std::to_string(line_no) + ": missing TAB separator");
  }
  if (line.find('\t', tab + 1) != std::string::npos) {
    raise(ErrorKind::FormatError,
          path + ":" + std::to_string(line_no) + ": more than one TAB");
  }
  auto trim = [](std::string s) {
    const auto is_ws = [](char c) { return c == ' ' || c == '\t'; };
    while (!s.empty() && is_ws(s.front())) s.erase(s.begin());
    while (!s.empty() && is_ws(s.back())) s.pop_back();
    return s;
  };
  std::string left = trim(line.substr(0, tab));
  std::string right = trim(line.substr(tab + 1));
  if (left.empty() || right.empty()) {
    raise(ErrorKind::FormatError,
          path + ":" + std::to_string(line_no) + ": empty field");
  }
  return {nfc_utf8(left), nfc_utf8(right)};
}

}  // namespace

std::vector<std::pair<std::string, std::string>> load_tsv_pairs(
    const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  std::vector<std::pair<std::string, std::string>> pairs;
  size_t line_no = 0;
  size_t blank = 0;
  for (const std::string& line : lines) {
    ++line_no;
    if (line.empty()) {
      ++blank;
      continue;
    }
    pairs.push_back(split_tsv_line(line, line_no, path));
  }
  if (pairs.empty()) {
    log_warn(path + ": no entries loaded");
  }
  if (blank > 0) {
    log_warn(path + ": skipped " + std::to_string(blank) + " blank line(s)");
  }
  return pairs;
}

std::vector<SentencePair> load_parallel_corpus(const std::string& path) {
  std::vector<SentencePair> pairs;
  for (auto& [src, tgt] : load_tsv_pairs(path)) {
    pairs.push_back({std::move(src), std::move(tgt)});
  }
  return pairs;
}

std::vector<std::pair<std::string, LangTag>> load_tagged_words(
    const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  std::vector<std::pair<std::string, LangTag>> words;
  size_t line_no = 0;
  for (const std::string& line : lines) {
    ++line_no;
    if (line.empty()) continue;
    auto [word, tag_str] = split_tsv_line(line, line_no, path);
    const std::string tag_lower = to_lower_ascii(tag_str);
    LangTag tag;
    if (tag_lower == "bn") {
      tag = LangTag::Bn;
    } else if (tag_lower == "en") {
      tag = LangTag::En;
    } else {
      raise(ErrorKind::FormatError, path + ":" + std::to_string(line_no) +
                                        ": unknown tag '" + tag_str + "'");
    }
    words.emplace_back(std::move(word), tag);
  }
  if (words.empty()) {
    log_warn(path + ": no tagged words loaded");
  }
  return words;
}

}  // namespace codemix
