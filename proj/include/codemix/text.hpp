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

#ifndef CODEMIX_TEXT_HPP_
#define CODEMIX_TEXT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace codemix {

enum class LangTag : uint8_t { Bn, En };

const char* lang_tag_name(LangTag tag);

enum class TokenKind : uint8_t { Word, Punct };

// A single token; surface is NFC-normalized UTF-8 without internal
// whitespace. Punct tokens contain no letters or digits.
struct Token {
  std::string surface;
  TokenKind kind = TokenKind::Word;

  bool operator==(const Token&) const = default;
};

struct TaggedToken {
  Token token;
  LangTag tag = LangTag::Bn;
  double score = 1.0;  // tagger confidence in [0,1]

  bool operator==(const TaggedToken&) const = default;
};

// A maximal run of same-language tokens. Concatenating a sentence's
// segments in order reproduces its token sequence exactly.
struct Segment {
  std::vector<TaggedToken> tokens;
  LangTag tag = LangTag::Bn;
};

struct SentencePair {
  std::string source;
  std::string target;
};

// Dense character-index bijection with PAD/SOS/EOS/UNK specials up front.
class CharVocab {
 public:
  static constexpr int kPad = 0;
  static constexpr int kSos = 1;
  static constexpr int kEos = 2;
  static constexpr int kUnk = 3;
  static constexpr int kNumSpecials = 4;

  CharVocab() = default;
  explicit CharVocab(std::vector<char32_t> sorted_chars);

  int size() const { return kNumSpecials + static_cast<int>(chars_.size()); }

  // UNK for characters not in the vocabulary.
  int index_of(char32_t c) const;
  std::optional<int> find(char32_t c) const;
  // Only valid for non-special indices.
  char32_t char_of(int index) const;
  bool is_special(int index) const { return index < kNumSpecials; }

  const std::vector<char32_t>& chars() const { return chars_; }

  std::vector<int> encode(const std::string& utf8) const;
  std::string decode(const std::vector<int>& indices) const;

 private:
  std::vector<char32_t> chars_;
  std::unordered_map<char32_t, int> index_;
};

// Whitespace tokenization with leading/trailing punctuation runs detached
// as Punct tokens; word-internal punctuation (apostrophes, hyphens) stays.
// Input is NFC-normalized first.
std::vector<Token> tokenize(const std::string& text);

// Words joined by single spaces; Punct tokens attach to the preceding
// token with no space.
std::string detokenize(const std::vector<Token>& tokens);

std::vector<std::string> token_surfaces(const std::vector<Token>& tokens);

CharVocab build_char_vocab(const std::vector<std::string>& corpus);

// One "key<TAB>value" pair per line; UTF-8, LF line endings, no header.
// Fields are NFC-normalized; blank lines are skipped with a warning.
std::vector<std::pair<std::string, std::string>> load_tsv_pairs(
    const std::string& path);

// One "source<TAB>target" pair per line; UTF-8, LF line endings, no header.
std::vector<SentencePair> load_parallel_corpus(const std::string& path);

// One "word<TAB>tag" per line with tag in {bn,en} (case-insensitive).
std::vector<std::pair<std::string, LangTag>> load_tagged_words(
    const std::string& path);

std::vector<std::string> read_lines(const std::string& path);
void write_lines(const std::string& path,
                 const std::vector<std::string>& lines);

}  // namespace codemix

#endif  // CODEMIX_TEXT_HPP_
