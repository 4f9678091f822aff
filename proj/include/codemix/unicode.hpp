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

#ifndef CODEMIX_UNICODE_HPP_
#define CODEMIX_UNICODE_HPP_

#include <string>
#include <string_view>

namespace codemix {

// Strict UTF-8 decoding; rejects overlong forms, surrogates and truncated
// sequences with FormatError.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view code_points);

// Canonical normalization (NFC) covering the Bengali and Devanagari blocks:
// canonical decomposition, combining-mark reordering (nukta before virama)
// and recomposition of the non-excluded pairs (e.g. U+09C7 U+09BE -> U+09CB).
// Composition-excluded letters (U+09DC, U+09DD, U+09DF, U+0958..U+095F) stay
// decomposed, as NFC requires. Code points outside these blocks pass through.
std::u32string nfc(std::u32string_view code_points);
std::string nfc_utf8(std::string_view text);

bool is_space_char(char32_t cp);
bool is_digit_char(char32_t cp);
// Detachable punctuation for tokenization: ASCII punctuation, danda marks,
// and common typographic punctuation.
bool is_punct_char(char32_t cp);

inline bool is_letter_char(char32_t cp) {
  return !is_space_char(cp) && !is_digit_char(cp) && !is_punct_char(cp);
}

std::string to_lower_ascii(std::string_view text);

}  // namespace codemix

#endif  // CODEMIX_UNICODE_HPP_
