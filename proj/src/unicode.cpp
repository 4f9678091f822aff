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

#include "codemix/unicode.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "codemix/error.hpp"

namespace codemix {

namespace {

struct Decomposition {
  char32_t composed;
  char32_t base;
  char32_t mark;
  bool recompose;  // false for composition exclusions
};

// Canonical decompositions in the Bengali (U+0980) and Devanagari (U+0900)
// blocks. The nukta letters are composition exclusions.
constexpr std::array<Decomposition, 13> kDecompositions = {{
    {0x09CB, 0x09C7, 0x09BE, true},   // bengali vowel sign o
    {0x09CC, 0x09C7, 0x09D7, true},   // bengali vowel sign au
    {0x09DC, 0x09A1, 0x09BC, false},  // bengali rra
    {0x09DD, 0x09A2, 0x09BC, false},  // bengali rha
    {0x09DF, 0x09AF, 0x09BC, false},  // bengali yya
    {0x0929, 0x0928, 0x093C, true},   // devanagari nnna
    {0x0931, 0x0930, 0x093C, true},   // devanagari rra
    {0x0934, 0x0933, 0x093C, true},   // devanagari llla
    {0x0958, 0x0915, 0x093C, false},
    {0x0959, 0x0916, 0x093C, false},
    {0x095A, 0x0917, 0x093C, false},
    {0x095B, 0x091C, 0x093C, false},
    {0x095C, 0x0921, 0x093C, false},
}};

constexpr std::array<Decomposition, 3> kDecompositionsTail = {{
    {0x095D, 0x0922, 0x093C, false},
    {0x095E, 0x092B, 0x093C, false},
    {0x095F, 0x092F, 0x093C, false},
}};

int combining_class(char32_t cp) {
  switch (cp) {
    case 0x093C:  // devanagari nukta
    case 0x09BC:  // bengali nukta
      return 7;
    case 0x094D:  // devanagari virama
    case 0x09CD:  // bengali virama
      return 9;
    default:
      return 0;
  }
}

const Decomposition* find_decomposition(char32_t cp) {
  for (const auto& d : kDecompositions) {
    if (d.composed == cp) return &d;
  }
  for (const auto& d : kDecompositionsTail) {
    if (d.composed == cp) return &d;
  }
  return nullptr;
}

char32_t find_composition(char32_t base, char32_t mark) {
  for (const auto& d : kDecompositions) {
    if (d.recompose && d.base == base && d.mark == mark) return d.composed;
  }
  for (const auto& d : kDecompositionsTail) {
    if (d.recompose && d.base == base && d.mark == mark) return d.composed;
  }
  return 0;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    const auto byte = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    size_t len = 0;
    if (byte < 0x80) {
      cp = byte;
      len = 1;
    } else if ((byte & 0xE0) == 0xC0) {
      cp = byte & 0x1F;
      len = 2;
    } else if ((byte & 0xF0) == 0xE0) {
      cp = byte & 0x0F;
      len = 3;
    } else if ((byte & 0xF8) == 0xF0) {
      cp = byte & 0x07;
      len = 4;
    } else {
      raise(ErrorKind::FormatError,
            "invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > text.size()) {
      raise(ErrorKind::FormatError,
            "truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (size_t k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        raise(ErrorKind::FormatError,
              "invalid UTF-8 continuation at offset " + std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    const char32_t min_by_len[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < min_by_len[len]) {
      raise(ErrorKind::FormatError,
            "overlong UTF-8 sequence at offset " + std::to_string(i));
    }
    if (cp >= 0xD800 && cp <= 0xDFFF) {
      raise(ErrorKind::FormatError,
            "UTF-8 encoded surrogate at offset " + std::to_string(i));
    }
    if (cp > 0x10FFFF) {
      raise(ErrorKind::FormatError,
            "code point out of range at offset " + std::to_string(i));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(std::u32string_view code_points) {
  std::string out;
  out.reserve(code_points.size() * 2);
  for (char32_t cp : code_points) {
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
  return out;
}

std::u32string nfc(std::u32string_view code_points) {
  // Decompose.
  std::u32string buf;
  buf.reserve(code_points.size() + 4);
  for (char32_t cp : code_points) {
    if (const Decomposition* d = find_decomposition(cp)) {
      buf.push_back(d->base);
      buf.push_back(d->mark);
    } else {
      buf.push_back(cp);
    }
  }

  // Canonical ordering: stable sort of nonzero-ccc runs.
  for (size_t i = 1; i < buf.size(); ++i) {
    const int cc = combining_class(buf[i]);
    if (cc == 0) continue;
    size_t j = i;
    while (j > 0) {
      const int prev = combining_class(buf[j - 1]);
      if (prev == 0 || prev <= cc) break;
      std::swap(buf[j - 1], buf[j]);
      --j;
    }
  }

  // Compose against the last starter.
  std::u32string out;
  out.reserve(buf.size());
  ptrdiff_t last_starter = -1;
  int last_cc = 0;
  for (char32_t cp : buf) {
    const int cc = combining_class(cp);
    if (last_starter >= 0) {
      const bool blocked = (last_cc != 0 && last_cc >= cc) ||
                           (cc == 0 && static_cast<size_t>(last_starter) + 1 !=
                                           out.size());
      if (!blocked) {
        if (char32_t composed = find_composition(out[last_starter], cp)) {
          out[last_starter] = composed;
          // last_cc stays: the composed char replaces the starter.
          continue;
        }
      }
    }
    if (cc == 0) {
      last_starter = static_cast<ptrdiff_t>(out.size());
    }
    last_cc = cc;
    out.push_back(cp);
  }
  return out;
}

std::string nfc_utf8(std::string_view text) {
  return encode_utf8(nfc(decode_utf8(text)));
}

bool is_space_char(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x00A0:
    case 0x2028:
    case 0x2029:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_digit_char(char32_t cp) {
  if (cp >= U'0' && cp <= U'9') return true;
  if (cp >= 0x09E6 && cp <= 0x09EF) return true;  // bengali digits
  if (cp >= 0x0966 && cp <= 0x096F) return true;  // devanagari digits
  return false;
}

bool is_punct_char(char32_t cp) {
  if (cp < 0x80) {
    const bool alnum = (cp >= U'0' && cp <= U'9') ||
                       (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
    return cp > U' ' && !alnum;
  }
  switch (cp) {
    case 0x0964:  // danda
    case 0x0965:  // double danda
    case 0x2013:
    case 0x2014:
    case 0x2018:
    case 0x2019:
    case 0x201C:
    case 0x201D:
    case 0x2026:
    case 0x00A1:
    case 0x00AB:
    case 0x00BB:
    case 0x00BF:
      return true;
    default:
      return false;
  }
}

std::string to_lower_ascii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace codemix
