// Copyright 2026 The Polispell Authors.
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

#include "polispell/unicode.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace polispell {

std::u32string decode_utf8(std::string_view text, std::size_t base_offset) {
  std::u32string out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      throw InputError("malformed UTF-8 at byte offset " +
                           std::to_string(base_offset + start),
                       base_offset + start);
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) throw std::invalid_argument("invalid scalar value");
    out.append(reinterpret_cast<const char*>(buf), n);
  }
  return out;
}

namespace {

char32_t fold_apostrophe(char32_t c) {
  switch (c) {
    case U'’':  // right single quotation mark
    case U'‘':
    case U'ʼ':  // modifier letter apostrophe
    case U'`':
    case U'´':
      return kApostrophe;
    default:
      return c;
  }
}

}  // namespace

std::u32string normalize(std::u32string_view text) {
  if (text.empty()) return {};
  icu::UnicodeString u = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
  u.toLower(icu::Locale::getRoot());

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  icu::UnicodeString composed = nfc->normalize(u, status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");

  std::u32string out(static_cast<std::size_t>(composed.countChar32()), U'\0');
  status = U_ZERO_ERROR;
  composed.toUTF32(reinterpret_cast<UChar32*>(out.data()),
                   static_cast<int32_t>(out.size()), status);
  if (U_FAILURE(status) && status != U_STRING_NOT_TERMINATED_WARNING) {
    throw std::runtime_error("UTF-32 conversion failed");
  }
  for (char32_t& c : out) c = fold_apostrophe(c);
  return out;
}

std::u32string normalize_utf8(std::string_view text, std::size_t base_offset) {
  return normalize(decode_utf8(text, base_offset));
}

std::u32string make_term(std::string_view utf8) {
  const std::u32string norm = normalize_utf8(utf8);
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : norm) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  if (out.empty()) throw std::invalid_argument("empty term");
  return out;
}

bool is_letter(char32_t c) { return u_isalpha(static_cast<UChar32>(c)); }

bool is_digit(char32_t c) { return u_isdigit(static_cast<UChar32>(c)); }

bool is_space(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool is_mark(char32_t c) {
  const auto mask = U_GET_GC_MASK(static_cast<UChar32>(c));
  return (mask & (U_GC_MN_MASK | U_GC_MC_MASK | U_GC_ME_MASK)) != 0;
}

bool is_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'à': case U'è': case U'é': case U'ì': case U'ò': case U'ó':
    case U'ù':
      return true;
    default:
      return false;
  }
}

}  // namespace polispell
