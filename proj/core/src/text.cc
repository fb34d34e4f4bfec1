// Copyright 2026 The gecsynth Authors.
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

#include "gecsynth/text.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace gecsynth::text {

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const int32_t size = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < size) {
    UChar32 cp;
    U8_NEXT(bytes, i, size, cp);
    out.push_back(cp < 0 ? U'\uFFFD' : static_cast<char32_t>(cp));
  }
  return out;
}

void append(std::string& out, char32_t cp) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    append(out, U'\uFFFD');
    return;
  }
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
}

std::string encode(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) append(out, cp);
  return out;
}

std::size_t length(std::string_view utf8) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const int32_t size = static_cast<int32_t>(utf8.size());
  std::size_t count = 0;
  for (int32_t i = 0; i < size; ++count) U8_FWD_1(bytes, i, size);
  return count;
}

std::string nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString composed = normalizer->normalize(input, status);
  if (U_FAILURE(status)) throw std::runtime_error("NFC normalization failed");
  std::string out;
  composed.toUTF8String(out);
  return out;
}

bool is_letter(char32_t cp) {
  if (u_isUAlphabetic(static_cast<UChar32>(cp))) return true;
  const auto type = u_charType(static_cast<UChar32>(cp));
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK;
}

bool is_digit(char32_t cp) { return u_isdigit(static_cast<UChar32>(cp)); }

bool is_space(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

bool is_control(char32_t cp) {
  return cp == U'\uFEFF' ||
         u_charType(static_cast<UChar32>(cp)) == U_CONTROL_CHAR;
}

bool is_punct(char32_t cp) { return u_ispunct(static_cast<UChar32>(cp)); }

bool is_upper(char32_t cp) { return u_isUUppercase(static_cast<UChar32>(cp)); }

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }

char32_t to_lower(char32_t cp) {
  if (cp == U'I') return U'ı';
  if (cp == U'İ') return U'i';
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

char32_t to_upper(char32_t cp) {
  if (cp == U'i') return U'İ';
  if (cp == U'ı') return U'I';
  return static_cast<char32_t>(u_toupper(static_cast<UChar32>(cp)));
}

std::string fold(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (char32_t cp : decode(utf8)) append(out, to_lower(cp));
  return out;
}

std::string capitalize_first(std::string_view utf8) {
  std::u32string cps = decode(utf8);
  if (!cps.empty()) cps.front() = to_upper(cps.front());
  return encode(cps);
}

bool starts_with_upper(std::string_view utf8) {
  const std::u32string cps = decode(utf8);
  return !cps.empty() && is_upper(cps.front());
}

bool has_letter(std::string_view utf8) {
  for (char32_t cp : decode(utf8)) {
    if (u_isUAlphabetic(static_cast<UChar32>(cp))) return true;
  }
  return false;
}

bool is_all_punct(std::string_view utf8) {
  const std::u32string cps = decode(utf8);
  if (cps.empty()) return false;
  for (char32_t cp : cps) {
    if (!is_punct(cp)) return false;
  }
  return true;
}

}  // namespace gecsynth::text
