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

#ifndef GECSYNTH_TEXT_H_
#define GECSYNTH_TEXT_H_

// UTF-8 helpers and Turkish-aware casing. Every string in the library is
// UTF-8; code points are handled as char32_t.

#include <string>
#include <string_view>

namespace gecsynth::text {

std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view codepoints);
void append(std::string& out, char32_t cp);

// Number of code points.
std::size_t length(std::string_view utf8);

// Canonical composition (NFC). Invalid UTF-8 sequences become U+FFFD.
std::string nfc(std::string_view utf8);

bool is_letter(char32_t cp);  // alphabetic or combining mark
bool is_digit(char32_t cp);
bool is_space(char32_t cp);
bool is_control(char32_t cp);  // Cc, plus the byte-order mark
bool is_punct(char32_t cp);    // any Unicode P* category
bool is_upper(char32_t cp);
bool is_apostrophe(char32_t cp);

// Turkish casing: I <-> ı and İ <-> i; everything else uses the default
// Unicode simple mapping.
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
std::string fold(std::string_view utf8);

// Upper-cases the first code point only.
std::string capitalize_first(std::string_view utf8);

bool starts_with_upper(std::string_view utf8);
bool has_letter(std::string_view utf8);
bool is_all_punct(std::string_view utf8);

}  // namespace gecsynth::text

#endif  // GECSYNTH_TEXT_H_
