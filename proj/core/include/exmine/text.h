// Copyright 2026 The exmine Authors.
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

#ifndef EXMINE_TEXT_H_
#define EXMINE_TEXT_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace exmine {

// Byte offset of the first invalid UTF-8 sequence, or npos if the whole
// buffer is well formed. Overlong forms and surrogates count as invalid.
std::size_t find_invalid_utf8(std::string_view bytes);

// Splits a text buffer into lines. Accepts LF and CRLF terminators, drops a
// leading byte order mark and does not produce an empty trailing line for a
// final terminator. Throws EncodingError naming the offending line.
std::vector<std::string> split_lines(std::string_view text);

std::string read_file(const std::filesystem::path &path);

std::string_view trim(std::string_view s);

// ASCII case folding; non-ASCII bytes pass through unchanged.
std::string fold_case(std::string_view s);
std::string upper_case(std::string_view s);

// True if every code point of `token` is punctuation or a symbol.
bool is_punctuation_token(std::string_view token);

// Whitespace tokenization that additionally splits leading and trailing
// punctuation off each chunk ("appear," -> "appear" ","). Word-internal
// punctuation such as apostrophes and hyphens is kept.
std::vector<std::string> tokenize(std::string_view sentence);

std::string join(const std::vector<std::string> &parts, std::string_view sep);

}  // namespace exmine

#endif  // EXMINE_TEXT_H_
