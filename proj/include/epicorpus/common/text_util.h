// Copyright 2026 The Epicorpus Authors.
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

#ifndef EPICORPUS_COMMON_TEXT_UTIL_H_
#define EPICORPUS_COMMON_TEXT_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace epicorpus {

// Byte classes. Bytes >= 0x80 belong to multi-byte UTF-8 sequences and are
// treated as letters so that accented words stay inside one token.
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool IsWordByte(char c) {
  return IsAsciiAlpha(c) || IsAsciiDigit(c) ||
         static_cast<unsigned char>(c) >= 0x80;
}
inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// ASCII case folding; non-ASCII bytes pass through unchanged.
std::string ToLower(std::string_view s);

std::string_view Trim(std::string_view s);
std::vector<std::string> Split(std::string_view s, char delimiter);

bool StartsWith(std::string_view s, std::string_view prefix);
bool EndsWith(std::string_view s, std::string_view suffix);

// True when the string contains at least one letter or digit.
bool HasWordByte(std::string_view s);
bool IsAllDigits(std::string_view s);

// Decodes UTF-8 into code points; invalid bytes decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view s);
std::string EncodeUtf8(std::u32string_view s);

// Moves `offset` backwards until it does not split a UTF-8 sequence.
std::size_t Utf8Floor(std::string_view s, std::size_t offset);

std::string ReadFile(const std::filesystem::path &path);
void WriteFile(const std::filesystem::path &path, std::string_view content);

// Reads a plain-text list: one entry per line, "#" starts a comment, blank
// lines ignored, entries trimmed.
std::vector<std::string> ParseWordList(std::string_view content);
std::vector<std::string> LoadWordList(const std::filesystem::path &path);

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view data,
                      std::uint64_t seed = 0xcbf29ce484222325ULL);

// Shortest decimal representation that round-trips.
std::string FormatDouble(double value);

}  // namespace epicorpus

#endif  // EPICORPUS_COMMON_TEXT_UTIL_H_
