// Copyright 2026 The lexgap Authors.
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

#ifndef LEXGAP_TEXT_H_
#define LEXGAP_TEXT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers shared by every module. Normalization and character
// classes are delegated to ICU.
namespace lexgap::text {

// Canonical composition (NFC). Invalid UTF-8 raises ValidationError.
std::string Nfc(std::string_view s);

// Full Unicode case folding followed by NFC.
std::string Fold(std::string_view s);

// Strips leading and trailing Unicode whitespace.
std::string_view Trim(std::string_view s);

// NFC, trimmed, with every internal whitespace run replaced by a single
// underscore. This is the stored form of wordnet lemmas.
std::string NormalizeLemma(std::string_view s);

// Replaces underscores with spaces.
std::string UnderscoresToSpaces(std::string_view s);

// Decodes the code point starting at byte `pos` and advances `pos`.
// Malformed sequences decode as U+FFFD and advance one byte.
char32_t DecodeNext(std::string_view s, size_t &pos);

// Number of code points in `s`.
size_t CodePointCount(std::string_view s);

// Byte offset of the code point that starts `n` code points before the end
// of `s`, or npos if `s` is shorter than that.
size_t OffsetFromEnd(std::string_view s, size_t n);

// Letters that may appear inside a word token. Ordinal indicators (º, ª)
// are excluded so that "7º" splits into a number and a symbol.
bool IsWordLetter(char32_t c);
bool IsCombiningMark(char32_t c);
bool IsDigit(char32_t c);
bool IsSpace(char32_t c);
bool IsUpper(char32_t c);

// True if the first code point of `s` is an uppercase or titlecase letter.
bool StartsUppercase(std::string_view s);

std::vector<std::string> Split(std::string_view s, char sep);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// Reads a whole file. Raises IoError if it cannot be opened.
std::string ReadFile(const std::filesystem::path &path);

// Writes `contents` atomically (temporary file + rename).
void WriteFile(const std::filesystem::path &path, std::string_view contents);

// Splits file contents into lines, tolerating a trailing newline and CRLF.
std::vector<std::string> Lines(std::string_view contents);

}  // namespace lexgap::text

#endif  // LEXGAP_TEXT_H_
