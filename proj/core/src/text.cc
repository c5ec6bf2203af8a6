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

#include "lexgap/text.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/utf8.h>
#include <unicode/unistr.h>

#include <fstream>
#include <sstream>

#include "lexgap/errors.h"

namespace lexgap::text {
namespace {

const icu::Normalizer2 &NfcInstance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  return *nfc;
}

bool IsAscii(std::string_view s) {
  for (unsigned char c : s) {
    if (c >= 0x80) return false;
  }
  return true;
}

icu::UnicodeString ToUnicode(std::string_view s) {
  // fromUTF8 silently substitutes U+FFFD, so check well-formedness first.
  const auto *bytes = reinterpret_cast<const uint8_t *>(s.data());
  int32_t length = static_cast<int32_t>(s.size());
  for (int32_t i = 0; i < length;) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
      throw ValidationError("invalid UTF-8 at byte " + std::to_string(i - 1));
    }
  }
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), length));
  if (u.isBogus()) throw ValidationError("invalid UTF-8 input");
  return u;
}

std::string ToUtf8(const icu::UnicodeString &u) {
  std::string out;
  u.toUTF8String(out);
  return out;
}

}  // namespace

std::string Nfc(std::string_view s) {
  if (IsAscii(s)) return std::string(s);
  const icu::Normalizer2 &nfc = NfcInstance();
  icu::UnicodeString u = ToUnicode(s);
  UErrorCode status = U_ZERO_ERROR;
  if (nfc.isNormalized(u, status) && U_SUCCESS(status)) {
    return std::string(s);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString normalized = nfc.normalize(u, status);
  if (U_FAILURE(status)) throw ValidationError("NFC normalization failed");
  return ToUtf8(normalized);
}

std::string Fold(std::string_view s) {
  if (IsAscii(s)) {
    std::string out(s);
    for (char &c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }
  icu::UnicodeString u = ToUnicode(s);
  u.foldCase();
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString normalized = NfcInstance().normalize(u, status);
  if (U_FAILURE(status)) throw ValidationError("NFC normalization failed");
  return ToUtf8(normalized);
}

std::string_view Trim(std::string_view s) {
  size_t begin = 0;
  while (begin < s.size()) {
    size_t next = begin;
    if (!IsSpace(DecodeNext(s, next))) break;
    begin = next;
  }
  size_t end = s.size();
  while (end > begin) {
    // Step back to the start of the previous code point.
    size_t start = end - 1;
    while (start > begin &&
           (static_cast<unsigned char>(s[start]) & 0xC0) == 0x80) {
      --start;
    }
    size_t probe = start;
    if (!IsSpace(DecodeNext(s, probe))) break;
    end = start;
  }
  return s.substr(begin, end - begin);
}

std::string NormalizeLemma(std::string_view s) {
  std::string nfc = Nfc(Trim(s));
  std::string out;
  out.reserve(nfc.size());
  bool in_space = false;
  size_t pos = 0;
  while (pos < nfc.size()) {
    size_t start = pos;
    char32_t c = DecodeNext(nfc, pos);
    if (IsSpace(c)) {
      in_space = true;
      continue;
    }
    if (in_space) out.push_back('_');
    in_space = false;
    out.append(nfc, start, pos - start);
  }
  return out;
}

std::string UnderscoresToSpaces(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c == '_') c = ' ';
  }
  return out;
}

char32_t DecodeNext(std::string_view s, size_t &pos) {
  const auto byte = [&](size_t i) { return static_cast<unsigned char>(s[i]); };
  unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  size_t length = 0;
  char32_t c = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    c = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    c = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    c = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + length > s.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (size_t i = 1; i < length; ++i) {
    unsigned char cont = byte(pos + i);
    if ((cont & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    c = (c << 6) | (cont & 0x3F);
  }
  pos += length;
  return c;
}

size_t CodePointCount(std::string_view s) {
  size_t count = 0;
  for (size_t pos = 0; pos < s.size();) {
    DecodeNext(s, pos);
    ++count;
  }
  return count;
}

size_t OffsetFromEnd(std::string_view s, size_t n) {
  size_t offset = s.size();
  for (size_t i = 0; i < n; ++i) {
    if (offset == 0) return std::string_view::npos;
    --offset;
    while (offset > 0 &&
           (static_cast<unsigned char>(s[offset]) & 0xC0) == 0x80) {
      --offset;
    }
  }
  return offset;
}

bool IsWordLetter(char32_t c) {
  if (c == 0x00AA || c == 0x00BA) return false;
  return u_isalpha(static_cast<UChar32>(c));
}

bool IsCombiningMark(char32_t c) {
  return u_charType(static_cast<UChar32>(c)) == U_NON_SPACING_MARK;
}

bool IsDigit(char32_t c) { return u_isdigit(static_cast<UChar32>(c)); }

bool IsSpace(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

bool IsUpper(char32_t c) {
  return u_isupper(static_cast<UChar32>(c)) ||
         u_istitle(static_cast<UChar32>(c));
}

bool StartsUppercase(std::string_view s) {
  if (s.empty()) return false;
  size_t pos = 0;
  return IsUpper(DecodeNext(s, pos));
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t found = s.find(sep, start);
    if (found == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, found - start));
    start = found + 1;
  }
}

std::string Join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return buffer.str();
}

void WriteFile(const std::filesystem::path &path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("cannot write " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename into " + path.string() + ": " +
                        ec.message());
}

std::vector<std::string> Lines(std::string_view contents) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < contents.size()) {
    size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace lexgap::text
