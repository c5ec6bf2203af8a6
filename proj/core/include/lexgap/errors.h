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

#ifndef LEXGAP_ERRORS_H_
#define LEXGAP_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexgap {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented contract: malformed line, unknown id,
// failed precondition. The command-line tool maps these to exit status 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written. Exit status 2.
class IoError : public Error {
 public:
  using Error::Error;
};

// Formats "<file>:<line>: <message>" for parse errors.
std::string AtLine(const std::string &file, size_t line,
                   const std::string &message);

}  // namespace lexgap

#endif  // LEXGAP_ERRORS_H_
