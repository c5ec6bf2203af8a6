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

#ifndef LEXGAP_TOOLS_COMMANDS_H_
#define LEXGAP_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace lexgap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Parses and runs one lexgap command line. Errors go to `err` with their
// file and line where known.
int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err);

// `args` excludes the program name.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace lexgap::cli

#endif  // LEXGAP_TOOLS_COMMANDS_H_
