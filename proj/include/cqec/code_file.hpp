// Copyright 2026 The cqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Plain-text code files.
//
//   n=5 q=2 origin=2 d=3
//   1 0 0 1 0 0 1 1 0 0
//   ...
//
// The header carries n and the modulus (an integer >= 2, or Z for integer
// codes); origin and d are optional. Each following line is one generator:
// 2n whitespace-separated integers, X powers first. Blank lines and lines
// starting with '#' are ignored when reading.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cqec/stabilizer_code.hpp"

namespace cqec {

class ParseError : public std::runtime_error {
   public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

   private:
    int line_;
    int column_;
};

/// Parses a code file. Finite-modulus entries are reduced into [0, Q).
/// With `check` set the result must pass validate(), otherwise
/// InvalidCodeError is thrown.
StabilizerCode parse_code_file(std::string_view text, bool check = true);

/// Canonical text: single spaces, one newline-terminated line per row.
std::string serialize_code_file(const StabilizerCode& code);

StabilizerCode read_code_file(const std::filesystem::path& path, bool check = true);
void write_code_file(const std::filesystem::path& path, const StabilizerCode& code);

}  // namespace cqec
