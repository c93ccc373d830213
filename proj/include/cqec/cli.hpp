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

#include <iosfwd>

namespace cqec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `cqec` invocation. Reports go to `out`; diagnostics to `err`.
/// Commands that produce a code write it to `--output` when given and
/// otherwise to `out`, moving the report to `err` so stdout stays a valid
/// code file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cqec::cli
