/*
 * Copyright 2026 The nilpac Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilpac {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kInvariant = 3 };

constexpr int kSchemaVersion = 1;

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Reports go to `out` unless --output names a file; diagnostics go to
/// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilpac
