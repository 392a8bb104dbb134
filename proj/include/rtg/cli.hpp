/*
 * Copyright 2026 The rtgames Authors
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

namespace rtg::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 10;
inline constexpr int kExitFuzzFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output goes to
/// `out`, diagnostics to `err`; returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rtg::cli
