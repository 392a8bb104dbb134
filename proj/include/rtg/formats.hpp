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

#include "rtg/alternating.hpp"
#include "rtg/automata.hpp"

#include <string_view>
#include <variant>

namespace rtg {

using AnyAutomaton = std::variant<BuchiTreeAutomaton, MullerTreeAutomaton, AlternatingParityAutomaton>;

/// Reads any of the three automaton file formats, dispatching on the
/// header keyword. The alphabet is inferred from the letter tokens used
/// (binary when there are none).
AnyAutomaton parse_automaton(std::string_view text);

std::string serialize(const AnyAutomaton& a);

} // namespace rtg
