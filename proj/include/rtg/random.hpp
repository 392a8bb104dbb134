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

#include "rtg/games.hpp"
#include "rtg/reductions.hpp"

#include <cstdint>

namespace rtg {

/// Deterministic pseudo-random inputs for fuzzing and tests.

/// 1..max_positions positions, ranks 0..max_rank, 1..3 moves each.
ParityGame random_parity_game(std::uint64_t seed, int max_positions, int max_rank);

/// 1..max_positions positions, colors 0..colors-1, 1..3 moves each, random family.
MullerGame random_muller_game(std::uint64_t seed, int max_positions, int colors);

/// Binary tree like random_tree with each label 1 drawn with probability
/// ones_percent / 100.
RegularTree random_tree_biased(std::uint64_t seed, int max_nodes, int ones_percent);

/// Tree built by spine_tree from 1..3 random keys of the given width
/// (digits <= max_digit), biased random fillers and an all-0 fallback.
RegularTree random_spine_fixture(std::uint64_t seed, int width, int max_digit, int max_nodes);

/// Prefix of 0..max_prefix random binary trees plus a random tail.
SpineFamily random_family(std::uint64_t seed, int max_prefix, int max_nodes);

} // namespace rtg
