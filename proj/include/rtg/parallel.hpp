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

#include <cstdint>
#include <limits>

namespace rtg {

/// Smallest i in [0, count) with !check(i), or -1. An exception thrown by
/// `check` counts as a failure of that case.
template <class Check>
std::int64_t first_failure_serial(std::int64_t count, Check&& check)
{
    for (std::int64_t i = 0; i < count; ++i) {
        bool ok = false;
        try {
            ok = check(i);
        } catch (...) {
            ok = false;
        }
        if (!ok) return i;
    }
    return -1;
}

/// Same result as first_failure_serial; cases run on OpenMP threads.
/// `check` must be safe to call concurrently.
template <class Check>
std::int64_t first_failure_parallel(std::int64_t count, Check&& check)
{
    std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 4) reduction(min : first)
    for (std::int64_t i = 0; i < count; ++i) {
        if (i > first) continue;
        bool ok = false;
        try {
            ok = check(i);
        } catch (...) {
            ok = false;
        }
        if (!ok && i < first) first = i;
    }
    return first == std::numeric_limits<std::int64_t>::max() ? -1 : first;
}

} // namespace rtg
