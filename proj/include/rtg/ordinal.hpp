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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rtg {

enum class Parity : std::uint8_t { Even, Odd };

/**
 * Ordinal below omega^omega in Cantor normal form
 *
 *   omega^(n-1) * a_(n-1) + ... + omega * a_1 + a_0
 *
 * stored as the digit vector (a_(n-1), ..., a_0), most significant first.
 * Leading zeros are allowed; ordinals of different widths compare as if
 * the shorter one were zero-padded on the left.
 */
class CnfOrdinal {
public:
    using Digit = std::uint64_t;

    /// Throws rtg::Error when `digits` is empty.
    explicit CnfOrdinal(std::vector<Digit> digits);

    static CnfOrdinal zero(std::size_t width);
    static CnfOrdinal finite(Digit value) { return CnfOrdinal({value}); }

    std::size_t width() const noexcept { return digits_.size(); }
    std::span<const Digit> digits() const noexcept { return digits_; }

    /// Coefficient of omega^power (a_power); zero beyond the width.
    Digit coefficient(std::size_t power) const noexcept;

    Digit leading() const noexcept { return digits_.front(); }

    friend std::strong_ordering operator<=>(const CnfOrdinal& x, const CnfOrdinal& y) noexcept;
    friend bool operator==(const CnfOrdinal& x, const CnfOrdinal& y) noexcept
    {
        return (x <=> y) == std::strong_ordering::equal;
    }

private:
    std::vector<Digit> digits_;
};

std::strong_ordering compare(const CnfOrdinal& x, const CnfOrdinal& y) noexcept;

/// Even iff a_0 is even: the limit part is always even.
Parity parity(const CnfOrdinal& x) noexcept;

/// Parses "a_(n-1),...,a_0" (decimal, comma separated, no spaces). The
/// number of digits must equal `width`. Throws rtg::ParseError naming the
/// offending token.
CnfOrdinal parse_ordinal(std::string_view text, std::size_t width);

/// Like parse_ordinal, taking the width from the text itself.
CnfOrdinal parse_ordinal(std::string_view text);

std::string serialize(const CnfOrdinal& x);

} // namespace rtg
