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

#include "rtg/ordinal.hpp"

#include "rtg/core.hpp"

#include <algorithm>
#include <charconv>

namespace rtg {

CnfOrdinal::CnfOrdinal(std::vector<Digit> digits) : digits_(std::move(digits))
{
    if (digits_.empty()) throw Error("ordinal must have width >= 1");
}

CnfOrdinal CnfOrdinal::zero(std::size_t width)
{
    return CnfOrdinal(std::vector<Digit>(width, 0));
}

CnfOrdinal::Digit CnfOrdinal::coefficient(std::size_t power) const noexcept
{
    if (power >= digits_.size()) return 0;
    return digits_[digits_.size() - 1 - power];
}

std::strong_ordering operator<=>(const CnfOrdinal& x, const CnfOrdinal& y) noexcept
{
    const auto width = std::max(x.width(), y.width());
    for (std::size_t k = width; k-- > 0;) {
        auto a = x.coefficient(k);
        auto b = y.coefficient(k);
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare(const CnfOrdinal& x, const CnfOrdinal& y) noexcept
{
    return x <=> y;
}

Parity parity(const CnfOrdinal& x) noexcept
{
    return (x.coefficient(0) % 2 == 0) ? Parity::Even : Parity::Odd;
}

CnfOrdinal parse_ordinal(std::string_view text)
{
    std::vector<CnfOrdinal::Digit> digits;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        CnfOrdinal::Digit value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || token[0] == '+' || token[0] == '-' || ec != std::errc{} ||
            ptr != token.data() + token.size()) {
            if (ec == std::errc::result_out_of_range)
                throw ParseError("ordinal digit '" + std::string(token) + "' overflows");
            throw ParseError("invalid ordinal digit '" + std::string(token) + "'");
        }
        digits.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return CnfOrdinal(std::move(digits));
}

CnfOrdinal parse_ordinal(std::string_view text, std::size_t width)
{
    auto x = parse_ordinal(text);
    if (x.width() != width)
        throw ParseError("ordinal '" + std::string(text) + "' has " + std::to_string(x.width()) +
                         " digits, expected " + std::to_string(width));
    return x;
}

std::string serialize(const CnfOrdinal& x)
{
    std::string out;
    for (std::size_t i = 0; i < x.width(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(x.digits()[i]);
    }
    return out;
}

} // namespace rtg
