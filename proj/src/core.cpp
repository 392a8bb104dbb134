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

#include "rtg/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rtg {

char player_letter(Player p) noexcept
{
    return p == Player::Eve ? 'E' : 'A';
}

std::optional<OwnerRank> parse_owner_rank(std::string_view token)
{
    if (token.size() < 2) return std::nullopt;
    OwnerRank letter;
    if (token[0] == 'E') {
        letter.owner = Player::Eve;
    } else if (token[0] == 'A') {
        letter.owner = Player::Adam;
    } else {
        return std::nullopt;
    }
    auto digits = token.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), letter.rank);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return letter;
}

std::string format_owner_rank(OwnerRank letter)
{
    return player_letter(letter.owner) + std::to_string(letter.rank);
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols))
{
    auto sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("alphabet has duplicate symbols");
}

Alphabet Alphabet::binary()
{
    return Alphabet({"0", "1"});
}

Alphabet Alphabet::owner_rank(int iota, int kappa)
{
    if (iota < 0 || kappa < iota) throw Error("invalid rank range for owner-rank alphabet");
    std::vector<std::string> symbols;
    for (int r = iota; r <= kappa; ++r) {
        symbols.push_back(format_owner_rank({Player::Eve, r}));
        symbols.push_back(format_owner_rank({Player::Adam, r}));
    }
    return Alphabet(std::move(symbols));
}

Alphabet Alphabet::infer(std::vector<std::string> tokens)
{
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    if (std::all_of(tokens.begin(), tokens.end(), [](const std::string& t) { return t == "0" || t == "1"; }))
        return binary();
    bool all_owner_rank = true;
    int lo = 0;
    int hi = 0;
    bool first = true;
    for (const auto& t : tokens) {
        auto letter = parse_owner_rank(t);
        if (!letter) {
            all_owner_rank = false;
            break;
        }
        lo = first ? letter->rank : std::min(lo, letter->rank);
        hi = first ? letter->rank : std::max(hi, letter->rank);
        first = false;
    }
    if (all_owner_rank) return owner_rank(lo % 2, hi);
    return Alphabet(std::move(tokens));
}

std::optional<int> Alphabet::find(std::string_view token) const
{
    auto it = std::find(symbols_.begin(), symbols_.end(), token);
    if (it == symbols_.end()) return std::nullopt;
    return static_cast<int>(it - symbols_.begin());
}

int Alphabet::letter(std::string_view token) const
{
    auto idx = find(token);
    if (!idx) throw Error("symbol '" + std::string(token) + "' is not in the alphabet");
    return *idx;
}

bool Alphabet::is_binary() const
{
    return std::all_of(symbols_.begin(), symbols_.end(), [](const std::string& t) { return t == "0" || t == "1"; });
}

std::vector<TextLine> tokenize_lines(std::string_view text)
{
    std::vector<TextLine> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        TextLine line{number, {}};
        for (std::string field; in >> field;) line.fields.push_back(field);
        if (!line.fields.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

int parse_int(std::string_view token, std::string_view what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || token[0] == '-' || token[0] == '+' || ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
    return value;
}

} // namespace rtg
