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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rtg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. The message names the offending token or line.
class ParseError : public Error {
public:
    using Error::Error;
};

/// The two players of every game in this library. Eve is the existential
/// player (automaton side), Adam the universal one.
enum class Player : std::uint8_t { Eve = 0, Adam = 1 };

constexpr Player opponent(Player p) noexcept
{
    return p == Player::Eve ? Player::Adam : Player::Eve;
}

/// Player that wins a play whose lim-sup rank is `rank`.
constexpr Player winner_of_rank(int rank) noexcept
{
    return (rank % 2 == 0) ? Player::Eve : Player::Adam;
}

char player_letter(Player p) noexcept;

/// Letter of the game-tree alphabet: (owner, rank), written `E<r>` or `A<r>`.
struct OwnerRank {
    Player owner = Player::Eve;
    int rank = 0;

    friend bool operator==(const OwnerRank&, const OwnerRank&) = default;
};

std::optional<OwnerRank> parse_owner_rank(std::string_view token);
std::string format_owner_rank(OwnerRank letter);

/// Ordered finite alphabet of label tokens. Letters are referred to by
/// their index in the alphabet.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    /// {0, 1}
    static Alphabet binary();

    /// Sigma_(iota,kappa) = {E,A} x {iota..kappa}, ordered by rank then owner.
    static Alphabet owner_rank(int iota, int kappa);

    /// Alphabet for a set of tokens seen in a file: binary if all tokens
    /// are 0/1, the smallest Sigma_(iota,kappa) if all are owner-rank
    /// letters, otherwise the sorted token set.
    static Alphabet infer(std::vector<std::string> tokens);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbol(int letter) const { return symbols_.at(static_cast<std::size_t>(letter)); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    std::optional<int> find(std::string_view token) const;

    /// Letter index of `token`; throws if absent.
    int letter(std::string_view token) const;

    bool is_binary() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> symbols_;
};

/// Non-comment, non-blank lines of a line-oriented text file, split on
/// whitespace. Each entry keeps its 1-based line number for diagnostics.
struct TextLine {
    int number = 0;
    std::vector<std::string> fields;
};

std::vector<TextLine> tokenize_lines(std::string_view text);

/// Strict decimal parse of a non-negative integer that fits in `int`.
int parse_int(std::string_view token, std::string_view what);

} // namespace rtg
