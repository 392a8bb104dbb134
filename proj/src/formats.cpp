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

#include "rtg/formats.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

namespace rtg {

namespace {

std::string at_line(const TextLine& line)
{
    return "line " + std::to_string(line.number) + ": ";
}

State parse_state(const TextLine& line, const std::string& token, int n)
{
    const int q = parse_int(token, "state");
    if (q >= n) throw ParseError(at_line(line) + "state " + token + " out of range");
    return q;
}

std::vector<State> parse_state_list(const TextLine& line, std::string_view list, int n)
{
    std::vector<State> out;
    std::size_t pos = 0;
    while (true) {
        auto comma = list.find(',', pos);
        auto token = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        out.push_back(parse_state(line, std::string(token), n));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Alphabet alphabet_of(const std::vector<std::string>& tokens)
{
    if (tokens.empty()) return Alphabet::binary();
    return Alphabet::infer(tokens);
}

template <class A>
A parse_nondet(const std::vector<TextLine>& lines, int n, State initial)
{
    A a;
    for (int q = 0; q < n; ++q) a.add_state(std::to_string(q));
    a.initial = initial;

    std::vector<std::string> letters;
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (lines[i].fields[0] == "trans" && lines[i].fields.size() == 5) letters.push_back(lines[i].fields[2]);
    a.alphabet = alphabet_of(letters);

    bool saw_accept = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto& f = line.fields;
        if (f[0] == "trans") {
            if (f.size() != 5) throw ParseError(at_line(line) + "expected 'trans <q> <letter> <ql> <qr>'");
            a.add_transition(parse_state(line, f[1], n), f[2], parse_state(line, f[3], n), parse_state(line, f[4], n));
        } else if constexpr (std::is_same_v<A, BuchiTreeAutomaton>) {
            if (f[0] != "accept") throw ParseError(at_line(line) + "unexpected keyword '" + f[0] + "'");
            if (saw_accept) throw ParseError(at_line(line) + "duplicate 'accept' line");
            saw_accept = true;
            for (std::size_t k = 1; k < f.size(); ++k) a.accepting.push_back(parse_state(line, f[k], n));
            std::sort(a.accepting.begin(), a.accepting.end());
            a.accepting.erase(std::unique(a.accepting.begin(), a.accepting.end()), a.accepting.end());
        } else {
            if (f[0] != "set") throw ParseError(at_line(line) + "unexpected keyword '" + f[0] + "'");
            if (f.size() > 2) throw ParseError(at_line(line) + "expected 'set <q1>,<q2>,...'");
            a.family.push_back(f.size() == 2 ? parse_state_list(line, f[1], n) : StateSet{});
        }
    }
    if constexpr (std::is_same_v<A, MullerTreeAutomaton>) {
        std::sort(a.family.begin(), a.family.end());
        a.family.erase(std::unique(a.family.begin(), a.family.end()), a.family.end());
    }
    a.canonicalize();
    a.validate();
    return a;
}

Direction parse_direction(const TextLine& line, const std::string& token)
{
    if (token == "l") return Direction::Left;
    if (token == "r") return Direction::Right;
    if (token == "s") return Direction::Stay;
    throw ParseError(at_line(line) + "invalid direction '" + token + "' (expected l, r or s)");
}

AlternatingParityAutomaton parse_alternating(const std::vector<TextLine>& lines, int n, State initial)
{
    AlternatingParityAutomaton a;
    for (int q = 0; q < n; ++q) a.add_state(std::to_string(q), Player::Eve, 0);
    a.initial = initial;

    std::vector<std::string> letters;
    for (std::size_t i = 1; i < lines.size(); ++i)
        if (lines[i].fields[0] == "move" && lines[i].fields.size() == 5) letters.push_back(lines[i].fields[2]);
    a.alphabet = alphabet_of(letters);

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto& f = line.fields;
        if (f[0] == "estate" || f[0] == "astate") {
            if (f.size() != 3) throw ParseError(at_line(line) + "expected '" + f[0] + " <q> <rank>'");
            const auto q = static_cast<std::size_t>(parse_state(line, f[1], n));
            if (seen[q]) throw ParseError(at_line(line) + "state " + f[1] + " declared twice");
            seen[q] = 1;
            a.side[q] = f[0] == "estate" ? Player::Eve : Player::Adam;
            a.rank[q] = parse_int(f[2], "rank");
        } else if (f[0] == "move") {
            if (f.size() != 5) throw ParseError(at_line(line) + "expected 'move <q> <letter> <l|r|s> <q'>'");
            a.add_move(parse_state(line, f[1], n), f[2], parse_direction(line, f[3]), parse_state(line, f[4], n));
        } else {
            throw ParseError(at_line(line) + "unexpected keyword '" + f[0] + "'");
        }
    }
    for (int q = 0; q < n; ++q)
        if (!seen[static_cast<std::size_t>(q)])
            throw ParseError("state " + std::to_string(q) + " has no estate/astate line");
    a.canonicalize();
    a.validate();
    return a;
}

} // namespace

AnyAutomaton parse_automaton(std::string_view text)
{
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError("empty automaton file");
    const auto& header = lines.front();
    const auto& kind = header.fields[0];
    if (header.fields.size() != 3 || (kind != "buchi" && kind != "muller" && kind != "alt"))
        throw ParseError(at_line(header) + "expected 'buchi|muller|alt <nstates> <initial>'");
    const int n = parse_int(header.fields[1], "state count");
    if (n == 0) throw ParseError(at_line(header) + "automaton has no states");
    const State initial = parse_state(header, header.fields[2], n);
    if (kind == "buchi") return parse_nondet<BuchiTreeAutomaton>(lines, n, initial);
    if (kind == "muller") return parse_nondet<MullerTreeAutomaton>(lines, n, initial);
    return parse_alternating(lines, n, initial);
}

std::string serialize(const AnyAutomaton& a)
{
    return std::visit([](const auto& x) { return serialize(x); }, a);
}

} // namespace rtg
