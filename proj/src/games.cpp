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

#include "rtg/games.hpp"

#include "rtg/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace rtg {

int ParityGame::add_position(Player who, int r)
{
    owner.push_back(who);
    rank.push_back(r);
    moves.emplace_back();
    return static_cast<int>(owner.size()) - 1;
}

void ParityGame::add_move(int from, int to)
{
    moves.at(static_cast<std::size_t>(from)).push_back(to);
}

void ParityGame::validate() const
{
    const auto n = size();
    if (rank.size() != n || moves.size() != n) throw Error("parity game: inconsistent table sizes");
    if (n == 0) throw Error("parity game has no positions");
    if (initial < 0 || static_cast<std::size_t>(initial) >= n) throw Error("parity game: initial position out of range");
    for (std::size_t p = 0; p < n; ++p) {
        if (rank[p] < 0) throw Error("parity game: negative rank at position " + std::to_string(p));
        for (int q : moves[p])
            if (q < 0 || static_cast<std::size_t>(q) >= n)
                throw Error("parity game: position " + std::to_string(p) + " moves to missing position " +
                            std::to_string(q));
    }
}

bool ParityGame::has_dead_ends() const
{
    return std::any_of(moves.begin(), moves.end(), [](const auto& m) { return m.empty(); });
}

void ParityGame::normalize()
{
    validate();
    int eve_sink = kNoMove;
    int adam_sink = kNoMove;
    const auto n = size();
    for (std::size_t p = 0; p < n; ++p) {
        if (!moves[p].empty()) continue;
        if (owner[p] == Player::Eve) {
            if (eve_sink == kNoMove) {
                eve_sink = add_position(Player::Eve, 1);
                add_move(eve_sink, eve_sink);
            }
            moves[p].push_back(eve_sink);
        } else {
            if (adam_sink == kNoMove) {
                adam_sink = add_position(Player::Adam, 0);
                add_move(adam_sink, adam_sink);
            }
            moves[p].push_back(adam_sink);
        }
    }
}

int ParityGame::max_rank() const
{
    return rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end());
}

namespace {

Digraph predecessors(const ParityGame& game)
{
    Digraph preds(game.size());
    for (std::size_t p = 0; p < game.size(); ++p)
        for (int q : game.moves[p]) preds[static_cast<std::size_t>(q)].push_back(static_cast<int>(p));
    return preds;  // one entry per edge, so duplicate moves match escape counts
}

// Attractor inside the subgame `sub`. Player-owned attracted positions get
// their attracting move recorded in `strategy` when given.
std::vector<char> attract_in(const ParityGame& game, const Digraph& preds, Player player, const std::vector<char>& sub,
                             const std::vector<char>& target, std::vector<int>* strategy)
{
    const auto n = game.size();
    std::vector<char> in(n, 0);
    std::vector<int> escapes(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        if (!sub[p] || game.owner[p] == player) continue;
        for (int q : game.moves[p])
            if (sub[static_cast<std::size_t>(q)]) ++escapes[p];
    }
    std::deque<int> queue;
    for (std::size_t p = 0; p < n; ++p) {
        if (sub[p] && target[p]) {
            in[p] = 1;
            queue.push_back(static_cast<int>(p));
        }
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : preds[static_cast<std::size_t>(v)]) {
            const auto ui = static_cast<std::size_t>(u);
            if (!sub[ui] || in[ui]) continue;
            if (game.owner[ui] == player) {
                in[ui] = 1;
                if (strategy) (*strategy)[ui] = v;
                queue.push_back(u);
            } else if (--escapes[ui] == 0) {
                in[ui] = 1;
                queue.push_back(u);
            }
        }
    }
    return in;
}

class Zielonka {
public:
    explicit Zielonka(const ParityGame& game)
        : game_(game), preds_(predecessors(game)), winner_(game.size(), Player::Eve), strategy_(game.size(), kNoMove)
    {
    }

    void solve(const std::vector<int>& positions)
    {
        if (positions.empty()) return;
        const auto n = game_.size();
        std::vector<char> sub(n, 0);
        int top = 0;
        for (int p : positions) {
            sub[static_cast<std::size_t>(p)] = 1;
            top = std::max(top, game_.rank[static_cast<std::size_t>(p)]);
        }
        const Player player = winner_of_rank(top);
        const Player other = opponent(player);

        std::vector<char> top_ranked(n, 0);
        for (int p : positions) {
            const auto pi = static_cast<std::size_t>(p);
            if (game_.rank[pi] != top) continue;
            top_ranked[pi] = 1;
            if (game_.owner[pi] == player) {
                for (int q : game_.moves[pi]) {
                    if (sub[static_cast<std::size_t>(q)]) {
                        strategy_[pi] = q;
                        break;
                    }
                }
            }
        }
        auto attracted = attract_in(game_, preds_, player, sub, top_ranked, &strategy_);
        std::vector<int> rest;
        for (int p : positions)
            if (!attracted[static_cast<std::size_t>(p)]) rest.push_back(p);
        solve(rest);

        std::vector<char> lost(n, 0);
        bool other_wins_somewhere = false;
        for (int p : rest) {
            if (winner_[static_cast<std::size_t>(p)] == other) {
                lost[static_cast<std::size_t>(p)] = 1;
                other_wins_somewhere = true;
            }
        }
        if (!other_wins_somewhere) {
            for (int p : positions)
                if (attracted[static_cast<std::size_t>(p)]) winner_[static_cast<std::size_t>(p)] = player;
            return;
        }

        auto dominion = attract_in(game_, preds_, other, sub, lost, &strategy_);
        std::vector<int> remainder;
        for (int p : positions) {
            if (dominion[static_cast<std::size_t>(p)])
                winner_[static_cast<std::size_t>(p)] = other;
            else
                remainder.push_back(p);
        }
        solve(remainder);
    }

    const std::vector<Player>& winner() const { return winner_; }
    const std::vector<int>& strategy() const { return strategy_; }

private:
    const ParityGame& game_;
    Digraph preds_;
    std::vector<Player> winner_;
    std::vector<int> strategy_;
};

} // namespace

std::vector<char> attractor(const ParityGame& game, Player player, const std::vector<char>& target)
{
    game.validate();
    if (target.size() != game.size()) throw Error("attractor: target mask has wrong size");
    // Dead ends are outside the subgame: an opponent who cannot move is
    // never attracted vacuously.
    std::vector<char> sub(game.size(), 0);
    for (std::size_t p = 0; p < game.size(); ++p) sub[p] = (!game.moves[p].empty() || target[p]) ? 1 : 0;
    return attract_in(game, predecessors(game), player, sub, target, nullptr);
}

Solution solve_zielonka(const ParityGame& game)
{
    ParityGame normalized = game;
    normalized.normalize();
    Zielonka solver(normalized);
    std::vector<int> all(normalized.size());
    for (std::size_t p = 0; p < all.size(); ++p) all[p] = static_cast<int>(p);
    solver.solve(all);

    Solution out;
    const auto n = game.size();
    out.winner.assign(solver.winner().begin(), solver.winner().begin() + static_cast<std::ptrdiff_t>(n));
    out.eve_strategy = Strategy(n);
    out.adam_strategy = Strategy(n);
    for (std::size_t p = 0; p < n; ++p) {
        const Player w = out.winner[p];
        (w == Player::Eve ? out.eve_region : out.adam_region).push_back(static_cast<int>(p));
        if (game.owner[p] == w && !game.moves[p].empty()) {
            auto& s = (w == Player::Eve ? out.eve_strategy : out.adam_strategy);
            s.choice[p] = solver.strategy()[p];
        }
    }
    return out;
}

namespace {

using Mask = std::uint64_t;

struct BruteforceSetup {
    ParityGame game;
    std::vector<int> eve_positions;
    std::vector<Mask> adam_succ;  // successor masks of Adam positions
    std::vector<int> odd_ranks;
    std::uint64_t strategies = 1;
};

BruteforceSetup prepare_bruteforce(const ParityGame& input, std::size_t cap)
{
    if (cap > 64) throw Error("solve_bruteforce: cap must be <= 64");
    BruteforceSetup s{input, {}, {}, {}, 1};
    s.game.normalize();
    const auto n = s.game.size();
    if (n > cap)
        throw Error("solve_bruteforce: game has " + std::to_string(n) + " positions (after normalization), cap is " +
                    std::to_string(cap));
    s.adam_succ.assign(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        if (s.game.owner[p] == Player::Eve) {
            s.eve_positions.push_back(static_cast<int>(p));
            s.strategies *= s.game.moves[p].size();
            if (s.strategies > (std::uint64_t{1} << 32)) throw Error("solve_bruteforce: too many strategies");
        }
        for (int q : s.game.moves[p]) s.adam_succ[p] |= Mask{1} << q;
    }
    for (int r : s.game.rank)
        if (r % 2 == 1 && std::find(s.odd_ranks.begin(), s.odd_ranks.end(), r) == s.odd_ranks.end())
            s.odd_ranks.push_back(r);
    return s;
}

// Transitive (non-reflexive) closure restricted to `allowed`.
void close(std::vector<Mask>& reach, Mask allowed)
{
    const auto n = reach.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (!(allowed >> k & 1)) continue;
        const Mask bit = Mask{1} << k;
        for (std::size_t v = 0; v < n; ++v)
            if (reach[v] & bit) reach[v] |= reach[k];
    }
}

// Positions from which every play consistent with Eve strategy `index`
// is won by Eve.
Mask eve_wins_with(const BruteforceSetup& s, std::uint64_t index)
{
    const auto n = s.game.size();
    std::vector<Mask> succ = s.adam_succ;
    for (int p : s.eve_positions) {
        const auto& m = s.game.moves[static_cast<std::size_t>(p)];
        succ[static_cast<std::size_t>(p)] = Mask{1} << m[index % m.size()];
        index /= m.size();
    }
    const Mask all = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);

    Mask bad = 0;
    std::vector<Mask> reach(n);
    for (int r : s.odd_ranks) {
        Mask allowed = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (s.game.rank[v] <= r) allowed |= Mask{1} << v;
        for (std::size_t v = 0; v < n; ++v) reach[v] = (allowed >> v & 1) ? (succ[v] & allowed) : 0;
        close(reach, allowed);
        for (std::size_t v = 0; v < n; ++v)
            if (s.game.rank[v] == r && (reach[v] >> v & 1)) bad |= Mask{1} << v;
    }
    for (std::size_t v = 0; v < n; ++v) reach[v] = succ[v];
    close(reach, all);
    Mask lose = bad;
    for (std::size_t v = 0; v < n; ++v)
        if (reach[v] & bad) lose |= Mask{1} << v;
    return all & ~lose;
}

std::vector<Player> to_winners(const ParityGame& original, Mask eve)
{
    std::vector<Player> winner(original.size());
    for (std::size_t p = 0; p < original.size(); ++p) winner[p] = (eve >> p & 1) ? Player::Eve : Player::Adam;
    return winner;
}

} // namespace

std::vector<Player> solve_bruteforce(const ParityGame& game, std::size_t cap)
{
    auto setup = prepare_bruteforce(game, cap);
    Mask eve = 0;
    for (std::uint64_t i = 0; i < setup.strategies; ++i) eve |= eve_wins_with(setup, i);
    return to_winners(game, eve);
}

std::vector<Player> solve_bruteforce_parallel(const ParityGame& game, std::size_t cap)
{
    auto setup = prepare_bruteforce(game, cap);
    Mask eve = 0;
    const auto total = static_cast<long long>(setup.strategies);
#pragma omp parallel for schedule(static) reduction(| : eve)
    for (long long i = 0; i < total; ++i) eve |= eve_wins_with(setup, static_cast<std::uint64_t>(i));
    return to_winners(game, eve);
}

Verdict verify_strategy(const ParityGame& game, Player player, const Strategy& strategy, const std::vector<int>& region)
{
    game.validate();
    const auto n = game.size();
    if (strategy.choice.size() != n) return {false, "strategy size does not match the game"};
    std::vector<char> in(n, 0);
    for (int p : region) {
        if (p < 0 || static_cast<std::size_t>(p) >= n) return {false, "region position out of range"};
        in[static_cast<std::size_t>(p)] = 1;
    }
    Digraph restricted(n);
    for (int p : region) {
        const auto pi = static_cast<std::size_t>(p);
        const auto& m = game.moves[pi];
        if (game.owner[pi] == player) {
            if (m.empty()) return {false, "player is stuck at position " + std::to_string(p)};
            int q = strategy[p];
            if (q == kNoMove) return {false, "strategy undefined at position " + std::to_string(p)};
            if (std::find(m.begin(), m.end(), q) == m.end())
                return {false, "illegal move " + std::to_string(p) + " -> " + std::to_string(q)};
            if (!in[static_cast<std::size_t>(q)])
                return {false, "strategy leaves the region at " + std::to_string(p) + " -> " + std::to_string(q)};
            restricted[pi].push_back(q);
        } else {
            for (int q : m) {
                if (!in[static_cast<std::size_t>(q)])
                    return {false, "region not closed: opponent escapes " + std::to_string(p) + " -> " +
                                       std::to_string(q)};
                restricted[pi].push_back(q);
            }
        }
    }
    const int bad_parity = player == Player::Eve ? 1 : 0;
    std::vector<int> ranks;
    for (int p : region) ranks.push_back(game.rank[static_cast<std::size_t>(p)]);
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (int r : ranks) {
        if (r % 2 != bad_parity) continue;
        std::vector<char> active(n, 0);
        for (int p : region) active[static_cast<std::size_t>(p)] = game.rank[static_cast<std::size_t>(p)] <= r;
        auto cyc = on_cycle(restricted, active);
        for (int p : region)
            if (game.rank[static_cast<std::size_t>(p)] == r && cyc[static_cast<std::size_t>(p)])
                return {false, "losing cycle through position " + std::to_string(p) + " with top rank " +
                                   std::to_string(r)};
    }
    return {true, {}};
}

ParityGame parse_parity_game(std::string_view text)
{
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError("empty parity game file");
    const auto& header = lines.front();
    if (header.fields.size() != 3 || header.fields[0] != "parity")
        throw ParseError("line " + std::to_string(header.number) + ": expected 'parity <npositions> <initial>'");
    const int n = parse_int(header.fields[1], "position count");
    if (n == 0) throw ParseError("parity game has no positions");
    ParityGame game;
    game.owner.assign(static_cast<std::size_t>(n), Player::Eve);
    game.rank.assign(static_cast<std::size_t>(n), 0);
    game.moves.assign(static_cast<std::size_t>(n), {});
    game.initial = parse_int(header.fields[2], "initial position");
    if (game.initial >= n) throw ParseError("initial position " + header.fields[2] + " out of range");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& f = lines[i].fields;
        const auto where = "line " + std::to_string(lines[i].number) + ": ";
        if (f[0] != "pos" || f.size() < 4 || f.size() > 5)
            throw ParseError(where + "expected 'pos <id> <rank> <E|A> <succ1>,<succ2>,...'");
        const int id = parse_int(f[1], "position id");
        if (id >= n) throw ParseError(where + "position id " + f[1] + " out of range");
        if (seen[static_cast<std::size_t>(id)]) throw ParseError(where + "position " + f[1] + " defined twice");
        seen[static_cast<std::size_t>(id)] = 1;
        game.rank[static_cast<std::size_t>(id)] = parse_int(f[2], "rank");
        if (f[3] == "E")
            game.owner[static_cast<std::size_t>(id)] = Player::Eve;
        else if (f[3] == "A")
            game.owner[static_cast<std::size_t>(id)] = Player::Adam;
        else
            throw ParseError(where + "invalid owner '" + f[3] + "' (expected E or A)");
        if (f.size() == 5 && f[4] != "-") {
            std::string_view list = f[4];
            std::size_t pos = 0;
            while (true) {
                auto comma = list.find(',', pos);
                auto token = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
                int succ = parse_int(token, "successor");
                if (succ >= n) throw ParseError(where + "successor " + std::string(token) + " out of range");
                game.moves[static_cast<std::size_t>(id)].push_back(succ);
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
        }
    }
    for (int p = 0; p < n; ++p)
        if (!seen[static_cast<std::size_t>(p)]) throw ParseError("position " + std::to_string(p) + " has no pos line");
    return game;
}

std::string serialize(const ParityGame& game)
{
    std::ostringstream out;
    out << "parity " << game.size() << ' ' << game.initial << '\n';
    for (std::size_t p = 0; p < game.size(); ++p) {
        out << "pos " << p << ' ' << game.rank[p] << ' ' << player_letter(game.owner[p]);
        for (std::size_t i = 0; i < game.moves[p].size(); ++i) out << (i == 0 ? ' ' : ',') << game.moves[p][i];
        out << '\n';
    }
    return out.str();
}

int MullerGame::add_position(Player who, int c)
{
    owner.push_back(who);
    color.push_back(c);
    moves.emplace_back();
    return static_cast<int>(owner.size()) - 1;
}

int MullerGame::color_count() const
{
    int count = 0;
    for (int c : color) count = std::max(count, c + 1);
    for (const auto& set : family)
        for (int c : set) count = std::max(count, c + 1);
    return count;
}

void MullerGame::validate() const
{
    const auto n = size();
    if (n == 0) throw Error("Muller game has no positions");
    if (moves.size() != n || color.size() != n) throw Error("Muller game: inconsistent table sizes");
    if (initial < 0 || static_cast<std::size_t>(initial) >= n) throw Error("Muller game: initial position out of range");
    for (std::size_t p = 0; p < n; ++p) {
        if (color[p] < 0) throw Error("Muller game: negative color");
        for (int q : moves[p])
            if (q < 0 || static_cast<std::size_t>(q) >= n) throw Error("Muller game: successor out of range");
    }
}

void MullerGame::normalize()
{
    validate();
    for (auto& set : family) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    const int fresh = color_count();
    int eve_sink = kNoMove;
    int adam_sink = kNoMove;
    const auto n = size();
    for (std::size_t p = 0; p < n; ++p) {
        if (!moves[p].empty()) continue;
        if (owner[p] == Player::Eve) {
            if (eve_sink == kNoMove) {
                eve_sink = add_position(Player::Eve, fresh);
                add_move(eve_sink, eve_sink);
            }
            moves[p].push_back(eve_sink);
        } else {
            if (adam_sink == kNoMove) {
                adam_sink = add_position(Player::Adam, fresh + 1);
                add_move(adam_sink, adam_sink);
                family.push_back({fresh + 1});
            }
            moves[p].push_back(adam_sink);
        }
    }
}

LarReduction lar_reduce(const MullerGame& input)
{
    MullerGame muller = input;
    muller.normalize();
    const int colors = muller.color_count();
    if (colors > 63) throw Error("lar_reduce: more than 63 colors");

    std::vector<std::uint64_t> members;
    for (const auto& set : muller.family) {
        std::uint64_t m = 0;
        for (int c : set) m |= std::uint64_t{1} << c;
        members.push_back(m);
    }
    std::sort(members.begin(), members.end());
    auto in_family = [&members](std::uint64_t m) { return std::binary_search(members.begin(), members.end(), m); };

    LarReduction out;
    std::unordered_map<std::string, int> index;
    auto key_of = [](const LarPosition& lp) {
        std::string key;
        key.reserve(8 + lp.record.size());
        key.append(reinterpret_cast<const char*>(&lp.position), sizeof lp.position);
        key.push_back(static_cast<char>(lp.hit));
        for (int c : lp.record) key.push_back(static_cast<char>(c));
        return key;
    };
    auto rank_of = [&in_family](const LarPosition& lp) {
        std::uint64_t prefix = 0;
        for (int i = 0; i < lp.hit; ++i) prefix |= std::uint64_t{1} << lp.record[static_cast<std::size_t>(i)];
        return in_family(prefix) ? 2 * lp.hit : 2 * lp.hit + 1;
    };
    auto intern = [&](LarPosition lp) {
        auto key = key_of(lp);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        const int id = out.game.add_position(muller.owner[static_cast<std::size_t>(lp.position)], rank_of(lp));
        index.emplace(std::move(key), id);
        out.origin.push_back(std::move(lp));
        return id;
    };

    out.game.initial = intern({muller.initial, {muller.color[static_cast<std::size_t>(muller.initial)]}, 1});
    for (std::size_t head = 0; head < out.origin.size(); ++head) {
        const int from = static_cast<int>(head);
        for (int q : muller.moves[static_cast<std::size_t>(out.origin[head].position)]) {
            const int c = muller.color[static_cast<std::size_t>(q)];
            LarPosition next{q, out.origin[head].record, 0};
            auto it = std::find(next.record.begin(), next.record.end(), c);
            if (it == next.record.end()) {
                next.hit = static_cast<int>(next.record.size()) + 1;
                next.record.insert(next.record.begin(), c);
            } else {
                next.hit = static_cast<int>(it - next.record.begin()) + 1;
                std::rotate(next.record.begin(), it, it + 1);
            }
            const int to = intern(std::move(next));
            out.game.add_move(from, to);
        }
    }
    return out;
}

} // namespace rtg
