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

#include "rtg/cli.hpp"

#include "rtg/formats.hpp"
#include "rtg/membership.hpp"
#include "rtg/oracles.hpp"
#include "rtg/parallel.hpp"
#include "rtg/random.hpp"
#include "rtg/reductions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace rtg::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

// "Ln:3" -> ("Ln", "3"); "L" -> ("L", "")
std::pair<std::string, std::string> split_name(const std::string& name)
{
    auto colon = name.find(':');
    if (colon == std::string::npos) return {name, ""};
    return {name.substr(0, colon), name.substr(colon + 1)};
}

int positive(const std::string& text, const char* what)
{
    const int n = parse_int(text, what);
    if (n < 1) throw ParseError(std::string(what) + " must be at least 1");
    return n;
}

AnyAutomaton build_named(const std::string& name)
{
    auto [kind, arg] = split_name(name);
    auto no_arg = [&] {
        if (!arg.empty()) throw ParseError("'" + kind + "' takes no argument");
    };
    if (kind == "L") return no_arg(), AnyAutomaton{build_L_buchi()};
    if (kind == "Lminus") return no_arg(), AnyAutomaton{build_Lminus_muller()};
    if (kind == "L1") return no_arg(), AnyAutomaton{build_L1_muller()};
    if (kind == "Ln") return build_Ln_muller(positive(arg, "n"));
    if (kind == "Talpha") return build_Talpha_muller(parse_ordinal(arg));
    if (kind == "altL") return no_arg(), AnyAutomaton{build_alt_L()};
    if (kind == "altLminus") return no_arg(), AnyAutomaton{build_alt_Lminus()};
    if (kind == "altL1") return no_arg(), AnyAutomaton{build_alt_L1()};
    if (kind == "altLn") return build_alt_Ln(positive(arg, "n"));
    throw ParseError("unknown automaton '" + name + "'");
}

bool run_oracle(const std::string& name, const RegularTree& t)
{
    auto [kind, arg] = split_name(name);
    if ((kind == "L" || kind == "Lminus" || kind == "L1") && !arg.empty())
        throw ParseError("'" + kind + "' takes no argument");
    if (kind == "L") return oracle_L(t);
    if (kind == "Lminus") return oracle_Lminus(t);
    if (kind == "L1") return oracle_L1(t);
    if (kind == "Ln") return oracle_Ln(t, positive(arg, "n"));
    if (kind == "Talpha") return oracle_Talpha(t, parse_ordinal(arg));
    throw ParseError("unknown oracle '" + name + "'");
}

bool member_any(const AnyAutomaton& a, const RegularTree& t)
{
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AlternatingParityAutomaton>)
                return member_alternating(x, t);
            else
                return member_nondet(x, t);
        },
        a);
}

void print_list(std::ostream& out, const char* title, const std::vector<int>& xs)
{
    out << title << ':';
    for (int x : xs) out << ' ' << x;
    out << '\n';
}

void print_strategy(std::ostream& out, const char* title, const Strategy& s)
{
    out << title << ':';
    for (std::size_t p = 0; p < s.choice.size(); ++p)
        if (s.choice[p] != kNoMove) out << ' ' << p << "->" << s.choice[p];
    out << '\n';
}

int verdict(std::ostream& out, bool yes)
{
    out << (yes ? "member" : "non-member") << '\n';
    return yes ? kExitYes : kExitNo;
}

// ---- fuzz -----------------------------------------------------------------

std::uint64_t mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct FuzzSuite {
    std::string name;
    // Checks one case; writes the serialized inputs to `report` when given.
    std::function<bool(std::uint64_t seed, std::string* report)> check;
};

std::vector<FuzzSuite> fuzz_suites(int max_nodes)
{
    const auto bin = Alphabet::binary();
    // Odd seeds draw a spine fixture of the given width instead of a plain
    // random tree, whose least spine ordinal is almost always 0.
    auto tree_case = [bin, max_nodes](int width, std::function<bool(const RegularTree&)> agree) {
        return [bin, max_nodes, width, agree](std::uint64_t seed, std::string* report) {
            const auto t = (seed & 1) ? random_spine_fixture(seed, width, 3, max_nodes)
                                      : random_tree(seed, max_nodes, bin);
            if (report) *report = serialize(t);
            return agree(t);
        };
    };

    // Built once, shared read-only by all cases.
    auto L = std::make_shared<BuchiTreeAutomaton>(build_L_buchi());
    auto Lminus = std::make_shared<MullerTreeAutomaton>(build_Lminus_muller());
    auto L1 = std::make_shared<MullerTreeAutomaton>(build_L1_muller());
    auto L2 = std::make_shared<MullerTreeAutomaton>(build_Ln_muller(2));
    auto altL1 = std::make_shared<AlternatingParityAutomaton>(build_alt_L1());
    auto altL2 = std::make_shared<AlternatingParityAutomaton>(build_alt_Ln(2));
    const CnfOrdinal omega_plus_1({1, 1});
    auto T = std::make_shared<MullerTreeAutomaton>(build_Talpha_muller(omega_plus_1));

    std::vector<FuzzSuite> suites;
    suites.push_back({"L", tree_case(1, [L](const RegularTree& t) { return member_nondet(*L, t) == oracle_L(t); })});
    suites.push_back(
        {"Lminus", tree_case(1, [Lminus](const RegularTree& t) { return member_nondet(*Lminus, t) == oracle_Lminus(t); })});
    suites.push_back({"L1", tree_case(1, [L1, altL1](const RegularTree& t) {
                          const bool want = oracle_L1(t);
                          return member_nondet(*L1, t) == want && member_alternating(*altL1, t) == want;
                      })});
    suites.push_back({"L2", tree_case(2, [L2, altL2](const RegularTree& t) {
                          const bool want = oracle_Ln(t, 2);
                          return member_nondet(*L2, t) == want && member_alternating(*altL2, t) == want;
                      })});
    suites.push_back({"Talpha", tree_case(2, [T, omega_plus_1](const RegularTree& t) {
                          return member_nondet(*T, t) == oracle_Talpha(t, omega_plus_1);
                      })});
    suites.push_back({"reduce", tree_case(1, [altL1](const RegularTree& t) {
                          return member_alternating(*altL1, t) ==
                                 member_W(index_of(*altL1), reduce_alt_to_W(*altL1, t));
                      })});
    suites.push_back({"dualize", [max_nodes](std::uint64_t seed, std::string* report) {
                          const MRIndex idx{0, 2};
                          const auto t = random_tree(seed, max_nodes, game_alphabet(idx));
                          if (report) *report = serialize(t);
                          return member_W(idx, t) != member_W(dual_index(idx), dualize_game_tree(idx, t));
                      }});
    suites.push_back({"solve", [](std::uint64_t seed, std::string* report) {
                          const auto g = random_parity_game(seed, 7, 4);
                          if (report) *report = serialize(g);
                          const auto z = solve_zielonka(g);
                          if (z.winner != solve_bruteforce(g)) return false;
                          return verify_strategy(g, Player::Eve, z.eve_strategy, z.eve_region).ok &&
                                 verify_strategy(g, Player::Adam, z.adam_strategy, z.adam_region).ok;
                      }});
    suites.push_back({"wadge", [max_nodes](std::uint64_t seed, std::string* report) {
                          const auto fam = random_family(seed, 3, max_nodes);
                          if (report) {
                              std::string text;
                              for (std::size_t k = 0; k < fam.prefix.size(); ++k)
                                  text += "# g" + std::to_string(k) + "\n" + serialize(fam.prefix[k]);
                              *report = text + "# tail\n" + serialize(*fam.tail);
                          }
                          bool want = false;
                          for (std::size_t k = 0; k <= fam.prefix.size(); ++k) {
                              if (oracle_L(fam.at(k))) {
                                  want = k % 2 == 1;
                                  break;
                              }
                          }
                          return oracle_L1(wadge_F(fam)) == want;
                      }});
    return suites;
}

int run_fuzz(std::uint64_t seed, std::int64_t count, int max_nodes, bool serial, std::ostream& out)
{
    int status = kExitYes;
    const auto suites = fuzz_suites(max_nodes);
    for (std::size_t s = 0; s < suites.size(); ++s) {
        const auto& suite = suites[s];
        auto case_seed = [&](std::int64_t i) { return mix(seed ^ mix((s << 32) ^ static_cast<std::uint64_t>(i))); };
        auto check = [&](std::int64_t i) { return suite.check(case_seed(i), nullptr); };
        const auto bad = serial ? first_failure_serial(count, check) : first_failure_parallel(count, check);
        if (bad < 0) {
            out << suite.name << ": " << count << " cases agree\n";
            continue;
        }
        status = kExitFuzzFailure;
        out << suite.name << ": counterexample at case " << bad << '\n';
        std::string report;
        try {
            suite.check(case_seed(bad), &report);
        } catch (const std::exception& e) {
            out << "# exception: " << e.what() << '\n';
        }
        out << report;
    }
    return status;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Automata and games on regular infinite binary trees", "rtg"};
    app.require_subcommand(1, 1);

    std::string game_file, automaton_file, tree_file, index_text, name;
    std::uint64_t seed = 1;
    std::int64_t count = 100;
    int max_nodes = 6;
    bool serial = false;

    auto* solve = app.add_subcommand("solve", "Solve a parity game (exit 0 Eve wins, 10 Adam wins)");
    solve->add_option("game", game_file, "Parity game file")->required();

    auto* member = app.add_subcommand("member", "Tree membership in an automaton's language");
    member->add_option("--automaton", automaton_file, "Automaton file")->required();
    member->add_option("--tree", tree_file, "Tree file")->required();

    auto* member_w = app.add_subcommand("member-w", "Game tree membership in W_(i,k)");
    member_w->add_option("--index", index_text, "Index as i,k")->required();
    member_w->add_option("--tree", tree_file, "Tree file")->required();

    auto* build = app.add_subcommand("build", "Write a built-in automaton");
    build->add_option("name", name, "L | Lminus | L1 | Ln:<n> | Talpha:<digits> | altL | altLminus | altL1 | altLn:<n>")
        ->required();

    auto* reduce = app.add_subcommand("reduce", "Reduce an alternating automaton and a tree to a game tree");
    reduce->add_option("--automaton", automaton_file, "Alternating automaton file")->required();
    reduce->add_option("--tree", tree_file, "Tree file")->required();

    auto* dualize = app.add_subcommand("dualize", "Dualize a game tree");
    dualize->add_option("--index", index_text, "Index as i,k")->required();
    dualize->add_option("--tree", tree_file, "Tree file")->required();

    auto* oracle = app.add_subcommand("oracle", "Decide L, Lminus, L1, Ln:<n> or Talpha:<digits> directly");
    oracle->add_option("name", name, "Language")->required();
    oracle->add_option("--tree", tree_file, "Tree file")->required();

    auto* fuzz = app.add_subcommand("fuzz", "Check constructions against oracles on random inputs");
    fuzz->add_option("--seed", seed, "Seed");
    fuzz->add_option("--count", count, "Cases per suite")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--max-nodes", max_nodes, "Maximum tree size")->check(CLI::PositiveNumber);
    fuzz->add_flag("--serial", serial, "Run cases on one thread");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*solve) {
            const auto g = parse_parity_game(read_file(game_file));
            const auto s = solve_zielonka(g);
            const Player w = s.winner_at(g.initial);
            out << "winner: " << (w == Player::Eve ? "Eve" : "Adam") << '\n';
            print_list(out, "eve-region", s.eve_region);
            print_list(out, "adam-region", s.adam_region);
            print_strategy(out, "eve-strategy", s.eve_strategy);
            print_strategy(out, "adam-strategy", s.adam_strategy);
            return w == Player::Eve ? kExitYes : kExitNo;
        }
        if (*member) {
            const auto a = parse_automaton(read_file(automaton_file));
            return verdict(out, member_any(a, parse_tree(read_file(tree_file))));
        }
        if (*member_w) return verdict(out, member_W(parse_index(index_text), parse_tree(read_file(tree_file))));
        if (*build) {
            out << serialize(build_named(name));
            return kExitYes;
        }
        if (*reduce) {
            const auto a = parse_automaton(read_file(automaton_file));
            const auto* alt = std::get_if<AlternatingParityAutomaton>(&a);
            if (!alt) throw Error("reduce needs an alternating automaton ('alt' file)");
            out << serialize(reduce_alt_to_W(*alt, parse_tree(read_file(tree_file))));
            return kExitYes;
        }
        if (*dualize) {
            out << serialize(dualize_game_tree(parse_index(index_text), parse_tree(read_file(tree_file))));
            return kExitYes;
        }
        if (*oracle) {
            const auto t = parse_tree(read_file(tree_file));
            return verdict(out, run_oracle(name, t));
        }
        return run_fuzz(seed, count, max_nodes, serial, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace rtg::cli
