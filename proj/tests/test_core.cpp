#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "fa/automaton.hpp"
#include "fa/core.hpp"
#include "fa/errors.hpp"
#include "testutil.hpp"

using namespace fa;
using namespace testutil;

namespace {

/// Every word over {0..sigma-1} with length in [0, max_len], shortlex order.
std::vector<Word> all_words(int sigma, int max_len) {
    std::vector<Word> out{{}};
    std::vector<Word> layer{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (Symbol c = 0; c < sigma; ++c) {
                Word v = w;
                v.push_back(c);
                next.push_back(std::move(v));
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

Automaton dfa_ab_star() {
    // (ab)*: 0 init/final, 2 is the sink.
    return Automaton(3, ab(),
                     {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 0}, {2, 0, 2}, {2, 1, 2}},
                     {0}, {0}, Kind::Dfa);
}

Automaton sigma_star(const Alphabet& sigma) {
    std::vector<Transition> trans;
    for (Symbol c = 0; c < static_cast<Symbol>(sigma.size()); ++c) trans.push_back({0, c, 0});
    return Automaton(1, sigma, std::move(trans), {0}, {0}, Kind::Nfa);
}

Automaton empty_language() { return Automaton(1, ab(), {}, {0}, {}, Kind::Nfa); }

/// Finite language over ab() as an acyclic NFA (one branch per word).
Automaton finite_language(const std::vector<Word>& words) {
    std::vector<Transition> trans;
    std::vector<State> finals;
    int next = 1;
    for (const auto& w : words) {
        if (w.empty()) {
            finals.push_back(0);
            continue;
        }
        State cur = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            trans.push_back({cur, w[i], next});
            cur = next++;
        }
        finals.push_back(cur);
    }
    return Automaton(next, ab(), std::move(trans), {0}, std::move(finals), Kind::Nfa);
}

} // namespace

TEST_CASE("text format round trip") {
    std::istringstream in(
        "# sample\n"
        "alphabet: a b c\n"
        "states: 5\n"
        "initial: 0\n"
        "final: 3 4\n"
        "trans: 0 a 1\n"
        "trans: 1 - 2\n"
        "trans: 2 c 3\n"
        "trans: 3 b 4   # comment\n");
    Automaton a = parse_automaton(in);
    CHECK(a.n_states == 5);
    CHECK(a.alphabet == Alphabet{"a", "b", "c"});
    CHECK(a.kind == Kind::NfaEpsilon);
    CHECK(a.has_epsilon());
    CHECK(a.transitions.size() == 4);
    CHECK(accepts(a, W("acb", abc())));

    std::istringstream again(format_automaton(a));
    Automaton b = parse_automaton(again);
    CHECK(b.n_states == a.n_states);
    CHECK(b.transitions == a.transitions);
    CHECK(b.initials == a.initials);
    CHECK(b.finals == a.finals);
    CHECK(b.kind == a.kind);
}

TEST_CASE("parse rejects bad input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_automaton(in);
    };
    CHECK_THROWS_AS(parse("states: 2\ninitial: 0\nfinal: 1\n"), ParseError);  // no alphabet
    CHECK_THROWS_AS(parse("alphabet: a\nstates: 2\ninitial: 0\nfinal: 5\n"), ParseError);
    CHECK_THROWS_AS(parse("alphabet: a\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 z 1\n"),
                    ParseError);
    // kind: dfa with a missing transition (not complete) must be rejected.
    CHECK_THROWS_AS(parse("alphabet: a b\nstates: 1\ninitial: 0\nfinal: 0\n"
                          "trans: 0 a 0\nkind: dfa\n"),
                    ParseError);
}

TEST_CASE("dfa invariants enforced by the constructor") {
    CHECK_NOTHROW(dfa_ab_star());
    // two initial states
    CHECK_THROWS_AS(Automaton(2, ab(), {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}}, {0, 1}, {0},
                              Kind::Dfa),
                    Error);
    // epsilon label under Nfa kind
    CHECK_THROWS_AS(Automaton(2, ab(), {{0, kEpsilon, 1}}, {0}, {1}, Kind::Nfa), Error);
}

TEST_CASE("accepts basics") {
    Automaton d = dfa_ab_star();
    CHECK(accepts(d, W("")));
    CHECK(accepts(d, W("abab")));
    CHECK_FALSE(accepts(d, W("aba")));

    // epsilon-closure acceptance
    Automaton e(3, ab(), {{0, kEpsilon, 1}, {1, 0, 2}}, {0}, {2}, Kind::NfaEpsilon);
    CHECK(accepts(e, W("a")));
    CHECK_FALSE(accepts(e, W("")));
}

TEST_CASE("trim removes useless states and keeps the language") {
    // unreachable final state
    Automaton a(3, ab(), {{0, 0, 1}}, {0}, {1, 2}, Kind::Nfa);
    Automaton t = trim(a);
    CHECK(t.n_states == 2);
    CHECK(accepts(t, W("a")));

    // already trim
    Automaton loop(1, ab(), {{0, 0, 0}}, {0}, {0}, Kind::Nfa);
    CHECK(trim(loop).n_states == 1);

    // no useful states at all
    CHECK(trim(empty_language()).n_states == 0);
}

TEST_CASE("trim preserves membership on random machines") {
    std::mt19937 rng(20260823);
    auto words = all_words(2, 12);
    for (int i = 0; i < 25; ++i) {
        Automaton a = random_nfa(rng, 6, 2);
        Automaton t = trim(a);
        for (const auto& w : words) CHECK(accepts(a, w) == accepts(t, w));
    }
}

TEST_CASE("eliminate_epsilon preserves the language") {
    std::mt19937 rng(7);
    auto words = all_words(2, 8);
    for (int i = 0; i < 20; ++i) {
        Automaton base = random_nfa(rng, 5, 2);
        std::vector<Transition> trans = base.transitions;
        std::uniform_int_distribution<int> st(0, 4);
        for (int j = 0; j < 3; ++j) trans.push_back({st(rng), kEpsilon, st(rng)});
        Automaton e(5, ab(), std::move(trans), base.initials, base.finals, Kind::NfaEpsilon);
        Automaton plain = eliminate_epsilon(e);
        CHECK_FALSE(plain.has_epsilon());
        for (const auto& w : words) CHECK(accepts(e, w) == accepts(plain, w));
    }
}

TEST_CASE("is_empty_check") {
    CHECK_FALSE(is_empty_check(empty_language()).holds());

    Automaton eps_lang(1, ab(), {}, {0}, {0}, Kind::Nfa);
    Verdict v = is_empty_check(eps_lang);
    CHECK(v.holds());
    CHECK(v.witness == Word{});

    // 4-state chain q0 -a-> q1 -b-> q2 -a-> q3(final)
    Automaton chain(4, ab(), {{0, 0, 1}, {1, 1, 2}, {2, 0, 3}}, {0}, {3}, Kind::Nfa);
    Verdict c = is_empty_check(chain);
    CHECK(c.holds());
    CHECK(c.witness == W("aba"));
    CHECK(c.witness->size() < 4);
}

TEST_CASE("nonemptiness witness is shorter than the trimmed state count") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        Automaton a = random_nfa(rng, 5, 2);
        Automaton t = trim(a);
        Verdict v = is_empty_check(a);
        CHECK(v.holds() == (t.n_states > 0));
        if (v.holds()) CHECK(static_cast<int>(v.witness->size()) < t.n_states);
    }
}

TEST_CASE("is_infinite") {
    Automaton astar(1, ab(), {{0, 0, 0}}, {0}, {0}, Kind::Nfa);
    CHECK(is_infinite(astar).holds());

    // epsilon cycle only: both states useful, no labeled cycle edge
    Automaton epscyc(2, ab(), {{0, kEpsilon, 1}, {1, kEpsilon, 0}}, {0}, {0}, Kind::NfaEpsilon);
    CHECK_FALSE(is_infinite(epscyc).holds());

    CHECK_FALSE(is_infinite(finite_language({W("a"), W("ab")})).holds());
}

TEST_CASE("infiniteness matches the length-window characterization") {
    // L infinite iff it has a word of length l, n <= l < 2n, n the trimmed size.
    std::mt19937 rng(123);
    for (int i = 0; i < 150; ++i) {
        Automaton t = trim(random_nfa(rng, 4, 2));
        bool window = false;
        for (int len = t.n_states; len < 2 * t.n_states && !window; ++len)
            window = has_word_of_length(t, len);
        CHECK(is_infinite(t).holds() == window);
    }
}

TEST_CASE("shortest_word order and window") {
    CHECK(shortest_word(finite_language({W("b"), W("ab")})).witness == W("b"));
    CHECK(shortest_word(finite_language({W("ba"), W("ab")})).witness == W("ab"));
    CHECK_FALSE(shortest_word(empty_language()).holds());

    Automaton astar(1, ab(), {{0, 0, 0}}, {0}, {0}, Kind::Nfa);
    CHECK(shortest_word(astar, 3).witness == W("aaa"));
    CHECK_FALSE(shortest_word(finite_language({W("ab")}), 3).holds());
}

TEST_CASE("shortest_word agrees with enumeration on random machines") {
    std::mt19937 rng(5);
    for (int i = 0; i < 60; ++i) {
        Automaton a = random_nfa(rng, 4, 2);
        Verdict v = shortest_word(a);
        auto lang = enumerate_words(a, 0, 8, 100'000);
        if (!lang.empty() && lang.front().size() <= 8) {
            REQUIRE(v.holds());
            CHECK(*v.witness == lang.front());
        }
    }
}

TEST_CASE("product identity and annihilator") {
    Automaton d = dfa_ab_star();
    Automaton all = sigma_star(ab());
    Automaton p = product(d, all);
    for (const auto& w : all_words(2, 8)) CHECK(accepts(p, w) == accepts(d, w));

    Automaton q = product(d, empty_language());
    CHECK_FALSE(is_empty_check(q).holds());

    Automaton over_abc = sigma_star(abc());
    CHECK_THROWS_AS(product(d, over_abc), AlphabetMismatch);
}

TEST_CASE("product is intersection on random pairs") {
    std::mt19937 rng(31);
    auto words = all_words(2, 10);
    for (int i = 0; i < 15; ++i) {
        Automaton a = random_nfa(rng, 4, 2);
        Automaton b = random_nfa(rng, 4, 2);
        Automaton p = product(a, b);
        for (const auto& w : words) CHECK(accepts(p, w) == (accepts(a, w) && accepts(b, w)));
    }
}

TEST_CASE("enumerate_words") {
    Automaton astar(1, {"a"}, {{0, 0, 0}}, {0}, {0}, Kind::Nfa);
    auto got = enumerate_words(astar, 0, 3, 100);
    CHECK(got == std::vector<Word>{{}, {0}, {0, 0}, {0, 0, 0}});

    CHECK(enumerate_words(empty_language(), 0, 5, 100).empty());

    Automaton all = sigma_star(ab());
    CHECK_THROWS_AS(enumerate_words(all, 2, 2, 3), CapExceeded);
}

TEST_CASE("enumeration order is shortlex and complete") {
    std::mt19937 rng(77);
    for (int i = 0; i < 20; ++i) {
        Automaton a = random_nfa(rng, 4, 2);
        auto lang = enumerate_words(a, 0, 7, 100'000);
        CHECK(std::is_sorted(lang.begin(), lang.end(), shortlex_less));
        CHECK(std::adjacent_find(lang.begin(), lang.end()) == lang.end());
        std::vector<Word> expect;
        for (const auto& w : all_words(2, 7))
            if (accepts(a, w)) expect.push_back(w);
        std::sort(expect.begin(), expect.end(), shortlex_less);
        CHECK(lang == expect);
    }
}

TEST_CASE("for_each_word can stop early") {
    Automaton all = sigma_star(ab());
    int seen = 0;
    bool finished = for_each_word(all, 0, 4, [&](const Word&) { return ++seen < 3; });
    CHECK_FALSE(finished);
    CHECK(seen == 3);
}

TEST_CASE("has_word_of_length") {
    Automaton d = dfa_ab_star();
    for (int len = 0; len <= 9; ++len) CHECK(has_word_of_length(d, len) == (len % 2 == 0));
}

TEST_CASE("length_window accepts exactly the window") {
    Automaton w = length_window(ab(), 2, 4);
    for (int len = 0; len <= 6; ++len) {
        Word word(static_cast<size_t>(len), 0);
        CHECK(accepts(w, word) == (2 <= len && len <= 4));
    }
    CHECK(accepts(w, W("abab")));
}
