#include "fa/palindromes.hpp"

#include <algorithm>

#include "fa/errors.hpp"

namespace fa {

namespace {

/// fwd[p][c] and rev[q][c] successor/predecessor lists of an eps-free NFA.
struct EdgeIndex {
    std::vector<std::vector<std::vector<State>>> fwd, rev;
    explicit EdgeIndex(const Automaton& a) {
        const size_t n = static_cast<size_t>(a.n_states);
        const size_t sigma = a.alphabet.size();
        fwd.assign(n, std::vector<std::vector<State>>(sigma));
        rev.assign(n, std::vector<std::vector<State>>(sigma));
        for (const auto& t : a.transitions) {
            fwd[static_cast<size_t>(t.from)][static_cast<size_t>(t.label)].push_back(t.to);
            rev[static_cast<size_t>(t.to)][static_cast<size_t>(t.label)].push_back(t.from);
        }
    }
};

Automaton normalized(const Automaton& a) { return trim(eliminate_epsilon(a)); }

bool unary(const Automaton& a) { return a.alphabet.size() < 2; }

} // namespace

PalRootAutomaton build_pal_root(const Automaton& a) {
    if (a.has_epsilon()) throw EpsilonNotSupported("build_pal_root");
    const int n = a.n_states;
    const int sigma = static_cast<int>(a.alphabet.size());
    auto pair_id = [n](State p, State q) { return 1 + p * n + q; };
    EdgeIndex idx(a);

    std::vector<Transition> trans;
    for (State q0 : a.initials)
        for (State f : a.finals) trans.push_back({0, kEpsilon, pair_id(q0, f)});
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            for (Symbol c = 0; c < sigma; ++c)
                for (State r : idx.fwd[static_cast<size_t>(p)][static_cast<size_t>(c)])
                    for (State s : idx.rev[static_cast<size_t>(q)][static_cast<size_t>(c)])
                        trans.push_back({pair_id(p, q), c, pair_id(r, s)});

    PalRootAutomaton root;
    root.source_n = n;
    std::vector<State> finals;
    for (State p = 0; p < n; ++p) {
        root.diagonal_finals.push_back(pair_id(p, p));
        finals.push_back(pair_id(p, p));
    }
    for (State p = 0; p < n; ++p)
        for (Symbol c = 0; c < sigma; ++c)
            for (State q : idx.fwd[static_cast<size_t>(p)][static_cast<size_t>(c)])
                if (auto [it, fresh] = root.bridge.emplace(pair_id(p, q), c); fresh)
                    finals.push_back(pair_id(p, q));
                else
                    it->second = std::min(it->second, c);
    root.inner = Automaton(n * n + 1, a.alphabet, std::move(trans), {0}, std::move(finals),
                           Kind::NfaEpsilon);
    return root;
}

namespace {

Automaton with_finals(const Automaton& a, std::vector<State> finals) {
    return Automaton(a.n_states, a.alphabet, a.transitions, a.initials, std::move(finals), a.kind);
}

} // namespace

Verdict accepts_palindrome(const Automaton& a) {
    Automaton b = normalized(a);
    const long long n = b.n_states;
    const long long bound = n == 0 ? 0 : 2 * n * n - 1;
    if (b.n_states == 0) return Verdict::no("palindrome-root").with_bound(bound);
    if (unary(b)) {
        Verdict v = shortest_word(b);
        v.method = "unary-shortest-word";
        return v.with_bound(bound);
    }
    PalRootAutomaton root = build_pal_root(b);

    std::vector<State> bridged;
    for (const auto& [q, c] : root.bridge) bridged.push_back(q);
    Verdict even = shortest_word(with_finals(root.inner, root.diagonal_finals));
    Verdict odd = shortest_word(with_finals(root.inner, bridged));

    std::optional<Word> best;
    if (even.holds()) {
        const Word& x = *even.witness;
        best = concat(x, reversed(x));
    }
    if (odd.holds()) {
        const Word& x = *odd.witness;
        auto reached = run_states(root.inner, x);
        Symbol c = -1;
        for (const auto& [q, sym] : root.bridge)
            if (reached[static_cast<size_t>(q)] && (c < 0 || sym < c)) c = sym;
        Word w = x;
        w.push_back(c);
        w.insert(w.end(), x.rbegin(), x.rend());
        if (!best || shortlex_less(w, *best)) best = std::move(w);
    }
    if (!best) return Verdict::no("palindrome-root").with_bound(bound);
    return Verdict::yes("palindrome-root").with_witness(std::move(*best)).with_bound(bound);
}

Verdict accepts_infinitely_many_palindromes(const Automaton& a) {
    Automaton b = normalized(a);
    if (unary(b)) {
        Verdict v = is_infinite(b);
        v.method = "unary-infiniteness";
        return v;
    }
    Verdict v = is_infinite(build_pal_root(b).inner);
    v.method = "palindrome-root-infiniteness";
    return v;
}

Automaton build_nonpal_acceptor(int s, const Alphabet& alphabet) {
    if (alphabet.size() < 2) throw UnaryAlphabet("build_nonpal_acceptor");
    if (s < 2) throw Error("build_nonpal_acceptor: s must be at least 2");
    const int sigma = static_cast<int>(alphabet.size());
    // Mismatch position i (1-based, from both ends) ranges over 1..I; any
    // non-palindrome shorter than s has one there.
    const int big_i = (s - 1) / 2;
    if (big_i == 0) return Automaton(0, alphabet, {}, {}, {}, Kind::Nfa);

    // Layout: prefix chain p_0..p_{I-1}, middles m_{i,c}, suffix chain
    // t_0..t_{I-1} with t_j = "j symbols remain", t_0 final.
    auto p_id = [](int j) { return j; };
    auto m_id = [&](int i, Symbol c) { return big_i + (i - 1) * sigma + c; };
    auto t_id = [&](int j) { return big_i + big_i * sigma + j; };
    const int n = big_i * (sigma + 2);

    std::vector<Transition> trans;
    for (int j = 0; j + 1 < big_i; ++j)
        for (Symbol c = 0; c < sigma; ++c) trans.push_back({p_id(j), c, p_id(j + 1)});
    for (int i = 1; i <= big_i; ++i)
        for (Symbol c = 0; c < sigma; ++c) {
            trans.push_back({p_id(i - 1), c, m_id(i, c)});
            for (Symbol d = 0; d < sigma; ++d) {
                trans.push_back({m_id(i, c), d, m_id(i, c)});
                if (d != c) trans.push_back({m_id(i, c), d, t_id(i - 1)});
            }
        }
    for (int j = 1; j < big_i; ++j)
        for (Symbol c = 0; c < sigma; ++c) trans.push_back({t_id(j), c, t_id(j - 1)});
    return Automaton(n, alphabet, std::move(trans), {p_id(0)}, {t_id(0)}, Kind::Nfa);
}

Verdict is_palindromic(const Automaton& a) {
    if (unary(a)) return Verdict::yes("unary").with_bound(0);
    long long s;
    Automaton b = normalized(a);
    if (b.n_states == 0) return Verdict::yes("nonpalindrome-product").with_bound(0);
    std::string method;
    if (a.kind == Kind::Dfa && a.n_states >= 2) {
        s = 3LL * a.n_states - 3;
        method = "nonpalindrome-product-dfa";
    } else {
        s = 3LL * b.n_states;
        method = "nonpalindrome-product";
    }
    Automaton prod = product(b, build_nonpal_acceptor(static_cast<int>(s), a.alphabet));
    Verdict sw = shortest_word(prod);
    if (!sw.holds()) return Verdict::yes(method).with_bound(s - 1);
    Verdict v = Verdict::no(method).with_bound(s - 1);
    v.witness = std::move(sw.witness);
    return v;
}

Automaton build_nonpal_root(const Automaton& b) {
    if (b.has_epsilon()) throw EpsilonNotSupported("build_nonpal_root");
    const int n = b.n_states;
    const int sigma = static_cast<int>(b.alphabet.size());
    EdgeIndex idx(b);
    // [p, q, flag]: p forward on x, q backward on the matching tail z; flag
    // records a mismatch between x and z^R seen so far.
    auto id = [n](State p, State q, int flag) { return 1 + (p * n + q) * 2 + flag; };

    std::vector<Transition> trans;
    for (State q0 : b.initials)
        for (State f : b.finals) trans.push_back({0, kEpsilon, id(q0, f, 0)});
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q)
            for (Symbol c = 0; c < sigma; ++c)
                for (State r : idx.fwd[static_cast<size_t>(p)][static_cast<size_t>(c)])
                    for (Symbol d = 0; d < sigma; ++d)
                        for (State s : idx.rev[static_cast<size_t>(q)][static_cast<size_t>(d)]) {
                            int mism = (c != d) ? 1 : 0;
                            for (int f = 0; f < 2; ++f)
                                trans.push_back({id(p, q, f), c, id(r, s, f | mism)});
                        }
    std::vector<State> finals;
    for (State p = 0; p < n; ++p) finals.push_back(id(p, p, 1));
    for (State p = 0; p < n; ++p)
        for (Symbol c = 0; c < sigma; ++c)
            for (State q : idx.fwd[static_cast<size_t>(p)][static_cast<size_t>(c)])
                finals.push_back(id(p, q, 1));
    return Automaton(1 + 2 * n * n, b.alphabet, std::move(trans), {0}, std::move(finals),
                     Kind::NfaEpsilon);
}

Verdict accepts_infinitely_many_nonpalindromes(const Automaton& a) {
    if (unary(a)) return Verdict::no("unary");
    Automaton b = normalized(a);
    if (b.n_states == 0) return Verdict::no("flagged-pair-infiniteness");
    Verdict v = is_infinite(build_nonpal_root(b));
    v.method = "flagged-pair-infiniteness";
    return v;
}

bool has_dead_state(const Automaton& a) {
    if (a.kind != Kind::Dfa) throw NotADfa();
    auto acc = accessible_states(a);
    auto coacc = coaccessible_states(a);
    for (State q = 0; q < a.n_states; ++q)
        if (acc[static_cast<size_t>(q)] && !coacc[static_cast<size_t>(q)]) return true;
    return false;
}

} // namespace fa
