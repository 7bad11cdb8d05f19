#include "fa/borders.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "fa/errors.hpp"
#include "fa/wordops.hpp"

namespace fa {

namespace {

Automaton normalized(const Automaton& a) { return trim(eliminate_epsilon(a)); }

} // namespace

BorderRootAutomaton build_border_root(const Automaton& a) {
    if (a.has_epsilon()) throw EpsilonNotSupported("build_border_root");
    const int n = a.n_states;
    const int sigma = static_cast<int>(a.alphabet.size());
    auto triple_id = [n](State p, State g, State r) { return 1 + (p * n + g) * n + r; };

    BorderRootAutomaton root;
    root.source_n = n;

    // Shortest (length, lex) connecting word for every state pair: one BFS
    // per source, expanding symbols in ascending order.
    root.reach.assign(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
    root.connector.assign(static_cast<size_t>(n), std::vector<Word>(static_cast<size_t>(n)));
    std::vector<std::vector<std::vector<State>>> fwd(
        static_cast<size_t>(n), std::vector<std::vector<State>>(static_cast<size_t>(sigma)));
    for (const auto& t : a.transitions)
        fwd[static_cast<size_t>(t.from)][static_cast<size_t>(t.label)].push_back(t.to);
    for (State src = 0; src < n; ++src) {
        std::queue<State> work;
        root.reach[static_cast<size_t>(src)][static_cast<size_t>(src)] = 1;
        work.push(src);
        while (!work.empty()) {
            State q = work.front();
            work.pop();
            for (Symbol c = 0; c < sigma; ++c)
                for (State to : fwd[static_cast<size_t>(q)][static_cast<size_t>(c)]) {
                    if (root.reach[static_cast<size_t>(src)][static_cast<size_t>(to)]) continue;
                    root.reach[static_cast<size_t>(src)][static_cast<size_t>(to)] = 1;
                    Word w = root.connector[static_cast<size_t>(src)][static_cast<size_t>(q)];
                    w.push_back(c);
                    root.connector[static_cast<size_t>(src)][static_cast<size_t>(to)] = std::move(w);
                    work.push(to);
                }
        }
    }

    std::vector<Transition> trans;
    for (State q0 : a.initials)
        for (State g = 0; g < n; ++g) trans.push_back({0, kEpsilon, triple_id(q0, g, g)});
    for (State g = 0; g < n; ++g)
        for (Symbol c = 0; c < sigma; ++c)
            for (State p = 0; p < n; ++p)
                for (State pn : fwd[static_cast<size_t>(p)][static_cast<size_t>(c)])
                    for (State r = 0; r < n; ++r)
                        for (State rn : fwd[static_cast<size_t>(r)][static_cast<size_t>(c)])
                            trans.push_back({triple_id(p, g, r), c, triple_id(pn, g, rn)});

    std::vector<State> finals;
    for (State p = 0; p < n; ++p)
        for (State g = 0; g < n; ++g) {
            if (!root.reach[static_cast<size_t>(p)][static_cast<size_t>(g)]) continue;
            for (State r : a.finals) finals.push_back(triple_id(p, g, r));
        }
    root.inner = Automaton(n * n * n + 1, a.alphabet, std::move(trans), {0}, std::move(finals),
                           Kind::NfaEpsilon);
    return root;
}

Verdict accepts_bordered(const Automaton& a) {
    Automaton b = normalized(a);
    const long long n = b.n_states;
    const long long bound = n == 0 ? 0 : 2 * n * n + n - 1;
    if (n == 0) return Verdict::no("border-root").with_bound(bound);
    BorderRootAutomaton root = build_border_root(b);
    Verdict sw = shortest_word(root.inner, 1);
    if (!sw.holds()) return Verdict::no("border-root").with_bound(bound);
    const Word& u = *sw.witness;
    auto reached = run_states(root.inner, u);
    auto triple_of = [&](State id) {
        int code = id - 1;
        State r = code % b.n_states;
        State g = (code / b.n_states) % b.n_states;
        State p = code / (b.n_states * b.n_states);
        return std::array<State, 3>{p, g, r};
    };
    const Word* best_w = nullptr;
    for (State f : root.inner.finals) {
        if (!reached[static_cast<size_t>(f)]) continue;
        auto [p, g, r] = triple_of(f);
        const Word& w = root.connector[static_cast<size_t>(p)][static_cast<size_t>(g)];
        if (!best_w || shortlex_less(w, *best_w)) best_w = &w;
    }
    Word witness = u;
    witness.insert(witness.end(), best_w->begin(), best_w->end());
    witness.insert(witness.end(), u.begin(), u.end());
    return Verdict::yes("border-root").with_witness(std::move(witness)).with_bound(bound);
}

Verdict accepts_infinitely_many_bordered(const Automaton& a) {
    Automaton b = normalized(a);
    const int n = b.n_states;
    if (n == 0) return Verdict::no("border-root-infiniteness");
    BorderRootAutomaton root = build_border_root(b);

    // States of the source lying on a nonempty cycle: members of any
    // strongly connected component with an internal edge.
    std::vector<int> comp_of;
    {
        // Kosaraju-free shortcut: reuse reach to detect mutual reachability.
        comp_of.assign(static_cast<size_t>(n), -1);
        int next = 0;
        for (State p = 0; p < n; ++p) {
            if (comp_of[static_cast<size_t>(p)] >= 0) continue;
            comp_of[static_cast<size_t>(p)] = next;
            for (State q = p + 1; q < n; ++q)
                if (root.reach[static_cast<size_t>(p)][static_cast<size_t>(q)] &&
                    root.reach[static_cast<size_t>(q)][static_cast<size_t>(p)] &&
                    comp_of[static_cast<size_t>(q)] < 0)
                    comp_of[static_cast<size_t>(q)] = next;
            ++next;
        }
    }
    std::vector<char> on_cycle(static_cast<size_t>(n), 0);
    for (const auto& t : b.transitions)
        if (comp_of[static_cast<size_t>(t.from)] == comp_of[static_cast<size_t>(t.to)]) {
            // Mark the whole component: every member lies on some cycle.
            for (State q = 0; q < n; ++q)
                if (comp_of[static_cast<size_t>(q)] == comp_of[static_cast<size_t>(t.from)])
                    on_cycle[static_cast<size_t>(q)] = 1;
        }

    // Case (a): a final triple reachable on a nonempty u whose p-to-g
    // connection can pass through a cycle, so w pumps.
    // Reachability on nonempty u: start from the one-symbol successors of
    // the seed triples.
    {
        std::vector<char> seen(static_cast<size_t>(root.inner.n_states), 0);
        auto out = root.inner.out_edges();
        std::queue<State> work;
        for (auto [label, seed] : out[0])
            for (auto [label2, to] : out[static_cast<size_t>(seed)])
                if (label2 != kEpsilon && !seen[static_cast<size_t>(to)]) {
                    seen[static_cast<size_t>(to)] = 1;
                    work.push(to);
                }
        while (!work.empty()) {
            State q = work.front();
            work.pop();
            for (auto [label, to] : out[static_cast<size_t>(q)])
                if (!seen[static_cast<size_t>(to)]) {
                    seen[static_cast<size_t>(to)] = 1;
                    work.push(to);
                }
        }
        for (State f : root.inner.finals) {
            if (!seen[static_cast<size_t>(f)]) continue;
            int code = f - 1;
            State g = (code / n) % n;
            State p = code / (n * n);
            for (State v = 0; v < n; ++v)
                if (on_cycle[static_cast<size_t>(v)] &&
                    root.reach[static_cast<size_t>(p)][static_cast<size_t>(v)] &&
                    root.reach[static_cast<size_t>(v)][static_cast<size_t>(g)]) {
                    Verdict v2 = Verdict::yes("border-root-infiniteness");
                    v2.note = "pumped connection";
                    return v2;
                }
        }
    }
    // Case (b): the root language itself is infinite, so u grows.
    Verdict v = is_infinite(root.inner);
    v.method = "border-root-infiniteness";
    if (v.holds()) v.note = "infinite root language";
    return v;
}

namespace {

Verdict scan_for_unbordered(const Automaton& b, int lo, int hi, long long word_cap,
                            const std::string& method) {
    std::optional<Word> found;
    long long total = 0;
    int last_complete = lo - 1;
    int cur_len = lo - 1;
    bool budget_hit = false;
    for_each_word(b, lo, hi, [&](const Word& w) {
        int len = static_cast<int>(w.size());
        if (len != cur_len) {
            last_complete = len - 1;
            cur_len = len;
        }
        if (++total > word_cap) {
            budget_hit = true;
            return false;
        }
        if (!borders(w).is_bordered) {
            found = w;
            return false;
        }
        return true;
    });
    if (found) {
        Verdict v = Verdict::yes(method).with_bound(hi);
        return v.with_witness(std::move(*found));
    }
    if (budget_hit)
        return Verdict::inconclusive(
            method, "word budget of " + std::to_string(word_cap) + " exhausted; lengths up to " +
                        std::to_string(last_complete) + " fully covered");
    return Verdict::no(method).with_bound(hi);
}

} // namespace

Verdict accepts_unbordered(const Automaton& a, const Budgets& budgets) {
    Automaton b = normalized(a);
    const int n = b.n_states;
    if (n == 0) return Verdict::no("bounded-enumeration");
    return scan_for_unbordered(b, 1, 6 * n + 1, budgets.words, "bounded-enumeration");
}

Verdict accepts_infinitely_many_unbordered(const Automaton& a, const Budgets& budgets) {
    Automaton b = normalized(a);
    const int n = b.n_states;
    if (n == 0) return Verdict::no("window-enumeration");
    const int lo = 4 * n * n + 6 * n + 2;
    const int hi = 8 * n * n + 18 * n + 5;
    return scan_for_unbordered(b, lo, hi, budgets.words, "window-enumeration");
}

} // namespace fa
