#ifndef FA_POWERS_HPP
#define FA_POWERS_HPP

#include "fa/automaton.hpp"
#include "fa/boolmat.hpp"
#include "fa/core.hpp"
#include "fa/verdict.hpp"

namespace fa {

/// Word over a variable alphabet; variable ids are contiguous from 1.
struct Pattern {
    std::vector<int> variables;

    explicit Pattern(std::vector<int> vars);
    int var_count() const;

    /// Space-separated variable indices, e.g. "1 2 1 2".
    static Pattern parse(const std::string& text);
};

/// Default resource ceilings for the construction-heavy operations.
struct Budgets {
    long long states = 2'000'000;    // tuple-machine state ceiling
    long long monoid = 50'000;       // transition-monoid element cap
    long long words = 1'000'000;     // total enumerated words per search
};

/// Machine accepting L(a)^{1/k} = { x : x^k in L(a) }.  States are
/// (2k-1)-tuples [g_1..g_{k-1}, p_0..p_{k-1}]: the g's are guessed section
/// boundaries, the p's run k copies of a in lockstep.  Only reachable tuples
/// are materialized; the full space has n^{2k-1} + 1 states.
struct KthRootAutomaton {
    Automaton inner;
    int k;
    int source_n;
};

/// Throws EpsilonNotSupported; StateBudgetExceeded when n^{2k-1} exceeds
/// budget.states.
KthRootAutomaton build_kth_root(const Automaton& a, int k, const Budgets& budgets = {});

/// Does L(a) contain x^k for some nonempty x?  Witness = x^k for the
/// (length, lex)-least such x; |witness| <= k * n^k.
Verdict accepts_k_power(const Automaton& a, int k, const Budgets& budgets = {});

Verdict accepts_infinitely_many_k_powers(const Automaton& a, int k, const Budgets& budgets = {});

/// Does L(a) contain an l-power for some l >= k?  Equivalent to checking
/// l in [k, k+n).  Uses the transition monoid; falls back to the root
/// machines when the monoid is truncated.
Verdict accepts_ge_k_power(const Automaton& a, int k, const Budgets& budgets = {});

/// Does some non-erasing morphism map p into L(a)?  Inconclusive when the
/// monoid was truncated and no accepting assignment was found.
Verdict pattern_acceptance(const Automaton& a, const Pattern& p, const Budgets& budgets = {});

/// NFA accepting only nonempty non-k-powers and all of them up to length r.
/// A mod-k counter catches lengths not divisible by k; lobes catch a
/// mismatch between section 1 and some section j.  Lobes need two letters;
/// over a unary alphabet the counter alone is already exact.  The empty
/// word is rejected: the power properties disregard it.
Automaton build_non_k_power_acceptor(int r, int k, const Alphabet& alphabet);

/// Is every word of L(a) a k-power?  Checked on lengths up to 3n
/// (3n-3 for a complete DFA over at least two letters); the cut-off is
/// lossless.  When false, witness = shortest non-k-power.
Verdict all_k_powers(const Automaton& a, int k);

/// Are all but finitely many words of L(a) k-powers?  Same test restricted
/// to the length window [n, 3n].
Verdict all_but_finitely_many_k_powers(const Automaton& a, int k);

/// Is every word of L(a) a power?  Enumerates lengths 1..3n with a 7n
/// per-length cap; an overfull length already implies a non-power exists.
Verdict all_powers(const Automaton& a);

Verdict all_but_finitely_many_powers(const Automaton& a);

/// Does L(a) contain a power?  Tries k = 2..n+1; any power in L(a) forces a
/// k-power in that range.
Verdict accepts_power(const Automaton& a, const Budgets& budgets = {});

} // namespace fa

#endif
