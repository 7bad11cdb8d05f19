#ifndef FA_BORDERS_HPP
#define FA_BORDERS_HPP

#include <vector>

#include "fa/automaton.hpp"
#include "fa/core.hpp"
#include "fa/powers.hpp"
#include "fa/verdict.hpp"

namespace fa {

/// Triple machine accepting { u : uwu in L for some w }.  State [p, g, r]:
/// p runs the leading u from an initial state, g is the guessed state where
/// the trailing u starts, r runs the trailing u from g.  Finals need r final
/// and g reachable from p (the middle w exists); n^3 + 1 states before
/// trimming.  reach/connector keep the shortest p-to-g words so a concrete
/// uwu witness can be printed.
struct BorderRootAutomaton {
    Automaton inner;
    int source_n;
    std::vector<std::vector<char>> reach;      // reach[p][g]
    std::vector<std::vector<Word>> connector;  // shortest (length, lex) word p -> g
};

/// Throws EpsilonNotSupported.
BorderRootAutomaton build_border_root(const Automaton& a);

/// Does L(a) contain a bordered word?  Witness = uwu with u the shortest
/// nonempty root word; |witness| <= 2n^2 + n - 1.
Verdict accepts_bordered(const Automaton& a);

/// Infinitely many bordered words: either some reachable final triple's
/// p-to-g path can be pumped through a cycle (w grows), or the root language
/// itself is infinite (u grows).
Verdict accepts_infinitely_many_bordered(const Automaton& a);

/// Searches lengths 1..6n+1; that range is decisive.  Inconclusive only when
/// the word budget runs out first.
Verdict accepts_unbordered(const Automaton& a, const Budgets& budgets = {});

/// Searches the decisive window [4n^2+6n+2, 8n^2+18n+5].
Verdict accepts_infinitely_many_unbordered(const Automaton& a, const Budgets& budgets = {});

} // namespace fa

#endif
