#ifndef FA_PALINDROMES_HPP
#define FA_PALINDROMES_HPP

#include <map>

#include "fa/automaton.hpp"
#include "fa/core.hpp"
#include "fa/verdict.hpp"

namespace fa {

/// Pair machine accepting { x : x x^R in L or x c x^R in L for some c }.
/// State [p, q] means: p is reachable from an initial state on x, and some
/// final state is reachable from q on x^R.  A fresh initial state feeds
/// [q0, f] pairs by epsilon moves; n^2 + 1 states before trimming.
///
/// Finals split by how the two runs meet: diagonal ([p, p], even palindrome
/// x x^R) or bridged ([p, q] with q in delta(p, c), odd palindrome x c x^R).
/// The bridge symbol is kept so witnesses can be reconstructed exactly.
struct PalRootAutomaton {
    Automaton inner;
    int source_n;
    std::vector<State> diagonal_finals;
    std::map<State, Symbol> bridge;  // bridged final -> smallest bridge symbol
};

/// Throws EpsilonNotSupported.
PalRootAutomaton build_pal_root(const Automaton& a);

/// Does L(a) contain a palindrome?  Witness is the (length, lex)-least one,
/// of length <= 2n^2 - 1.
Verdict accepts_palindrome(const Automaton& a);

Verdict accepts_infinitely_many_palindromes(const Automaton& a);

/// NFA accepting only non-palindromes, and all of them below length s.
/// Guesses a mismatch position i <= (s-1)/2 from both ends.
/// Throws UnaryAlphabet when fewer than two letters exist.
Automaton build_nonpal_acceptor(int s, const Alphabet& alphabet);

/// Is every word of L(a) a palindrome?  Checked by intersecting with the
/// non-palindrome acceptor at bound 3n (3n-3 for a complete DFA over at
/// least two letters).  When false, witness = shortest non-palindrome.
Verdict is_palindromic(const Automaton& a);

/// Pair machine with a mismatch flag: accepts x iff L contains a
/// non-palindrome of length 2|x| or 2|x|+1 whose first half is x.  Its
/// language is infinite iff L has infinitely many non-palindromes.
/// 2n^2 + 1 states.  Throws EpsilonNotSupported.
Automaton build_nonpal_root(const Automaton& a);

Verdict accepts_infinitely_many_nonpalindromes(const Automaton& a);

/// True iff some accessible state of the DFA cannot reach a final state.
/// Throws NotADfa.
bool has_dead_state(const Automaton& a);

} // namespace fa

#endif
