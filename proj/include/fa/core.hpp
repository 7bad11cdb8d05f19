#ifndef FA_CORE_HPP
#define FA_CORE_HPP

#include <functional>
#include <vector>

#include "fa/automaton.hpp"
#include "fa/verdict.hpp"
#include "fa/word.hpp"

namespace fa {

/// Removes every state that is not both accessible and coaccessible.
/// Surviving states are renumbered in ascending original order; the language
/// is unchanged.  May return a 0-state automaton.
Automaton trim(const Automaton& a);

/// Equivalent epsilon-free NFA on the same state set.
Automaton eliminate_epsilon(const Automaton& a);

/// Subset simulation with epsilon closure.
bool accepts(const Automaton& a, const Word& w);

/// holds=true iff L(a) is nonempty; witness is the (length, lex)-least
/// accepted word, of length < n after trimming.
Verdict is_empty_check(const Automaton& a);

/// holds=true iff L(a) is infinite.  Decided on the trimmed machine by
/// strongly connected components: true iff some non-epsilon transition has
/// both endpoints in one component.
Verdict is_infinite(const Automaton& a);

/// (length, lex)-least accepted word of length >= min_len, or holds=false.
/// The search window [min_len, min_len + n] is complete: a shortest accepted
/// word of length >= min_len is always that short.
Verdict shortest_word(const Automaton& a, int min_len = 0);

/// Accepts L(a) ∩ L(b).  Epsilon moves advance one coordinate alone.
/// Result is trimmed.  Throws AlphabetMismatch.
Automaton product(const Automaton& a, const Automaton& b);

/// All accepted words with min_len <= |w| <= max_len in (length, lex) order.
/// Throws CapExceeded if any single length holds more than cap words.
std::vector<Word> enumerate_words(const Automaton& a, int min_len, int max_len, long long cap);

/// Streams accepted words in (length, lex) order; the callback returns false
/// to stop early.  Returns false iff the callback stopped the walk.
bool for_each_word(const Automaton& a, int min_len, int max_len,
                   const std::function<bool(const Word&)>& fn);

/// True iff some accepted word has exactly this length.
bool has_word_of_length(const Automaton& a, int len);

/// Characteristic vectors over a's states.
std::vector<char> accessible_states(const Automaton& a);
std::vector<char> coaccessible_states(const Automaton& a);

/// State set reached from the initial states on w (epsilon-closed).
std::vector<char> run_states(const Automaton& a, const Word& w);

/// Complete NFA over `alphabet` accepting exactly the words w with
/// lo <= |w| <= hi.  hi + 2 states.
Automaton length_window(const Alphabet& alphabet, int lo, int hi);

} // namespace fa

#endif
