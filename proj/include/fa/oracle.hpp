#ifndef FA_ORACLE_HPP
#define FA_ORACLE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fa/automaton.hpp"
#include "fa/powers.hpp"
#include "fa/verdict.hpp"

namespace fa {

/// Word-level predicates the brute-force oracle can search for.  The empty
/// word is a palindrome and satisfies nothing else: the power and border
/// properties disregard it throughout.
enum class WordProperty {
    Palindrome,
    NonPalindrome,
    KPower,
    NonKPower,
    GeKPower,
    Power,
    NonPower,
    Bordered,
    Unbordered,
};

const char* to_string(WordProperty p);

bool word_satisfies(WordProperty p, const Word& w, int k);

/// Length ceiling that makes "does L contain a word with this property"
/// decidable by enumeration, for an n-state machine (k where relevant).
long long decision_bound(WordProperty p, long long n, int k);

struct OracleReport {
    std::string predicate;
    int max_len = 0;
    bool holds = false;
    std::optional<Word> witness;
    // True iff max_len covers the decision bound and enumeration finished,
    // so `holds` is a decision rather than a sample.
    bool exhaustive = false;
};

/// Enumerates L(a) up to max_len and reports the first (length, lex) word
/// satisfying p.  Stops early on a hit.  word_cap bounds the total
/// enumeration; exceeding it clears `exhaustive`.
OracleReport oracle_decide(const Automaton& a, WordProperty p, int k, int max_len,
                           long long word_cap = 1'000'000);

/// Exact number of accepted words of each length 0..max_len.
std::vector<std::pair<int, long long>> oracle_count_per_length(const Automaton& a, int max_len);

/// Infiniteness by the length-window characterization: L is infinite iff it
/// has a word of length l with n <= l < 2n, n the trimmed state count.
/// Independent of the component-based is_infinite.
bool oracle_is_infinite(const Automaton& a);

/// Machine accepting { u # w : u nonempty and u w u in L(a) } over the
/// alphabet extended with a separator.  Its language is infinite iff L(a)
/// has infinitely many bordered words, which makes the bordered-infinitude
/// decision checkable through oracle_is_infinite.
Automaton border_pair_machine(const Automaton& a);

/// Exhaustive non-erasing morphisms with images up to max_image_len.
Verdict oracle_pattern(const Automaton& a, const Pattern& p, int max_image_len);

} // namespace fa

#endif
