#ifndef FA_AUTOMATON_HPP
#define FA_AUTOMATON_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fa/word.hpp"

namespace fa {

using State = int;

enum class Kind { Nfa, NfaEpsilon, Dfa };

/// One transition edge.  label is a Symbol or kEpsilon.
struct Transition {
    State from;
    Symbol label;
    State to;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Finite automaton M = (Q, Sigma, delta, I, F).  Multiple initial states are
/// allowed; Kind::Dfa additionally requires a single initial state, no epsilon
/// labels and a total transition function (complete DFA).
///
/// Immutable by convention: construct fully, then share freely.
struct Automaton {
    int n_states = 0;
    Alphabet alphabet;
    std::vector<Transition> transitions;  // kept sorted and deduplicated
    std::vector<State> initials;          // sorted
    std::vector<State> finals;            // sorted
    Kind kind = Kind::Nfa;

    Automaton() = default;
    Automaton(int n, Alphabet sigma, std::vector<Transition> trans,
              std::vector<State> init, std::vector<State> fin, Kind k);

    bool is_initial(State q) const;
    bool is_final(State q) const;
    bool has_epsilon() const;

    /// n, t and N = n + t.
    struct SizeMetrics {
        int n;
        int t;
        int N;
    };
    SizeMetrics metrics() const {
        return {n_states, static_cast<int>(transitions.size()),
                n_states + static_cast<int>(transitions.size())};
    }

    /// Per-state adjacency: out[q] lists (label, to) pairs in sorted order.
    std::vector<std::vector<std::pair<Symbol, State>>> out_edges() const;
};

/// Reads the line-oriented text format:
///   alphabet: a b c
///   states: 5
///   initial: 0
///   final: 3 4
///   trans: 0 a 1
///   trans: 1 - 2     # '-' is epsilon
///   kind: dfa        # optional; rejected if DFA invariants fail
/// '#' starts a comment.  Throws ParseError.
Automaton parse_automaton(std::istream& in);
Automaton parse_automaton_file(const std::string& path);

std::string format_automaton(const Automaton& a);

} // namespace fa

#endif
