#ifndef FA_VERDICT_HPP
#define FA_VERDICT_HPP

#include <optional>
#include <string>

#include "fa/word.hpp"

namespace fa {

/// Decision outcome.  Inconclusive is a first-class value: it is reported as
/// such and never silently collapsed to "no".
enum class Outcome { No, Yes, Inconclusive };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::No: return "no";
        case Outcome::Yes: return "yes";
        default: return "inconclusive";
    }
}

/// Result of a property decision: the verdict, an optional witness word (for
/// universal properties the witness is the counterexample), the length bound
/// the decision rests on, and a short method tag for reports.
struct Verdict {
    Outcome outcome = Outcome::No;
    std::optional<Word> witness;
    std::optional<long long> bound_used;
    std::string method;
    std::string note;  // coverage details, mostly for inconclusive verdicts

    bool holds() const { return outcome == Outcome::Yes; }

    static Verdict yes(std::string method) {
        return Verdict{Outcome::Yes, std::nullopt, std::nullopt, std::move(method), {}};
    }
    static Verdict no(std::string method) {
        return Verdict{Outcome::No, std::nullopt, std::nullopt, std::move(method), {}};
    }
    static Verdict inconclusive(std::string method, std::string note) {
        return Verdict{Outcome::Inconclusive, std::nullopt, std::nullopt, std::move(method),
                       std::move(note)};
    }

    Verdict& with_witness(Word w) {
        witness = std::move(w);
        return *this;
    }
    Verdict& with_bound(long long b) {
        bound_used = b;
        return *this;
    }
};

/// Logical negation for universal/existential duals.  Inconclusive stays
/// inconclusive; the witness (a counterexample on one side, a witness on the
/// other) is kept.
inline Verdict negate(Verdict v, std::string method_suffix = "") {
    if (v.outcome == Outcome::Yes)
        v.outcome = Outcome::No;
    else if (v.outcome == Outcome::No)
        v.outcome = Outcome::Yes;
    if (!method_suffix.empty()) v.method += method_suffix;
    return v;
}

} // namespace fa

#endif
