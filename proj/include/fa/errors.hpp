#ifndef FA_ERRORS_HPP
#define FA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fa {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(int line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

struct AlphabetMismatch : Error {
    AlphabetMismatch() : Error("operands have different alphabets") {}
};

struct EpsilonNotSupported : Error {
    EpsilonNotSupported(const std::string& where)
        : Error(where + ": epsilon transitions not supported here (eliminate them first)") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("boolean matrix dimensions differ") {}
};

struct EmptyWord : Error {
    EmptyWord(const std::string& op) : Error(op + ": undefined for the empty word") {}
};

struct NotADfa : Error {
    NotADfa() : Error("operation requires a complete DFA") {}
};

struct UnaryAlphabet : Error {
    UnaryAlphabet(const std::string& op) : Error(op + ": needs an alphabet of at least two letters") {}
};

/// Thrown by enumerate_words when some single length holds more than `cap` words.
struct CapExceeded : Error {
    CapExceeded(int length, long long cap)
        : Error("more than " + std::to_string(cap) + " words of length " + std::to_string(length)),
          length(length), cap(cap) {}
    int length;
    long long cap;
};

struct StateBudgetExceeded : Error {
    StateBudgetExceeded(long long needed, long long budget)
        : Error("construction needs " + std::to_string(needed) + " states, budget is " +
                std::to_string(budget)),
          needed(needed), budget(budget) {}
    long long needed;
    long long budget;
};

struct SearchBudgetExceeded : Error {
    SearchBudgetExceeded(long long cap, int last_complete_length)
        : Error("enumeration budget of " + std::to_string(cap) + " words exhausted; lengths <= " +
                std::to_string(last_complete_length) + " fully covered"),
          cap(cap), last_complete_length(last_complete_length) {}
    long long cap;
    int last_complete_length;
};

} // namespace fa

#endif
