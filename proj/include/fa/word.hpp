#ifndef FA_WORD_HPP
#define FA_WORD_HPP

#include <string>
#include <vector>

namespace fa {

/// Index into an alphabet table.  The distinguished value kEpsilon is a
/// transition label only and never a member of any alphabet.
using Symbol = int;
constexpr Symbol kEpsilon = -1;

using Word = std::vector<Symbol>;
using Alphabet = std::vector<std::string>;  // symbol id -> printable name

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

inline Word repeated(const Word& x, int k) {
    Word r;
    r.reserve(x.size() * static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) r.insert(r.end(), x.begin(), x.end());
    return r;
}

/// (length, lexicographic) order used everywhere witnesses are tie-broken.
inline bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

/// Space-separated symbol names; the empty word prints as "ε".
std::string format_word(const Word& w, const Alphabet& alphabet);

/// Inverse of format_word for single-character symbol names ("abab"), or
/// space-separated names.  Throws Error on unknown symbols.
Word parse_word(const std::string& text, const Alphabet& alphabet);

} // namespace fa

#endif
