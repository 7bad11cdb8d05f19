#ifndef FA_WORDOPS_HPP
#define FA_WORDOPS_HPP

#include <optional>

#include "fa/word.hpp"

namespace fa {

/// w = root^exponent with root primitive; is_primitive iff exponent == 1.
struct PrimitivityReport {
    bool is_primitive;
    Word root;
    int exponent;
};

/// A border u of x satisfies x = uwu with u nonempty and |u| <= |x|/2, so the
/// two copies of u are disjoint.
struct BorderReport {
    bool is_bordered;
    std::optional<Word> shortest_border;
};

/// Primitive root and maximal exponent.  Throws EmptyWord on the empty word.
PrimitivityReport primitivity(const Word& w);

/// True iff w = x^k for some nonempty x.  The empty word is not a k-power.
bool is_k_power(const Word& w, int k);

/// True iff w = x^k for some nonempty x and some k >= 2.
bool is_power(const Word& w);

/// Shortest border, if any.  Throws EmptyWord on the empty word.
BorderReport borders(const Word& w);

bool is_palindrome(const Word& w);

} // namespace fa

#endif
