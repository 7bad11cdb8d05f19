#include "fa/wordops.hpp"

#include <algorithm>

#include "fa/errors.hpp"

namespace fa {

namespace {

std::vector<int> failure_function(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> fail(static_cast<size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        int k = fail[static_cast<size_t>(i - 1)];
        while (k > 0 && w[static_cast<size_t>(i)] != w[static_cast<size_t>(k)])
            k = fail[static_cast<size_t>(k - 1)];
        if (w[static_cast<size_t>(i)] == w[static_cast<size_t>(k)]) ++k;
        fail[static_cast<size_t>(i)] = k;
    }
    return fail;
}

/// Leftmost match of pattern in text, or -1.
int kmp_find(const Word& pattern, const Word& text) {
    auto fail = failure_function(pattern);
    int k = 0;
    const int m = static_cast<int>(pattern.size());
    for (int i = 0; i < static_cast<int>(text.size()); ++i) {
        while (k > 0 && text[static_cast<size_t>(i)] != pattern[static_cast<size_t>(k)])
            k = fail[static_cast<size_t>(k - 1)];
        if (text[static_cast<size_t>(i)] == pattern[static_cast<size_t>(k)]) ++k;
        if (k == m) return i - m + 1;
    }
    return -1;
}

} // namespace

PrimitivityReport primitivity(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) throw EmptyWord("primitivity");
    if (n == 1) return {true, w, 1};
    // w is a power iff it occurs inside ww with both endpoints trimmed; the
    // leftmost occurrence at shift d gives the maximal exponent n/d.
    Word text(w.begin() + 1, w.end());
    text.insert(text.end(), w.begin(), w.end() - 1);
    int pos = kmp_find(w, text);
    if (pos < 0) return {true, w, 1};
    int d = pos + 1;
    int e = n / d;
    return {e == 1, Word(w.begin(), w.begin() + d), e};
}

bool is_k_power(const Word& w, int k) {
    if (w.empty()) return false;
    if (k < 1) return false;
    return primitivity(w).exponent % k == 0;
}

bool is_power(const Word& w) {
    if (w.empty()) return false;
    return primitivity(w).exponent >= 2;
}

BorderReport borders(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) throw EmptyWord("borders");
    auto fail = failure_function(w);
    int shortest = 0;
    for (int k = fail[static_cast<size_t>(n - 1)]; k > 0; k = fail[static_cast<size_t>(k - 1)])
        shortest = k;
    // The shortest nonempty prefix-suffix never exceeds |w|/2 (a longer one
    // would overlap itself and yield a shorter border), so it is a border.
    if (shortest == 0) return {false, std::nullopt};
    return {true, Word(w.begin(), w.begin() + shortest)};
}

bool is_palindrome(const Word& w) { return std::equal(w.begin(), w.end(), w.rbegin()); }

} // namespace fa
