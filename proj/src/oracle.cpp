#include "fa/oracle.hpp"

#include <algorithm>

#include "fa/core.hpp"
#include "fa/errors.hpp"
#include "fa/wordops.hpp"

namespace fa {

const char* to_string(WordProperty p) {
    switch (p) {
        case WordProperty::Palindrome: return "palindrome";
        case WordProperty::NonPalindrome: return "non-palindrome";
        case WordProperty::KPower: return "k-power";
        case WordProperty::NonKPower: return "non-k-power";
        case WordProperty::GeKPower: return "ge-k-power";
        case WordProperty::Power: return "power";
        case WordProperty::NonPower: return "non-power";
        case WordProperty::Bordered: return "bordered";
        default: return "unbordered";
    }
}

bool word_satisfies(WordProperty p, const Word& w, int k) {
    switch (p) {
        case WordProperty::Palindrome: return is_palindrome(w);
        case WordProperty::NonPalindrome: return !is_palindrome(w);
        case WordProperty::KPower: return is_k_power(w, k);
        case WordProperty::NonKPower: return !w.empty() && !is_k_power(w, k);
        case WordProperty::GeKPower: return !w.empty() && primitivity(w).exponent >= k;
        case WordProperty::Power: return is_power(w);
        case WordProperty::NonPower: return !w.empty() && !is_power(w);
        case WordProperty::Bordered: return !w.empty() && borders(w).is_bordered;
        default: return !w.empty() && !borders(w).is_bordered;
    }
}

namespace {

long long sat_mul(long long a, long long b) {
    const long long limit = 1LL << 62;
    if (a != 0 && b > limit / a) return limit;
    return a * b;
}

long long sat_pow(long long n, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) r = sat_mul(r, n);
    return r;
}

} // namespace

long long decision_bound(WordProperty p, long long n, int k) {
    switch (p) {
        case WordProperty::Palindrome: return std::max<long long>(0, 2 * n * n - 1);
        case WordProperty::NonPalindrome: return std::max<long long>(0, 3 * n - 1);
        case WordProperty::KPower: return sat_mul(k, sat_pow(n, k));
        case WordProperty::NonKPower: return 3 * n;
        case WordProperty::GeKPower: return sat_mul(k + n - 1, sat_pow(n, k + n - 1));
        case WordProperty::Power: return sat_mul(n + 1, sat_pow(n, n + 1));
        case WordProperty::NonPower: return 3 * n;
        case WordProperty::Bordered: return std::max<long long>(0, 2 * n * n + n - 1);
        default: return 6 * n + 1;
    }
}

OracleReport oracle_decide(const Automaton& a, WordProperty p, int k, int max_len,
                           long long word_cap) {
    Automaton b = trim(eliminate_epsilon(a));
    OracleReport rep;
    rep.predicate = to_string(p);
    rep.max_len = max_len;
    long long total = 0;
    bool cap_hit = false;
    for_each_word(b, 0, max_len, [&](const Word& w) {
        if (++total > word_cap) {
            cap_hit = true;
            return false;
        }
        if (word_satisfies(p, w, k)) {
            rep.holds = true;
            rep.witness = w;
            return false;
        }
        return true;
    });
    rep.exhaustive = rep.holds || (!cap_hit && max_len >= decision_bound(p, b.n_states, k));
    return rep;
}

std::vector<std::pair<int, long long>> oracle_count_per_length(const Automaton& a, int max_len) {
    std::vector<std::pair<int, long long>> counts;
    for (int len = 0; len <= max_len; ++len) counts.emplace_back(len, 0);
    for_each_word(a, 0, max_len, [&](const Word& w) {
        ++counts[w.size()].second;
        return true;
    });
    return counts;
}

bool oracle_is_infinite(const Automaton& a) {
    Automaton b = trim(eliminate_epsilon(a));
    const int n = b.n_states;
    for (int len = n; len < 2 * n; ++len)
        if (has_word_of_length(b, len)) return true;
    return false;
}

Automaton border_pair_machine(const Automaton& a) {
    Automaton b = trim(eliminate_epsilon(a));
    const int n = b.n_states;
    const int sigma = static_cast<int>(b.alphabet.size());
    Alphabet ext = b.alphabet;
    std::string marker = "#";
    while (std::find(ext.begin(), ext.end(), marker) != ext.end()) marker += "#";
    ext.push_back(marker);
    const Symbol mark = static_cast<Symbol>(sigma);

    // Phase 1 reads u tracking [p, g, r, started]; the marker requires a
    // nonempty u with r final; phase 2 reads w tracking (c, g), accepting
    // when c meets g.
    auto p1 = [n](State p, State g, State r, int layer) {
        return ((p * n + g) * n + r) * 2 + layer;
    };
    const int p2_base = 2 * n * n * n;
    auto p2 = [n, p2_base](State c, State g) { return p2_base + c * n + g; };

    std::vector<std::vector<std::vector<State>>> fwd(
        static_cast<size_t>(n), std::vector<std::vector<State>>(static_cast<size_t>(sigma)));
    for (const auto& t : b.transitions)
        fwd[static_cast<size_t>(t.from)][static_cast<size_t>(t.label)].push_back(t.to);

    std::vector<Transition> trans;
    for (State p = 0; p < n; ++p)
        for (State g = 0; g < n; ++g)
            for (State r = 0; r < n; ++r) {
                for (Symbol c = 0; c < sigma; ++c)
                    for (State pn : fwd[static_cast<size_t>(p)][static_cast<size_t>(c)])
                        for (State rn : fwd[static_cast<size_t>(r)][static_cast<size_t>(c)])
                            for (int layer = 0; layer < 2; ++layer)
                                trans.push_back({p1(p, g, r, layer), c, p1(pn, g, rn, 1)});
                if (b.is_final(r)) trans.push_back({p1(p, g, r, 1), mark, p2(p, g)});
            }
    for (State c = 0; c < n; ++c)
        for (State g = 0; g < n; ++g)
            for (Symbol s = 0; s < sigma; ++s)
                for (State cn : fwd[static_cast<size_t>(c)][static_cast<size_t>(s)])
                    trans.push_back({p2(c, g), s, p2(cn, g)});

    std::vector<State> initials, finals;
    for (State q0 : b.initials)
        for (State g = 0; g < n; ++g) initials.push_back(p1(q0, g, g, 0));
    for (State g = 0; g < n; ++g) finals.push_back(p2(g, g));
    return Automaton(2 * n * n * n + n * n, ext, std::move(trans), std::move(initials),
                     std::move(finals), Kind::Nfa);
}

Verdict oracle_pattern(const Automaton& a, const Pattern& p, int max_image_len) {
    Automaton b = trim(eliminate_epsilon(a));
    const int sigma = static_cast<int>(b.alphabet.size());
    if (b.n_states == 0 || sigma == 0) return Verdict::no("morphism-enumeration");
    std::vector<Word> images;
    for (int len = 1; len <= max_image_len; ++len) {
        Word w(static_cast<size_t>(len), 0);
        while (true) {
            images.push_back(w);
            int pos = len - 1;
            while (pos >= 0 && w[static_cast<size_t>(pos)] == sigma - 1) {
                w[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++w[static_cast<size_t>(pos)];
        }
    }
    const int nvars = p.var_count();
    std::vector<size_t> assign(static_cast<size_t>(nvars), 0);
    while (true) {
        Word h;
        for (int v : p.variables) {
            const Word& img = images[assign[static_cast<size_t>(v - 1)]];
            h.insert(h.end(), img.begin(), img.end());
        }
        if (accepts(b, h)) return Verdict::yes("morphism-enumeration").with_witness(std::move(h));
        int pos = nvars - 1;
        while (pos >= 0 && assign[static_cast<size_t>(pos)] + 1 == images.size()) {
            assign[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++assign[static_cast<size_t>(pos)];
    }
    return Verdict::no("morphism-enumeration");
}

} // namespace fa
