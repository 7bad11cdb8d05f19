#include "fa/boolmat.hpp"

#include <map>

#include "fa/errors.hpp"

namespace fa {

BoolMatrix BoolMatrix::identity(int n) {
    BoolMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BoolMatrix mat_mul(const BoolMatrix& x, const BoolMatrix& y) {
    if (x.n_ != y.n_) throw DimensionMismatch();
    const int n = x.n_;
    const int words = x.row_words_;
    BoolMatrix r(n);
    for (int i = 0; i < n; ++i) {
        uint64_t* out = &r.bits_[size_t(i) * size_t(words)];
        for (int k = 0; k < n; ++k) {
            if (!x.get(i, k)) continue;
            const uint64_t* row = &y.bits_[size_t(k) * size_t(words)];
            for (int w = 0; w < words; ++w) out[size_t(w)] |= row[size_t(w)];
        }
    }
    return r;
}

BoolMatrix mat_pow(const BoolMatrix& x, long long k) {
    BoolMatrix base = x;
    BoolMatrix acc = BoolMatrix::identity(x.dim());
    bool acc_used = false;
    while (k > 0) {
        if (k & 1) {
            acc = acc_used ? mat_mul(acc, base) : base;
            acc_used = true;
        }
        k >>= 1;
        if (k > 0) base = mat_mul(base, base);
    }
    return acc_used ? acc : BoolMatrix::identity(x.dim());
}

BoolMatrix symbol_matrix(const Automaton& a, Symbol s) {
    if (a.has_epsilon()) throw EpsilonNotSupported("symbol_matrix");
    BoolMatrix m(a.n_states);
    for (const auto& t : a.transitions)
        if (t.label == s) m.set(t.from, t.to);
    return m;
}

bool accepting(const Automaton& a, const BoolMatrix& b) {
    for (State i : a.initials)
        for (State f : a.finals)
            if (b.get(i, f)) return true;
    return false;
}

const BoolMatrix* TransitionMonoid::find(const BoolMatrix& b) const {
    for (const auto& e : elements)
        if (e == b) return &e;
    return nullptr;
}

TransitionMonoid monoid_closure(const Automaton& a, long long element_cap) {
    if (a.has_epsilon()) throw EpsilonNotSupported("monoid_closure");
    TransitionMonoid m;
    const int sigma = static_cast<int>(a.alphabet.size());
    for (Symbol c = 0; c < sigma; ++c) m.generators.push_back(symbol_matrix(a, c));

    std::map<BoolMatrix, int> index;
    m.elements.push_back(BoolMatrix::identity(a.n_states));
    m.witness.push_back({});
    m.nonempty_witness.push_back(std::nullopt);
    index.emplace(m.elements[0], 0);

    // Plain queue walk: elements are discovered in (length, lex) witness
    // order, so the first witness recorded for an element is minimal.
    for (size_t head = 0; head < m.elements.size() && !m.truncated; ++head) {
        for (Symbol c = 0; c < sigma; ++c) {
            BoolMatrix prod = mat_mul(m.elements[head], m.generators[size_t(c)]);
            Word w = m.witness[head];
            w.push_back(c);
            auto it = index.find(prod);
            if (it != index.end()) {
                if (!m.nonempty_witness[size_t(it->second)])
                    m.nonempty_witness[size_t(it->second)] = w;
                continue;
            }
            if (static_cast<long long>(m.elements.size()) >= element_cap) {
                m.truncated = true;
                break;
            }
            index.emplace(prod, static_cast<int>(m.elements.size()));
            m.elements.push_back(std::move(prod));
            m.witness.push_back(w);
            m.nonempty_witness.push_back(w);
        }
    }
    return m;
}

} // namespace fa
