#ifndef FA_BOOLMAT_HPP
#define FA_BOOLMAT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fa/automaton.hpp"
#include "fa/word.hpp"

namespace fa {

/// Square boolean matrix, rows packed into 64-bit words.
class BoolMatrix {
  public:
    explicit BoolMatrix(int n) : n_(n), row_words_((n + 63) / 64), bits_(size_t(n) * size_t(row_words_), 0) {}

    static BoolMatrix identity(int n);

    int dim() const { return n_; }
    bool get(int i, int j) const {
        return (bits_[size_t(i) * size_t(row_words_) + size_t(j >> 6)] >> (j & 63)) & 1;
    }
    void set(int i, int j) {
        bits_[size_t(i) * size_t(row_words_) + size_t(j >> 6)] |= uint64_t(1) << (j & 63);
    }

    friend BoolMatrix mat_mul(const BoolMatrix& x, const BoolMatrix& y);
    friend auto operator<=>(const BoolMatrix&, const BoolMatrix&) = default;

  private:
    int n_;
    int row_words_;
    std::vector<uint64_t> bits_;
};

/// Boolean matrix product (OR of ANDs).  Throws DimensionMismatch.
BoolMatrix mat_mul(const BoolMatrix& x, const BoolMatrix& y);

/// x^k by repeated squaring, k >= 1.
BoolMatrix mat_pow(const BoolMatrix& x, long long k);

/// B_s: entry (i, j) is 1 iff j is reachable from i on one s-transition.
/// Throws EpsilonNotSupported.
BoolMatrix symbol_matrix(const Automaton& a, Symbol s);

/// True iff b has a 1 in some (initial, final) position.
bool accepting(const Automaton& a, const BoolMatrix& b);

/// The monoid generated by the per-symbol matrices, identity included, with
/// (length, lex)-shortest witness words.  nonempty_witness differs from
/// witness only for elements whose sole shortest witness is the empty word.
struct TransitionMonoid {
    std::vector<BoolMatrix> elements;             // elements[0] is the identity
    std::vector<Word> witness;                    // witness[i] generates elements[i]
    std::vector<std::optional<Word>> nonempty_witness;
    std::vector<BoolMatrix> generators;           // indexed by Symbol
    bool truncated = false;

    const BoolMatrix* find(const BoolMatrix& b) const;
};

/// Breadth-first closure under right multiplication; stops with
/// truncated=true once element_cap elements have been materialized and more
/// remain.  Throws EpsilonNotSupported.
TransitionMonoid monoid_closure(const Automaton& a, long long element_cap);

} // namespace fa

#endif
