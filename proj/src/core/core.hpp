#pragma once

#include <span>
#include <vector>

#include "string.hpp"

namespace parendist {

// Height profile h[0..n]: h(i) = opens minus closes in the prefix of length i.
struct HeightProfile {
    std::vector<int> h;

    int n() const { return static_cast<int>(h.size()) - 1; }
    int at(int i) const { return h[i]; }
};

HeightProfile height_profile(std::span<const Symbol> x);
inline HeightProfile height_profile(const ParenString& x) { return height_profile(x.symbols()); }

// Valleys: positions v in [1..n) with h(v-1) > h(v) < h(v+1).
std::vector<int> valleys(const HeightProfile& hp);
inline std::vector<int> valleys(const ParenString& x) { return valleys(height_profile(x)); }

// Pivot candidate set K: positions at distance 0 or 1 from a valley, within [0..n].
std::vector<int> pivot_candidates(const HeightProfile& hp);
inline std::vector<int> pivot_candidates(const ParenString& x) {
    return pivot_candidates(height_profile(x));
}

// Cost of aligning the two-symbol string "ab"; agrees with dyck(ab).
inline int pair_cost(Symbol a, Symbol b) {
    int miss = (is_open(a) ? 0 : 1) + (is_close(b) ? 0 : 1);
    if (miss > 0) return miss;
    return b == complement(a) ? 0 : 1;
}

// Reverse complement: result[k] = complement(x[n+1-k]).
std::vector<Symbol> reverse_complement(std::span<const Symbol> x);
inline ParenString reverse_complement(const ParenString& x) {
    return x.with_symbols(reverse_complement(x.symbols()));
}

// Dyck-preserving reduction: exhaustively removes adjacent pairs a·complement(a)
// with a opening, via one left-to-right stack scan.
std::vector<Symbol> reduce_dyck(std::span<const Symbol> x);
inline ParenString reduce_dyck(const ParenString& x) {
    return x.with_symbols(reduce_dyck(x.symbols()));
}

// Fold-preserving reduction: removes adjacent complementary pairs in either
// order; the result is irreducible (x[i+1] != complement(x[i]) for all i).
std::vector<Symbol> reduce_fold(std::span<const Symbol> x);
inline ParenString reduce_fold(const ParenString& x) {
    return x.with_symbols(reduce_fold(x.symbols()));
}

bool is_fold_irreducible(std::span<const Symbol> x);

// Non-crossing matching over positions 1..n, sorted by opening position.
// Construction rejects crossing or duplicated positions.
class Alignment {
public:
    Alignment() = default;
    Alignment(std::vector<std::pair<int, int>> pairs, int n);

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int size() const { return static_cast<int>(pairs_.size()); }

    // Partner of position i, or 0 if unmatched.
    int partner(int i) const;

private:
    std::vector<std::pair<int, int>> pairs_;
};

// cost_M(x) = n - 2|M| + sum of pair_cost over matched pairs.
long long alignment_cost(const ParenString& x, const Alignment& m);

}  // namespace parendist
