#pragma once

#include <cstdint>
#include <vector>

#include "core.hpp"
#include "rmq.hpp"

namespace parendist {

// Substring-occurrence index over the concatenation x ∘ reverse_complement(x),
// built from a suffix array plus longest-common-extension support. Answers
// "does the reverse complement of fragment x(p..q] occur inside x(a..b]".
class FoldIndex {
public:
    explicit FoldIndex(std::span<const Symbol> x);

    int n() const { return n_; }

    // Longest common extension of the suffixes of the doubled text starting
    // at 0-based positions a and b.
    int lce(int a, int b) const;

    // 0-based start position in the doubled text of the reverse complement
    // of x(p..q] (1-based fragment coordinates).
    int rc_fragment_start(int q) const { return 2 * n_ - q; }

private:
    int n_;
    std::vector<int> sa_;
    std::vector<int> rank_;
    RmqIndex lcp_rmq_;
};

// True iff reverse_complement(x(p..q]) occurs inside x(a..b], occurrence
// fully contained. Ranges are 1-based half-open (lo..hi].
bool ipm_rc_occurs(const FoldIndex& index, int p, int q, int a, int b);

struct FoldTableStats {
    double index_ms = 0.0;
    double dp_ms = 0.0;
    long long lce_calls = 0;
};

// The block-grid approximation DP; the result is sandwiched between
// fold_{8s}(x) and 3*fold_{8s}(x).
long long fold_table(const ParenString& x, int s, FoldTableStats* stats = nullptr);

// tau-approximation of fold(x): reduces to irreducible form, then either the
// exact cubic DP (tau <= 51) or the grid DP with s = (tau-3)/48.
long long fold_approx(const ParenString& x, long long tau);

}  // namespace parendist
