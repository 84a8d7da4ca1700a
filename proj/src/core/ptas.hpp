#pragma once

#include <cstdint>
#include <vector>

#include "core.hpp"

namespace parendist {

// Parameters of the sparsified-pivot DP: tau >= 2 and the cached 2-adic
// valuations nu(r) for r in [0..n], with nu(0) treated as infinity.
struct PtasParams {
    int tau;
    std::vector<std::uint8_t> nu;

    static PtasParams make(int tau, int n);
};

struct AdStats {
    long long states = 0;
    long long transitions = 0;
};

// AD(0,n) over the string as given (callers reduce first; the wrapper does).
// Satisfies D(0,n) <= AD(0,n) <= D(0,n) + (8/tau)|K| log|K| for tau >= 2.
int ad_root(std::span<const Symbol> x, int tau, AdStats* stats = nullptr);
inline int ad_root(const ParenString& x, int tau, AdStats* stats = nullptr) {
    return ad_root(x.symbols(), tau, stats);
}

// Computes tau = max(2, ceil(48/epsilon * log2 |K|)) for the reduced string.
int ptas_tau(double epsilon, size_t k_size);

// (1+epsilon)-approximation of dyck(x): reduces, then runs ad_root.
int dyck_ptas(const ParenString& x, double epsilon, AdStats* stats = nullptr);

// Same, for callers that already hold raw symbols (hot path of the
// subquadratic estimator). Reduces internally.
int dyck_ptas_symbols(std::vector<Symbol> symbols, double epsilon);

}  // namespace parendist
