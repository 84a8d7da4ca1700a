#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"
#include "window.hpp"

namespace parendist::subq {

struct SubquadraticParams {
    Theta theta;
    int s1 = 0;
    int s2 = 0;
    int delta = 0;
    double k1 = 4.0;  // sampling constants; the analysis only needs "large"
    double k2 = 4.0;
    std::uint64_t seed = 1;
    int threads = 1;
    // Inner Dyck-Approx: dyck_ptas with epsilon = 1, approximation factor 2.
    static constexpr int alpha = 2;
    static constexpr double inner_epsilon = 1.0;
};

// Defaults per the parameter setting: largest powers of two with
// s1 <= n^(21/34), s2 <= n^(13/34), delta <= n^(5/34), raised where needed to
// satisfy the divisibility preconditions (s2|s1, s1|n, s2/s1 <= theta,
// integral grid steps).
SubquadraticParams derive_params(int n_padded, Theta theta);
void validate_params(const SubquadraticParams& p, int n_padded);

// A1 x A2 block sharing one certified weight; kept compressed because the
// block can be quadratically large while the DP only streams through it.
struct Cluster {
    std::vector<Window> a1;
    std::vector<Window> a2;
    long long weight;
};

struct CertifiedSet {
    std::vector<WeightedWindowPair> small_pairs;  // explicit W_S entries
    std::vector<WeightedWindowPair> large_pairs;  // W_L entries
    std::vector<WeightedWindowPair> singles;      // (w, empty, c) entries
    std::vector<Cluster> clusters;                // compressed W_S blocks

    long long entry_count() const;

    // Visits every weighted pair, expanding clusters; f(left, right, weight)
    // where an engaged right side may be the empty window.
    void for_each_pair(const std::function<void(const Window&, const Window&, long long)>& f)
        const;
};

// Sparse/dense classification by sampling at cost level c; mask[i] set means
// windows()[i] was declared sparse.
std::vector<char> declare_sparse(const ParenString& x, const WindowGrid& k_grid, long long c,
                                 const SubquadraticParams& params, int phase);

// Pivot clustering plus unconditional near-pair certification; appends to out.
void certify_small(const ParenString& x, const WindowGrid& k_grid,
                   const std::vector<char>& sparse, long long c,
                   const SubquadraticParams& params, CertifiedSet& out);

// Sampled sparse-window probing that certifies large-window pairs directly.
void certify_large(const ParenString& x, const WindowGrid& j_grid, const WindowGrid& k_grid,
                   const std::vector<char>& sparse, long long c,
                   const SubquadraticParams& params, int phase, CertifiedSet& out);

// Runs the three sub-procedures across the cost schedule {0,1,2,4,...,>=10s2},
// accumulating results across phases.
CertifiedSet certifying_window_pairs(const ParenString& x, const WindowGrid& j_grid,
                                     const WindowGrid& k_grid,
                                     const SubquadraticParams& params);

// Exact minimum total weight over consistent decompositions of [1..n] built
// from the given weighted pairs (deletion pairs included by the caller);
// nullopt when no decomposition covers [1..n].
std::optional<long long> min_weight_cover(int n, const std::vector<WeightedWindowPair>& pairs);

struct GapReport {
    long long estimate = 0;
    int n_input = 0;
    int n_padded = 0;
    SubquadraticParams params;
    long long grid_large = 0;
    long long grid_small = 0;
    long long certified_entries = 0;
    int phases = 0;
};

struct GapOverrides {
    std::optional<int> s1, s2, delta;
    std::optional<double> k1, k2;
    int threads = 1;
};

// Gap estimator: pads x to a power of two with matched pairs of a fresh type,
// builds both grids, certifies window pairs, and solves the weighted-cover DP
// augmented with unit deletions. The estimate never undershoots dyck(x).
GapReport gap_dyck_est(const ParenString& x, Theta theta, std::uint64_t seed,
                       const GapOverrides& overrides = {});

struct DyckEstReport {
    long long estimate = 0;
    std::string path;  // "small" or "gap"
    std::vector<GapReport> gap_runs;
};

// Full-range estimator: the bounded-distance path with d = ceil(n^(33/34)),
// epsilon = 1 first; on ">d" the gap estimator across the power-of-two theta
// ladder, returning the minimum.
DyckEstReport dyck_est(const ParenString& x, std::uint64_t seed,
                       const GapOverrides& overrides = {});

}  // namespace parendist::subq
