#pragma once

#include <cstdint>
#include <optional>

#include "core.hpp"

namespace parendist {

inline constexpr std::int32_t kAgdInfinity = INT32_C(1) << 28;

struct AgdStats {
    long long states = 0;
    long long hard_calls = 0;
    long long easy_calls = 0;
    long long pruned_calls = 0;
    long long transitions = 0;
};

// BD(0,n) per the height-constrained DP with distance threshold d and pivot
// sparsification tau: deep-valley states evaluate to the infinity sentinel;
// states with h(i,j) == h(i+1,j-1) split at the lowest point only.
// Memoization is a hash map; only the reachable states are materialized.
std::int32_t agd_root(const ParenString& x, int d, int tau, AgdStats* stats = nullptr);

struct DyckSmallResult {
    std::optional<int> value;  // engaged: dyck(x) <= value <= (3+eps)dyck(x)
    int d;                     // disengaged: dyck(x) > d

    bool exceeds() const { return !value.has_value(); }
};

// (3+eps)-approximation under a distance budget: reduces x, runs the
// constrained DP with threshold 3d and accuracy eps/3, and reports ">d" when
// the result is above (1+eps/3)*3d (the largest value consistent with
// dyck(x) <= d).
DyckSmallResult dyck_small(const ParenString& x, int d, double epsilon,
                           AgdStats* stats = nullptr);

}  // namespace parendist
