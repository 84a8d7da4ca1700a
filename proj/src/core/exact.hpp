#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace parendist {

inline constexpr int kDefaultExactCap = 4096;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense upper-triangular table D(i,j) = dyck(x(i..j]) for 0 <= i <= j <= n.
class DistanceTable {
public:
    explicit DistanceTable(int n) : n_(n), d_(static_cast<size_t>(n + 1) * (n + 1), -1) {}

    int n() const { return n_; }
    std::int32_t& at(int i, int j) { return d_[static_cast<size_t>(i) * (n_ + 1) + j]; }
    std::int32_t at(int i, int j) const { return d_[static_cast<size_t>(i) * (n_ + 1) + j]; }

private:
    int n_;
    std::vector<std::int32_t> d_;
};

struct ExactDyckResult {
    int value;
    Alignment alignment;  // achieves cost_M(x) == value
};

// Classic cubic interval DP; backtracks an optimal alignment.
ExactDyckResult exact_dyck_cubic(const ParenString& x, int cap = kDefaultExactCap);
DistanceTable exact_dyck_cubic_table(const ParenString& x, int cap = kDefaultExactCap);

// Valley-pivot DP: reduces the input first, then restricts split pivots to
// K plus the four boundary candidates. Agrees with the cubic DP everywhere.
int exact_dyck_pivots(const ParenString& x);

// Reference height-constrained recursion GD over the string as given (no
// reduction): all pivots in K plus boundary, match transition only when
// h(i+1,j-1) > h(i,j).
DistanceTable exact_gd_table(const ParenString& x, int cap = kDefaultExactCap);
int exact_gd(const ParenString& x, int cap = kDefaultExactCap);

// fold_rho via the interval DP over all fragments; fold_0(x) = fold(x).
int exact_fold_rho(const ParenString& x, int rho, int cap = kDefaultExactCap);
int exact_fold(const ParenString& x, int cap = kDefaultExactCap);

}  // namespace parendist
