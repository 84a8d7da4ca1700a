#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace parendist {

// O(n log n)-space sparse table over an int array, answering range-minimum
// queries in O(1). Ties break toward the smallest index, as the pivot
// selection in the height-constrained DP requires.
class RmqIndex {
public:
    RmqIndex() = default;

    explicit RmqIndex(std::vector<int> values) : values_(std::move(values)) {
        size_t n = values_.size();
        if (n == 0) return;
        int levels = std::bit_width(n);
        table_.resize(levels);
        table_[0].resize(n);
        for (size_t i = 0; i < n; ++i) table_[0][i] = static_cast<int>(i);
        for (int k = 1; k < levels; ++k) {
            size_t span = size_t{1} << k;
            table_[k].resize(n - span + 1);
            for (size_t i = 0; i + span <= n; ++i) {
                int a = table_[k - 1][i];
                int b = table_[k - 1][i + span / 2];
                table_[k][i] = values_[b] < values_[a] ? b : a;
            }
        }
    }

    // Smallest index attaining the minimum of values[lo..hi], inclusive.
    int argmin(int lo, int hi) const {
        int k = std::bit_width(static_cast<unsigned>(hi - lo + 1)) - 1;
        int a = table_[k][lo];
        int b = table_[k][hi - (1 << k) + 1];
        if (values_[a] <= values_[b]) return a;
        return b;
    }

    int min(int lo, int hi) const { return values_[argmin(lo, hi)]; }

    const std::vector<int>& values() const { return values_; }

private:
    std::vector<int> values_;
    std::vector<std::vector<int>> table_;
};

}  // namespace parendist
