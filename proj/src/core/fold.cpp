#include "fold.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "exact.hpp"

namespace parendist {

namespace {

// Suffix array by prefix doubling; fine at the scales this index serves.
std::vector<int> build_suffix_array(const std::vector<int>& text) {
    int m = static_cast<int>(text.size());
    std::vector<int> sa(m), rank(m), tmp(m);
    std::iota(sa.begin(), sa.end(), 0);
    // Shift ranks to be non-negative so the past-the-end sentinel -1 never
    // collides with a real symbol value.
    int lo = *std::min_element(text.begin(), text.end());
    for (int i = 0; i < m; ++i) rank[i] = text[i] - lo;
    for (int k = 1; k < 2 * m; k *= 2) {
        auto cmp = [&](int a, int b) {
            if (rank[a] != rank[b]) return rank[a] < rank[b];
            int ra = a + k < m ? rank[a + k] : -1;
            int rb = b + k < m ? rank[b + k] : -1;
            return ra < rb;
        };
        std::sort(sa.begin(), sa.end(), cmp);
        tmp[sa[0]] = 0;
        for (int i = 1; i < m; ++i)
            tmp[sa[i]] = tmp[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
        rank = tmp;
        if (rank[sa[m - 1]] == m - 1) break;
    }
    return sa;
}

std::vector<int> build_lcp(const std::vector<int>& text, const std::vector<int>& sa,
                           const std::vector<int>& rank) {
    int m = static_cast<int>(text.size());
    std::vector<int> lcp(std::max(0, m - 1), 0);
    int h = 0;
    for (int i = 0; i < m; ++i) {
        if (rank[i] == m - 1) {
            h = 0;
            continue;
        }
        int j = sa[rank[i] + 1];
        while (i + h < m && j + h < m && text[i + h] == text[j + h]) ++h;
        lcp[rank[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace

FoldIndex::FoldIndex(std::span<const Symbol> x) : n_(static_cast<int>(x.size())) {
    std::vector<int> text(2 * n_);
    for (int i = 0; i < n_; ++i) text[i] = x[i];
    for (int k = 0; k < n_; ++k) text[n_ + k] = complement(x[n_ - 1 - k]);
    if (text.empty()) return;
    sa_ = build_suffix_array(text);
    rank_.resize(text.size());
    for (size_t i = 0; i < sa_.size(); ++i) rank_[sa_[i]] = static_cast<int>(i);
    lcp_rmq_ = RmqIndex(build_lcp(text, sa_, rank_));
}

int FoldIndex::lce(int a, int b) const {
    int m = 2 * n_;
    if (a == b) return m - a;
    if (a >= m || b >= m) return 0;
    int ra = rank_[a], rb = rank_[b];
    if (ra > rb) std::swap(ra, rb);
    return lcp_rmq_.min(ra, rb - 1);
}

bool ipm_rc_occurs(const FoldIndex& index, int p, int q, int a, int b) {
    int n = index.n();
    if (p < 0 || q < p || q > n || a < 0 || b < a || b > n)
        throw std::invalid_argument("ipm_rc_occurs: range out of bounds");
    int len = q - p;
    if (len == 0) return true;
    if (len > b - a) return false;
    int pat = index.rc_fragment_start(q);
    for (int o = a; o + len <= b; ++o)
        if (index.lce(o, pat) >= len) return true;
    return false;
}

long long fold_table(const ParenString& x, int s, FoldTableStats* stats) {
    if (s < 1) throw std::invalid_argument("s must be at least 1");
    int n = x.size();
    int m = n / s;
    if (m <= 1) return static_cast<long long>(m) * s + n % s;

    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    FoldIndex index(x.symbols());
    auto t1 = clock::now();

    const std::int32_t inf = INT32_C(1) << 28;
    std::vector<std::int32_t> table(static_cast<size_t>(m + 1) * (m + 1), inf);
    auto d = [&](int a, int b) -> std::int32_t& {
        return table[static_cast<size_t>(a) * (m + 1) + b];
    };
    long long lce_calls = 0;
    for (int a = m; a >= 0; --a) {
        d(a, a) = 0;
        if (a < m) d(a, a + 1) = s;
        for (int b = a + 2; b <= m; ++b) {
            std::int32_t best = inf;
            int dcap = (b - a - 2) / 2;
            if (dcap >= 1) {
                // The candidate occurrence starts for every depth d lie in
                // [a*s..(a+2)*s] and the pattern start depends only on b, so
                // one LCE sweep yields the largest admissible d.
                int pat = index.rc_fragment_start(b * s);
                int dmax = 0;
                for (int o = a * s; o <= (a + 2) * s; ++o) {
                    dmax = std::max(dmax, index.lce(o, pat) / s);
                    ++lce_calls;
                }
                dmax = std::min(dmax, dcap);
                for (int dep = 1; dep <= dmax; ++dep)
                    best = std::min(best, 12 * s + d(a + dep + 2, b - dep));
            }
            for (int c = a + 1; c < b; ++c) best = std::min(best, d(a, c) + d(c, b));
            d(a, b) = best;
        }
    }
    auto t2 = clock::now();
    if (stats) {
        stats->index_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        stats->dp_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
        stats->lce_calls = lce_calls;
    }
    return static_cast<long long>(d(0, m)) + n % s;
}

long long fold_approx(const ParenString& x, long long tau) {
    if (tau < 1) throw std::invalid_argument("tau must be at least 1");
    ParenString y = reduce_fold(x);
    if (y.empty()) return 0;
    if (tau <= 51) return exact_fold(y);
    int s = static_cast<int>((tau - 3) / 48);
    return fold_table(y, s);
}

}  // namespace parendist
