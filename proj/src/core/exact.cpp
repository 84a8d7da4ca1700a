#include "exact.hpp"

#include <algorithm>
#include <functional>

#include "rmq.hpp"

namespace parendist {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw CapExceeded(std::string(what) + ": length " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));
}

}  // namespace

DistanceTable exact_dyck_cubic_table(const ParenString& x, int cap) {
    int n = x.size();
    check_cap(n, cap, "exact_dyck_cubic");
    DistanceTable d(n);
    auto sym = x.symbols();
    for (int i = 0; i <= n; ++i) d.at(i, i) = 0;
    for (int i = 0; i < n; ++i) d.at(i, i + 1) = 1;
    for (int len = 2; len <= n; ++len) {
        for (int i = 0; i + len <= n; ++i) {
            int j = i + len;
            int best = d.at(i + 1, j - 1) + pair_cost(sym[i], sym[j - 1]);
            for (int k = i + 1; k < j; ++k)
                best = std::min(best, d.at(i, k) + d.at(k, j));
            d.at(i, j) = best;
        }
    }
    return d;
}

ExactDyckResult exact_dyck_cubic(const ParenString& x, int cap) {
    DistanceTable d = exact_dyck_cubic_table(x, cap);
    int n = x.size();
    auto sym = x.symbols();

    // Backtrack along the first minimizing transition: split pivots in
    // ascending order, then the match transition.
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> work{{0, n}};
    while (!work.empty()) {
        auto [i, j] = work.back();
        work.pop_back();
        if (j - i <= 1) continue;
        int v = d.at(i, j);
        bool split = false;
        for (int k = i + 1; k < j; ++k) {
            if (d.at(i, k) + d.at(k, j) == v) {
                work.push_back({i, k});
                work.push_back({k, j});
                split = true;
                break;
            }
        }
        if (!split) {
            pairs.push_back({i + 1, j});  // 1-based match of x[i+1] with x[j]
            work.push_back({i + 1, j - 1});
        }
    }
    return {d.at(0, n), Alignment(std::move(pairs), n)};
}

namespace {

// Shared DP driver for the pivot-restricted recursions. `match_allowed`
// decides whether the (i+1,j-1) transition applies.
template <typename MatchAllowed>
DistanceTable pivot_dp(std::span<const Symbol> sym, const std::vector<int>& K,
                       MatchAllowed match_allowed) {
    int n = static_cast<int>(sym.size());
    DistanceTable d(n);
    for (int i = 0; i <= n; ++i) d.at(i, i) = 0;
    for (int i = 0; i < n; ++i) d.at(i, i + 1) = 1;
    const int inf = n + 1;
    for (int len = 2; len <= n; ++len) {
        for (int i = 0; i + len <= n; ++i) {
            int j = i + len;
            int best = inf;
            if (match_allowed(i, j))
                best = d.at(i + 1, j - 1) + pair_cost(sym[i], sym[j - 1]);
            for (int k : {i + 1, i + 2, j - 2, j - 1})
                if (k > i && k < j) best = std::min(best, d.at(i, k) + d.at(k, j));
            auto lo = std::upper_bound(K.begin(), K.end(), i);
            auto hi = std::lower_bound(K.begin(), K.end(), j);
            for (auto it = lo; it != hi; ++it)
                best = std::min(best, d.at(i, *it) + d.at(*it, j));
            d.at(i, j) = best;
        }
    }
    return d;
}

}  // namespace

int exact_dyck_pivots(const ParenString& x) {
    ParenString r = reduce_dyck(x);
    std::vector<int> K = pivot_candidates(r);
    DistanceTable d = pivot_dp(r.symbols(), K, [](int, int) { return true; });
    return d.at(0, r.size());
}

DistanceTable exact_gd_table(const ParenString& x, int cap) {
    int n = x.size();
    check_cap(n, cap, "exact_gd");
    HeightProfile hp = height_profile(x);
    RmqIndex rmq(hp.h);
    std::vector<int> K = pivot_candidates(hp);
    return pivot_dp(x.symbols(), K, [&](int i, int j) {
        return rmq.min(i + 1, j - 1) > rmq.min(i, j);
    });
}

int exact_gd(const ParenString& x, int cap) {
    return exact_gd_table(x, cap).at(0, x.size());
}

int exact_fold_rho(const ParenString& x, int rho, int cap) {
    if (rho < 0) throw std::invalid_argument("rho must be non-negative");
    int n = x.size();
    check_cap(n, cap, "exact_fold_rho");
    auto sym = x.symbols();

    // match_run(i,j): longest l such that x(i..i+l] equals the reverse
    // complement of x(j-l..j], i.e. x[i+t] == complement(x[j+1-t]) for all
    // t in [1..l], before capping at floor((j-i)/2).
    auto idx = [n](int i, int j) { return static_cast<size_t>(i) * (n + 1) + j; };
    std::vector<std::int32_t> run(static_cast<size_t>(n + 1) * (n + 1), 0);
    for (int len = 2; len <= n; ++len) {
        for (int i = 0; i + len <= n; ++i) {
            int j = i + len;
            if (sym[i] == complement(sym[j - 1])) run[idx(i, j)] = 1 + run[idx(i + 1, j - 1)];
        }
    }

    std::vector<std::int32_t> f(static_cast<size_t>(n + 1) * (n + 1), 0);
    for (int len = 0; len <= n; ++len) {
        for (int i = 0; i + len <= n; ++i) {
            int j = i + len;
            if (len <= 1) {
                f[idx(i, j)] = len;
                continue;
            }
            int best = INT32_MAX / 4;
            for (int p = i + 1; p < j; ++p)
                best = std::min(best, f[idx(i, p)] + f[idx(p, j)]);
            int lmax = std::min<int>(run[idx(i, j)], len / 2);
            for (int l = 1; l <= lmax; ++l)
                best = std::min(best, rho + f[idx(i + l, j - l)]);
            f[idx(i, j)] = best;
        }
    }
    return f[idx(0, n)];
}

int exact_fold(const ParenString& x, int cap) { return exact_fold_rho(x, 0, cap); }

}  // namespace parendist
