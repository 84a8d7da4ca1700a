#include "ptas.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace parendist {

PtasParams PtasParams::make(int tau, int n) {
    if (tau < 2) throw std::invalid_argument("tau must be at least 2");
    PtasParams p;
    p.tau = tau;
    p.nu.resize(n + 1);
    p.nu[0] = 255;  // nu(0) = infinity
    for (int r = 1; r <= n; ++r)
        p.nu[r] = static_cast<std::uint8_t>(std::countr_zero(static_cast<unsigned>(r)));
    return p;
}

int ptas_tau(double epsilon, size_t k_size) {
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::invalid_argument("epsilon must be in (0,1]");
    if (k_size <= 1) return 2;
    double t = std::ceil(48.0 / epsilon * std::log2(static_cast<double>(k_size)));
    return std::max(2, static_cast<int>(t));
}

int ad_root(std::span<const Symbol> x, int tau, AdStats* stats) {
    int n = static_cast<int>(x.size());
    PtasParams params = PtasParams::make(tau, n);
    auto sym = x;
    std::vector<int> K = pivot_candidates(height_profile(x));

    // Scratch reused across calls below a size threshold: every cell a
    // transition reads is written first within the same call (length-1
    // diagonal explicitly, longer fragments bottom-up), so stale content is
    // never observed. Large invocations get their own allocation so the
    // thread-local buffer stays small.
    thread_local std::vector<std::int32_t> scratch;
    std::vector<std::int32_t> local;
    std::vector<std::int32_t>& table = n <= 2048 ? scratch : local;
    if (table.size() < static_cast<size_t>(n + 1) * (n + 1))
        table.resize(static_cast<size_t>(n + 1) * (n + 1));
    auto at = [&](int i, int j) -> std::int32_t& {
        return table[static_cast<size_t>(i) * (n + 1) + j];
    };
    for (int i = 0; i < n; ++i) at(i, i + 1) = 1;

    long long transitions = 0;
    for (int len = 2; len <= n; ++len) {
        for (int i = 0; i + len <= n; ++i) {
            int j = i + len;
            int best = at(i + 1, j - 1) + pair_cost(sym[i], sym[j - 1]);
            for (int k : {i + 1, i + 2, j - 2, j - 1}) {
                if (k <= i || k >= j) continue;
                best = std::min(best, at(i, k) + at(k, j));
                ++transitions;
            }
            int mn = std::min(params.nu[i], params.nu[j]);
            long long tau_ij = mn >= 21 ? static_cast<long long>(n) + 1
                                        : static_cast<long long>(tau) << mn;
            auto lo = std::upper_bound(K.begin(), K.end(), i);
            auto hi = std::lower_bound(K.begin(), K.end(), j);
            long long cnt = hi - lo;
            if (2 * tau_ij >= cnt) {
                for (auto it = lo; it != hi; ++it)
                    best = std::min(best, at(i, *it) + at(*it, j));
                transitions += cnt;
            } else {
                for (auto it = lo; it != lo + tau_ij; ++it)
                    best = std::min(best, at(i, *it) + at(*it, j));
                for (auto it = hi - tau_ij; it != hi; ++it)
                    best = std::min(best, at(i, *it) + at(*it, j));
                transitions += 2 * tau_ij;
            }
            at(i, j) = best;
        }
    }
    if (stats) {
        stats->states = static_cast<long long>(n + 1) * (n + 2) / 2;
        stats->transitions = transitions;
    }
    return at(0, n);
}

int dyck_ptas(const ParenString& x, double epsilon, AdStats* stats) {
    ParenString r = reduce_dyck(x);
    int tau = ptas_tau(epsilon, pivot_candidates(r).size());
    return ad_root(r, tau, stats);
}

int dyck_ptas_symbols(std::vector<Symbol> symbols, double epsilon) {
    std::vector<Symbol> reduced = reduce_dyck(symbols);
    int tau = ptas_tau(epsilon, pivot_candidates(height_profile(reduced)).size());
    return ad_root(std::span<const Symbol>(reduced), tau);
}

}  // namespace parendist
