#include "small_distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ptas.hpp"
#include "rmq.hpp"

namespace parendist {

namespace {

std::int32_t sat_add(std::int32_t a, std::int32_t b) {
    if (a >= kAgdInfinity || b >= kAgdInfinity) return kAgdInfinity;
    return a + b;
}

struct AgdSolver {
    std::span<const Symbol> sym;
    const std::vector<int>& K;
    const RmqIndex& rmq;
    const PtasParams& params;
    int n;
    int d;
    std::unordered_map<std::uint64_t, std::int32_t> memo;
    AgdStats stats;

    std::uint64_t key(int i, int j) const {
        return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
    }

    const std::int32_t* lookup(int i, int j) const {
        auto it = memo.find(key(i, j));
        return it == memo.end() ? nullptr : &it->second;
    }

    void gather_pivots(int i, int j, std::vector<int>& out) const {
        out.clear();
        for (int k : {i + 1, i + 2, j - 2, j - 1})
            if (k > i && k < j) out.push_back(k);
        int mn = std::min(params.nu[i], params.nu[j]);
        long long tau_ij = mn >= 21 ? static_cast<long long>(n) + 1
                                    : static_cast<long long>(params.tau) << mn;
        auto lo = std::upper_bound(K.begin(), K.end(), i);
        auto hi = std::lower_bound(K.begin(), K.end(), j);
        long long cnt = hi - lo;
        if (2 * tau_ij >= cnt) {
            out.insert(out.end(), lo, hi);
        } else {
            out.insert(out.end(), lo, lo + tau_ij);
            out.insert(out.end(), hi - tau_ij, hi);
        }
    }

    std::int32_t run(int root_i, int root_j) {
        std::vector<std::pair<int, int>> todo{{root_i, root_j}};
        std::vector<int> pivots;
        while (!todo.empty()) {
            auto [i, j] = todo.back();
            if (lookup(i, j)) {
                todo.pop_back();
                continue;
            }
            if (j - i <= 1) {
                memo[key(i, j)] = j - i;
                ++stats.states;
                todo.pop_back();
                continue;
            }
            int hij = rmq.min(i, j);
            if (hij < std::max(rmq.values()[i], rmq.values()[j]) - 2 * d) {
                memo[key(i, j)] = kAgdInfinity;
                ++stats.states;
                ++stats.pruned_calls;
                todo.pop_back();
                continue;
            }
            if (hij == rmq.min(i + 1, j - 1)) {
                int k = rmq.argmin(i + 1, j - 1);  // smallest index at the minimum
                const std::int32_t* a = lookup(i, k);
                const std::int32_t* b = lookup(k, j);
                if (a && b) {
                    memo[key(i, j)] = sat_add(*a, *b);
                    ++stats.states;
                    ++stats.easy_calls;
                    todo.pop_back();
                } else {
                    if (!a) todo.push_back({i, k});
                    if (!b) todo.push_back({k, j});
                }
                continue;
            }
            // Hard state: match transition plus sparsified pivots.
            gather_pivots(i, j, pivots);
            bool ready = true;
            if (!lookup(i + 1, j - 1)) {
                todo.push_back({i + 1, j - 1});
                ready = false;
            }
            for (int k : pivots) {
                if (!lookup(i, k)) {
                    todo.push_back({i, k});
                    ready = false;
                }
                if (!lookup(k, j)) {
                    todo.push_back({k, j});
                    ready = false;
                }
            }
            if (!ready) continue;
            std::int32_t best =
                sat_add(*lookup(i + 1, j - 1), pair_cost(sym[i], sym[j - 1]));
            for (int k : pivots) {
                best = std::min(best, sat_add(*lookup(i, k), *lookup(k, j)));
                ++stats.transitions;
            }
            memo[key(i, j)] = best;
            ++stats.states;
            ++stats.hard_calls;
            todo.pop_back();
        }
        return *lookup(root_i, root_j);
    }
};

}  // namespace

std::int32_t agd_root(const ParenString& x, int d, int tau, AgdStats* stats) {
    if (d < 1) throw std::invalid_argument("distance threshold must be at least 1");
    int n = x.size();
    if (n == 0) return 0;
    PtasParams params = PtasParams::make(tau, n);
    HeightProfile hp = height_profile(x);
    RmqIndex rmq(hp.h);
    std::vector<int> K = pivot_candidates(hp);
    AgdSolver solver{x.symbols(), K, rmq, params, n, d, {}, {}};
    std::int32_t v = solver.run(0, n);
    if (stats) *stats = solver.stats;
    return v;
}

DyckSmallResult dyck_small(const ParenString& x, int d, double epsilon, AgdStats* stats) {
    if (d < 1) throw std::invalid_argument("d must be at least 1");
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw std::invalid_argument("epsilon must be in (0,1]");
    ParenString r = reduce_dyck(x);
    if (r.empty()) return {0, d};
    int tau = ptas_tau(epsilon / 3.0, pivot_candidates(r).size());
    std::int32_t v = agd_root(r, 3 * d, tau, stats);
    double limit = (1.0 + epsilon / 3.0) * 3.0 * d;
    if (v > limit) return {std::nullopt, d};
    return {static_cast<int>(v), d};
}

}  // namespace parendist
