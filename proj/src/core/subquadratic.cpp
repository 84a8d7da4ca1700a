#include "subquadratic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <climits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "ptas.hpp"
#include "rng.hpp"
#include "small_distance.hpp"

namespace parendist::subq {

namespace {

constexpr std::uint64_t kTagSparse = 0x73706172;
constexpr std::uint64_t kTagLarge = 0x6c617267;

std::uint64_t pack_ij(int i, int j) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
           static_cast<std::uint32_t>(j);
}

int pow2_floor(double v) {
    if (v < 1.0) return 1;
    int p = 1;
    while (2.0 * p <= v && p < (1 << 29)) p *= 2;
    return p;
}

bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

// Concatenation of two dyck-reduced strings, reduced again: only the
// interface between them can cancel.
std::vector<Symbol> merge_reduced(std::span<const Symbol> a, std::span<const Symbol> b) {
    std::vector<Symbol> out(a.begin(), a.end());
    out.reserve(a.size() + b.size());
    for (Symbol c : b) {
        if (!out.empty() && is_open(out.back()) && c == complement(out.back()))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

// Inner Dyck-Approx on an already reduced string: dyck_ptas with epsilon = 1.
long long approx_reduced(std::span<const Symbol> reduced) {
    size_t n = reduced.size();
    if (n <= 1) return static_cast<long long>(n);
    if (n == 2) return pair_cost(reduced[0], reduced[1]);
    int tau = ptas_tau(SubquadraticParams::inner_epsilon,
                       pivot_candidates(height_profile(reduced)).size());
    return ad_root(reduced, tau);
}

// Runs body(slot, lo, hi) over a partition of [0..total); slot indexes the
// chunk so callers can keep per-chunk output buffers merged in order.
void parallel_for(int total, int threads, const std::function<void(int, int, int)>& body) {
    if (threads <= 1 || total <= 1) {
        body(0, 0, total);
        return;
    }
    threads = std::min(threads, total);
    std::vector<std::thread> pool;
    int chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int lo = t * chunk;
        int hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, t, lo, hi);
    }
    for (auto& th : pool) th.join();
}

// Per-grid working state: reduced text of every window plus value caches for
// the inner approximator (its results are deterministic, so caching across
// phases is safe).
struct GridText {
    const WindowGrid* grid = nullptr;
    std::vector<std::vector<Symbol>> reduced;

    void build(const ParenString& x, const WindowGrid& g) {
        grid = &g;
        reduced.resize(g.windows().size());
        for (size_t i = 0; i < g.windows().size(); ++i) {
            const Window& w = g.windows()[i];
            if (w.empty()) continue;
            std::span<const Symbol> frag = x.symbols().subspan(w.start - 1, w.length());
            reduced[i] = reduce_dyck(frag);
        }
    }
};

struct Context {
    const ParenString& x;
    const WindowGrid& jg;
    const WindowGrid& kg;
    const SubquadraticParams& params;
    GridText jt;
    GridText kt;
    std::unordered_map<std::uint64_t, long long> da_kk;    // K x K forward pairs
    std::unordered_map<std::uint64_t, long long> da_k_rc;  // K x rc(K)
    std::unordered_map<std::uint64_t, long long> da_jj;    // J x J forward pairs
    std::vector<std::vector<int>> j_containing_k;          // lazily filled

    Context(const ParenString& x_, const WindowGrid& j_, const WindowGrid& k_,
            const SubquadraticParams& p)
        : x(x_), jg(j_), kg(k_), params(p) {
        jt.build(x, jg);
        kt.build(x, kg);
    }

    long long da_pair_k(int i, int j, bool cache) {
        if (cache) {
            auto it = da_kk.find(pack_ij(i, j));
            if (it != da_kk.end()) return it->second;
        }
        long long v = approx_reduced(merge_reduced(kt.reduced[i], kt.reduced[j]));
        if (cache) da_kk.emplace(pack_ij(i, j), v);
        return v;
    }

    long long da_pair_k_rc(int i, int j) {  // x[w_i] followed by rc(x[w_j])
        auto it = da_k_rc.find(pack_ij(i, j));
        if (it != da_k_rc.end()) return it->second;
        std::vector<Symbol> rc = reverse_complement(kt.reduced[j]);
        long long v = approx_reduced(merge_reduced(kt.reduced[i], rc));
        da_k_rc.emplace(pack_ij(i, j), v);
        return v;
    }

    long long da_pair_j(int i, int j) {
        auto it = da_jj.find(pack_ij(i, j));
        if (it != da_jj.end()) return it->second;
        long long v = approx_reduced(merge_reduced(jt.reduced[i], jt.reduced[j]));
        da_jj.emplace(pack_ij(i, j), v);
        return v;
    }

    const std::vector<int>& containing_j(int k_idx) {
        if (j_containing_k.empty()) j_containing_k.resize(kg.windows().size());
        auto& slot = j_containing_k[k_idx];
        if (!slot.empty() || kg.windows()[k_idx].empty()) return slot;
        const Window& q = kg.windows()[k_idx];
        const auto& jws = jg.windows();
        for (int i = 0; i < static_cast<int>(jws.size()); ++i)
            if (!jws[i].empty() && jws[i].contains(q)) slot.push_back(i);
        return slot;
    }
};

std::vector<long long> cost_schedule(int s2) {
    std::vector<long long> cs{0, 1};
    for (long long c = 2;; c *= 2) {
        cs.push_back(c);
        if (c >= 10LL * s2) break;
    }
    return cs;
}

// A certificate whose weight reaches the cost of deleting both windows never
// improves a cover, so it is not emitted.
bool informative(const Window& a, const Window& b, long long weight) {
    return weight < a.length() + b.length();
}

std::vector<char> declare_sparse_impl(Context& ctx, long long c, int phase) {
    const auto& windows = ctx.kg.windows();
    int count = static_cast<int>(windows.size());
    std::vector<char> sparse(count, 0);
    if (ctx.params.delta > count) {
        // Fewer than delta candidate partners exist, so every window is
        // (c,delta)-sparse by definition.
        std::fill(sparse.begin(), sparse.end(), 1);
        return sparse;
    }
    double logn = std::log2(std::max(2, ctx.x.size()));
    long long samples = static_cast<long long>(
        std::ceil(ctx.params.k1 * count * logn / ctx.params.delta));
    samples = std::max<long long>(samples, 1);
    double threshold = ctx.params.k1 / 2.0 * logn;
    parallel_for(count, ctx.params.threads, [&](int, int lo, int hi) {
        for (int wi = lo; wi < hi; ++wi) {
            Rng rng = Rng::derive(ctx.params.seed, kTagSparse, static_cast<std::uint64_t>(phase),
                                  static_cast<std::uint64_t>(wi));
            long long hits = 0;
            for (long long s = 0; s < samples; ++s) {
                int wj = static_cast<int>(rng.below(static_cast<std::uint64_t>(count)));
                long long v =
                    approx_reduced(merge_reduced(ctx.kt.reduced[wi], ctx.kt.reduced[wj]));
                if (v <= SubquadraticParams::alpha * c) {
                    ++hits;
                    if (hits > threshold) break;  // already dense
                }
            }
            if (hits <= threshold) sparse[wi] = 1;
        }
    });
    return sparse;
}

void certify_small_impl(Context& ctx, const std::vector<char>& sparse, long long c,
                        bool near_pairs, CertifiedSet& out) {
    const auto& windows = ctx.kg.windows();
    int count = static_cast<int>(windows.size());
    constexpr int alpha = SubquadraticParams::alpha;

    // Pivot loop over the dense windows.
    std::vector<char> remaining(count);
    for (int i = 0; i < count; ++i) remaining[i] = !sparse[i];
    for (int w = 0; w < count; ++w) {
        if (!remaining[w]) continue;
        Cluster cluster;
        cluster.weight = 5LL * alpha * alpha * c;
        for (int i = 0; i < count; ++i) {
            if (ctx.da_pair_k_rc(i, w) <= 2LL * alpha * c) {
                cluster.a1.push_back(windows[i]);
                remaining[i] = 0;
            }
        }
        remaining[w] = 0;  // the pivot itself always leaves the pool
        for (int i = 0; i < count; ++i)
            if (ctx.da_pair_k(w, i, true) <= 3LL * alpha * alpha * c)
                cluster.a2.push_back(windows[i]);
        if (!cluster.a1.empty() && !cluster.a2.empty()) out.clusters.push_back(std::move(cluster));
    }

    if (!near_pairs) return;

    // Unconditional near-pair certification: every ordered pair with starts
    // at most 5*s1 apart, plus each window paired with the empty window.
    int buckets = std::max(1, std::min(ctx.params.threads, count));
    std::vector<std::vector<WeightedWindowPair>> pair_buf(buckets);
    std::vector<std::vector<WeightedWindowPair>> single_buf(buckets);
    parallel_for(count, ctx.params.threads, [&](int slot, int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            const Window& w = windows[i];
            if (w.empty()) continue;
            long long sv = approx_reduced(ctx.kt.reduced[i]);
            if (sv < w.length())
                single_buf[slot].push_back({w, Window::empty_at(w.end), sv});
            for (int j = 0; j < count; ++j) {
                const Window& w2 = windows[j];
                if (w2.empty() || w2.start <= w.end) continue;
                if (w2.start - w.start > 5LL * ctx.params.s1) continue;
                long long v =
                    approx_reduced(merge_reduced(ctx.kt.reduced[i], ctx.kt.reduced[j]));
                if (informative(w, w2, v)) pair_buf[slot].push_back({w, w2, v});
            }
        }
    });
    for (auto& buf : pair_buf)
        out.small_pairs.insert(out.small_pairs.end(), buf.begin(), buf.end());
    for (auto& buf : single_buf)
        out.singles.insert(out.singles.end(), buf.begin(), buf.end());
}

void certify_large_impl(Context& ctx, const std::vector<char>& sparse, long long c, int phase,
                        std::unordered_map<std::uint64_t, long long>& best_jj) {
    const auto& jws = ctx.jg.windows();
    const auto& kws = ctx.kg.windows();
    constexpr int alpha = SubquadraticParams::alpha;
    double logn = std::log2(std::max(2, ctx.x.size()));
    double theta = ctx.params.theta.value();
    long long want = static_cast<long long>(
        std::ceil(ctx.params.k2 * logn * logn / (theta * theta * theta)));
    if (want <= 0) return;  // k2 = 0 disables the large-window pass

    for (int jw = 0; jw < static_cast<int>(jws.size()); ++jw) {
        const Window& w = jws[jw];
        if (w.empty()) continue;
        std::vector<int> pool;
        for (int ki = 0; ki < static_cast<int>(kws.size()); ++ki)
            if (sparse[ki] && !kws[ki].empty() && w.contains(kws[ki])) pool.push_back(ki);
        if (pool.empty()) continue;
        Rng rng = Rng::derive(ctx.params.seed, kTagLarge, static_cast<std::uint64_t>(phase),
                              static_cast<std::uint64_t>(jw));
        std::vector<int> picks;
        if (want >= static_cast<long long>(pool.size())) {
            picks = pool;  // sampling degenerates to a full scan
        } else {
            for (int idx : rng.sample_without_replacement(static_cast<int>(pool.size()),
                                                          static_cast<int>(want)))
                picks.push_back(pool[idx]);
        }
        for (int w1 : picks) {
            for (int w2 = 0; w2 < static_cast<int>(kws.size()); ++w2) {
                if (kws[w2].empty()) continue;
                if (ctx.da_pair_k(w1, w2, true) > static_cast<long long>(alpha) * c) continue;
                for (int j_idx : ctx.containing_j(w2)) {
                    const Window& wt = jws[j_idx];
                    if (wt.start <= w.end) continue;
                    std::uint64_t key = pack_ij(jw, j_idx);
                    long long v = ctx.da_pair_j(jw, j_idx);
                    if (!informative(w, wt, v)) continue;
                    auto [it, inserted] = best_jj.emplace(key, v);
                    if (!inserted && it->second <= v) continue;
                    it->second = v;
                }
            }
        }
    }
}

struct CoverInput {
    int n;
    int step;  // all window endpoints are multiples of this
};

long long cover_with_deletions(const CertifiedSet& set, int n, int step) {
    int m = n / step;
    auto rk = [step](int v) { return v / step; };

    struct Tr {
        int gl, gr;
        long long w;
    };
    std::unordered_map<std::uint64_t, std::vector<Tr>> pair_tr;
    std::unordered_map<std::uint64_t, long long> single_tr;

    auto add_single = [&](const Window& w, long long weight) {
        if (w.empty() || weight >= w.length()) return;
        std::uint64_t key = pack_ij(rk(w.start - 1), rk(w.end));
        auto [it, inserted] = single_tr.emplace(key, weight);
        if (!inserted && it->second > weight) it->second = weight;
    };
    auto add_pair = [&](const Window& a, const Window& b, long long weight) {
        if (a.empty() && b.empty()) return;
        if (a.empty()) return add_single(b, weight);
        if (b.empty()) return add_single(a, weight);
        if (a.end >= b.start || !informative(a, b, weight)) return;
        std::uint64_t key = pack_ij(rk(a.start - 1), rk(b.end));
        pair_tr[key].push_back({rk(a.end), rk(b.start - 1), weight});
    };

    for (const auto& p : set.small_pairs) add_pair(p.left, p.right, p.weight);
    for (const auto& p : set.large_pairs) add_pair(p.left, p.right, p.weight);
    for (const auto& p : set.singles) add_pair(p.left, p.right, p.weight);

    // Clusters: bucket A1 by start rank and A2 by end rank, then expand at
    // the matching DP cells only.
    struct ClusterIdx {
        std::unordered_map<int, std::vector<Window>> a1_by_start;
        std::unordered_map<int, std::vector<Window>> a2_by_end;
        long long weight;
    };
    std::vector<ClusterIdx> cidx;
    cidx.reserve(set.clusters.size());
    for (const auto& cl : set.clusters) {
        ClusterIdx ci;
        ci.weight = cl.weight;
        bool a1_has_empty = false, a2_has_empty = false;
        for (const Window& w : cl.a1) {
            if (w.empty())
                a1_has_empty = true;
            else
                ci.a1_by_start[rk(w.start - 1)].push_back(w);
        }
        for (const Window& w : cl.a2) {
            if (w.empty())
                a2_has_empty = true;
            else
                ci.a2_by_end[rk(w.end)].push_back(w);
        }
        if (a2_has_empty)
            for (const Window& w : cl.a1) add_single(w, cl.weight);
        if (a1_has_empty)
            for (const Window& w : cl.a2) add_single(w, cl.weight);
        if (!ci.a1_by_start.empty() && !ci.a2_by_end.empty()) cidx.push_back(std::move(ci));
    }

    std::vector<long long> table(static_cast<size_t>(m + 1) * (m + 1), 0);
    auto dp = [&](int i, int j) -> long long& {
        return table[static_cast<size_t>(i) * (m + 1) + j];
    };
    for (int i = m; i >= 0; --i) {
        for (int j = i + 1; j <= m; ++j) {
            long long best = static_cast<long long>(j - i) * step;  // delete everything
            if (auto it = single_tr.find(pack_ij(i, j)); it != single_tr.end())
                best = std::min(best, it->second);
            if (auto it = pair_tr.find(pack_ij(i, j)); it != pair_tr.end())
                for (const Tr& t : it->second)
                    best = std::min(best, t.w + dp(t.gl, t.gr));
            for (const ClusterIdx& ci : cidx) {
                auto a1 = ci.a1_by_start.find(i);
                if (a1 == ci.a1_by_start.end()) continue;
                auto a2 = ci.a2_by_end.find(j);
                if (a2 == ci.a2_by_end.end()) continue;
                for (const Window& w1 : a1->second)
                    for (const Window& w2 : a2->second) {
                        if (w1.end >= w2.start || !informative(w1, w2, ci.weight)) continue;
                        best = std::min(best, ci.weight + dp(rk(w1.end), rk(w2.start - 1)));
                    }
            }
            for (int k = i + 1; k < j; ++k) best = std::min(best, dp(i, k) + dp(k, j));
            dp(i, j) = best;
        }
    }
    return dp(0, m);
}

}  // namespace

long long CertifiedSet::entry_count() const {
    long long total = static_cast<long long>(small_pairs.size()) +
                      static_cast<long long>(large_pairs.size()) +
                      static_cast<long long>(singles.size());
    for (const auto& cl : clusters) {
        long long e1 = std::count_if(cl.a1.begin(), cl.a1.end(),
                                     [](const Window& w) { return w.empty(); });
        long long e2 = std::count_if(cl.a2.begin(), cl.a2.end(),
                                     [](const Window& w) { return w.empty(); });
        total += static_cast<long long>(cl.a1.size()) * cl.a2.size() - e1 * e2;
    }
    return total;
}

void CertifiedSet::for_each_pair(
    const std::function<void(const Window&, const Window&, long long)>& f) const {
    for (const auto& p : small_pairs) f(p.left, p.right, p.weight);
    for (const auto& p : large_pairs) f(p.left, p.right, p.weight);
    for (const auto& p : singles) f(p.left, p.right, p.weight);
    for (const auto& cl : clusters)
        for (const Window& a : cl.a1)
            for (const Window& b : cl.a2) {
                if (a.empty() && b.empty()) continue;
                f(a, b, cl.weight);
            }
}

SubquadraticParams derive_params(int n_padded, Theta theta) {
    SubquadraticParams p;
    p.theta = theta;
    int inv_theta = 1 << (-theta.log2);
    double dn = static_cast<double>(n_padded);
    p.s2 = std::max(pow2_floor(std::pow(dn, 13.0 / 34.0)), inv_theta);
    p.s1 = std::max({pow2_floor(std::pow(dn, 21.0 / 34.0)), p.s2,
                     p.s2 * inv_theta});  // enforces s2/s1 <= theta
    p.delta = pow2_floor(std::pow(dn, 5.0 / 34.0));
    if (p.s1 > n_padded)
        throw std::invalid_argument("theta too small for this input length");
    return p;
}

void validate_params(const SubquadraticParams& p, int n_padded) {
    if (!is_pow2(p.s1) || !is_pow2(p.s2) || !is_pow2(p.delta))
        throw std::invalid_argument("s1, s2, delta must be powers of two");
    if (p.s2 > p.s1 || p.s1 > n_padded || n_padded % p.s1 != 0)
        throw std::invalid_argument("need s2 | s1 and s1 | n");
    if (!p.theta.scales(p.s2) || !p.theta.scales(p.s1))
        throw std::invalid_argument("grid steps theta*s1, theta*s2 must be positive integers");
    if (p.theta.scale(p.s1) < p.s2)
        throw std::invalid_argument("need s2/s1 <= theta");
    if (!(p.k1 > 0.0) || p.k2 < 0.0)
        throw std::invalid_argument("k1 must be positive and k2 non-negative");
    if (p.delta < 1 || p.threads < 1) throw std::invalid_argument("bad delta or threads");
}

std::vector<char> declare_sparse(const ParenString& x, const WindowGrid& k_grid, long long c,
                                 const SubquadraticParams& params, int phase) {
    WindowGrid j_grid(k_grid.n(), params.theta, params.s1);
    Context ctx(x, j_grid, k_grid, params);
    return declare_sparse_impl(ctx, c, phase);
}

void certify_small(const ParenString& x, const WindowGrid& k_grid,
                   const std::vector<char>& sparse, long long c,
                   const SubquadraticParams& params, CertifiedSet& out) {
    WindowGrid j_grid(k_grid.n(), params.theta, params.s1);
    Context ctx(x, j_grid, k_grid, params);
    certify_small_impl(ctx, sparse, c, true, out);
}

void certify_large(const ParenString& x, const WindowGrid& j_grid, const WindowGrid& k_grid,
                   const std::vector<char>& sparse, long long c,
                   const SubquadraticParams& params, int phase, CertifiedSet& out) {
    Context ctx(x, j_grid, k_grid, params);
    std::unordered_map<std::uint64_t, long long> best;
    certify_large_impl(ctx, sparse, c, phase, best);
    std::vector<std::pair<std::uint64_t, long long>> ordered(best.begin(), best.end());
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [key, w] : ordered)
        out.large_pairs.push_back({ctx.jg.windows()[static_cast<int>(key >> 32)],
                                   ctx.jg.windows()[static_cast<int>(key & 0xffffffffu)], w});
}

CertifiedSet certifying_window_pairs(const ParenString& x, const WindowGrid& j_grid,
                                     const WindowGrid& k_grid,
                                     const SubquadraticParams& params) {
    Context ctx(x, j_grid, k_grid, params);
    CertifiedSet out;
    std::unordered_map<std::uint64_t, long long> best_jj;
    std::vector<long long> schedule = cost_schedule(params.s2);
    for (int phase = 0; phase < static_cast<int>(schedule.size()); ++phase) {
        long long c = schedule[phase];
        std::vector<char> sparse = declare_sparse_impl(ctx, c, phase);
        certify_small_impl(ctx, sparse, c, /*near_pairs=*/phase == 0, out);
        certify_large_impl(ctx, sparse, c, phase, best_jj);
    }
    out.large_pairs.reserve(best_jj.size());
    std::vector<std::pair<std::uint64_t, long long>> ordered(best_jj.begin(), best_jj.end());
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [key, w] : ordered)
        out.large_pairs.push_back({j_grid.windows()[static_cast<int>(key >> 32)],
                                   j_grid.windows()[static_cast<int>(key & 0xffffffffu)], w});
    return out;
}

std::optional<long long> min_weight_cover(int n,
                                          const std::vector<WeightedWindowPair>& pairs) {
    // Endpoint set from non-empty windows only.
    std::vector<int> pts{0, n};
    for (const auto& p : pairs) {
        for (const Window* w : {&p.left, &p.right}) {
            if (w->empty()) continue;
            pts.push_back(w->start - 1);
            pts.push_back(w->end);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.front() < 0 || pts.back() > n)
        throw std::invalid_argument("window outside [1..n]");
    int m = static_cast<int>(pts.size());
    auto rk = [&](int v) {
        return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), v) - pts.begin());
    };

    constexpr long long inf = LLONG_MAX / 4;
    struct Tr {
        int gl, gr;
        long long w;
    };
    std::unordered_map<std::uint64_t, std::vector<Tr>> pair_tr;
    std::unordered_map<std::uint64_t, long long> single_tr;
    for (const auto& p : pairs) {
        if (p.left.empty() && p.right.empty()) continue;
        if (p.left.empty() || p.right.empty()) {
            const Window& w = p.left.empty() ? p.right : p.left;
            std::uint64_t key = pack_ij(rk(w.start - 1), rk(w.end));
            auto [it, ins] = single_tr.emplace(key, p.weight);
            if (!ins && it->second > p.weight) it->second = p.weight;
            continue;
        }
        if (p.left.end >= p.right.start)
            throw std::invalid_argument("weighted pair windows out of order");
        pair_tr[pack_ij(rk(p.left.start - 1), rk(p.right.end))].push_back(
            {rk(p.left.end), rk(p.right.start - 1), p.weight});
    }

    std::vector<long long> table(static_cast<size_t>(m) * m, inf);
    auto dp = [&](int i, int j) -> long long& {
        return table[static_cast<size_t>(i) * m + j];
    };
    for (int i = m - 1; i >= 0; --i) {
        dp(i, i) = 0;
        for (int j = i + 1; j < m; ++j) {
            long long best = inf;
            if (auto it = single_tr.find(pack_ij(i, j)); it != single_tr.end())
                best = std::min(best, it->second);
            if (auto it = pair_tr.find(pack_ij(i, j)); it != pair_tr.end())
                for (const Tr& t : it->second) {
                    long long inner = dp(t.gl, t.gr);
                    if (inner < inf) best = std::min(best, t.w + inner);
                }
            for (int k = i + 1; k < j; ++k) {
                if (dp(i, k) < inf && dp(k, j) < inf)
                    best = std::min(best, dp(i, k) + dp(k, j));
            }
            dp(i, j) = best;
        }
    }
    long long v = dp(rk(0), rk(n));
    if (v >= inf) return std::nullopt;
    return v;
}

namespace {

ParenString pad_to_power_of_two(const ParenString& x, int n_target) {
    int t = x.alphabet().type_count();
    Alphabet padded_alpha(t + 2);
    std::vector<Symbol> syms(x.symbols().begin(), x.symbols().end());
    int deficit = n_target - x.size();
    if (deficit % 2 == 1) {
        syms.push_back(static_cast<Symbol>(t + 1));  // lone fresh opener
        --deficit;
    }
    for (int i = 0; i < deficit / 2; ++i) {
        syms.push_back(static_cast<Symbol>(t + 2));
        syms.push_back(static_cast<Symbol>(-(t + 2)));
    }
    return ParenString(std::move(padded_alpha), std::move(syms));
}

}  // namespace

GapReport gap_dyck_est(const ParenString& x, Theta theta, std::uint64_t seed,
                       const GapOverrides& overrides) {
    GapReport report;
    report.n_input = x.size();
    if (x.size() == 0) return report;

    int inv_theta = 1 << (-theta.log2);
    int n_pad = static_cast<int>(std::bit_ceil(
        static_cast<unsigned>(std::max({x.size(), 8, inv_theta * inv_theta}))));
    SubquadraticParams params = derive_params(n_pad, theta);
    if (overrides.s1) params.s1 = *overrides.s1;
    if (overrides.s2) params.s2 = *overrides.s2;
    if (overrides.delta) params.delta = *overrides.delta;
    if (overrides.k1) params.k1 = *overrides.k1;
    if (overrides.k2) params.k2 = *overrides.k2;
    params.threads = overrides.threads;
    params.seed = seed;
    validate_params(params, n_pad);

    ParenString padded = pad_to_power_of_two(x, n_pad);
    WindowGrid j_grid(n_pad, theta, params.s1);
    WindowGrid k_grid(n_pad, theta, params.s2);
    CertifiedSet set = certifying_window_pairs(padded, j_grid, k_grid, params);

    report.estimate = cover_with_deletions(set, n_pad, k_grid.step());
    report.n_padded = n_pad;
    report.params = params;
    report.grid_large = static_cast<long long>(j_grid.windows().size());
    report.grid_small = static_cast<long long>(k_grid.windows().size());
    report.certified_entries = set.entry_count();
    report.phases = static_cast<int>(cost_schedule(params.s2).size());
    return report;
}

DyckEstReport dyck_est(const ParenString& x, std::uint64_t seed, const GapOverrides& overrides) {
    DyckEstReport report;
    int n = x.size();
    if (n == 0) {
        report.path = "small";
        return report;
    }
    int d = std::max(1, static_cast<int>(std::ceil(std::pow(n, 33.0 / 34.0))));
    DyckSmallResult small = dyck_small(x, d, 1.0);
    if (!small.exceeds()) {
        report.estimate = *small.value;
        report.path = "small";
        return report;
    }
    report.path = "gap";
    long long best = n;  // deleting everything is always admissible
    for (int k = 0;; ++k) {
        double theta_val = 1.0 / static_cast<double>(1 << k);
        if (theta_val < std::pow(n, -1.0 / 34.0)) break;
        GapReport run = gap_dyck_est(x, Theta{-k}, seed + k, overrides);
        report.gap_runs.push_back(run);
        best = std::min(best, run.estimate);
        if (k > 30) break;
    }
    report.estimate = best;
    return report;
}

}  // namespace parendist::subq
