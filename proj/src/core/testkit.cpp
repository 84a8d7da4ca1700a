#include "testkit.hpp"

#include <algorithm>
#include <stdexcept>

#include "rng.hpp"

namespace parendist::testkit {

ParenString gen_balanced(int pair_count, int type_count, std::uint64_t seed) {
    if (pair_count < 0) throw std::invalid_argument("pair_count must be non-negative");
    Rng rng(seed);
    std::vector<Symbol> out;
    out.reserve(2 * static_cast<size_t>(pair_count));

    struct Task {
        int pairs;      // pairs < 0 means "emit symbol"
        Symbol symbol;
    };
    std::vector<Task> todo{{pair_count, 0}};
    while (!todo.empty()) {
        Task t = todo.back();
        todo.pop_back();
        if (t.pairs < 0) {
            out.push_back(t.symbol);
            continue;
        }
        if (t.pairs == 0) continue;
        // S -> a S_j a' S_rest
        Symbol a = static_cast<Symbol>(rng.range(1, type_count));
        int inner = rng.range(0, t.pairs - 1);
        int rest = t.pairs - 1 - inner;
        todo.push_back({rest, 0});
        todo.push_back({-1, complement(a)});
        todo.push_back({inner, 0});
        todo.push_back({-1, a});
    }
    return ParenString(Alphabet(type_count), std::move(out));
}

ParenString perturb(const ParenString& x, int k, std::uint64_t seed) {
    if (k < 0) throw std::invalid_argument("edit count must be non-negative");
    Rng rng(seed);
    int t = x.alphabet().type_count();
    std::vector<Symbol> sym(x.symbols().begin(), x.symbols().end());
    auto random_symbol = [&] {
        Symbol s = static_cast<Symbol>(rng.range(1, t));
        return rng.coin() ? s : complement(s);
    };
    for (int e = 0; e < k; ++e) {
        int n = static_cast<int>(sym.size());
        int op = n == 0 ? 0 : rng.range(0, 2);
        if (op == 0) {  // insert
            int pos = rng.range(0, n);
            sym.insert(sym.begin() + pos, random_symbol());
        } else if (op == 1) {  // delete
            sym.erase(sym.begin() + rng.range(0, n - 1));
        } else {  // substitute with a different symbol
            int pos = rng.range(0, n - 1);
            Symbol s = random_symbol();
            while (s == sym[pos]) s = random_symbol();
            sym[pos] = s;
        }
    }
    return x.with_symbols(std::move(sym));
}

PlantedInstance make_planted(int pair_count, int type_count, int edits, std::uint64_t seed) {
    ParenString base = gen_balanced(pair_count, type_count, seed);
    return {perturb(base, edits, seed ^ 0x5deece66dULL), edits, seed};
}

namespace {

int brute_dyck_rec(std::span<const Symbol> s, int lo, int hi) {
    if (lo >= hi) return 0;
    int best = 1 + brute_dyck_rec(s, lo + 1, hi);  // leave s[lo] unmatched
    for (int m = lo + 1; m < hi; ++m) {
        int c = pair_cost(s[lo], s[m]) + brute_dyck_rec(s, lo + 1, m) +
                brute_dyck_rec(s, m + 1, hi);
        best = std::min(best, c);
    }
    return best;
}

int brute_fold_rec(std::span<const Symbol> s, int lo, int hi) {
    if (lo >= hi) return 0;
    int best = 1 + brute_fold_rec(s, lo + 1, hi);
    for (int m = lo + 1; m < hi; ++m) {
        if (s[m] != complement(s[lo])) continue;
        int c = brute_fold_rec(s, lo + 1, m) + brute_fold_rec(s, m + 1, hi);
        best = std::min(best, c);
    }
    return best;
}

}  // namespace

int brute_force_dyck(const ParenString& x, int cap) {
    if (x.size() > cap) throw std::invalid_argument("brute_force_dyck: string too long");
    return brute_dyck_rec(x.symbols(), 0, x.size());
}

int brute_force_fold(const ParenString& x, int cap) {
    if (x.size() > cap) throw std::invalid_argument("brute_force_fold: string too long");
    return brute_fold_rec(x.symbols(), 0, x.size());
}

namespace {

// Driver state for the P_M process. A pivot of [a..b] is a cut position p
// (split between p and p+1) such that no M-pair inside [a..b] has one
// endpoint <= p and the other > p.
struct PmProcess {
    const std::vector<int>& partner;  // 1-based, 0 = unmatched
    int s1;
    std::vector<WindowPair> out;

    // Straddle counts for cuts a..b-1 of interval [a..b]; cnt[p-a] for cut p.
    std::vector<int> cut_counts(int a, int b) const {
        std::vector<int> cnt(std::max(0, b - a), 0);
        int run = 0;
        for (int p = a; p < b; ++p) {
            int q = partner[p];
            if (q >= a && q <= b) run += (q > p) ? 1 : -1;
            cnt[p - a] = run;
        }
        return cnt;
    }

    // Leftmost (dir=+1) or rightmost (dir=-1) pivot of [a..b] among cuts
    // [lo..hi]; returns 0 when none exists. Cut p == a-1 or p == b would be
    // trivially valid but is never in the ranges the process queries.
    int find_pivot(int a, int b, int lo, int hi, int dir) const {
        lo = std::max(lo, a);
        hi = std::min(hi, b - 1);
        if (lo > hi) return 0;
        std::vector<int> cnt = cut_counts(a, b);
        if (dir > 0) {
            for (int p = lo; p <= hi; ++p)
                if (cnt[p - a] == 0) return p;
        } else {
            for (int p = hi; p >= lo; --p)
                if (cnt[p - a] == 0) return p;
        }
        return 0;
    }

    void run(int i1, int i2) {
        while (i1 <= i2) {
            if (i2 - i1 <= 4 * s1) {  // case 1
                int mid = (i1 + i2) / 2;
                out.push_back({Window{i1, mid},
                               mid + 1 <= i2 ? Window{mid + 1, i2} : Window::empty_at(i2)});
                return;
            }
            int k1 = 0;
            for (int j = i1 + s1; j >= i1; --j) {
                int q = partner[j];
                if (q >= i2 - s1 && q <= i2) {
                    k1 = j;
                    break;
                }
            }
            if (k1 == 0) {
                if (int p = find_pivot(i1, i2, i1 + s1, i1 + 2 * s1, +1)) {  // case 2
                    int mid = (i1 + p) / 2;
                    out.push_back({Window{i1, mid}, Window{mid + 1, p}});
                    i1 = p + 1;
                    continue;
                }
                if (int p = find_pivot(i1, i2, i2 - 2 * s1, i2 - s1, -1)) {  // case 3
                    int mid = (p + i2) / 2;
                    out.push_back({Window{p + 1, mid}, Window{mid + 1, i2}});
                    i2 = p;
                    continue;
                }
                int p = find_pivot(i1, i2, i1 + 2 * s1, i2 - 1, +1);  // case 4
                if (p == 0) throw std::logic_error("P_M case 4: no far pivot found");
                run(i1, p);
                i1 = p + 1;
                continue;
            }
            int m1 = partner[k1];
            // Pivots below are w.r.t. the subproblem strictly inside (k1..m1).
            if (int p = find_pivot(k1 + 1, m1 - 1, i1 + s1, i1 + 2 * s1, +1)) {  // case 5
                out.push_back({Window{i1, p}, Window{m1, i2}});
                i1 = p + 1;
                i2 = m1 - 1;
                continue;
            }
            if (int p = find_pivot(k1 + 1, m1 - 1, i2 - 2 * s1, i2 - s1, -1)) {  // case 6
                out.push_back({Window{i1, k1}, Window{p + 1, i2}});
                i1 = k1 + 1;
                i2 = p;
                continue;
            }
            if (k1 >= i1 + s1 || m1 <= i2 - s1) {  // case 7
                out.push_back({Window{i1, k1}, Window{m1, i2}});
                i1 = k1 + 1;
                i2 = m1 - 1;
                continue;
            }
            int p = find_pivot(k1 + 1, m1 - 1, i1 + 2 * s1, m1 - 2, +1);  // case 8
            if (p == 0) throw std::logic_error("P_M case 8: no far pivot found");
            out.push_back({Window{i1, k1}, Window{m1, i2}});
            run(k1 + 1, p);
            i1 = p + 1;
            i2 = m1 - 1;
        }
    }
};

}  // namespace

std::vector<WindowPair> decompose_pm(const ParenString& x, const Alignment& m, int s1) {
    if (s1 < 1) throw std::invalid_argument("s1 must be positive");
    int n = x.size();
    std::vector<int> partner(n + 1, 0);
    for (auto [i, j] : m.pairs()) {
        if (j > n) throw std::invalid_argument("alignment does not fit the string");
        partner[i] = j;
        partner[j] = i;
    }
    PmProcess proc{partner, s1, {}};
    if (n >= 1) proc.run(1, n);
    return proc.out;
}

std::vector<WindowPair> cap_decomposition(const std::vector<WindowPair>& pairs, Theta theta,
                                          int s) {
    int g = theta.scale(s);  // throws when the step is not integral
    auto round_up = [g](int v) { return (v + g - 1) / g * g; };
    auto cap = [&](const Window& w) {
        if (w.empty()) return Window::empty_at(round_up(w.anchor()));
        int ns = round_up(w.start - 1) + 1;
        int ne = round_up(w.end);
        if (ns > ne) return Window::empty_at(ne);
        return Window{ns, ne};
    };
    std::vector<WindowPair> out;
    out.reserve(pairs.size());
    for (const auto& [w, w2] : pairs) out.push_back({cap(w), cap(w2)});
    return out;
}

long long restricted_cost(const ParenString& x, const Alignment& m, const Window& w,
                          const Window& w2) {
    auto inside = [&](int p) { return (!w.empty() && w.start <= p && p <= w.end) ||
                                      (!w2.empty() && w2.start <= p && p <= w2.end); };
    long long cost = w.length() + w2.length();
    for (auto [i, j] : m.pairs()) {
        if (inside(i) && inside(j)) cost += pair_cost(x.at(i), x.at(j)) - 2;
    }
    return cost;
}

}  // namespace parendist::testkit
