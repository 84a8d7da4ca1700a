// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Tolerances and instance counts are pinned here; measured constants
// are printed alongside the verdicts.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "bench.hpp"
#include "core.hpp"
#include "exact.hpp"
#include "fold.hpp"
#include "io.hpp"
#include "ptas.hpp"
#include "rmq.hpp"
#include "rng.hpp"
#include "small_distance.hpp"
#include "subquadratic.hpp"
#include "testkit.hpp"
#include "window.hpp"

using namespace parendist;

namespace {

int g_failures = 0;

void report(int number, bool pass, const std::string& name, const std::string& detail) {
    std::printf("%2d. %s  %-28s %s\n", number, pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

ParenString random_string(int n, int types, Rng& rng) {
    std::vector<Symbol> sym;
    sym.reserve(n);
    for (int i = 0; i < n; ++i) {
        Symbol s = static_cast<Symbol>(rng.range(1, types));
        sym.push_back(rng.coin() ? s : complement(s));
    }
    return ParenString(Alphabet(types), std::move(sym));
}

// Balanced string assembled from short balanced chunks; keeps window
// reductions small, which is the regime the gap sweep exercises.
ParenString gen_tiled_balanced(int n, int types, std::uint64_t seed) {
    std::vector<Symbol> sym;
    Rng rng(seed);
    while (static_cast<int>(sym.size()) < n) {
        int chunk = std::min((n - static_cast<int>(sym.size())) / 2, rng.range(4, 16));
        if (chunk <= 0) break;
        ParenString b = testkit::gen_balanced(chunk, types, rng.next());
        sym.insert(sym.end(), b.symbols().begin(), b.symbols().end());
    }
    return ParenString(Alphabet(types), std::move(sym));
}

ParenString concat(std::initializer_list<const ParenString*> parts, int types) {
    std::vector<Symbol> sym;
    for (const ParenString* p : parts)
        sym.insert(sym.end(), p->symbols().begin(), p->symbols().end());
    return ParenString(Alphabet(types), std::move(sym));
}

int dyck_oracle(const ParenString& x) {
    // Brute enumeration within its cap, otherwise the cubic DP (agreement
    // between the two is what criterion 1 establishes).
    if (x.size() <= 12) return testkit::brute_force_dyck(x);
    return exact_dyck_cubic(x).value;
}

int fold_oracle(const ParenString& x) {
    if (x.size() <= 12) return testkit::brute_force_fold(x);
    return exact_fold(x);
}

// ---------------------------------------------------------------------------

void criterion1() {
    long long checked = 0;
    bool ok = true;
    for (int n = 0; n <= 8 && ok; ++n) {
        for (int mask = 0; mask < (1 << n) && ok; ++mask) {
            std::vector<Symbol> sym;
            for (int i = 0; i < n; ++i)
                sym.push_back((mask >> i) & 1 ? Symbol{1} : Symbol{-1});
            ParenString x(Alphabet(1), std::move(sym));
            ok = exact_dyck_cubic(x).value == testkit::brute_force_dyck(x);
            ++checked;
        }
    }
    Rng rng(11);
    for (int it = 0; it < 500 && ok; ++it, ++checked) {
        ParenString x = random_string(rng.range(0, 12), 2, rng);
        ok = exact_dyck_cubic(x).value == testkit::brute_force_dyck(x);
    }
    for (int it = 0; it < 1000 && ok; ++it, ++checked) {
        ParenString x = random_string(rng.range(0, 60), rng.range(1, 3), rng);
        ok = exact_dyck_pivots(x) == exact_dyck_cubic(x).value;
    }
    for (int it = 0; it < 500 && ok; ++it, ++checked) {
        ParenString x = random_string(rng.range(0, 12), rng.range(1, 2), rng);
        ok = exact_fold(x) == testkit::brute_force_fold(x);
    }
    report(1, ok, "oracle agreement", "checked " + std::to_string(checked) + " instances");
}

void criterion2() {
    ParenString fig = ParenString::from_ascii("([)[(]](]))");
    bool ok = height_profile(fig).h == std::vector<int>{0, 1, 2, 1, 2, 3, 2, 1, 2, 1, 0, -1};
    ok = ok && valleys(fig) == std::vector<int>{3, 7};
    ok = ok && pivot_candidates(fig) == std::vector<int>{2, 3, 4, 6, 7, 8};
    Alignment m({{1, 11}, {2, 9}, {4, 7}, {5, 6}}, fig.size());
    ok = ok && alignment_cost(fig, m) == 4;
    int brute = testkit::brute_force_dyck(fig);
    ok = ok && brute == 3;  // frozen oracle value; the caption guarantees <= 4
    ok = ok && exact_dyck_cubic(fig).value == brute && brute <= 4;
    report(2, ok, "figure regression",
           "exact=" + std::to_string(brute) + ", caption alignment cost=4");
}

void criterion3() {
    Rng rng(23);
    bool ok = true;
    int checked = 0;
    for (int it = 0; it < 500 && ok; ++it, ++checked) {
        ParenString x = it % 2 == 0
                            ? random_string(rng.range(0, 200), rng.range(1, 3), rng)
                            : testkit::perturb(testkit::gen_balanced(rng.range(1, 100),
                                                                     rng.range(1, 3), 7 * it),
                                               rng.range(0, 20), it);
        ParenString rd = reduce_dyck(x);
        int exact = exact_dyck_cubic(x).value;
        ok = exact_dyck_cubic(rd).value == exact;
        ok = ok && static_cast<int>(valleys(rd).size()) <= 2 * exact;
        ParenString rf = reduce_fold(x);
        ok = ok && is_fold_irreducible(rf.symbols());
        ok = ok && exact_fold(rf) == exact_fold(x);
    }
    report(3, ok, "reduction properties", std::to_string(checked) + " instances");
}

void criterion4() {
    Rng rng(31);
    bool ok = true;
    int cross_checked = 0;
    for (int it = 0; it < 500 && ok; ++it) {
        int types = rng.range(1, 2);
        ParenString x = random_string(rng.range(0, 10), types, rng);
        ParenString y = random_string(rng.range(0, 10), types, rng);
        ParenString z = random_string(rng.range(0, 10), types, rng);
        ParenString ry = reverse_complement(y), rz = reverse_complement(z);
        ParenString xz = concat({&x, &rz}, types);
        ParenString xyyz = concat({&x, &ry, &y, &rz}, types);
        ParenString xy = concat({&x, &ry}, types);
        ParenString yz = concat({&y, &rz}, types);
        int dxz = dyck_oracle(xz), dmid = dyck_oracle(xyyz);
        int dxy = dyck_oracle(xy), dyz = dyck_oracle(yz);
        ok = dxz <= dmid && dmid <= dxy + dyz;
        int fxz = fold_oracle(xz), fmid = fold_oracle(xyyz);
        int fxy = fold_oracle(xy), fyz = fold_oracle(yz);
        ok = ok && fxz == fmid && fmid <= fxy + fyz;
        if (xz.size() <= 12) ++cross_checked;
    }
    report(4, ok, "triangle inequalities",
           "500 triples, " + std::to_string(cross_checked) + " brute-checked outer terms");
}

void criterion5() {
    Rng rng(47);
    bool ok = true;
    for (int it = 0; it < 300 && ok; ++it) {
        auto inst = testkit::make_planted(rng.range(5, 1000), rng.range(1, 3),
                                          rng.range(0, 20), 101 + it);
        int exact = exact_dyck_pivots(inst.x);
        for (double eps : {0.1, 0.5, 1.0}) {
            int v = dyck_ptas(inst.x, eps);
            ok = ok && v >= exact && static_cast<double>(v) <= (1.0 + eps) * exact;
        }
    }
    for (int it = 0; it < 100 && ok; ++it) {
        ParenString x = random_string(rng.range(0, 100), rng.range(1, 2), rng);
        int tau = std::max<int>(2, pivot_candidates(x).size());
        ok = ad_root(x, tau) == exact_dyck_cubic(x).value;
    }
    report(5, ok, "ptas guarantee", "300 planted x 3 epsilons, 100 exact-tau checks");
}

void criterion6() {
    Rng rng(59);
    bool ok = true;
    for (int it = 0; it < 500 && ok; ++it) {
        auto inst = testkit::make_planted(rng.range(5, 1000), rng.range(1, 3),
                                          rng.range(0, 70), 211 + it);
        int exact = exact_dyck_pivots(inst.x);
        for (int d : {1, 8, 64}) {
            DyckSmallResult r = dyck_small(inst.x, d, 0.5);
            if (r.exceeds())
                ok = ok && exact > d;
            else
                ok = ok && *r.value >= exact &&
                     static_cast<double>(*r.value) <= 3.5 * exact;
        }
    }
    Rng rng2(61);
    for (int it = 0; it < 200 && ok; ++it) {
        ParenString x = random_string(rng2.range(2, 40), rng2.range(1, 2), rng2);
        int n = x.size();
        HeightProfile hp = height_profile(x);
        RmqIndex rmq(hp.h);
        DistanceTable d = exact_dyck_cubic_table(x);
        DistanceTable g = exact_gd_table(x);
        for (int i = 0; i <= n && ok; ++i) {
            for (int j = i; j <= n && ok; ++j) {
                int hij = rmq.min(i, j);
                ok = g.at(i, j) >= d.at(i, j) &&
                     g.at(i, j) <= 3 * d.at(i, j) - hp.h[i] - hp.h[j] + 2 * hij;
                if (ok && j - i >= 2 && rmq.min(i + 1, j - 1) == hij)
                    for (int k = i + 1; k < j && ok; ++k)
                        if (hp.h[k] == hij) ok = g.at(i, j) == g.at(i, k) + g.at(k, j);
            }
        }
    }
    report(6, ok, "small-distance guarantee",
           "500 planted x {1,8,64}, 200 GD sandwich/pivot checks");
}

void criterion7() {
    Rng rng(71);
    bool ok = true;
    long long pairs_checked = 0;
    subq::GapOverrides ov;
    ov.delta = 2;
    ov.k1 = 0.5;
    ov.k2 = 0.5;
    for (int it = 0; it < 24 && ok; ++it) {
        int n = 1 << rng.range(4, 9);  // 16..512, powers of two (no padding)
        ParenString x;
        switch (it % 3) {
            case 0: x = gen_tiled_balanced(n, 2, 500 + it); break;
            case 1: x = testkit::perturb(gen_tiled_balanced(n, 2, 600 + it),
                                         rng.range(1, n / 8), it); break;
            default: x = random_string(n, rng.range(1, 2), rng); break;
        }
        int exact = exact_dyck_pivots(x);
        ov.s1 = std::max(8, n / 8);
        ov.s2 = std::max(4, n / 16);
        subq::GapReport rep = subq::gap_dyck_est(x, Theta{-1}, 900 + it, ov);
        ok = ok && rep.estimate >= exact;
        subq::DyckEstReport est = subq::dyck_est(x, 1000 + it, ov);
        ok = ok && est.estimate >= exact;

        // Certification of every emitted pair against the exact oracle
        // (exhaustive at n <= 256, per the module invariant).
        if (n > 256) continue;
        subq::SubquadraticParams params;
        params.theta = Theta{-1};
        params.s1 = *ov.s1;
        params.s2 = *ov.s2;
        params.delta = 2;
        params.k1 = 0.5;
        params.k2 = 0.5;
        params.seed = 900 + it;
        WindowGrid jg(n, params.theta, params.s1);
        WindowGrid kg(n, params.theta, params.s2);
        subq::CertifiedSet set = subq::certifying_window_pairs(x, jg, kg, params);
        set.for_each_pair([&](const Window& a, const Window& b, long long w) {
            if (!ok) return;
            std::vector<Symbol> frag;
            for (const Window* side : {&a, &b}) {
                if (side->empty()) continue;
                frag.insert(frag.end(), x.symbols().begin() + side->start - 1,
                            x.symbols().begin() + side->end);
            }
            ok = w >= exact_dyck_pivots(ParenString(x.alphabet(), std::move(frag)));
            ++pairs_checked;
        });
    }
    report(7, ok, "subquadratic soundness",
           "24 instances <= 512, " + std::to_string(pairs_checked) + " certified pairs");
}

void criterion8() {
    struct Profile {
        int lt, s1_div, s2_div;
    };
    const Profile profiles[] = {{-1, 8, 16}, {-2, 4, 16}, {-3, 1, 8}};
    double k_max = 0;
    bool ok = true;
    std::string detail;
    for (int n : {1 << 10, 1 << 12}) {
        for (const Profile& pr : profiles) {
            Theta theta{pr.lt};
            subq::GapOverrides ov;
            ov.s1 = n / pr.s1_div;
            ov.s2 = n / pr.s2_div;
            ov.delta = 4;
            ov.k1 = 0.005;
            ov.k2 = 0.0;
            double combo_max = 0;
            for (int it = 0; it < 100; ++it) {
                ParenString x = gen_tiled_balanced(n, 2, 8000 + 97 * it + n + pr.lt);
                subq::GapReport rep = subq::gap_dyck_est(x, theta, 300 + it, ov);
                combo_max = std::max(combo_max,
                                     rep.estimate / (theta.value() * n));
            }
            // Planted rows (dyck <= theta*n/4) at n = 2^10 share the combo
            // profile; heavier damage is covered by criterion 7's oracle runs.
            if (n == 1 << 10) {
                int edits = std::max(2, static_cast<int>(theta.value() * n / 16));
                for (int it = 0; it < 25; ++it) {
                    ParenString x = testkit::perturb(
                        gen_tiled_balanced(n, 2, 9100 + it + pr.lt), edits, it);
                    subq::GapReport rep = subq::gap_dyck_est(x, theta, 400 + it, ov);
                    combo_max = std::max(combo_max,
                                         rep.estimate / (theta.value() * n));
                }
            }
            k_max = std::max(k_max, combo_max);
            detail += "k(1/" + std::to_string(1 << -pr.lt) + "," + std::to_string(n) +
                      ")=" + std::to_string(combo_max).substr(0, 5) + " ";
        }
    }
    // Pinned: one constant k <= 2.0 must cover the whole sweep, balanced and
    // planted alike (calibrated: measured k stays below 0.25).
    ok = k_max <= 2.0;
    report(8, ok, "gap behavior", "k=" + std::to_string(k_max).substr(0, 6) + "  " + detail);
}

void criterion9() {
    Rng rng(83);
    bool ok = true;
    double worst_card = 0, worst_cap_slack = 0;
    for (int it = 0; it < 200 && ok; ++it) {
        int n = 64 * rng.range(1, 2);
        auto inst = testkit::make_planted(n / 2, 2, rng.range(0, 8), 300 + it);
        const ParenString& x = inst.x;
        Alignment m = exact_dyck_cubic(x).alignment;
        long long cost_m = alignment_cost(x, m);
        for (int div : {4, 8, 16}) {
            int s1 = x.size() / div;
            if (s1 < 1) continue;
            auto pairs = testkit::decompose_pm(x, m, s1);
            for (const auto& [w, w2] : pairs)
                ok = ok && w.length() <= 4 * s1 && w2.length() <= 4 * s1;
            ok = ok && is_decomposition_of(pairs, x.size());
            long long sum = 0;
            for (const auto& [w, w2] : pairs) sum += testkit::restricted_cost(x, m, w, w2);
            ok = ok && sum <= cost_m;
            double card = static_cast<double>(pairs.size()) * s1 / x.size();
            worst_card = std::max(worst_card, card);
            ok = ok && card <= 6.0;  // |S_M| <= 6 n / s1 across the sweep

            for (int lt : {-1, -2}) {
                Theta theta{lt};
                if (!theta.scales(s1) || x.size() % theta.scale(s1) != 0) continue;
                WindowGrid grid(x.size(), theta, s1);
                auto capped = testkit::cap_decomposition(pairs, theta, s1);
                ok = ok && capped.size() == pairs.size();
                ok = ok && is_consistent(capped);
                long long capped_cost = 0;
                for (const auto& [w, w2] : capped) {
                    ok = ok && w.length() <= 5 * s1 && w2.length() <= 5 * s1;
                    ok = ok && grid.contains(w) && grid.contains(w2);
                    std::vector<Symbol> frag;
                    for (const Window* side : {&w, &w2}) {
                        if (side->empty()) continue;
                        frag.insert(frag.end(), x.symbols().begin() + side->start - 1,
                                    x.symbols().begin() + side->end);
                    }
                    capped_cost += exact_dyck_pivots(ParenString(x.alphabet(), std::move(frag)));
                }
                double slack = (capped_cost - cost_m) / (theta.value() * x.size());
                worst_cap_slack = std::max(worst_cap_slack, slack);
                ok = ok && slack <= 8.0;  // sum dyck <= cost_M + 8 theta n
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "|S|<=%.2f n/s1, cap slack <= %.2f theta n", worst_card,
                  worst_cap_slack);
    report(9, ok, "decomposition lemmas", buf);
}

void criterion10() {
    Rng rng(97);
    bool ok = true;
    int heavy = 0;
    for (int it = 0; it < 300 && ok; ++it) {
        ParenString x = reduce_fold(random_string(rng.range(0, 320), rng.range(1, 2), rng));
        if (x.size() > 300) {
            --it;  // criterion restricts to reduced length <= 300
            continue;
        }
        long long exact = exact_fold(x);
        for (long long tau : {51, 64, 100}) {
            long long v = fold_approx(x, tau);
            ok = ok && v >= exact && v <= tau * exact;
            if (exact == 0) ok = ok && v == 0;
        }
    }
    Rng rng2(101);
    int done = 0;
    while (done < 60 && ok) {
        ParenString x = reduce_fold(random_string(rng2.range(1, 40), rng2.range(1, 2), rng2));
        if (x.empty()) continue;
        ++done;
        int f = exact_fold(x);
        for (int rho : {1, 2, 3}) {
            int fr = exact_fold_rho(x, rho);
            ok = ok && fr >= f && fr <= (1 + 2 * rho) * f - rho;
        }
    }
    Rng rng3(103);
    for (int it = 0; it < 40 && ok; ++it) {
        int target = it < 36 ? rng3.range(8, 240) : 300;
        ParenString x = reduce_fold(random_string(target, rng3.range(1, 2), rng3));
        if (x.size() < 2) continue;
        if (x.size() >= 240) ++heavy;
        for (int s : {1, 2, 4}) {
            long long v = fold_table(x, s);
            int ref = exact_fold_rho(x, 8 * s);
            ok = ok && v >= ref && v <= 3LL * ref;
        }
    }
    report(10, ok, "folding guarantees",
           "300 tau-checks, 60 rho-sandwiches, 40 grid sandwiches");
}

void criterion11() {
    bool ok = true;
    char buf[160];

    // (a) ptas quadratic scaling on reduction-resistant instances.
    std::vector<std::pair<double, double>> pts;
    for (int n : {256, 512, 1024, 2048, 4096}) {
        ParenString x = bench::gen_hard_nested(n, 8, 2, 1000 + n);
        double ms = bench::median_time_ms(3, [&] { (void)dyck_ptas(x, 1.0); });
        pts.push_back({static_cast<double>(n), std::max(ms, 1e-3)});
    }
    double ptas_exp = bench::fit_power_law(pts);
    ok = ok && ptas_exp >= 1.7 && ptas_exp <= 2.4;

    // (b) folding grid DP shrinks ~8x when s doubles.
    ParenString fx = reduce_fold(ParenString(Alphabet(2), [] {
        Rng rng(77);
        std::vector<Symbol> sym;
        for (int i = 0; i < 2048; ++i) {
            Symbol s = static_cast<Symbol>(rng.range(1, 2));
            sym.push_back(rng.coin() ? s : complement(s));
        }
        return sym;
    }()));
    auto dp_ms = [&](int s) {
        FoldTableStats stats;
        double best = 1e18;
        for (int rep = 0; rep < 3; ++rep) {
            (void)fold_table(fx, s, &stats);
            best = std::min(best, stats.dp_ms);
        }
        return best;
    };
    double t2 = dp_ms(2), t4 = dp_ms(4);
    double fold_ratio = t2 / std::max(t4, 1e-3);
    ok = ok && fold_ratio >= 6.0 && fold_ratio <= 10.0;

    // (c) bounded-distance DP roughly linear in d at fixed n.
    std::vector<std::pair<double, double>> dpts;
    ParenString hx = bench::gen_hard_nested(1 << 12, 4, 2, 5);
    for (int d : {16, 32, 64, 128, 256}) {
        double ms = bench::median_time_ms(3, [&] { (void)dyck_small(hx, d, 0.5); });
        dpts.push_back({static_cast<double>(d), std::max(ms, 1e-3)});
    }
    double small_exp = bench::fit_power_law(dpts);
    ok = ok && small_exp >= 0.4 && small_exp <= 1.6;

    std::snprintf(buf, sizeof buf, "ptas exp=%.2f, fold dp ratio=%.1fx, small-d exp=%.2f",
                  ptas_exp, fold_ratio, small_exp);
    report(11, ok, "scaling smoke tests", buf);
}

void criterion12() {
    bool ok = true;
    subq::GapOverrides ov;
    ov.s1 = 32;
    ov.s2 = 16;
    ov.delta = 2;
    ov.k1 = 0.5;
    ov.k2 = 0.5;
    ParenString x = testkit::perturb(gen_tiled_balanced(256, 2, 5), 9, 6);
    subq::GapReport a = subq::gap_dyck_est(x, Theta{-1}, 12345, ov);
    subq::GapReport b = subq::gap_dyck_est(x, Theta{-1}, 12345, ov);
    ok = ok && a.estimate == b.estimate && a.certified_entries == b.certified_entries;
    subq::GapReport c = subq::gap_dyck_est(x, Theta{-1}, 54321, ov);
    (void)c;  // different seed may differ; only the same-seed contract is pinned

    subq::DyckEstReport e1 = subq::dyck_est(x, 777, ov);
    subq::DyckEstReport e2 = subq::dyck_est(x, 777, ov);
    ok = ok && e1.estimate == e2.estimate && e1.path == e2.path;

    ok = ok && testkit::gen_balanced(100, 3, 9) == testkit::gen_balanced(100, 3, 9);
    ok = ok && testkit::perturb(testkit::gen_balanced(50, 2, 1), 7, 2) ==
                   testkit::perturb(testkit::gen_balanced(50, 2, 1), 7, 2);
    report(12, ok, "determinism", "same seed => identical estimates and set sizes");
}

}  // namespace

int main() {
    std::printf("acceptance criteria\n-------------------\n");
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
