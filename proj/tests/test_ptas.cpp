#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "core.hpp"
#include "exact.hpp"
#include "ptas.hpp"
#include "rng.hpp"
#include "testkit.hpp"

using namespace parendist;

TEST_CASE("params") {
    CHECK_THROWS_AS(PtasParams::make(1, 10), std::invalid_argument);
    PtasParams p = PtasParams::make(2, 8);
    CHECK(p.nu[0] == 255);
    CHECK(p.nu[1] == 0);
    CHECK(p.nu[4] == 2);
    CHECK(p.nu[6] == 1);
    CHECK_THROWS_AS(dyck_ptas(ParenString::from_ascii("()"), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(dyck_ptas(ParenString::from_ascii("()"), 1.5), std::invalid_argument);
    CHECK(ptas_tau(1.0, 0) == 2);  // |K| <= 1 clamps to the lemma's minimum
    CHECK(ptas_tau(1.0, 1) == 2);
}

TEST_CASE("base cases and balanced inputs") {
    CHECK(ad_root(ParenString::from_ascii(""), 2) == 0);
    CHECK(ad_root(ParenString::from_ascii("("), 2) == 1);
    CHECK(dyck_ptas(ParenString::from_ascii("()"), 0.5) == 0);
    CHECK(dyck_ptas(ParenString::from_ascii(")("), 0.5) == 2);
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        CHECK(dyck_ptas(testkit::gen_balanced(200, 3, seed), 0.25) == 0);
}

TEST_CASE("large tau recovers the exact recursion") {
    Rng rng(31337);
    for (int it = 0; it < 80; ++it) {
        int n = rng.range(0, 80);
        std::vector<Symbol> sym;
        for (int i = 0; i < n; ++i) {
            Symbol s = static_cast<Symbol>(rng.range(1, 2));
            sym.push_back(rng.coin() ? s : complement(s));
        }
        ParenString x(Alphabet(2), std::move(sym));
        int tau = std::max<int>(2, pivot_candidates(x).size());
        CHECK(ad_root(x, tau) == exact_dyck_cubic(x).value);
    }
}

TEST_CASE("ptas sandwich on planted instances") {
    Rng rng(7);
    for (int it = 0; it < 40; ++it) {
        auto inst = testkit::make_planted(rng.range(10, 400), rng.range(1, 3),
                                          rng.range(0, 12), 1000 + it);
        int exact = exact_dyck_pivots(inst.x);
        for (double eps : {0.1, 0.5, 1.0}) {
            int v = dyck_ptas(inst.x, eps);
            CHECK(v >= exact);
            CHECK(v <= (1.0 + eps) * exact);
        }
    }
}

TEST_CASE("deterministic memoization") {
    ParenString x = testkit::perturb(testkit::gen_balanced(60, 2, 5), 9, 77);
    ParenString r = reduce_dyck(x);
    AdStats s1, s2;
    int a = ad_root(r, 4, &s1);
    int b = ad_root(r, 4, &s2);
    CHECK(a == b);
    CHECK(s1.transitions == s2.transitions);
    CHECK(s1.states == s2.states);
}

TEST_CASE("transition work tracks the tau * n log n budget") {
    // Reduced planted instances keep |K| small; the sparsified pivot loops
    // should stay within a modest multiple of n^2 + tau * n log2(n) * n.
    for (int n : {200, 400, 800}) {
        auto inst = testkit::make_planted(n / 2, 2, 6, 99 + n);
        ParenString r = reduce_dyck(inst.x);
        int m = r.size();
        if (m < 4) continue;
        int tau = ptas_tau(1.0, pivot_candidates(r).size());
        AdStats stats;
        ad_root(r, tau, &stats);
        double states = static_cast<double>(m + 1) * (m + 1);
        double budget =
            4.0 * states + 4.0 * tau * (m + 1) * std::max(1.0, std::log2(m + 1));
        CHECK(static_cast<double>(stats.transitions) <= budget);
    }
}
