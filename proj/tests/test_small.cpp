#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core.hpp"
#include "exact.hpp"
#include "ptas.hpp"
#include "rng.hpp"
#include "small_distance.hpp"
#include "testkit.hpp"

using namespace parendist;

TEST_CASE("basics") {
    CHECK(agd_root(ParenString::from_ascii("()"), 5, 2) == 0);
    ParenString anti = ParenString::from_ascii(")(");
    CHECK(agd_root(anti, 2, 2) == 2);
    CHECK(agd_root(anti, 2, 2) == exact_gd(anti));
    CHECK_THROWS_AS(dyck_small(ParenString::from_ascii("()"), 0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(dyck_small(ParenString::from_ascii("()"), 3, 0.0), std::invalid_argument);
}

TEST_CASE("deep valley forces the infinity sentinel") {
    // Closers then openers: the midpoint valley sits far below both ends, so
    // with a tiny budget every path through the root is pruned.
    ParenString x = ParenString::from_ascii(")))))))(((((((");
    CHECK(agd_root(x, 1, 2) >= kAgdInfinity);
    CHECK(exact_gd(x) > 3);  // the prune was honest
}

TEST_CASE("balanced input returns zero for any budget") {
    for (int d : {1, 8, 64}) {
        DyckSmallResult r = dyck_small(testkit::gen_balanced(300, 2, 11), d, 0.5);
        REQUIRE(!r.exceeds());
        CHECK(*r.value == 0);
    }
}

TEST_CASE("BD vs GD sandwich") {
    Rng rng(8080);
    for (int it = 0; it < 60; ++it) {
        int n = rng.range(2, 40);
        std::vector<Symbol> sym;
        for (int i = 0; i < n; ++i) {
            Symbol s = static_cast<Symbol>(rng.range(1, 2));
            sym.push_back(rng.coin() ? s : complement(s));
        }
        ParenString x(Alphabet(2), std::move(sym));
        int gd = exact_gd(x);
        for (int d : {1, 4, 16, 64}) {
            for (int tau : {2, 8, 64}) {
                std::int32_t bd = agd_root(x, d, tau);
                CHECK(bd >= gd);
                if (gd <= d) {
                    size_t k = pivot_candidates(x).size();
                    double slack =
                        k > 1 ? 8.0 / tau * static_cast<double>(k) * std::log2(double(k)) : 0.0;
                    CHECK(static_cast<double>(bd) <= gd + slack);
                }
            }
        }
    }
}

TEST_CASE("soundness against the exact oracle") {
    Rng rng(2024);
    for (int it = 0; it < 60; ++it) {
        auto inst = testkit::make_planted(rng.range(5, 250), rng.range(1, 3),
                                          rng.range(0, 20), 31 * it + 1);
        int exact = exact_dyck_pivots(inst.x);
        for (int d : {1, 8, 64}) {
            DyckSmallResult r = dyck_small(inst.x, d, 0.5);
            if (r.exceeds()) {
                CHECK(exact > d);
            } else {
                CHECK(*r.value >= exact);
                CHECK(static_cast<double>(*r.value) <= (3.0 + 0.5) * exact);
            }
        }
    }
}

TEST_CASE("hard-call accounting stays O(n d)") {
    Rng rng(606);
    for (int it = 0; it < 20; ++it) {
        auto inst = testkit::make_planted(rng.range(50, 500), 2, rng.range(1, 10), it + 50);
        ParenString r = reduce_dyck(inst.x);
        if (r.size() < 2) continue;
        int d = 3 * 8;
        AgdStats stats;
        agd_root(r, d, 16, &stats);
        long long per_side = static_cast<long long>(r.size() + 1) * (4LL * d + 1);
        CHECK(stats.hard_calls <= 2 * per_side);
    }
}
