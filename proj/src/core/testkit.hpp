#pragma once

#include <cstdint>

#include "core.hpp"
#include "window.hpp"

namespace parendist::testkit {

// Uniformly seeded recursive generator of a balanced string with pair_count
// matched pairs over type_count types. Deterministic under seed; the exact
// distribution is implementation-defined.
ParenString gen_balanced(int pair_count, int type_count, std::uint64_t seed);

// Applies k random edits (insert/delete/substitute); dyck grows by at most k.
ParenString perturb(const ParenString& x, int k, std::uint64_t seed);

struct PlantedInstance {
    ParenString x;
    int planted_distance_bound;
    std::uint64_t seed;
};

PlantedInstance make_planted(int pair_count, int type_count, int edits, std::uint64_t seed);

// Ground-truth oracles: plain enumeration of all (folding) alignments,
// independent of the interval DPs they check.
int brute_force_dyck(const ParenString& x, int cap = 12);
int brute_force_fold(const ParenString& x, int cap = 12);

// The eight-case recursive decomposition process driven by an alignment M:
// returns window pairs covering [1..n] with window lengths at most 4*s1.
std::vector<WindowPair> decompose_pm(const ParenString& x, const Alignment& m, int s1);

// Rounds every window of a decomposition onto the theta*s grid (start-1 and
// end up to the next multiple); windows that collapse become empty.
std::vector<WindowPair> cap_decomposition(const std::vector<WindowPair>& pairs, Theta theta,
                                          int s);

// cost_M restricted to a window pair: unmatched positions inside w or w2 plus
// pair costs of M-pairs with both endpoints inside the union.
long long restricted_cost(const ParenString& x, const Alignment& m, const Window& w,
                          const Window& w2);

}  // namespace parendist::testkit
