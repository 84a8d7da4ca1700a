#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "string.hpp"

namespace parendist::bench {

// Deep single-chain nesting with `scars` random substitutions: stays long
// after reduction while keeping dyck and the pivot set small. This family
// exposes the true quadratic cost of the interval DPs.
ParenString gen_hard_nested(int n, int scars, int type_count, std::uint64_t seed);

// Median wall time of `reps` runs, in milliseconds.
double median_time_ms(int reps, const std::function<void()>& body);

// Least-squares slope of log(y) against log(x).
double fit_power_law(const std::vector<std::pair<double, double>>& points);

}  // namespace parendist::bench
