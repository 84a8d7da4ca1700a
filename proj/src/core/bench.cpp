#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace parendist::bench {

ParenString gen_hard_nested(int n, int scars, int type_count, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("need n >= 3");
    if (type_count < 1) throw std::invalid_argument("need at least one type");
    Rng rng(seed);
    // Rising half, a lone opener of the last type at the apex, falling half;
    // alternating types keep every adjacent pair non-cancelling.
    int extra = type_count + 1;
    int half = (n - 1) / 2;
    std::vector<Symbol> sym;
    sym.reserve(n);
    for (int i = 0; i < half; ++i)
        sym.push_back(static_cast<Symbol>(1 + i % type_count));
    sym.push_back(static_cast<Symbol>(extra));
    for (int i = half - 1; i >= 0; --i)
        sym.push_back(static_cast<Symbol>(-(1 + i % type_count)));
    if (static_cast<int>(sym.size()) < n) sym.push_back(static_cast<Symbol>(extra));
    for (int k = 0; k < scars; ++k) {
        int pos = rng.range(0, n - 1);
        Symbol s = static_cast<Symbol>(rng.range(1, type_count));
        sym[pos] = rng.coin() ? s : complement(s);
    }
    return ParenString(Alphabet(extra), std::move(sym));
}

double median_time_ms(int reps, const std::function<void()>& body) {
    std::vector<double> times;
    times.reserve(reps);
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

double fit_power_law(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw std::invalid_argument("need at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
        double lx = std::log(x), ly = std::log(std::max(y, 1e-9));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double m = static_cast<double>(points.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace parendist::bench
