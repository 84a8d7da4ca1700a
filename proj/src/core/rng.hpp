#pragma once

#include <cstdint>
#include <vector>

namespace parendist {

// Deterministic 64-bit generator (splitmix64). All randomized components use
// this instead of <random> engines so that a seed produces the same stream on
// every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound > 0. Multiply-shift rejection-free map.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    // Derive an independent stream for a subtask; the derivation depends only
    // on the arguments, never on draw order, so parallel schedules agree.
    static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                      std::uint64_t c = 0) {
        Rng mix(seed ^ 0x6a09e667f3bcc909ULL);
        mix.state_ ^= mix.next() + a;
        mix.state_ ^= mix.next() + (b << 1);
        mix.state_ ^= mix.next() + (c << 2);
        return mix;
    }

    // First k elements of a random permutation of [0..n), without replacement.
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        if (k > n) k = n;
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

private:
    std::uint64_t state_;
};

}  // namespace parendist
