#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "string.hpp"

namespace parendist {

// An interval [start..end] of 1-based positions. An empty window is kept
// explicitly with a canonical anchor: start == anchor+1, end == anchor, so
// capped decompositions that collapse a window stay well-ordered.
struct Window {
    int start = 1;
    int end = 0;

    static Window empty_at(int anchor) { return Window{anchor + 1, anchor}; }

    bool empty() const { return start > end; }
    int length() const { return empty() ? 0 : end - start + 1; }
    int anchor() const { return end; }  // meaningful for empty windows

    bool contains(const Window& q) const {
        if (q.empty()) return q.anchor() >= start - 1 && q.anchor() <= end;
        return start <= q.start && q.end <= end;
    }

    auto operator<=>(const Window&) const = default;
};

struct WeightedWindowPair {
    Window left;
    Window right;
    long long weight = 0;
};

using WindowPair = std::pair<Window, Window>;

// Power-of-two threshold theta = 2^log2 with log2 <= 0.
struct Theta {
    int log2 = 0;

    double value() const { return 1.0 / static_cast<double>(1LL << -log2); }
    // theta * s, which must be a positive integer.
    int scale(int s) const {
        int shift = -log2;
        if (shift >= 31 || (s >> shift) << shift != s || (s >> shift) == 0)
            throw std::invalid_argument("theta * " + std::to_string(s) +
                                        " is not a positive integer");
        return s >> shift;
    }
    bool scales(int s) const {
        int shift = -log2;
        return shift < 31 && (s >> shift) > 0 && (s >> shift) << shift == s;
    }

    static Theta from_double(double v) {
        if (v <= 0.0 || v > 1.0) throw std::invalid_argument("theta must be in (0,1]");
        int k = 0;
        double w = v;
        while (w < 1.0 && k < 62) {
            w *= 2.0;
            ++k;
        }
        if (w != 1.0) throw std::invalid_argument("theta must be a power of two");
        return Theta{-k};
    }
};

// The window set J (size_param = s1) or K (size_param = s2): all windows with
// length at most 5*size_param whose end and start-1 are multiples of the grid
// step theta*size_param, plus one empty window anchored at each grid point.
class WindowGrid {
public:
    WindowGrid(int n, Theta theta, int size_param);

    int n() const { return n_; }
    int step() const { return step_; }
    int size_param() const { return size_param_; }
    int max_length() const { return max_len_; }

    const std::vector<Window>& windows() const { return windows_; }
    bool contains(const Window& w) const;

    // Indices into windows() of all members contained in `outer`.
    std::vector<int> contained_in(const Window& outer) const;

private:
    int n_;
    Theta theta_;
    int size_param_;
    int step_;
    int max_len_;
    std::vector<Window> windows_;
};

// Grid construction per the J/K definitions.
inline WindowGrid build_grid(int n, Theta theta, int size_param) {
    return WindowGrid(n, theta, size_param);
}

// True if the set of pairs is consistent: all non-empty windows pairwise
// disjoint and the start pairs (both sides non-empty) non-crossing. Pairs
// with an empty side only contribute their non-empty window.
bool is_consistent(const std::vector<WindowPair>& pairs);

// True if additionally every position of [1..n] is covered exactly once.
bool is_decomposition_of(const std::vector<WindowPair>& pairs, int n);

}  // namespace parendist
