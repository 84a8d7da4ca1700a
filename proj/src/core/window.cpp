#include "window.hpp"

#include <algorithm>

namespace parendist {

WindowGrid::WindowGrid(int n, Theta theta, int size_param)
    : n_(n), theta_(theta), size_param_(size_param) {
    if (n < 1) throw std::invalid_argument("grid needs n >= 1");
    if (!theta.scales(size_param))
        throw std::invalid_argument("grid step theta*size_param is not a positive integer");
    step_ = theta.scale(size_param);
    if (n % step_ != 0) throw std::invalid_argument("grid step does not divide n");
    max_len_ = 5 * size_param;

    for (int a = 0; a <= n; a += step_) windows_.push_back(Window::empty_at(a));
    for (int e = step_; e <= n; e += step_) {
        for (int len = step_; len <= std::min(max_len_, e); len += step_)
            windows_.push_back(Window{e - len + 1, e});
    }
}

bool WindowGrid::contains(const Window& w) const {
    if (w.empty()) {
        int a = w.anchor();
        return a >= 0 && a <= n_ && a % step_ == 0;
    }
    if (w.start < 1 || w.end > n_) return false;
    if ((w.start - 1) % step_ != 0 || w.end % step_ != 0) return false;
    return w.length() <= max_len_;
}

std::vector<int> WindowGrid::contained_in(const Window& outer) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(windows_.size()); ++i)
        if (outer.contains(windows_[i])) out.push_back(i);
    return out;
}

bool is_consistent(const std::vector<WindowPair>& pairs) {
    std::vector<Window> occupied;
    for (const auto& [w, w2] : pairs) {
        if (!w.empty() && !w2.empty() && w.end >= w2.start) return false;
        if (!w.empty()) occupied.push_back(w);
        if (!w2.empty()) occupied.push_back(w2);
    }
    std::sort(occupied.begin(), occupied.end());
    for (size_t i = 0; i + 1 < occupied.size(); ++i)
        if (occupied[i].end >= occupied[i + 1].start) return false;

    // Non-crossing over start pairs of two-sided entries.
    std::vector<std::pair<int, int>> starts;
    for (const auto& [w, w2] : pairs)
        if (!w.empty() && !w2.empty()) starts.push_back({w.start, w2.start});
    std::sort(starts.begin(), starts.end());
    std::vector<int> open;
    for (auto [a, b] : starts) {
        while (!open.empty() && open.back() < a) open.pop_back();
        if (!open.empty() && b > open.back()) return false;
        open.push_back(b);
    }
    return true;
}

bool is_decomposition_of(const std::vector<WindowPair>& pairs, int n) {
    if (!is_consistent(pairs)) return false;
    std::vector<char> covered(n + 2, 0);
    for (const auto& [w, w2] : pairs) {
        for (const Window* side : {&w, &w2}) {
            if (side->empty()) continue;
            if (side->start < 1 || side->end > n) return false;
            for (int p = side->start; p <= side->end; ++p) {
                if (covered[p]) return false;
                covered[p] = 1;
            }
        }
    }
    for (int p = 1; p <= n; ++p)
        if (!covered[p]) return false;
    return true;
}

}  // namespace parendist
