#include "core.hpp"

#include <algorithm>
#include <stdexcept>

namespace parendist {

HeightProfile height_profile(std::span<const Symbol> x) {
    HeightProfile hp;
    hp.h.resize(x.size() + 1);
    hp.h[0] = 0;
    for (size_t i = 0; i < x.size(); ++i)
        hp.h[i + 1] = hp.h[i] + (is_open(x[i]) ? 1 : -1);
    return hp;
}

std::vector<int> valleys(const HeightProfile& hp) {
    std::vector<int> out;
    int n = hp.n();
    for (int v = 1; v < n; ++v)
        if (hp.h[v - 1] > hp.h[v] && hp.h[v] < hp.h[v + 1]) out.push_back(v);
    return out;
}

std::vector<int> pivot_candidates(const HeightProfile& hp) {
    std::vector<int> out;
    int n = hp.n();
    for (int v : valleys(hp))
        for (int k = v - 1; k <= v + 1; ++k)
            if (k >= 0 && k <= n && (out.empty() || out.back() != k)) out.push_back(k);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Symbol> reverse_complement(std::span<const Symbol> x) {
    std::vector<Symbol> out(x.size());
    for (size_t k = 0; k < x.size(); ++k) out[k] = complement(x[x.size() - 1 - k]);
    return out;
}

std::vector<Symbol> reduce_dyck(std::span<const Symbol> x) {
    std::vector<Symbol> stack;
    stack.reserve(x.size());
    for (Symbol c : x) {
        if (!stack.empty() && is_open(stack.back()) && c == complement(stack.back()))
            stack.pop_back();
        else
            stack.push_back(c);
    }
    return stack;
}

std::vector<Symbol> reduce_fold(std::span<const Symbol> x) {
    std::vector<Symbol> stack;
    stack.reserve(x.size());
    for (Symbol c : x) {
        if (!stack.empty() && c == complement(stack.back()))
            stack.pop_back();
        else
            stack.push_back(c);
    }
    return stack;
}

bool is_fold_irreducible(std::span<const Symbol> x) {
    for (size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i + 1] == complement(x[i])) return false;
    return true;
}

Alignment::Alignment(std::vector<std::pair<int, int>> pairs, int n) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    std::vector<char> used(n + 1, 0);
    for (auto [i, j] : pairs_) {
        if (i < 1 || j <= i || j > n) throw std::invalid_argument("alignment pair out of range");
        if (used[i] || used[j]) throw std::invalid_argument("position matched twice");
        used[i] = used[j] = 1;
    }
    // Non-crossing: for sorted openers, each pair either nests inside or
    // follows after every earlier one.
    std::vector<int> open_ends;
    for (auto [i, j] : pairs_) {
        while (!open_ends.empty() && open_ends.back() < i) open_ends.pop_back();
        if (!open_ends.empty() && j > open_ends.back())
            throw std::invalid_argument("crossing alignment pairs");
        open_ends.push_back(j);
    }
}

int Alignment::partner(int i) const {
    for (auto [a, b] : pairs_) {
        if (a == i) return b;
        if (b == i) return a;
    }
    return 0;
}

long long alignment_cost(const ParenString& x, const Alignment& m) {
    long long cost = x.size() - 2LL * m.size();
    for (auto [i, j] : m.pairs()) {
        if (j > x.size()) throw std::invalid_argument("alignment exceeds string length");
        cost += pair_cost(x.at(i), x.at(j));
    }
    return cost;
}

}  // namespace parendist
