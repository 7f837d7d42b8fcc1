#pragma once

// Involutions of {1..n} stored as a set of transpositions; fixed points are
// implicit. Dots are 1-indexed to match the arc-diagram pictures.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tw {

class Involution {
public:
    Involution() = default;

    Involution(int n, std::vector<std::pair<int, int>> cycles)
        : n_(n), cycles_(std::move(cycles)) {
        if (n < 0) throw std::invalid_argument("Involution: negative size");
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        for (auto& [i, j] : cycles_) {
            if (i >= j) std::swap(i, j);
            if (i < 1 || j > n || i == j)
                throw std::invalid_argument("Involution: bad transposition");
            if (used[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(j)])
                throw std::invalid_argument("Involution: repeated element");
            used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
        }
        std::sort(cycles_.begin(), cycles_.end());
    }

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& cycles() const { return cycles_; }

    std::vector<int> fixed_points() const {
        std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
        for (auto& [i, j] : cycles_) used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
        std::vector<int> fp;
        for (int d = 1; d <= n_; ++d)
            if (!used[static_cast<std::size_t>(d)]) fp.push_back(d);
        return fp;
    }

    // One-line notation: word[i-1] = alpha(i).
    std::vector<int> one_line_word() const {
        std::vector<int> w(static_cast<std::size_t>(n_));
        for (int d = 1; d <= n_; ++d) w[static_cast<std::size_t>(d) - 1] = d;
        for (auto& [i, j] : cycles_) {
            w[static_cast<std::size_t>(i) - 1] = j;
            w[static_cast<std::size_t>(j) - 1] = i;
        }
        return w;
    }

    auto operator<=>(const Involution&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> cycles_;
};

inline std::vector<Involution> enumerate_involutions(int n) {
    std::vector<Involution> out;
    std::vector<std::pair<int, int>> cyc;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    // Largest unused dot is either fixed or paired with a smaller unused dot.
    auto rec = [&](auto&& self, int top) -> void {
        while (top >= 1 && used[static_cast<std::size_t>(top)]) --top;
        if (top == 0) {
            out.emplace_back(n, cyc);
            return;
        }
        used[static_cast<std::size_t>(top)] = true;
        self(self, top - 1);  // top fixed
        for (int i = 1; i < top; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            used[static_cast<std::size_t>(i)] = true;
            cyc.emplace_back(i, top);
            self(self, top - 1);
            cyc.pop_back();
            used[static_cast<std::size_t>(i)] = false;
        }
        used[static_cast<std::size_t>(top)] = false;
    };
    rec(rec, n);
    std::sort(out.begin(), out.end());
    return out;
}

// Maximum length of a strictly decreasing subsequence of a word.
inline int longest_decreasing_subsequence(const std::vector<int>& word) {
    // patience on the reversed order: tails[k] = largest possible end of a
    // decreasing subsequence of length k+1
    std::vector<int> tails;
    for (int x : word) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x,
                                   [](int a, int b) { return a > b; });
        if (it == tails.end()) tails.push_back(x);
        else *it = x;
    }
    return static_cast<int>(tails.size());
}

inline int longest_decreasing_subsequence(const Involution& inv) {
    return longest_decreasing_subsequence(inv.one_line_word());
}

}  // namespace tw
