#pragma once

// The marked-walk recurrence: a(n; i, j, m) counts W_2-hesitating walks of
// length 2n from the origin to (i, j) in the weak chamber x >= y >= 0 with
// m marked steps, each a non-stay step ending on the diagonal x = y.
//
// A walk grows by one hesitating pair, i.e. one skeleton step from
// S = {(1,0), (-1,0), (0,1), (0,-1), (1,-1), (-1,1)} plus the two
// stationary pairs: s_h plays (1,0)(-1,0) as a single step through the
// intermediate (i+1, j), s_v plays (0,1)(0,-1) through (i, j+1).
//
//   a(0; i,j,m) = [i = j = m = 0]
//   for n > 0 and (i,j,m) in D = {0 <= j <= i, 0 <= m <= n}:
//     a(n; i,j,m) = d_{i=j}   sum_{s in S + s_h}        a(n-1; i-x(s), j-y(s), m)
//                 + d_{i>j}   sum_{s in S + s_h + s_v}  a(n-1; i-x(s), j-y(s), m)
//                 + d_{i=j}   sum_{s in S + s_h}        a(n-1; i-x(s), j-y(s), m-1)
//                 + d_{i=j+1} a(n-1; i, j, m-1)
//   and a(n; i,j,m) = 0 outside D.
//
// On the diagonal the vertical stationary pair is excluded: its
// intermediate (i, i+1) leaves the chamber. A pair arriving on the
// diagonal has exactly one non-stay step ending there, hence the marked
// copy of the first sum; at i = j+1 the vertical stationary pair touches
// the diagonal with its first step, hence the last term.

#include <cassert>
#include <stdexcept>
#include <vector>

#include "tw/numeric.hpp"

namespace tw {

class MarkedTable {
public:
    // Table for a single n; build layer by layer from n = 0.
    static MarkedTable initial(int bound) {
        MarkedTable t(0, bound);
        t.at_mut(0, 0, 0) = 1;
        return t;
    }

    MarkedTable next() const {
        int n = n_ + 1;
        if (n > bound_) throw std::invalid_argument("MarkedTable: bound exceeded");
        MarkedTable out(n, bound_);
        static constexpr int moves[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= i; ++j)
                for (int m = 0; m <= n; ++m) {
                    Int v = 0;
                    // moving skeleton steps, plus both stationary pairs off
                    // the diagonal and only the horizontal one on it
                    auto sum_from = [&](int marks) {
                        Int s = 0;
                        if (marks < 0) return s;
                        for (auto& mv : moves) s += at_prev(i - mv[0], j - mv[1], marks);
                        s += at_prev(i, j, marks);                 // s_h
                        if (i > j) s += at_prev(i, j, marks);      // s_v
                        return s;
                    };
                    v = sum_from(m);
                    if (i == j) v += sum_from(m - 1);
                    if (i == j + 1 && m >= 1) v += at_prev(i, j, m - 1);  // marked s_v
                    out.at_mut(i, j, m) = std::move(v);
                }
        return out;
    }

    int n() const { return n_; }

    const Int& at(int i, int j, int m) const {
        static const Int zero = 0;
        if (i < 0 || j < 0 || j > i || m < 0 || m > n_ || i > bound_) return zero;
        return values_[index(i, j, m)];
    }

    // Row sum over endpoints (m', 0): equals B_{n+1} summed over m'.
    Int axis_total() const {
        Int s = 0;
        for (int i = 0; i <= n_; ++i) s += at(i, 0, 0);
        return s;
    }

private:
    MarkedTable(int n, int bound)
        : n_(n),
          bound_(bound),
          values_(static_cast<std::size_t>((bound + 1) * (bound + 2) / 2) *
                  static_cast<std::size_t>(bound + 1)) {}

    std::size_t index(int i, int j, int m) const {
        auto pos = static_cast<std::size_t>(i * (i + 1) / 2 + j);
        return pos * static_cast<std::size_t>(bound_ + 1) + static_cast<std::size_t>(m);
    }

    Int& at_mut(int i, int j, int m) { return values_[index(i, j, m)]; }

    const Int& at_prev(int i, int j, int m) const {
        // reads the *previous* layer, stored in this object when called
        // from next(); bounds outside D yield zero
        static const Int zero = 0;
        if (i < 0 || j < 0 || j > i || m < 0 || m > n_ || i > bound_) return zero;
        return values_[index(i, j, m)];
    }

    int n_;
    int bound_;
    std::vector<Int> values_;
};

struct ConjectureCounterexample {
    int n = -1, i = -1, j = -1;
    Int lhs, rhs;
    bool found() const { return n >= 0; }
};

// Conjecture 3: a(n; i, 0, j) = a(n; j, 0, i) for all i, j, n <= n_max.
// Returns the first counterexample, if any.
template <typename LayerHook>
inline ConjectureCounterexample check_conjecture3(int n_max, LayerHook&& hook) {
    MarkedTable layer = MarkedTable::initial(n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) layer = layer.next();
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j < i; ++j)
                if (layer.at(i, 0, j) != layer.at(j, 0, i))
                    return {n, i, j, layer.at(i, 0, j), layer.at(j, 0, i)};
        hook(layer);
    }
    return {};
}

inline ConjectureCounterexample check_conjecture3(int n_max) {
    return check_conjecture3(n_max, [](const MarkedTable&) {});
}

}  // namespace tw
