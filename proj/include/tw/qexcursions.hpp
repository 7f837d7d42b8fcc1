#pragma once

// Hesitating excursions in the quadrant Q, their switch-multiplicity, and
// the non-intersecting path triples they biject with.
//
// The switch-multiplicity marks the first step entering x < y, then the
// first later step entering x > y, and so on, alternating until the walk
// ends; q(n, m) counts excursions of length 2n with m marked steps.

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "tw/numeric.hpp"

namespace tw {

// A hesitating walk stored as half-steps; (0,0) is a stay.
struct QExcursion {
    std::vector<std::pair<int, int>> steps;

    int half_length() const { return static_cast<int>(steps.size()); }
};

namespace detail {

// The eight hesitating step pairs as (first half, second half).
inline const std::array<std::array<std::pair<int, int>, 2>, 8>& hesitating_pairs() {
    static const std::array<std::array<std::pair<int, int>, 2>, 8> pairs = {{
        {{{0, 0}, {1, 0}}},    // stay, e1
        {{{0, 0}, {0, 1}}},    // stay, e2
        {{{-1, 0}, {0, 0}}},   // -e1, stay
        {{{0, -1}, {0, 0}}},   // -e2, stay
        {{{1, 0}, {0, -1}}},   // e1, -e2
        {{{0, 1}, {-1, 0}}},   // e2, -e1
        {{{1, 0}, {-1, 0}}},   // e1, -e1 (stationary)
        {{{0, 1}, {0, -1}}},   // e2, -e2 (stationary)
    }};
    return pairs;
}

}  // namespace detail

inline void validate_q_excursion(const QExcursion& w) {
    if (w.steps.size() % 2 != 0)
        throw std::invalid_argument("QExcursion: odd number of half-steps");
    int x = 0, y = 0;
    for (auto& [dx, dy] : w.steps)
        if (std::abs(dx) + std::abs(dy) > 1)
            throw std::invalid_argument("QExcursion: half-step is not elementary");
    for (std::size_t t = 0; t < w.steps.size(); t += 2) {
        auto [a, b] = w.steps[t];
        auto [c, d] = w.steps[t + 1];
        bool stay1 = a == 0 && b == 0, stay2 = c == 0 && d == 0;
        bool ok = (stay1 && (c + d == 1) && !stay2) || ((a + b == -1) && stay2) ||
                  ((a + b == 1) && (c + d == -1));
        if (!ok) throw std::invalid_argument("QExcursion: invalid hesitating step pair");
        x += a; y += b;
        if (x < 0 || y < 0) throw std::invalid_argument("QExcursion: walk leaves the quadrant");
        x += c; y += d;
        if (x < 0 || y < 0) throw std::invalid_argument("QExcursion: walk leaves the quadrant");
    }
    if (x != 0 || y != 0) throw std::invalid_argument("QExcursion: walk does not end at the origin");
}

// Number of marked steps under the alternating stopping process.
inline int switch_multiplicity(const QExcursion& w) {
    validate_q_excursion(w);
    int x = 0, y = 0, m = 0, phase = 0;  // phase 0: waiting for x < y, 1: for x > y
    for (auto& [dx, dy] : w.steps) {
        x += dx; y += dy;
        if (phase == 0 && x < y) { ++m; phase = 1; }
        else if (phase == 1 && x > y) { ++m; phase = 0; }
    }
    return m;
}

// All Q-hesitating excursions of length 2n, by exhaustive search.
inline std::vector<QExcursion> enumerate_q_excursions(int n) {
    std::vector<QExcursion> out;
    QExcursion cur;
    int x = 0, y = 0;
    auto rec = [&](auto&& self, int pairs_left) -> void {
        if (x + y > pairs_left) return;  // cannot come back to the origin
        if (pairs_left == 0) {
            if (x == 0 && y == 0) out.push_back(cur);
            return;
        }
        for (auto& pr : detail::hesitating_pairs()) {
            int x1 = x + pr[0].first, y1 = y + pr[0].second;
            if (x1 < 0 || y1 < 0) continue;
            int x2 = x1 + pr[1].first, y2 = y1 + pr[1].second;
            if (x2 < 0 || y2 < 0) continue;
            cur.steps.push_back(pr[0]);
            cur.steps.push_back(pr[1]);
            int ox = x, oy = y;
            x = x2; y = y2;
            self(self, pairs_left - 1);
            x = ox; y = oy;
            cur.steps.pop_back();
            cur.steps.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

// q(n, m) for all m, by exhaustive enumeration.
inline std::map<int, Int> q_distribution_exhaustive(int n) {
    std::map<int, Int> out;
    for (auto& w : enumerate_q_excursions(n)) out[switch_multiplicity(w)] += 1;
    return out;
}

// q(n, m) by a DP whose state tracks position, marks so far, and which
// region triggers the next mark.
inline std::map<int, Int> q_distribution_dp(int n) {
    // key: ((x * span + y) * 2 + phase) * (n + 1) + marks
    int span = 2 * n + 2;
    auto key = [&](int x, int y, int phase, int m) {
        return ((x * span + y) * 2 + phase) * (n + 1) + m;
    };
    std::map<long, Int> layer;
    layer[key(0, 0, 0, 0)] = 1;
    for (int t = 0; t < n; ++t) {
        std::map<long, Int> next;
        for (auto& [state, c] : layer) {
            long s = state;
            int m = static_cast<int>(s % (n + 1)); s /= n + 1;
            int phase = static_cast<int>(s % 2); s /= 2;
            int y = static_cast<int>(s % span);
            int x = static_cast<int>(s / span);
            for (auto& pr : detail::hesitating_pairs()) {
                int cx = x, cy = y, cphase = phase, cm = m;
                bool ok = true;
                for (auto& [dx, dy] : pr) {
                    cx += dx; cy += dy;
                    if (cx < 0 || cy < 0) { ok = false; break; }
                    if (cphase == 0 && cx < cy) { ++cm; cphase = 1; }
                    else if (cphase == 1 && cx > cy) { ++cm; cphase = 0; }
                }
                if (!ok || cm > n || cx >= span || cy >= span) continue;
                next[key(cx, cy, cphase, cm)] += c;
            }
        }
        layer = std::move(next);
    }
    std::map<int, Int> out;
    for (auto& [state, c] : layer) {
        long s = state;
        int m = static_cast<int>(s % (n + 1)); s /= n + 1;
        s /= 2;
        int y = static_cast<int>(s % span);
        int x = static_cast<int>(s / span);
        if (x == 0 && y == 0 && c != 0) out[m] += c;
    }
    return out;
}

// --- non-intersecting triples of N/E paths ---

// Sum over k of the 3x3 Lindstrom-Gessel-Viennot determinant for paths of
// length n from (-1,1), (0,0), (1,-1) to (k-1, n-k+1), (k, n-k), (k+1, n-k-1).
inline Int triple_paths_determinant(int n) {
    Int total = 0;
    for (int k = 0; k <= n; ++k) {
        auto c = [&](long kk) { return binomial(n, kk); };
        Int det = c(k) * (c(k) * c(k) - c(k + 1) * c(k - 1))
                - c(k + 1) * (c(k - 1) * c(k) - c(k + 1) * c(k - 2))
                + c(k + 2) * (c(k - 1) * c(k - 1) - c(k) * c(k - 2));
        total += det;
    }
    return total;
}

// Direct search. The three paths advance in lockstep; at every time they
// sit on a common anti-diagonal, so vertex-disjointness is equivalent to
// keeping the x-coordinates strictly ordered.
inline Int triple_paths_enumerate(int n) {
    Int total = 0;
    int x1 = -1, x2 = 0, x3 = 1;
    auto rec = [&](auto&& self, int t) -> void {
        if (t == n) {
            if (x2 == x1 + 1 && x3 == x2 + 1) total += 1;
            return;
        }
        for (int s1 = 0; s1 <= 1; ++s1)
            for (int s2 = 0; s2 <= 1; ++s2)
                for (int s3 = 0; s3 <= 1; ++s3) {
                    x1 += s1; x2 += s2; x3 += s3;
                    if (x1 < x2 && x2 < x3) self(self, t + 1);
                    x1 -= s1; x2 -= s2; x3 -= s3;
                }
    };
    rec(rec, 0);
    return total;
}

inline Int triple_paths_count(int n) {
    if (n < 0) throw std::invalid_argument("triple_paths_count: negative length");
    return n <= 10 ? triple_paths_enumerate(n) : triple_paths_determinant(n);
}

}  // namespace tw
