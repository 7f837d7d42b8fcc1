#pragma once

// Exact dynamic-programming counters for the three walk disciplines in the
// Weyl chamber regions and the quadrant, plus the reflection identity and
// the positive-step count equality.
//
// Vacillating and hesitating walks move in step pairs; the intermediate
// position of a pair must also lie in the region (adding a box to row i of
// a partition is only legal if the result is again a partition).

#include <map>
#include <stdexcept>
#include <vector>

#include "tw/ferrers_sequence.hpp"
#include "tw/numeric.hpp"

namespace tw {

enum class WalkRegion {
    wk_weak,     // x_1 >= x_2 >= ... >= x_k >= 0
    wk_strict,   // x_1 >  x_2 >  ... >  x_k >  0
    wk_shifted,  // x_1 >  x_2 >  ... >  x_k >= 0
    quadrant,    // k = 2, x >= 0, y >= 0
};

inline const char* to_string(WalkRegion r) {
    switch (r) {
        case WalkRegion::wk_weak: return "weak";
        case WalkRegion::wk_strict: return "strict";
        case WalkRegion::wk_shifted: return "shifted";
        case WalkRegion::quadrant: return "quadrant";
    }
    return "?";
}

struct WalkSpec {
    TableauKind kind = TableauKind::oscillating;
    WalkRegion region = WalkRegion::wk_weak;
    int k = 1;
    int length = 0;               // number of steps
    std::vector<int> start = {};  // empty = origin (weak/quadrant) or delta (strict)
};

using WalkPoint = std::vector<int>;
using WalkCounts = std::map<WalkPoint, Int>;

inline WalkPoint delta_point(int k) {
    WalkPoint p(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = k - i;
    return p;
}

// The weak chamber and its strict translate differ by delta = (k,...,1);
// these convert positions between the two conventions.
inline WalkPoint weak_to_strict(const WalkPoint& p) {
    WalkPoint q = p;
    int k = static_cast<int>(p.size());
    for (int i = 0; i < k; ++i) q[static_cast<std::size_t>(i)] += k - i;
    return q;
}

inline WalkPoint strict_to_weak(const WalkPoint& p) {
    WalkPoint q = p;
    int k = static_cast<int>(p.size());
    for (int i = 0; i < k; ++i) q[static_cast<std::size_t>(i)] -= k - i;
    return q;
}

inline bool in_region(const WalkPoint& p, WalkRegion r) {
    switch (r) {
        case WalkRegion::wk_weak:
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (p[i] < p[i + 1]) return false;
            return p.empty() || p.back() >= 0;
        case WalkRegion::wk_strict:
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (p[i] <= p[i + 1]) return false;
            return p.empty() || p.back() > 0;
        case WalkRegion::wk_shifted:
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                if (p[i] <= p[i + 1]) return false;
            return p.empty() || p.back() >= 0;
        case WalkRegion::quadrant:
            for (int x : p)
                if (x < 0) return false;
            return true;
    }
    return false;
}

namespace detail {

struct StepPair {
    int first_axis;   // 0 = stay, +i = +e_i, -i = -e_i
    int second_axis;
};

inline std::vector<StepPair> step_pairs(TableauKind kind, int k) {
    std::vector<StepPair> out;
    switch (kind) {
        case TableauKind::vacillating:
            out.push_back({0, 0});
            for (int j = 1; j <= k; ++j) out.push_back({0, +j});
            for (int i = 1; i <= k; ++i) out.push_back({-i, 0});
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k; ++j) out.push_back({-i, +j});
            break;
        case TableauKind::hesitating:
            for (int j = 1; j <= k; ++j) out.push_back({0, +j});
            for (int i = 1; i <= k; ++i) out.push_back({-i, 0});
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k; ++j) out.push_back({+i, -j});
            break;
        case TableauKind::oscillating:
            throw std::logic_error("step_pairs: oscillating walks take single steps");
    }
    return out;
}

inline bool apply_axis(WalkPoint& p, int axis) {
    if (axis > 0) ++p[static_cast<std::size_t>(axis) - 1];
    else if (axis < 0) --p[static_cast<std::size_t>(-axis) - 1];
    return true;
}

}  // namespace detail

inline WalkPoint walk_start(const WalkSpec& spec) {
    if (!spec.start.empty()) {
        if (static_cast<int>(spec.start.size()) != spec.k)
            throw std::invalid_argument("count_walks: start dimension mismatch");
        return spec.start;
    }
    if (spec.region == WalkRegion::wk_strict) return delta_point(spec.k);
    return WalkPoint(static_cast<std::size_t>(spec.k), 0);
}

// Exact counts of walks from the start, grouped by endpoint.
inline WalkCounts count_walks_by_endpoint(const WalkSpec& spec) {
    if (spec.k < 1) throw std::invalid_argument("count_walks: dimension must be positive");
    if (spec.length < 0) throw std::invalid_argument("count_walks: negative length");
    if (spec.region == WalkRegion::quadrant && spec.k != 2)
        throw std::invalid_argument("count_walks: quadrant region is two-dimensional");
    if (spec.kind != TableauKind::oscillating && spec.length % 2 != 0)
        throw std::invalid_argument("count_walks: paired kinds need even length");

    WalkPoint start = walk_start(spec);
    if (!in_region(start, spec.region))
        throw std::invalid_argument("count_walks: start outside the region");

    WalkCounts layer;
    layer[start] = 1;
    if (spec.kind == TableauKind::oscillating) {
        for (int t = 0; t < spec.length; ++t) {
            WalkCounts next;
            for (auto& [p, c] : layer) {
                for (int ax = 1; ax <= spec.k; ++ax)
                    for (int dir : {+1, -1}) {
                        WalkPoint q = p;
                        detail::apply_axis(q, dir * ax);
                        if (in_region(q, spec.region)) next[q] += c;
                    }
            }
            layer = std::move(next);
        }
    } else {
        auto pairs = detail::step_pairs(spec.kind, spec.k);
        for (int t = 0; t < spec.length / 2; ++t) {
            WalkCounts next;
            for (auto& [p, c] : layer) {
                for (auto& sp : pairs) {
                    WalkPoint mid = p;
                    detail::apply_axis(mid, sp.first_axis);
                    if (!in_region(mid, spec.region)) continue;
                    WalkPoint q = mid;
                    detail::apply_axis(q, sp.second_axis);
                    if (in_region(q, spec.region)) next[q] += c;
                }
            }
            layer = std::move(next);
        }
    }
    return layer;
}

inline Int count_walks_to(const WalkSpec& spec, const WalkPoint& end) {
    auto counts = count_walks_by_endpoint(spec);
    auto it = counts.find(end);
    return it == counts.end() ? Int(0) : it->second;
}

// Endpoints of the form start-of-axis: (m, 0, ..., 0) in the weak/quadrant
// regions, delta + m e_1 in the strict region.
inline Int count_walks_row_endpoints(const WalkSpec& spec) {
    auto counts = count_walks_by_endpoint(spec);
    Int total = 0;
    WalkPoint base = spec.region == WalkRegion::wk_strict
                         ? delta_point(spec.k)
                         : WalkPoint(static_cast<std::size_t>(spec.k), 0);
    for (auto& [p, c] : counts) {
        bool row = true;
        for (std::size_t i = 1; i < p.size(); ++i)
            if (p[i] != base[i]) row = false;
        if (row && p[0] >= base[0]) total += c;
    }
    return total;
}

inline Int count_walks_total(const WalkSpec& spec) {
    Int total = 0;
    for (auto& [p, c] : count_walks_by_endpoint(spec)) total += c;
    return total;
}

// W_{2k}-oscillating walks of length n from delta using only positive
// steps e_j, ending anywhere in the strict chamber.
inline Int count_positive_oscillating(int k, int n) {
    WalkCounts layer;
    layer[delta_point(k)] = 1;
    for (int t = 0; t < n; ++t) {
        WalkCounts next;
        for (auto& [p, c] : layer)
            for (int ax = 1; ax <= k; ++ax) {
                WalkPoint q = p;
                detail::apply_axis(q, ax);
                if (in_region(q, WalkRegion::wk_strict)) next[q] += c;
            }
        layer = std::move(next);
    }
    Int total = 0;
    for (auto& [p, c] : layer) total += c;
    return total;
}

// Reflection identity for W_2-hesitating walks in {x > y >= 0} (walks
// start at (1,0) in this convention): w(l, m, n) = q(l, m, n) - q(l, m~, n)
// with m~ the coordinate swap of m. All three counts run through
// independent DPs.
inline bool reflection_check(const WalkPoint& lambda, const WalkPoint& mu, int n) {
    if (lambda.size() != 2 || mu.size() != 2)
        throw std::invalid_argument("reflection_check: two-dimensional points required");
    if (!in_region(lambda, WalkRegion::wk_shifted) || !in_region(mu, WalkRegion::wk_shifted))
        throw std::invalid_argument("reflection_check: points must lie in {x > y >= 0}");
    WalkSpec w{TableauKind::hesitating, WalkRegion::wk_shifted, 2, n, lambda};
    WalkSpec q{TableauKind::hesitating, WalkRegion::quadrant, 2, n, lambda};
    Int lhs = count_walks_to(w, mu);
    WalkPoint mu_swap{mu[1], mu[0]};
    Int rhs = count_walks_to(q, mu) - count_walks_to(q, mu_swap);
    return lhs == rhs;
}

// Number of W_k-oscillating walks (strict chamber, start delta) of length
// n ending on {delta + m e_1} equals the number of W_{2k} positive-step
// walks of length n from delta ending anywhere.
inline bool theorem10_check(int k, int n) {
    WalkSpec osc{TableauKind::oscillating, WalkRegion::wk_strict, k, n, {}};
    Int lhs = count_walks_row_endpoints(osc);
    Int rhs = count_positive_oscillating(2 * k, n);
    return lhs == rhs;
}

}  // namespace tw
