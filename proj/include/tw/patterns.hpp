#pragma once

// Crossing and nesting statistics on arc diagrams.
//
// A k-crossing is k arcs i_1<...<i_k<j_1<...<j_k, a k-nesting is
// i_1<...<i_k<j_k<...<j_1; enhanced variants weaken the middle inequality
// to <= (isolated dots act as loops), and open variants admit exactly one
// open arc whose left endpoint sits strictly inside the pattern (crossing)
// or strictly to its left (nesting).
//
// Two evaluation paths: a pruned subset search used for small diagrams,
// and a chain DP built on the observation that every pattern is a set of
// arcs straddling a common position with sorted endpoint lists. The two
// are cross-checked in the test suite.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tw/arc_diagram.hpp"
#include "tw/involution.hpp"

namespace tw {

enum class PatternKind { crossing, nesting };
enum class PatternVariant { plain, enhanced, open, enhanced_open };

struct PatternQuery {
    PatternKind kind = PatternKind::crossing;
    PatternVariant variant = PatternVariant::plain;
};

namespace detail {

// longest strictly increasing subsequence length
inline int lis(const std::vector<int>& v) {
    std::vector<int> tails;
    for (int x : v) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end()) tails.push_back(x);
        else *it = x;
    }
    return static_cast<int>(tails.size());
}

inline int lds(const std::vector<int>& v) {
    std::vector<int> tails;  // tails[k] = largest end of a decreasing chain of length k+1
    for (int x : v) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x,
                                   [](int a, int b) { return a > b; });
        if (it == tails.end()) tails.push_back(x);
        else *it = x;
    }
    return static_cast<int>(tails.size());
}

// Pattern elements: closed arcs plus, for enhanced variants, virtual loops
// (d, d) at isolated dots. Elements are sorted by left endpoint; left
// endpoints are distinct in every diagram class we handle.
inline std::vector<std::pair<int, int>> pattern_elements(const ArcDiagram& d, bool with_loops) {
    std::vector<std::pair<int, int>> els = d.arcs();
    if (with_loops)
        for (int dot : d.isolated_dots()) els.emplace_back(dot, dot);
    std::sort(els.begin(), els.end());
    return els;
}

// Max chain among the given elements: j strictly increasing for crossings,
// strictly decreasing for nestings, with every element straddling a common
// position (the caller passes only straddling elements, or for plain
// nestings the global list, where containment already forces it).
inline int chain_level(const std::vector<std::pair<int, int>>& els, PatternKind kind) {
    std::vector<int> js;
    js.reserve(els.size());
    for (auto& [i, j] : els) js.push_back(j);
    return kind == PatternKind::crossing ? lis(js) : lds(js);
}

inline int level_dp(const ArcDiagram& d, PatternQuery q) {
    bool enhanced = q.variant == PatternVariant::enhanced || q.variant == PatternVariant::enhanced_open;
    bool open = q.variant == PatternVariant::open || q.variant == PatternVariant::enhanced_open;
    auto els = pattern_elements(d, enhanced);

    int best = 0;
    if (q.kind == PatternKind::nesting) {
        // closed part: global chain (containment order)
        best = chain_level(els, q.kind);
        if (open && !d.open_lefts().empty()) {
            int p = d.open_lefts().front();  // smallest open left is optimal
            std::vector<std::pair<int, int>> right;
            for (auto& e : els)
                if (e.first > p) right.push_back(e);
            best = std::max(best, 1 + chain_level(right, q.kind));
        }
    } else {
        if (!enhanced) {
            for (int g = 1; g < d.n(); ++g) {  // gap between dots g and g+1
                std::vector<std::pair<int, int>> str;
                for (auto& e : els)
                    if (e.first <= g && e.second >= g + 1) str.push_back(e);
                best = std::max(best, chain_level(str, q.kind));
            }
        } else {
            for (int dot = 1; dot <= d.n(); ++dot) {
                std::vector<std::pair<int, int>> str;
                for (auto& e : els)
                    if (e.first <= dot && e.second >= dot) str.push_back(e);
                best = std::max(best, chain_level(str, q.kind));
            }
        }
        if (open) {
            for (int p : d.open_lefts()) {
                std::vector<std::pair<int, int>> inside;
                for (auto& e : els) {
                    bool ok = enhanced ? (e.first < p && e.second >= p)
                                       : (e.first < p && e.second > p);
                    if (ok) inside.push_back(e);
                }
                best = std::max(best, 1 + chain_level(inside, q.kind));
            }
        }
    }
    if (open && best == 0 && !d.open_lefts().empty()) best = 1;
    return best;
}

// Pruned subset search. Chains are extended left to right, keeping the
// variant's inequalities; the open arc, if used, is appended last for
// crossings and prepended for nestings.
inline int level_brute(const ArcDiagram& d, PatternQuery q) {
    bool enhanced = q.variant == PatternVariant::enhanced || q.variant == PatternVariant::enhanced_open;
    bool open = q.variant == PatternVariant::open || q.variant == PatternVariant::enhanced_open;
    auto els = pattern_elements(d, enhanced);
    const auto& opens = d.open_lefts();

    int best = open && !opens.empty() ? 1 : 0;

    // chain[] holds indices into els, increasing by left endpoint
    std::vector<int> chain;
    auto close_chain = [&](int k, int min_j, int max_i) {
        best = std::max(best, k);
        if (!open || k == 0) return;
        for (int p : opens) {
            bool ok = q.kind == PatternKind::crossing
                          ? (enhanced ? (max_i < p && p <= min_j) : (max_i < p && p < min_j))
                          : p < (chain.empty() ? 0 : els[static_cast<std::size_t>(chain.front())].first);
            if (ok) {
                best = std::max(best, k + 1);
                return;
            }
        }
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!chain.empty()) {
            int k = static_cast<int>(chain.size());
            int min_j, max_i;
            if (q.kind == PatternKind::crossing) {
                min_j = els[static_cast<std::size_t>(chain.front())].second;
                max_i = els[static_cast<std::size_t>(chain.back())].first;
            } else {
                min_j = els[static_cast<std::size_t>(chain.back())].second;
                max_i = els[static_cast<std::size_t>(chain.back())].first;
            }
            close_chain(k, min_j, max_i);
        }
        for (std::size_t e = from; e < els.size(); ++e) {
            auto [ei, ej] = els[e];
            bool ok;
            if (chain.empty()) {
                ok = enhanced || ei != ej;  // bare loops only in enhanced patterns
            } else {
                auto [li, lj] = els[static_cast<std::size_t>(chain.back())];
                if (q.kind == PatternKind::crossing) {
                    int first_j = els[static_cast<std::size_t>(chain.front())].second;
                    ok = ei > li && ej > lj &&
                         (enhanced ? ei <= first_j : ei < first_j);
                } else {
                    ok = ei > li && ej < lj && (enhanced ? ei <= ej : ei < ej);
                }
                if (!enhanced && ei == ej) ok = false;
            }
            if (ok) {
                chain.push_back(static_cast<int>(e));
                self(self, e + 1);
                chain.pop_back();
            }
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace detail

inline void check_query_compatible(const ArcDiagram& d, PatternQuery q) {
    auto cls = d.diagram_class();
    switch (q.variant) {
        case PatternVariant::plain:
            return;
        case PatternVariant::enhanced:
            if (cls == DiagramClass::matching || cls == DiagramClass::open_matching)
                throw std::invalid_argument("pattern_level: enhanced variant needs isolated dots");
            return;
        case PatternVariant::open:
            if (cls != DiagramClass::open_partition && cls != DiagramClass::open_matching)
                throw std::invalid_argument("pattern_level: open variant needs an open class");
            return;
        case PatternVariant::enhanced_open:
            if (cls != DiagramClass::open_partition)
                throw std::invalid_argument("pattern_level: enhanced_open variant needs open partitions");
            return;
    }
}

// Largest k such that a k-pattern of the requested variant exists.
inline int pattern_level(const ArcDiagram& d, PatternQuery q) {
    check_query_compatible(d, q);
    if (d.n() <= 20) return detail::level_brute(d, q);
    return detail::level_dp(d, q);
}

// Largest k with k arcs straddling the segment [i, i+1] in crossing
// (j's ascending) or nesting (j's descending) configuration.
inline int segment_below_level(const ArcDiagram& d, int i, PatternKind kind) {
    if (i < 1 || i > d.n()) throw std::invalid_argument("segment_below_level: index out of range");
    if (i == d.n()) return 0;
    std::vector<std::pair<int, int>> str;
    for (auto& a : d.arcs())
        if (a.first <= i && a.second >= i + 1) str.push_back(a);
    std::sort(str.begin(), str.end());
    return detail::chain_level(str, kind);
}

// --- dot-counted statistics on involutions ---

namespace detail {

inline int plain_nesting_among(std::vector<std::pair<int, int>> arcs) {
    std::sort(arcs.begin(), arcs.end());
    return chain_level(arcs, PatternKind::nesting);
}

inline int plain_crossing_among(std::vector<std::pair<int, int>> arcs, int n) {
    std::sort(arcs.begin(), arcs.end());
    int best = 0;
    for (int g = 1; g < n; ++g) {
        std::vector<std::pair<int, int>> str;
        for (auto& a : arcs)
            if (a.first <= g && a.second >= g + 1) str.push_back(a);
        best = std::max(best, chain_level(str, PatternKind::crossing));
    }
    return best;
}

}  // namespace detail

// Enhanced nesting level of an involution, counted in dots. Equals the
// longest decreasing subsequence of the one-line word.
inline int enhne(const Involution& inv) {
    const auto& arcs = inv.cycles();
    int best = 2 * detail::plain_nesting_among(arcs);
    for (int p : inv.fixed_points()) {
        std::vector<std::pair<int, int>> containing;
        for (auto& a : arcs)
            if (a.first < p && a.second > p) containing.push_back(a);
        best = std::max(best, 1 + 2 * detail::plain_nesting_among(containing));
    }
    return best;
}

// Open nesting level: dots in a maximal nesting after fixed points become
// open arcs.
inline int futne(const Involution& inv) {
    const auto& arcs = inv.cycles();
    int best = 2 * detail::plain_nesting_among(arcs);
    auto fp = inv.fixed_points();
    if (!fp.empty()) {
        int p = fp.front();
        std::vector<std::pair<int, int>> right;
        for (auto& a : arcs)
            if (a.first > p) right.push_back(a);
        best = std::max(best, 1 + 2 * detail::plain_nesting_among(right));
    }
    return best;
}

// Open crossing level in dots (same open-matching view, crossing side).
inline int open_crossing_level(const Involution& inv) {
    const auto& arcs = inv.cycles();
    int best = 2 * detail::plain_crossing_among(arcs, inv.size());
    for (int p : inv.fixed_points()) {
        std::vector<std::pair<int, int>> containing;
        for (auto& a : arcs)
            if (a.first < p && a.second > p) containing.push_back(a);
        best = std::max(best, 1 + 2 * detail::plain_crossing_among(containing, inv.size()));
    }
    return best;
}

}  // namespace tw
