#pragma once

// Row-insertion RSK restricted to involutions. An involution satisfies
// RSK(alpha) = (P, P), so only the insertion tableau is kept; the inverse
// runs reverse bumping with the recording tableau equal to P.

#include <stdexcept>
#include <vector>

#include "tw/involution.hpp"
#include "tw/tableau.hpp"

namespace tw {

namespace detail {

// Insert v into rows (increasing order), returning the cell where the
// shape grew.
inline std::pair<int, int> rsk_insert_increasing(std::vector<std::vector<int>>& rows, int v) {
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({v});
            return {static_cast<int>(r), 0};
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), v);
        if (it == row.end()) {
            row.push_back(v);
            return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
        }
        std::swap(*it, v);  // bump
    }
}

// Reverse insertion starting from the corner cell (r, c); returns the value
// pushed out of row 0.
inline int rsk_reverse_insert(std::vector<std::vector<int>>& rows, int r, int c) {
    int v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    rows[static_cast<std::size_t>(r)].pop_back();
    if (rows[static_cast<std::size_t>(r)].empty()) rows.pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
        auto& row = rows[static_cast<std::size_t>(rr)];
        // rightmost entry < v
        auto it = std::lower_bound(row.begin(), row.end(), v);
        if (it == row.begin()) throw std::runtime_error("rsk_reverse_insert: no entry to unbump");
        --it;
        std::swap(*it, v);
    }
    return v;
}

}  // namespace detail

inline StandardYoungTableau rsk_involution_to_syt(const Involution& inv) {
    std::vector<std::vector<int>> rows;
    for (int x : inv.one_line_word()) detail::rsk_insert_increasing(rows, x);
    return StandardYoungTableau(rows);
}

inline Involution rsk_syt_to_involution(const StandardYoungTableau& t) {
    if (!StandardYoungTableau::rows_are_valid_syt(t.rows()))
        throw std::invalid_argument("rsk_syt_to_involution: not a standard Young tableau");
    int n = t.size();
    std::vector<std::vector<int>> p = t.rows();  // insertion tableau, unwound
    std::vector<std::vector<int>> q = t.rows();  // recording tableau
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int v = n; v >= 1; --v) {
        int r = -1, c = -1;
        for (std::size_t rr = 0; rr < q.size() && r < 0; ++rr)
            if (!q[rr].empty() && q[rr].back() == v) {
                r = static_cast<int>(rr);
                c = static_cast<int>(q[rr].size()) - 1;
            }
        if (r < 0) throw std::runtime_error("rsk_syt_to_involution: recording entry not at a corner");
        q[static_cast<std::size_t>(r)].pop_back();
        if (q[static_cast<std::size_t>(r)].empty()) q.pop_back();
        word[static_cast<std::size_t>(v) - 1] = detail::rsk_reverse_insert(p, r, c);
    }
    std::vector<std::pair<int, int>> cycles;
    for (int i = 1; i <= n; ++i) {
        int j = word[static_cast<std::size_t>(i) - 1];
        if (j > i) cycles.emplace_back(i, j);
        if (word[static_cast<std::size_t>(j) - 1] != i)
            throw std::runtime_error("rsk_syt_to_involution: image is not an involution");
    }
    return Involution(n, std::move(cycles));
}

}  // namespace tw
