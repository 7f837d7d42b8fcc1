#pragma once

// Fillings with entries strictly decreasing along rows and down columns,
// as used inside the arc-diagram bijections (the decreasing order is the
// left-to-right reading convention). Entries are distinct positive
// integers, not necessarily 1..n.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tw/partition.hpp"

namespace tw {

class FilledTableau {
public:
    FilledTableau() = default;

    explicit FilledTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        if (!valid()) throw std::invalid_argument("FilledTableau: invalid filling");
    }

    FilledTableau(std::initializer_list<std::vector<int>> rows)
        : FilledTableau(std::vector<std::vector<int>>(rows)) {}

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    Partition shape() const {
        std::vector<int> p;
        p.reserve(rows_.size());
        for (auto& r : rows_) p.push_back(static_cast<int>(r.size()));
        return Partition(p);
    }

    bool contains(int v) const {
        for (auto& r : rows_)
            for (int x : r)
                if (x == v) return true;
        return false;
    }

    // RSK row insertion for the decreasing order: v bumps the leftmost
    // entry smaller than v, or lands at the end of the row.
    FilledTableau inserted(int v) const {
        if (contains(v)) throw std::invalid_argument("FilledTableau: duplicate entry inserted");
        auto rows = rows_;
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({v});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), v, std::greater<int>());
            if (it == row.end()) {
                row.push_back(v);
                break;
            }
            std::swap(*it, v);
        }
        return FilledTableau(std::move(rows));
    }

    // Reverse insertion from the corner cell at `row`; returns the tableau
    // before the insertion and the value that had been inserted.
    std::pair<FilledTableau, int> reverse_inserted(int row) const {
        auto rows = rows_;
        auto r = static_cast<std::size_t>(row);
        if (r >= rows.size() || rows[r].empty() ||
            (r + 1 < rows.size() && rows[r + 1].size() >= rows[r].size()))
            throw std::invalid_argument("FilledTableau: reverse insertion not at a corner");
        int v = rows[r].back();
        rows[r].pop_back();
        if (rows[r].empty()) rows.pop_back();
        for (std::size_t rr = r; rr-- > 0;) {
            auto& prev = rows[rr];
            // rightmost entry greater than v
            auto it = std::lower_bound(prev.begin(), prev.end(), v, std::greater<int>());
            if (it == prev.begin())
                throw std::runtime_error("FilledTableau: reverse insertion found no entry to unbump");
            --it;
            std::swap(*it, v);
        }
        return {FilledTableau(std::move(rows)), v};
    }

    // Remove the entry v, which must sit at a corner of the diagram.
    FilledTableau erased_corner(int v) const {
        auto rows = rows_;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!rows[r].empty() && rows[r].back() == v) {
                if (r + 1 < rows.size() && rows[r + 1].size() >= rows[r].size())
                    throw std::runtime_error("FilledTableau: entry to delete is not at a corner");
                rows[r].pop_back();
                if (rows[r].empty()) {
                    if (r + 1 != rows.size())
                        throw std::runtime_error("FilledTableau: entry to delete is not at a corner");
                    rows.pop_back();
                }
                return FilledTableau(std::move(rows));
            }
            // v inside the row: not a corner
            for (int x : rows[r])
                if (x == v) throw std::runtime_error("FilledTableau: entry to delete is not at a corner");
        }
        throw std::runtime_error("FilledTableau: entry to delete is absent");
    }

    // Place entry v in the unique cell of shape `to` minus our shape; the
    // result must be a valid filling.
    FilledTableau with_added_cell(const Partition& to, int v) const {
        int row = shape().one_box_diff_row(to);
        if (row < 0 || to.size() != shape().size() + 1)
            throw std::invalid_argument("FilledTableau: target shape is not one box larger");
        auto rows = rows_;
        if (static_cast<std::size_t>(row) == rows.size()) rows.push_back({v});
        else rows[static_cast<std::size_t>(row)].push_back(v);
        return FilledTableau(std::move(rows));  // validity re-checked here
    }

    bool operator==(const FilledTableau&) const = default;

private:
    bool valid() const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty()) return false;
            if (r + 1 < rows_.size() && rows_[r + 1].size() > rows_[r].size()) return false;
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (rows_[r][c] <= 0) return false;
                if (c + 1 < rows_[r].size() && rows_[r][c] <= rows_[r][c + 1]) return false;
                if (r + 1 < rows_.size() && c < rows_[r + 1].size() && rows_[r][c] <= rows_[r + 1][c])
                    return false;
            }
        }
        return true;
    }

    std::vector<std::vector<int>> rows_;
};

}  // namespace tw
