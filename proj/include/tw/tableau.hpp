#pragma once

// Standard Young tableaux and the exhaustive enumerator used as a counting
// oracle throughout the verification suites.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "tw/partition.hpp"

namespace tw {

class StandardYoungTableau {
public:
    StandardYoungTableau() = default;

    explicit StandardYoungTableau(std::vector<std::vector<int>> rows)
        : rows_(std::move(rows)) {
        if (!valid()) throw std::invalid_argument("StandardYoungTableau: invalid filling");
    }

    StandardYoungTableau(std::initializer_list<std::vector<int>> rows)
        : StandardYoungTableau(std::vector<std::vector<int>>(rows)) {}

    static bool rows_are_valid_syt(const std::vector<std::vector<int>>& rows) {
        int n = 0;
        for (auto& r : rows) n += static_cast<int>(r.size());
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].empty()) return false;
            if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                int v = rows[r][c];
                if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
                seen[static_cast<std::size_t>(v)] = true;
                if (c + 1 < rows[r].size() && rows[r][c] >= rows[r][c + 1]) return false;
                if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c])
                    return false;
            }
        }
        return true;
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const {
        int n = 0;
        for (auto& r : rows_) n += static_cast<int>(r.size());
        return n;
    }
    int height() const { return static_cast<int>(rows_.size()); }

    Partition shape() const {
        std::vector<int> p;
        p.reserve(rows_.size());
        for (auto& r : rows_) p.push_back(static_cast<int>(r.size()));
        return Partition(p);
    }

    // Word used for the deterministic enumeration order: rows top to bottom.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    auto operator<=>(const StandardYoungTableau&) const = default;

private:
    bool valid() const { return rows_are_valid_syt(rows_); }

    std::vector<std::vector<int>> rows_;
};

// All SYT of size n with at most max_height rows, sorted lexicographically
// by row reading word. A SYT is a growth chain in Young's lattice, so we
// enumerate by placing entries 1..n at growth corners.
inline std::vector<StandardYoungTableau> enumerate_syt(int n, int max_height) {
    if (n < 0 || max_height < 0) throw std::invalid_argument("enumerate_syt: negative argument");
    std::vector<StandardYoungTableau> out;
    std::vector<std::vector<int>> rows;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.emplace_back(StandardYoungTableau(rows));
            return;
        }
        int h = static_cast<int>(rows.size());
        for (int r = 0; r <= h && r < max_height; ++r) {
            if (r == h) {
                rows.push_back({next});
                self(self, next + 1);
                rows.pop_back();
            } else if (r == 0 || rows[static_cast<std::size_t>(r - 1)].size() >
                                     rows[static_cast<std::size_t>(r)].size()) {
                rows[static_cast<std::size_t>(r)].push_back(next);
                self(self, next + 1);
                rows[static_cast<std::size_t>(r)].pop_back();
            }
        }
    };
    rec(rec, 1);
    // reading word first (shapes can share a word), then rows for a total order
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        auto wa = a.reading_word(), wb = b.reading_word();
        return wa != wb ? wa < wb : a.rows() < b.rows();
    });
    return out;
}

inline int odd_column_count(const Partition& shape) { return shape.odd_column_count(); }

}  // namespace tw
