#pragma once

// Integer partitions: the node type of Young's lattice. Parts are stored
// weakly decreasing with no trailing zeros, so the empty partition is {}.

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tw {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: nonpositive part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts not weakly decreasing");
        }
    }

    static Partition row(int m) {
        return m == 0 ? Partition() : Partition(std::vector<int>{m});
    }

    static Partition column(int m) {
        return Partition(std::vector<int>(static_cast<std::size_t>(m), 1));
    }

    const std::vector<int>& parts() const { return parts_; }
    int height() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    int width() const { return parts_.empty() ? 0 : parts_[0]; }

    int part(int r) const {  // 0-indexed row, 0 beyond the last part
        return r < height() ? parts_[static_cast<std::size_t>(r)] : 0;
    }

    bool is_row() const { return parts_.size() <= 1; }

    Partition conjugate() const {
        std::vector<int> c;
        c.reserve(static_cast<std::size_t>(width()));
        for (int col = 0; col < width(); ++col) {
            int h = 0;
            while (h < height() && parts_[static_cast<std::size_t>(h)] > col) ++h;
            c.push_back(h);
        }
        return Partition(std::move(c));
    }

    // Number of columns of odd height in the Ferrers diagram.
    int odd_column_count() const {
        Partition conj = conjugate();
        int m = 0;
        for (int h : conj.parts())
            if (h % 2 == 1) ++m;
        return m;
    }

    // Shapes obtained by adding one box, respecting the height bound
    // (max_height < 0 means unbounded).
    std::vector<Partition> grow(int max_height = -1) const {
        std::vector<Partition> out;
        for (int r = 0; r <= height(); ++r) {
            if (max_height >= 0 && r >= max_height) break;
            if (r == 0 || part(r) < part(r - 1)) {
                auto p = parts_;
                if (r == height()) p.push_back(1);
                else ++p[static_cast<std::size_t>(r)];
                out.emplace_back(std::move(p));
            }
        }
        return out;
    }

    // Shapes obtained by removing one corner box.
    std::vector<Partition> shrink() const {
        std::vector<Partition> out;
        for (int r = 0; r < height(); ++r) {
            if (r + 1 == height() || part(r) > part(r + 1)) {
                auto p = parts_;
                --p[static_cast<std::size_t>(r)];
                out.emplace_back(std::move(p));
            }
        }
        return out;
    }

    // Row index of the changed box if `to` differs from *this by exactly one
    // box (either direction); -1 otherwise or if equal.
    int one_box_diff_row(const Partition& to) const {
        const Partition *small = this, *big = &to;
        if (size() == to.size() + 1) std::swap(small, big);
        else if (to.size() != size() + 1) return -1;
        int row = -1;
        int h = std::max(small->height(), big->height());
        for (int r = 0; r < h; ++r) {
            int d = big->part(r) - small->part(r);
            if (d == 0) continue;
            if (d != 1 || row != -1) return -1;
            row = r;
        }
        return row;
    }

    bool contains(const Partition& other) const {
        for (int r = 0; r < other.height(); ++r)
            if (part(r) < other.part(r)) return false;
        return true;
    }

    auto operator<=>(const Partition& o) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

}  // namespace tw
