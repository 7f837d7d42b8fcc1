#pragma once

// Arc diagrams over a row of 1-indexed dots. Closed arcs are pairs (i, j)
// with i < j; open arcs are recorded by their left endpoint only. Loops are
// never stored: an isolated dot is one that touches no arc and carries no
// open arc. One structure carries set partitions, matchings, involutions
// and their open variants; the class tag selects the validity rules.

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tw/involution.hpp"

namespace tw {

enum class DiagramClass {
    set_partition,
    matching,
    involution,
    open_partition,
    open_matching,
};

inline const char* to_string(DiagramClass c) {
    switch (c) {
        case DiagramClass::set_partition: return "set_partition";
        case DiagramClass::matching: return "matching";
        case DiagramClass::involution: return "involution";
        case DiagramClass::open_partition: return "open_partition";
        case DiagramClass::open_matching: return "open_matching";
    }
    return "?";
}

inline DiagramClass diagram_class_from_string(const std::string& s) {
    if (s == "set_partition") return DiagramClass::set_partition;
    if (s == "matching") return DiagramClass::matching;
    if (s == "involution") return DiagramClass::involution;
    if (s == "open_partition") return DiagramClass::open_partition;
    if (s == "open_matching") return DiagramClass::open_matching;
    throw std::invalid_argument("unknown diagram class: " + s);
}

class ArcDiagram {
public:
    ArcDiagram() = default;

    ArcDiagram(int n, std::vector<std::pair<int, int>> arcs, std::vector<int> open_lefts,
               DiagramClass cls)
        : n_(n), arcs_(std::move(arcs)), open_(std::move(open_lefts)), class_(cls) {
        normalize();
        check();
    }

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& open_lefts() const { return open_; }
    DiagramClass diagram_class() const { return class_; }

    bool is_open_class() const {
        return class_ == DiagramClass::open_partition || class_ == DiagramClass::open_matching;
    }

    bool left_of_arc(int d) const {
        for (auto& [i, j] : arcs_) if (i == d) return true;
        return false;
    }
    bool right_of_arc(int d) const {
        for (auto& [i, j] : arcs_) if (j == d) return true;
        return false;
    }
    bool has_open_at(int d) const {
        return std::find(open_.begin(), open_.end(), d) != open_.end();
    }
    bool isolated(int d) const {
        return !left_of_arc(d) && !right_of_arc(d) && !has_open_at(d);
    }

    std::vector<int> isolated_dots() const {
        std::vector<int> out;
        for (int d = 1; d <= n_; ++d)
            if (isolated(d)) out.push_back(d);
        return out;
    }

    // Per-dot role word: O opener, C closer, B both, N neither. Open-arc
    // left endpoints count as openers.
    std::string opener_closer_word() const {
        std::string w;
        w.reserve(static_cast<std::size_t>(n_));
        for (int d = 1; d <= n_; ++d) {
            bool op = left_of_arc(d) || has_open_at(d);
            bool cl = right_of_arc(d);
            w += op ? (cl ? 'B' : 'O') : (cl ? 'C' : 'N');
        }
        return w;
    }

    // Mirror image: dot d -> n+1-d. Open arcs have no mirror counterpart,
    // so this is only offered for closed classes.
    ArcDiagram mirrored() const {
        if (!open_.empty()) throw std::invalid_argument("mirrored: diagram has open arcs");
        std::vector<std::pair<int, int>> a;
        a.reserve(arcs_.size());
        for (auto& [i, j] : arcs_) a.emplace_back(n_ + 1 - j, n_ + 1 - i);
        return ArcDiagram(n_, std::move(a), {}, class_);
    }

    Involution to_involution() const {
        if (class_ != DiagramClass::involution && class_ != DiagramClass::matching)
            throw std::invalid_argument("to_involution: wrong diagram class");
        return Involution(n_, arcs_);
    }

    // Blocks of the set partition, singletons included.
    std::vector<std::vector<int>> blocks() const {
        if (class_ != DiagramClass::set_partition && class_ != DiagramClass::involution &&
            class_ != DiagramClass::matching)
            throw std::invalid_argument("blocks: diagram has open arcs");
        std::vector<int> next(static_cast<std::size_t>(n_) + 1, 0);
        std::vector<bool> is_right(static_cast<std::size_t>(n_) + 1, false);
        for (auto& [i, j] : arcs_) {
            next[static_cast<std::size_t>(i)] = j;
            is_right[static_cast<std::size_t>(j)] = true;
        }
        std::vector<std::vector<int>> out;
        for (int d = 1; d <= n_; ++d) {
            if (is_right[static_cast<std::size_t>(d)]) continue;
            std::vector<int> blk{d};
            int cur = d;
            while (next[static_cast<std::size_t>(cur)]) {
                cur = next[static_cast<std::size_t>(cur)];
                blk.push_back(cur);
            }
            out.push_back(std::move(blk));
        }
        return out;
    }

    auto operator<=>(const ArcDiagram&) const = default;

private:
    void normalize() {
        for (auto& [i, j] : arcs_)
            if (i > j) std::swap(i, j);
        std::sort(arcs_.begin(), arcs_.end());
        std::sort(open_.begin(), open_.end());
    }

    void check() const {
        if (n_ < 0) throw std::invalid_argument("ArcDiagram: negative size");
        std::vector<int> out_deg(static_cast<std::size_t>(n_) + 1, 0);
        std::vector<int> in_deg(static_cast<std::size_t>(n_) + 1, 0);
        for (auto& [i, j] : arcs_) {
            if (i < 1 || j > n_ || i >= j) throw std::invalid_argument("ArcDiagram: bad arc");
            ++out_deg[static_cast<std::size_t>(i)];
            ++in_deg[static_cast<std::size_t>(j)];
        }
        if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
            throw std::invalid_argument("ArcDiagram: duplicate arc");
        for (std::size_t k = 0; k < open_.size(); ++k) {
            if (open_[k] < 1 || open_[k] > n_) throw std::invalid_argument("ArcDiagram: bad open arc");
            if (k + 1 < open_.size() && open_[k] == open_[k + 1])
                throw std::invalid_argument("ArcDiagram: duplicate open arc");
        }
        bool open_class = class_ == DiagramClass::open_partition || class_ == DiagramClass::open_matching;
        if (!open_class && !open_.empty())
            throw std::invalid_argument("ArcDiagram: open arcs in a closed class");

        switch (class_) {
            case DiagramClass::set_partition:
            case DiagramClass::open_partition:
                // consecutive-arc block representation
                for (int d = 1; d <= n_; ++d) {
                    if (out_deg[static_cast<std::size_t>(d)] > 1 || in_deg[static_cast<std::size_t>(d)] > 1)
                        throw std::invalid_argument("ArcDiagram: dot with two arcs on one side");
                    if (has_open_at(d) && out_deg[static_cast<std::size_t>(d)] > 0)
                        throw std::invalid_argument("ArcDiagram: open arc at a closed-arc left endpoint");
                }
                break;
            case DiagramClass::involution:
            case DiagramClass::matching:
            case DiagramClass::open_matching:
                for (int d = 1; d <= n_; ++d) {
                    int deg = out_deg[static_cast<std::size_t>(d)] + in_deg[static_cast<std::size_t>(d)];
                    if (deg > 1) throw std::invalid_argument("ArcDiagram: dot in two arcs");
                    if (has_open_at(d) && deg > 0)
                        throw std::invalid_argument("ArcDiagram: open arc at an arc endpoint");
                    if (class_ == DiagramClass::matching && deg == 0)
                        throw std::invalid_argument("ArcDiagram: isolated dot in a matching");
                    if (class_ == DiagramClass::open_matching && deg == 0 && !has_open_at(d))
                        throw std::invalid_argument("ArcDiagram: isolated dot in an open matching");
                }
                break;
        }
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<int> open_;
    DiagramClass class_ = DiagramClass::set_partition;
};

// Build the diagram of a set partition from its blocks: a block
// {a_1 < ... < a_j} contributes arcs (a_1,a_2), ..., (a_{j-1},a_j).
inline ArcDiagram from_blocks(int n, std::vector<std::vector<int>> blocks) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<std::pair<int, int>> arcs;
    for (auto& blk : blocks) {
        std::sort(blk.begin(), blk.end());
        for (std::size_t k = 0; k < blk.size(); ++k) {
            int d = blk[k];
            if (d < 1 || d > n || seen[static_cast<std::size_t>(d)])
                throw std::invalid_argument("from_blocks: blocks do not partition {1..n}");
            seen[static_cast<std::size_t>(d)] = true;
            if (k > 0) arcs.emplace_back(blk[k - 1], d);
        }
    }
    for (int d = 1; d <= n; ++d)
        if (!seen[static_cast<std::size_t>(d)]) throw std::invalid_argument("from_blocks: missing dot");
    return ArcDiagram(n, std::move(arcs), {}, DiagramClass::set_partition);
}

inline ArcDiagram involution_diagram(const Involution& inv) {
    return ArcDiagram(inv.size(), inv.cycles(), {}, DiagramClass::involution);
}

// iota: change every isolated dot of an involution diagram into an open arc.
inline ArcDiagram open_matching_view(const Involution& inv) {
    ArcDiagram d = involution_diagram(inv);
    return ArcDiagram(d.n(), d.arcs(), d.isolated_dots(), DiagramClass::open_matching);
}

inline Involution involution_from_open_matching(const ArcDiagram& m) {
    if (m.diagram_class() != DiagramClass::open_matching)
        throw std::invalid_argument("involution_from_open_matching: wrong class");
    return Involution(m.n(), m.arcs());
}

// --- exhaustive enumerators (oracle layer) ---

inline std::vector<std::vector<std::vector<int>>> enumerate_set_partition_blocks(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int d) -> void {
        if (d > n) {
            out.push_back(blocks);
            return;
        }
        // index loop: the recursive call grows and shrinks `blocks`
        for (std::size_t b = 0, count = blocks.size(); b < count; ++b) {
            blocks[b].push_back(d);
            self(self, d + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({d});
        self(self, d + 1);
        blocks.pop_back();
    };
    rec(rec, 1);
    return out;
}

inline std::vector<ArcDiagram> enumerate_diagrams(DiagramClass cls, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_diagrams: negative size");
    std::vector<ArcDiagram> out;
    switch (cls) {
        case DiagramClass::set_partition:
            for (auto& blocks : enumerate_set_partition_blocks(n))
                out.push_back(from_blocks(n, blocks));
            break;
        case DiagramClass::involution:
            for (auto& inv : enumerate_involutions(n)) out.push_back(involution_diagram(inv));
            break;
        case DiagramClass::matching:
            for (auto& inv : enumerate_involutions(n))
                if (inv.fixed_points().empty())
                    out.emplace_back(n, inv.cycles(), std::vector<int>{}, DiagramClass::matching);
            break;
        case DiagramClass::open_matching:
            // every dot is an arc endpoint or an open-arc left endpoint
            for (auto& inv : enumerate_involutions(n))
                out.emplace_back(n, inv.cycles(), inv.fixed_points(), DiagramClass::open_matching);
            break;
        case DiagramClass::open_partition:
            // a set partition with any subset of blocks still under
            // construction; an open block carries an open arc at its maximum
            for (auto& blocks : enumerate_set_partition_blocks(n)) {
                ArcDiagram base = from_blocks(n, blocks);
                std::size_t b = blocks.size();
                for (std::size_t mask = 0; mask < (std::size_t{1} << b); ++mask) {
                    std::vector<int> opens;
                    for (std::size_t k = 0; k < b; ++k)
                        if (mask >> k & 1)
                            opens.push_back(*std::max_element(blocks[k].begin(), blocks[k].end()));
                    out.emplace_back(n, base.arcs(), std::move(opens), DiagramClass::open_partition);
                }
            }
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tw
