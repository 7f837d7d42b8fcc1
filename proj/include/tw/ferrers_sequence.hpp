#pragma once

// Sequences of Ferrers diagrams encoding walks on Young's lattice, the
// three step disciplines, and the reversible encoding to lattice walks in
// W_k (weak chamber x_1 >= ... >= x_k >= 0, or its shifted strict
// translate x_1 > ... > x_k > 0 used by the Bessel formulas).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tw/partition.hpp"

namespace tw {

enum class TableauKind { oscillating, vacillating, hesitating };

inline const char* to_string(TableauKind k) {
    switch (k) {
        case TableauKind::oscillating: return "oscillating";
        case TableauKind::vacillating: return "vacillating";
        case TableauKind::hesitating: return "hesitating";
    }
    return "?";
}

inline TableauKind tableau_kind_from_string(const std::string& s) {
    if (s == "oscillating") return TableauKind::oscillating;
    if (s == "vacillating") return TableauKind::vacillating;
    if (s == "hesitating") return TableauKind::hesitating;
    throw std::invalid_argument("unknown tableau kind: " + s);
}

struct ValidationResult {
    bool ok = true;
    int first_bad_index = -1;  // index of the first offending shape
    std::string reason;
};

struct FerrersSequence {
    TableauKind kind = TableauKind::oscillating;
    std::vector<Partition> shapes;

    int length() const { return static_cast<int>(shapes.size()) - 1; }

    int max_height() const {
        int h = 0;
        for (auto& s : shapes) h = std::max(h, s.height());
        return h;
    }

    bool operator==(const FerrersSequence&) const = default;
};

// Step between consecutive shapes: +1 add, -1 remove, 0 stay, anything
// else is invalid.
inline std::optional<int> shape_step(const Partition& from, const Partition& to) {
    if (from == to) return 0;
    int d = to.size() - from.size();
    if ((d == 1 || d == -1) && from.one_box_diff_row(to) >= 0) return d;
    return std::nullopt;
}

inline ValidationResult validate(const FerrersSequence& seq) {
    auto fail = [](int idx, std::string why) {
        return ValidationResult{false, idx, std::move(why)};
    };
    if (seq.shapes.empty()) return fail(0, "sequence has no shapes");
    if (!seq.shapes.front().empty()) return fail(0, "sequence does not start at the empty shape");

    int len = seq.length();
    std::vector<int> steps;
    for (int t = 0; t < len; ++t) {
        auto s = shape_step(seq.shapes[static_cast<std::size_t>(t)],
                            seq.shapes[static_cast<std::size_t>(t) + 1]);
        if (!s) return fail(t + 1, "consecutive shapes differ by more than one box");
        steps.push_back(*s);
    }

    switch (seq.kind) {
        case TableauKind::oscillating:
            for (int t = 0; t < len; ++t)
                if (steps[static_cast<std::size_t>(t)] == 0)
                    return fail(t + 1, "stay step in an oscillating sequence");
            break;
        case TableauKind::vacillating:
            if (len % 2 != 0) return fail(len, "vacillating sequence of odd length");
            for (int t = 0; t < len; ++t) {
                bool first_half = t % 2 == 0;  // step 2i -> 2i+1
                int s = steps[static_cast<std::size_t>(t)];
                if (first_half && s == 1) return fail(t + 1, "box added on a removing half-step");
                if (!first_half && s == -1) return fail(t + 1, "box removed on an adding half-step");
            }
            break;
        case TableauKind::hesitating:
            if (len % 2 != 0) return fail(len, "hesitating sequence of odd length");
            for (int t = 0; t + 1 < len; t += 2) {
                int a = steps[static_cast<std::size_t>(t)], b = steps[static_cast<std::size_t>(t) + 1];
                bool ok = (a == 0 && b == 1) || (a == -1 && b == 0) || (a == 1 && b == -1);
                if (!ok) return fail(t + 2, "step pair is not (stay,add), (remove,stay) or (add,remove)");
            }
            break;
    }
    return {};
}

// Elementwise conjugation; an involution on each kind of sequence.
inline FerrersSequence tau(const FerrersSequence& seq) {
    FerrersSequence out{seq.kind, {}};
    out.shapes.reserve(seq.shapes.size());
    for (auto& s : seq.shapes) out.shapes.push_back(s.conjugate());
    return out;
}

struct LatticeWalk {
    int k = 0;
    std::vector<int> start;               // length k
    std::vector<std::vector<int>> steps;  // each 0 or +-e_i

    bool operator==(const LatticeWalk&) const = default;
};

inline LatticeWalk seq_to_walk(const FerrersSequence& seq, int k) {
    for (auto& s : seq.shapes)
        if (s.height() > k)
            throw std::invalid_argument("seq_to_walk: shape height exceeds the dimension");
    LatticeWalk w;
    w.k = k;
    w.start.assign(static_cast<std::size_t>(k), 0);
    std::vector<int> prev = w.start;
    for (std::size_t t = 1; t < seq.shapes.size(); ++t) {
        std::vector<int> cur(static_cast<std::size_t>(k), 0);
        for (int r = 0; r < k; ++r) cur[static_cast<std::size_t>(r)] = seq.shapes[t].part(r);
        std::vector<int> step(static_cast<std::size_t>(k), 0);
        for (int r = 0; r < k; ++r) step[static_cast<std::size_t>(r)] = cur[static_cast<std::size_t>(r)] - prev[static_cast<std::size_t>(r)];
        w.steps.push_back(std::move(step));
        prev = std::move(cur);
    }
    return w;
}

inline FerrersSequence walk_to_seq(const LatticeWalk& w, TableauKind kind) {
    FerrersSequence seq{kind, {}};
    std::vector<int> pos = w.start;
    auto to_partition = [](const std::vector<int>& v) {
        for (std::size_t r = 0; r + 1 < v.size(); ++r)
            if (v[r] < v[r + 1]) throw std::invalid_argument("walk_to_seq: position not a partition");
        return Partition(v);
    };
    seq.shapes.push_back(to_partition(pos));
    for (auto& s : w.steps) {
        if (s.size() != pos.size()) throw std::invalid_argument("walk_to_seq: step dimension mismatch");
        for (std::size_t r = 0; r < pos.size(); ++r) pos[r] += s[r];
        seq.shapes.push_back(to_partition(pos));
    }
    return seq;
}

// All valid sequences of the given kind and length whose shapes never
// exceed height_bound; end_filter: nullopt = any end, otherwise the exact
// final shape. end_any_row selects sequences ending at (m) for some m >= 0.
struct TableauFilter {
    std::optional<Partition> end;
    bool end_any_row = false;
};

inline std::vector<FerrersSequence> enumerate_tableaux(TableauKind kind, int length,
                                                       int height_bound,
                                                       const TableauFilter& filter = {}) {
    if (length < 0) throw std::invalid_argument("enumerate_tableaux: negative length");
    if (kind != TableauKind::oscillating && length % 2 != 0)
        throw std::invalid_argument("enumerate_tableaux: paired kinds need even length");
    std::vector<FerrersSequence> out;
    FerrersSequence cur{kind, {Partition()}};

    auto emit = [&]() {
        const Partition& last = cur.shapes.back();
        if (filter.end && !(last == *filter.end)) return;
        if (filter.end_any_row && !last.is_row()) return;
        out.push_back(cur);
    };

    // moves for one step: -1 remove, 0 stay, +1 add
    auto next_shapes = [&](const Partition& p, int move) {
        std::vector<Partition> res;
        if (move == 0) res.push_back(p);
        else if (move == 1) res = p.grow(height_bound);
        else res = p.shrink();
        return res;
    };

    auto rec = [&](auto&& self, int t) -> void {
        if (t == length) {
            emit();
            return;
        }
        const Partition p = cur.shapes.back();
        std::vector<int> moves;
        switch (kind) {
            case TableauKind::oscillating: moves = {-1, 1}; break;
            case TableauKind::vacillating: moves = t % 2 == 0 ? std::vector<int>{-1, 0} : std::vector<int>{0, 1}; break;
            case TableauKind::hesitating: {
                if (t % 2 == 0) moves = {0, -1, 1};
                else {
                    // second half of a pair: determined by the first half
                    int prev = *shape_step(cur.shapes[cur.shapes.size() - 2], p);
                    moves = {prev == 0 ? 1 : prev == -1 ? 0 : -1};
                }
                break;
            }
        }
        for (int mv : moves)
            for (auto& q : next_shapes(p, mv)) {
                cur.shapes.push_back(q);
                self(self, t + 1);
                cur.shapes.pop_back();
            }
    };
    rec(rec, 0);
    return out;
}

}  // namespace tw
