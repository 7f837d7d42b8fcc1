#pragma once

// The arc-diagram <-> tableau-sequence bijections.
//
// phi reads a set partition left to right, two half-steps per dot: if the
// dot closes an arc its entry is deleted (always from a corner, asserted),
// then if it opens an arc (i, j) the partner j is RSK-inserted in
// decreasing order. The oscillating variant does one step per dot of a
// matching, the hesitating variant pairs the halves as (stay, add),
// (remove, stay) or (add, remove) per dot of a set partition.
//
// Inverses run the process backward; filling entries into the shapes is
// unique, and failure to fill means the input sequence is not an image.
//
// On top sit the closure construction for open diagrams, the involution
// map psi = iota . phi^-1 . tau . phi, the map theta that carries enhanced
// nestings to open nestings, and the theta-orbit involution that swaps
// enhne with futne.

#include <stdexcept>
#include <utility>
#include <vector>

#include "tw/arc_diagram.hpp"
#include "tw/ferrers_sequence.hpp"
#include "tw/filled_tableau.hpp"
#include "tw/involution.hpp"
#include "tw/partition.hpp"
#include "tw/patterns.hpp"
#include "tw/rsk.hpp"
#include "tw/tableau.hpp"

namespace tw {

struct FilledSequence {
    std::vector<FilledTableau> tableaux;
};

namespace detail {

inline bool closed_partition_like(DiagramClass c) {
    return c == DiagramClass::set_partition || c == DiagramClass::involution ||
           c == DiagramClass::matching;
}

inline int arc_partner_right(const ArcDiagram& d, int dot) {  // j of arc (dot, j), 0 if none
    for (auto& [i, j] : d.arcs())
        if (i == dot) return j;
    return 0;
}

}  // namespace detail

// --- vacillating phi ---

inline std::pair<FilledSequence, FerrersSequence> phi(const ArcDiagram& pi) {
    if (!detail::closed_partition_like(pi.diagram_class()))
        throw std::invalid_argument("phi: closed partition-like diagram required");
    FilledSequence filled;
    FerrersSequence seq{TableauKind::vacillating, {}};
    FilledTableau t;
    auto push = [&](const FilledTableau& x) {
        filled.tableaux.push_back(x);
        seq.shapes.push_back(x.shape());
    };
    push(t);
    for (int dot = 1; dot <= pi.n(); ++dot) {
        t = pi.right_of_arc(dot) ? t.erased_corner(dot) : t;
        push(t);
        if (int j = detail::arc_partner_right(pi, dot)) t = t.inserted(j);
        push(t);
    }
    if (!t.empty()) throw std::logic_error("phi: sequence did not end empty");
    return {std::move(filled), std::move(seq)};
}

inline ArcDiagram phi_inverse(const FerrersSequence& seq) {
    if (seq.kind != TableauKind::vacillating)
        throw std::invalid_argument("phi_inverse: vacillating sequence required");
    if (auto v = validate(seq); !v.ok)
        throw std::invalid_argument("phi_inverse: invalid sequence at index " +
                                    std::to_string(v.first_bad_index) + ": " + v.reason);
    if (!seq.shapes.back().empty())
        throw std::invalid_argument("phi_inverse: sequence does not end empty");
    int n = seq.length() / 2;
    std::vector<std::pair<int, int>> arcs;
    FilledTableau t;  // runs backward from the empty tableau
    try {
        for (int dot = n; dot >= 1; --dot) {
            const auto& mid = seq.shapes[2 * static_cast<std::size_t>(dot) - 1];
            const auto& end = seq.shapes[2 * static_cast<std::size_t>(dot)];
            const auto& beg = seq.shapes[2 * static_cast<std::size_t>(dot) - 2];
            if (mid != end) {  // insertion at this dot: recover the partner
                auto [prev, v] = t.reverse_inserted(mid.one_box_diff_row(end));
                if (v <= dot || v > n) throw std::runtime_error("partner out of range");
                arcs.emplace_back(dot, v);
                t = std::move(prev);
            }
            if (beg != mid) t = t.with_added_cell(beg, dot);  // deletion removed the entry `dot`
        }
        if (!t.empty()) throw std::runtime_error("leftover entries");
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("phi_inverse: sequence is not an image (") + e.what() + ")");
    }
    return ArcDiagram(n, std::move(arcs), {}, DiagramClass::set_partition);
}

// --- oscillating phi (matchings) ---

inline FerrersSequence phi_oscillating(const ArcDiagram& m) {
    if (m.diagram_class() != DiagramClass::matching)
        throw std::invalid_argument("phi_oscillating: matching required");
    FerrersSequence seq{TableauKind::oscillating, {}};
    FilledTableau t;
    seq.shapes.push_back(t.shape());
    for (int dot = 1; dot <= m.n(); ++dot) {
        if (int j = detail::arc_partner_right(m, dot)) t = t.inserted(j);
        else t = t.erased_corner(dot);
        seq.shapes.push_back(t.shape());
    }
    if (!t.empty()) throw std::logic_error("phi_oscillating: sequence did not end empty");
    return seq;
}

inline ArcDiagram phi_oscillating_inverse(const FerrersSequence& seq) {
    if (seq.kind != TableauKind::oscillating)
        throw std::invalid_argument("phi_oscillating_inverse: oscillating sequence required");
    if (auto v = validate(seq); !v.ok)
        throw std::invalid_argument("phi_oscillating_inverse: invalid sequence at index " +
                                    std::to_string(v.first_bad_index) + ": " + v.reason);
    if (!seq.shapes.back().empty())
        throw std::invalid_argument("phi_oscillating_inverse: sequence does not end empty");
    int n = seq.length();
    std::vector<std::pair<int, int>> arcs;
    FilledTableau t;
    try {
        for (int dot = n; dot >= 1; --dot) {
            const auto& beg = seq.shapes[static_cast<std::size_t>(dot) - 1];
            const auto& end = seq.shapes[static_cast<std::size_t>(dot)];
            if (end.size() > beg.size()) {
                auto [prev, v] = t.reverse_inserted(beg.one_box_diff_row(end));
                if (v <= dot || v > n) throw std::runtime_error("partner out of range");
                arcs.emplace_back(dot, v);
                t = std::move(prev);
            } else {
                t = t.with_added_cell(beg, dot);
            }
        }
        if (!t.empty()) throw std::runtime_error("leftover entries");
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("phi_oscillating_inverse: sequence is not an image (") +
                                 e.what() + ")");
    }
    return ArcDiagram(n, std::move(arcs), {}, DiagramClass::matching);
}

// --- hesitating phi (set partitions, enhanced patterns) ---

inline FerrersSequence phi_hesitating(const ArcDiagram& pi) {
    if (!detail::closed_partition_like(pi.diagram_class()))
        throw std::invalid_argument("phi_hesitating: closed partition-like diagram required");
    FerrersSequence seq{TableauKind::hesitating, {}};
    FilledTableau t;
    seq.shapes.push_back(t.shape());
    for (int dot = 1; dot <= pi.n(); ++dot) {
        bool closer = pi.right_of_arc(dot);
        int partner = detail::arc_partner_right(pi, dot);
        if (!closer && partner) {  // opener only: (stay, add)
            seq.shapes.push_back(t.shape());
            t = t.inserted(partner);
            seq.shapes.push_back(t.shape());
        } else if (closer && !partner) {  // closer only: (remove, stay)
            t = t.erased_corner(dot);
            seq.shapes.push_back(t.shape());
            seq.shapes.push_back(t.shape());
        } else {  // both, or isolated acting as the loop (dot, dot): (add, remove)
            t = t.inserted(partner ? partner : dot);
            seq.shapes.push_back(t.shape());
            t = t.erased_corner(dot);
            seq.shapes.push_back(t.shape());
        }
    }
    if (!t.empty()) throw std::logic_error("phi_hesitating: sequence did not end empty");
    return seq;
}

inline ArcDiagram phi_hesitating_inverse(const FerrersSequence& seq) {
    if (seq.kind != TableauKind::hesitating)
        throw std::invalid_argument("phi_hesitating_inverse: hesitating sequence required");
    if (auto v = validate(seq); !v.ok)
        throw std::invalid_argument("phi_hesitating_inverse: invalid sequence at index " +
                                    std::to_string(v.first_bad_index) + ": " + v.reason);
    if (!seq.shapes.back().empty())
        throw std::invalid_argument("phi_hesitating_inverse: sequence does not end empty");
    int n = seq.length() / 2;
    std::vector<std::pair<int, int>> arcs;
    FilledTableau t;
    try {
        for (int dot = n; dot >= 1; --dot) {
            const auto& beg = seq.shapes[2 * static_cast<std::size_t>(dot) - 2];
            const auto& mid = seq.shapes[2 * static_cast<std::size_t>(dot) - 1];
            const auto& end = seq.shapes[2 * static_cast<std::size_t>(dot)];
            if (beg == mid) {  // (stay, add)
                auto [prev, v] = t.reverse_inserted(mid.one_box_diff_row(end));
                if (v <= dot || v > n) throw std::runtime_error("partner out of range");
                arcs.emplace_back(dot, v);
                t = std::move(prev);
            } else if (mid == end) {  // (remove, stay)
                t = t.with_added_cell(beg, dot);
            } else {  // (add, remove): re-add the deleted entry, then unbump
                t = t.with_added_cell(mid, dot);
                auto [prev, v] = t.reverse_inserted(beg.one_box_diff_row(mid));
                if (v != dot) {
                    if (v < dot || v > n) throw std::runtime_error("partner out of range");
                    arcs.emplace_back(dot, v);
                }
                t = std::move(prev);
            }
        }
        if (!t.empty()) throw std::runtime_error("leftover entries");
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("phi_hesitating_inverse: sequence is not an image (") +
                                 e.what() + ")");
    }
    return ArcDiagram(n, std::move(arcs), {}, DiagramClass::set_partition);
}

// --- closure of open diagrams ---

enum class ClosureOrder { decreasing, increasing };

// Close the m open arcs at i_1 < ... < i_m. Decreasing order pairs them as
// (i_1, n+m), ..., (i_m, n+1), forming a terminal m-nesting and creating
// no new crossing; increasing order pairs (i_t, n+t), forming a terminal
// m-crossing and creating no new nesting.
inline ArcDiagram close_open_arcs(const ArcDiagram& d,
                                  ClosureOrder order = ClosureOrder::decreasing) {
    if (!d.is_open_class())
        throw std::invalid_argument("close_open_arcs: open diagram required");
    int n = d.n();
    int m = static_cast<int>(d.open_lefts().size());
    auto arcs = d.arcs();
    for (int t = 0; t < m; ++t) {
        int left = d.open_lefts()[static_cast<std::size_t>(t)];
        int right = order == ClosureOrder::decreasing ? n + m - t : n + 1 + t;
        arcs.emplace_back(left, right);
    }
    DiagramClass cls = d.diagram_class() == DiagramClass::open_partition
                           ? DiagramClass::set_partition
                           : DiagramClass::matching;
    return ArcDiagram(n + m, std::move(arcs), {}, cls);
}

// Undo a closure: dots n+1..n+m must be pure closers; their arcs reopen.
inline ArcDiagram reopen_last_arcs(const ArcDiagram& d, int m) {
    int n = d.n() - m;
    if (n < 0) throw std::invalid_argument("reopen_last_arcs: too many arcs to reopen");
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> opens;
    for (auto& [i, j] : d.arcs()) {
        if (i > n) throw std::runtime_error("reopen_last_arcs: tail dot opens an arc");
        if (j > n) opens.push_back(i);
        else arcs.emplace_back(i, j);
    }
    if (static_cast<int>(opens.size()) != m)
        throw std::runtime_error("reopen_last_arcs: tail dot is not a closer");
    DiagramClass cls = d.diagram_class() == DiagramClass::set_partition
                           ? DiagramClass::open_partition
                           : DiagramClass::open_matching;
    return ArcDiagram(n, std::move(arcs), std::move(opens), cls);
}

// --- open diagrams <-> height-bounded sequences ending at a row ---

namespace detail {

inline FerrersSequence apply_phi_of_kind(const ArcDiagram& d, TableauKind kind) {
    switch (kind) {
        case TableauKind::vacillating: return phi(d).second;
        case TableauKind::oscillating: return phi_oscillating(d);
        case TableauKind::hesitating: return phi_hesitating(d);
    }
    throw std::logic_error("unreachable");
}

inline ArcDiagram apply_phi_inverse_of_kind(const FerrersSequence& seq) {
    switch (seq.kind) {
        case TableauKind::vacillating: return phi_inverse(seq);
        case TableauKind::oscillating: return phi_oscillating_inverse(seq);
        case TableauKind::hesitating: return phi_hesitating_inverse(seq);
    }
    throw std::logic_error("unreachable");
}

// Shape tail traversed by the m pure-closer dots of a closure.
inline std::vector<Partition> closure_tail(TableauKind kind, int m) {
    std::vector<Partition> tail;
    for (int v = m - 1; v >= 0; --v) {
        tail.push_back(Partition::row(v));
        if (kind != TableauKind::oscillating) tail.push_back(Partition::row(v));
    }
    return tail;
}

}  // namespace detail

// Open partition (vacillating/hesitating) or open matching (oscillating)
// to the height-bounded sequence of that kind ending at the row (m):
// close the open arcs in decreasing order, apply the bijection of the
// kind, and keep the first n dots' worth of shapes.
inline FerrersSequence open_to_tableau(const ArcDiagram& d, TableauKind kind) {
    if (kind == TableauKind::oscillating) {
        if (d.diagram_class() != DiagramClass::open_matching)
            throw std::invalid_argument("open_to_tableau: oscillating kind needs an open matching");
    } else if (d.diagram_class() != DiagramClass::open_partition) {
        throw std::invalid_argument("open_to_tableau: open partition required");
    }
    int n = d.n();
    int m = static_cast<int>(d.open_lefts().size());
    FerrersSequence full = detail::apply_phi_of_kind(close_open_arcs(d, ClosureOrder::decreasing), kind);
    std::size_t keep = kind == TableauKind::oscillating ? static_cast<std::size_t>(n) + 1
                                                        : 2 * static_cast<std::size_t>(n) + 1;
    FerrersSequence out{kind, {full.shapes.begin(), full.shapes.begin() + static_cast<long>(keep)}};
    if (!(out.shapes.back() == Partition::row(m)))
        throw std::logic_error("open_to_tableau: truncated sequence does not end at the expected row");
    return out;
}

inline ArcDiagram tableau_to_open(const FerrersSequence& seq) {
    if (seq.shapes.empty() || !seq.shapes.back().is_row())
        throw std::invalid_argument("tableau_to_open: sequence does not end at a row shape");
    int m = seq.shapes.back().size();
    FerrersSequence full = seq;
    for (auto& p : detail::closure_tail(seq.kind, m)) full.shapes.push_back(p);
    return reopen_last_arcs(detail::apply_phi_inverse_of_kind(full), m);
}

// --- psi, theta, and the statistic-swapping involution ---

// phi^-1 . tau . phi at the involution level; preserves the opener/closer
// word, swaps crossing and nesting levels.
inline Involution tau_conjugate(const Involution& inv) {
    ArcDiagram image = phi_inverse(tau(phi(involution_diagram(inv)).second));
    return Involution(image.n(), image.arcs());
}

// psi = iota . phi^-1 . tau . phi : involutions -> open matchings.
inline ArcDiagram psi(const Involution& inv) { return open_matching_view(tau_conjugate(inv)); }

namespace detail {

// tau-conjugation of open matchings through oscillating tableaux. The
// closure order of the forward map fixes the pattern the inverse reopens,
// so the inverse of the decreasing-order map is the increasing-order map.
inline ArcDiagram rho(const ArcDiagram& m, ClosureOrder order) {
    int count = static_cast<int>(m.open_lefts().size());
    FerrersSequence x = phi_oscillating(close_open_arcs(m, order));
    return reopen_last_arcs(phi_oscillating_inverse(tau(x)), count);
}

}  // namespace detail

// theta: enhanced l-nestings of the input correspond to l-nestings of the
// open-matching view of the output. Preserves size, fixed points and the
// opener/closer word.
inline Involution theta(const Involution& inv) {
    ArcDiagram m = open_matching_view(tau_conjugate(inv));
    return involution_from_open_matching(detail::rho(m, ClosureOrder::decreasing));
}

inline Involution theta_inverse(const Involution& inv) {
    ArcDiagram m = open_matching_view(inv);
    return tau_conjugate(involution_from_open_matching(detail::rho(m, ClosureOrder::increasing)));
}

// alpha -> theta^(m_alpha)(alpha): the involution on involutions that
// exchanges enhne and futne. From A_{2k,2k+1} iterate theta forward until
// the image lands in A_{2k+1,2k}; from A_{2k+1,2k} iterate backward; all
// other involutions are fixed.
inline Involution nesting_swap(const Involution& inv) {
    int e = enhne(inv), f = futne(inv);
    if (e == f) return inv;
    bool forward;
    if (e % 2 == 0 && f == e + 1) forward = true;
    else if (f % 2 == 0 && e == f + 1) forward = false;
    else throw std::logic_error("nesting_swap: (enhne, futne) differ by more than one");
    Involution cur = inv;
    long guard = 0;
    for (;;) {
        cur = forward ? theta(cur) : theta_inverse(cur);
        if (enhne(cur) == f && futne(cur) == e) return cur;
        if (++guard > 100000000L) throw std::runtime_error("nesting_swap: orbit iteration did not close");
    }
}

// The full Prop-8 chain: standard Young tableau -> involution (inverse
// RSK) -> open matching (psi). Height <= 2k maps to no (k+1)-crossing and
// odd columns map to open arcs.
inline ArcDiagram syt_to_open_matching(const StandardYoungTableau& t) {
    return psi(rsk_syt_to_involution(t));
}

}  // namespace tw
