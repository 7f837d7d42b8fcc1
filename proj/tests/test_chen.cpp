#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "tw/chen.hpp"

using namespace tw;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
ArcDiagram fig7() { return from_blocks(6, {{1, 5}, {2, 4, 6}, {3}}); }
}  // namespace

TEST_CASE("decreasing-order RSK insertion") {
    FilledTableau t({{5}});
    CHECK(t.inserted(4) == FilledTableau({{5, 4}}));
    CHECK(t.inserted(6) == FilledTableau({{6}, {5}}));
    CHECK(FilledTableau().inserted(3) == FilledTableau({{3}}));
    CHECK_THROWS(t.inserted(5));  // duplicate entry

    // reverse undoes forward from the grown cell
    FilledTableau grown = t.inserted(6);
    auto [back, v] = grown.reverse_inserted(1);
    CHECK(back == t);
    CHECK(v == 6);
}

TEST_CASE("phi on the worked partition") {
    auto [filled, seq] = phi(fig7());
    std::vector<Partition> expected{P({}),  P({}),  P({1}), P({1}),    P({2}), P({2}), P({2}),
                                    P({1}), P({1, 1}), P({1}), P({1}), P({}),  P({})};
    CHECK(seq.shapes == expected);
    CHECK(validate(seq).ok);
    // the middle filled tableau row is [5 4]
    CHECK(filled.tableaux[4] == FilledTableau({{5, 4}}));
    CHECK(filled.tableaux[8] == FilledTableau({{6}, {5}}));
    CHECK(phi_inverse(seq) ==
          ArcDiagram(6, fig7().arcs(), {}, DiagramClass::set_partition));
}

TEST_CASE("phi roundtrip over all set partitions up to size 7") {
    for (int n = 0; n <= 7; ++n)
        for (auto& d : enumerate_diagrams(DiagramClass::set_partition, n))
            CHECK(phi_inverse(phi(d).second) == d);
}

TEST_CASE("phi_inverse rejects sequences outside the image") {
    // a vacillating-shaped sequence that ends nonempty
    FerrersSequence bad{TableauKind::vacillating, {P({}), P({}), P({1})}};
    CHECK_THROWS(phi_inverse(bad));
    FerrersSequence wrong_kind{TableauKind::oscillating, {P({}), P({1}), P({})}};
    CHECK_THROWS(phi_inverse(wrong_kind));
}

TEST_CASE("tableau_to_open rejects sequences not ending at a row") {
    FerrersSequence col_end{TableauKind::oscillating, {P({}), P({1}), P({1, 1})}};
    CHECK_THROWS(tableau_to_open(col_end));
}

TEST_CASE("phi_oscillating roundtrip and single arc") {
    ArcDiagram arc(2, {{1, 2}}, {}, DiagramClass::matching);
    FerrersSequence s = phi_oscillating(arc);
    CHECK(s.shapes == std::vector<Partition>{P({}), P({1}), P({})});
    for (int n = 0; n <= 8; n += 2)
        for (auto& m : enumerate_diagrams(DiagramClass::matching, n)) {
            FerrersSequence seq = phi_oscillating(m);
            CHECK(phi_oscillating_inverse(seq) == m);
            // crossing/nesting levels match height/width, as for phi
            int h = 0, w = 0;
            for (auto& sh : seq.shapes) {
                h = std::max(h, sh.height());
                w = std::max(w, sh.width());
            }
            CHECK(pattern_level(m, {PatternKind::crossing, PatternVariant::plain}) == h);
            CHECK(pattern_level(m, {PatternKind::nesting, PatternVariant::plain}) == w);
        }
}

TEST_CASE("phi_hesitating roundtrip") {
    for (int n = 0; n <= 6; ++n)
        for (auto& d : enumerate_diagrams(DiagramClass::set_partition, n)) {
            FerrersSequence s = phi_hesitating(d);
            CHECK(validate(s).ok);
            CHECK(s.length() == 2 * n);
            CHECK(phi_hesitating_inverse(s) == d);
        }
}

TEST_CASE("prop 1: segment levels match shape dimensions") {
    for (int n = 0; n <= 7; ++n)
        for (auto& d : enumerate_diagrams(DiagramClass::set_partition, n)) {
            auto seq = phi(d).second;
            for (int i = 1; i <= n; ++i) {
                const Partition& lam = seq.shapes[2 * static_cast<std::size_t>(i)];
                CHECK(segment_below_level(d, i, PatternKind::crossing) == lam.height());
                CHECK(segment_below_level(d, i, PatternKind::nesting) == lam.width());
            }
        }
}

TEST_CASE("corollary 2: avoidance equals height bounds") {
    for (int n = 0; n <= 7; ++n)
        for (auto& d : enumerate_diagrams(DiagramClass::set_partition, n)) {
            auto seq = phi(d).second;
            int h = 0, w = 0;
            for (auto& s : seq.shapes) {
                h = std::max(h, s.height());
                w = std::max(w, s.width());
            }
            CHECK(pattern_level(d, {PatternKind::crossing, PatternVariant::plain}) == h);
            CHECK(pattern_level(d, {PatternKind::nesting, PatternVariant::plain}) == w);
        }
}

TEST_CASE("tau conjugation swaps cr and ne and fixes the word") {
    for (int n = 0; n <= 7; ++n) {
        std::map<std::pair<int, int>, int> joint, joint_swapped;
        for (auto& d : enumerate_diagrams(DiagramClass::set_partition, n)) {
            ArcDiagram img = phi_inverse(tau(phi(d).second));
            CHECK(img.opener_closer_word() == d.opener_closer_word());
            int cr = pattern_level(d, {PatternKind::crossing, PatternVariant::plain});
            int ne = pattern_level(d, {PatternKind::nesting, PatternVariant::plain});
            CHECK(pattern_level(img, {PatternKind::crossing, PatternVariant::plain}) == ne);
            CHECK(pattern_level(img, {PatternKind::nesting, PatternVariant::plain}) == cr);
            joint[{cr, ne}]++;
            joint_swapped[{ne, cr}]++;
        }
        CHECK(joint == joint_swapped);  // symmetric joint distribution of (cr, ne)
    }
}

TEST_CASE("deleting a non-corner entry is a hard error") {
    FilledTableau t({{6, 4}, {5}});
    CHECK_THROWS(t.erased_corner(6));  // interior of row 1
    CHECK_THROWS(t.erased_corner(9));  // absent
    CHECK(t.erased_corner(4) == FilledTableau({{6}, {5}}));
    CHECK(t.erased_corner(5) == FilledTableau({{6, 4}}));
}

TEST_CASE("closure of open arcs") {
    ArcDiagram fig8(9, {{1, 7}, {2, 4}, {4, 5}, {8, 9}}, {3, 5, 7}, DiagramClass::open_partition);
    ArcDiagram closed = close_open_arcs(fig8);
    std::vector<std::pair<int, int>> expected{{1, 7}, {2, 4}, {3, 12}, {4, 5}, {5, 11}, {7, 10}, {8, 9}};
    CHECK(closed.arcs() == expected);
    CHECK(closed.n() == 12);
    CHECK(reopen_last_arcs(closed, 3) == fig8);

    ArcDiagram no_opens(2, {{1, 2}}, {}, DiagramClass::open_partition);
    CHECK(close_open_arcs(no_opens).arcs() == no_opens.arcs());

    // plain crossing level preserved by the decreasing closure
    for (int n = 0; n <= 6; ++n)
        for (auto& d : enumerate_diagrams(DiagramClass::open_partition, n)) {
            PatternQuery cro{PatternKind::crossing, PatternVariant::open};
            PatternQuery cr{PatternKind::crossing, PatternVariant::plain};
            CHECK(pattern_level(close_open_arcs(d, ClosureOrder::decreasing), cr) ==
                  pattern_level(d, cro));
            // and the increasing closure preserves nestings the same way
            PatternQuery neo{PatternKind::nesting, PatternVariant::open};
            PatternQuery ne{PatternKind::nesting, PatternVariant::plain};
            CHECK(pattern_level(close_open_arcs(d, ClosureOrder::increasing), ne) ==
                  pattern_level(d, neo));
        }
}

TEST_CASE("open_to_tableau ends at the open-arc row and round-trips") {
    ArcDiagram one_open(1, {}, {1}, DiagramClass::open_matching);
    FerrersSequence s = open_to_tableau(one_open, TableauKind::oscillating);
    CHECK(s.shapes == std::vector<Partition>{P({}), P({1})});
    CHECK(tableau_to_open(s) == one_open);

    for (int n = 0; n <= 6; ++n) {
        for (auto& d : enumerate_diagrams(DiagramClass::open_partition, n)) {
            for (auto kind : {TableauKind::vacillating, TableauKind::hesitating}) {
                FerrersSequence t = open_to_tableau(d, kind);
                CHECK(validate(t).ok);
                CHECK(t.shapes.back() == Partition::row(static_cast<int>(d.open_lefts().size())));
                CHECK(tableau_to_open(t) == d);
            }
        }
        for (auto& d : enumerate_diagrams(DiagramClass::open_matching, n)) {
            FerrersSequence t = open_to_tableau(d, TableauKind::oscillating);
            CHECK(validate(t).ok);
            CHECK(tableau_to_open(t) == d);
        }
    }
}

TEST_CASE("prop 2/3/4 cardinalities: open diagrams vs bounded sequences ending at a row") {
    for (int k = 1; k <= 2; ++k) {
        for (int n = 0; n <= 5; ++n) {
            // vacillating (plain patterns) and hesitating (enhanced patterns)
            std::map<int, std::size_t> vac_by_m, hes_by_m, osc_by_m;
            for (int m = 0; m <= n; ++m) {
                TableauFilter f;
                f.end = Partition::row(m);
                vac_by_m[m] = enumerate_tableaux(TableauKind::vacillating, 2 * n, k, f).size();
                hes_by_m[m] = enumerate_tableaux(TableauKind::hesitating, 2 * n, k, f).size();
                osc_by_m[m] = enumerate_tableaux(TableauKind::oscillating, n, k, f).size();
            }
            std::map<int, std::size_t> open_cr, open_ne, open_ecr, open_ene, om_cr, om_ne;
            for (auto& d : enumerate_diagrams(DiagramClass::open_partition, n)) {
                int m = static_cast<int>(d.open_lefts().size());
                if (pattern_level(d, {PatternKind::crossing, PatternVariant::open}) <= k) open_cr[m]++;
                if (pattern_level(d, {PatternKind::nesting, PatternVariant::open}) <= k) open_ne[m]++;
                if (pattern_level(d, {PatternKind::crossing, PatternVariant::enhanced_open}) <= k)
                    open_ecr[m]++;
                if (pattern_level(d, {PatternKind::nesting, PatternVariant::enhanced_open}) <= k)
                    open_ene[m]++;
            }
            for (auto& d : enumerate_diagrams(DiagramClass::open_matching, n)) {
                int m = static_cast<int>(d.open_lefts().size());
                if (pattern_level(d, {PatternKind::crossing, PatternVariant::open}) <= k) om_cr[m]++;
                if (pattern_level(d, {PatternKind::nesting, PatternVariant::open}) <= k) om_ne[m]++;
            }
            for (int m = 0; m <= n; ++m) {
                CHECK(open_cr[m] == vac_by_m[m]);
                CHECK(open_ne[m] == vac_by_m[m]);
                CHECK(open_ecr[m] == hes_by_m[m]);
                CHECK(open_ene[m] == hes_by_m[m]);
                CHECK(om_cr[m] == osc_by_m[m]);
                CHECK(om_ne[m] == osc_by_m[m]);
            }
        }
    }
}
