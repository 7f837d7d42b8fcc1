#include <catch2/catch_amalgamated.hpp>

#include "tw/ferrers_sequence.hpp"
#include "tw/walks.hpp"

using namespace tw;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// the three worked sequences (heights bounded by 2)
FerrersSequence fig1_vacillating() {
    return {TableauKind::vacillating,
            {P({}), P({}), P({1}), P({1}), P({1, 1}), P({1}), P({2}), P({2}), P({2}), P({2}), P({2, 1})}};
}
FerrersSequence fig1_hesitating() {
    return {TableauKind::hesitating,
            {P({}), P({}), P({1}), P({1}), P({2}), P({2, 1}), P({1, 1}), P({1}), P({1})}};
}
FerrersSequence fig1_oscillating() {
    return {TableauKind::oscillating,
            {P({}), P({1}), P({1, 1}), P({2, 1}), P({2}), P({2, 1}), P({2, 2}), P({3, 2}), P({3, 1}),
             P({3}), P({3, 1}), P({2, 1})}};
}
}  // namespace

TEST_CASE("validation accepts the figure sequences") {
    CHECK(validate(fig1_vacillating()).ok);
    CHECK(fig1_vacillating().length() == 10);
    CHECK(validate(fig1_hesitating()).ok);
    CHECK(fig1_hesitating().length() == 8);
    CHECK(validate(fig1_oscillating()).ok);
    CHECK(fig1_oscillating().length() == 11);
}

TEST_CASE("validation pinpoints violations") {
    FerrersSequence stay{TableauKind::oscillating, {P({}), P({})}};
    auto r = validate(stay);
    CHECK_FALSE(r.ok);
    CHECK(r.first_bad_index == 1);

    FerrersSequence wrong_start{TableauKind::oscillating, {P({1}), P({})}};
    CHECK_FALSE(validate(wrong_start).ok);

    FerrersSequence add_on_remove{TableauKind::vacillating, {P({}), P({1}), P({1})}};
    CHECK_FALSE(validate(add_on_remove).ok);

    FerrersSequence odd_len{TableauKind::hesitating, {P({}), P({}), P({1}), P({1})}};
    CHECK_FALSE(validate(odd_len).ok);  // length 3 and a bad pair

    FerrersSequence jump{TableauKind::oscillating, {P({}), P({2})}};
    auto rj = validate(jump);
    CHECK_FALSE(rj.ok);
    CHECK(rj.first_bad_index == 1);

    FerrersSequence bad_pair{TableauKind::hesitating, {P({}), P({1}), P({1})}};
    CHECK_FALSE(validate(bad_pair).ok);  // (add, stay) is not a hesitating pair
}

TEST_CASE("tau is an elementwise conjugation involution") {
    FerrersSequence s{TableauKind::oscillating, {P({}), P({1}), P({2}), P({1})}};
    FerrersSequence t = tau(s);
    CHECK(t.shapes == std::vector<Partition>{P({}), P({1}), P({1, 1}), P({1})});
    CHECK(tau(t) == s);
    CHECK(tau(tau(fig1_vacillating())) == fig1_vacillating());
    CHECK(validate(tau(fig1_hesitating())).ok);
}

TEST_CASE("sequence to walk and back") {
    auto w = seq_to_walk(fig1_oscillating(), 2);
    CHECK(w.k == 2);
    CHECK(w.steps.size() == 11);
    CHECK(w.steps.front() == std::vector<int>{1, 0});
    CHECK(walk_to_seq(w, TableauKind::oscillating) == fig1_oscillating());

    auto wv = seq_to_walk(fig1_vacillating(), 2);
    CHECK(walk_to_seq(wv, TableauKind::vacillating) == fig1_vacillating());

    FerrersSequence trivial{TableauKind::oscillating, {P({})}};
    auto w0 = seq_to_walk(trivial, 3);
    CHECK(w0.steps.empty());
    CHECK(walk_to_seq(w0, TableauKind::oscillating) == trivial);

    CHECK_THROWS(seq_to_walk(fig1_oscillating(), 1));  // height overflow
}

TEST_CASE("roundtrip across all short sequences") {
    for (auto kind : {TableauKind::oscillating, TableauKind::vacillating, TableauKind::hesitating}) {
        int len = kind == TableauKind::oscillating ? 7 : 8;
        for (auto& s : enumerate_tableaux(kind, len, 3)) {
            CHECK(validate(s).ok);
            CHECK(walk_to_seq(seq_to_walk(s, 3), kind) == s);
        }
    }
}

TEST_CASE("enumerate_tableaux matches the stated small counts") {
    TableauFilter row1, row3, empty_end, any_row;
    row1.end = P({1});
    row3.end = P({3});
    empty_end.end = P({});
    any_row.end_any_row = true;

    CHECK(enumerate_tableaux(TableauKind::oscillating, 3, 1, row1).size() == 2);
    CHECK(enumerate_tableaux(TableauKind::oscillating, 3, 1, row3).size() == 1);
    CHECK(enumerate_tableaux(TableauKind::hesitating, 2, 2, any_row).size() == 2);
    CHECK(enumerate_tableaux(TableauKind::vacillating, 0, 3, empty_end).size() == 1);
}

TEST_CASE("enumeration agrees with the walk DP") {
    for (auto kind : {TableauKind::oscillating, TableauKind::vacillating, TableauKind::hesitating})
        for (int k = 1; k <= 2; ++k)
            for (int len = 0; len <= 6; ++len) {
                if (kind != TableauKind::oscillating && len % 2) continue;
                auto seqs = enumerate_tableaux(kind, len, k);
                WalkSpec spec{kind, WalkRegion::wk_weak, k, len, {}};
                Int total = count_walks_total(spec);
                CHECK(Int(static_cast<long>(seqs.size())) == total);
            }
}

TEST_CASE("hesitating and vacillating closed counts are Bell numbers") {
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int n = 0; n <= 5; ++n) {
        TableauFilter to_empty;
        to_empty.end = P({});
        CHECK(enumerate_tableaux(TableauKind::vacillating, 2 * n, n + 1, to_empty).size() == bell[n]);
        CHECK(enumerate_tableaux(TableauKind::hesitating, 2 * n, n + 1, to_empty).size() == bell[n]);
    }
}
