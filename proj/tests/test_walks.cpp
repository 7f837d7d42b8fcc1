#include <catch2/catch_amalgamated.hpp>

#include "tw/baxter.hpp"
#include "tw/ferrers_sequence.hpp"
#include "tw/walks.hpp"

using namespace tw;

TEST_CASE("hesitating weak-chamber walks of length 2") {
    WalkSpec spec{TableauKind::hesitating, WalkRegion::wk_weak, 2, 2, {}};
    CHECK(count_walks_row_endpoints(spec) == 2);  // (stay,e1) and (e1,-e1)
    CHECK(count_walks_to(spec, {1, 0}) == 1);
    CHECK(count_walks_to(spec, {0, 0}) == 1);
    CHECK(count_walks_to(spec, {1, 1}) == 0);
    CHECK(count_walks_total(spec) == 2);
}

TEST_CASE("half-line oscillating walks") {
    WalkSpec spec{TableauKind::oscillating, WalkRegion::wk_weak, 1, 3, {}};
    CHECK(count_walks_to(spec, {1}) == 2);
    CHECK(count_walks_to(spec, {3}) == 1);
    WalkSpec zero{TableauKind::oscillating, WalkRegion::wk_weak, 1, 0, {}};
    CHECK(count_walks_to(zero, {0}) == 1);
}

TEST_CASE("stationary pair intermediates respect the chamber") {
    // from (1,1), the pair (e2,-e2) would pass through (1,2): forbidden
    WalkSpec spec{TableauKind::hesitating, WalkRegion::wk_weak, 2, 2, {1, 1}};
    auto counts = count_walks_by_endpoint(spec);
    // stationary continuations at (1,1): only (e1,-e1)
    CHECK(counts[{1, 1}] == 1);
}

TEST_CASE("theorem 2 endpoint totals are Baxter numbers") {
    for (int n = 0; n <= 8; ++n) {
        WalkSpec spec{TableauKind::hesitating, WalkRegion::wk_weak, 2, 2 * n, {}};
        CHECK(count_walks_row_endpoints(spec) == baxter(n + 1));
    }
}

TEST_CASE("strict chamber equals weak chamber shifted by delta") {
    CHECK(weak_to_strict({0, 0}) == WalkPoint{2, 1});
    CHECK(strict_to_weak(delta_point(3)) == WalkPoint{0, 0, 0});
    for (int len = 0; len <= 6; ++len) {
        WalkSpec strict{TableauKind::oscillating, WalkRegion::wk_strict, 2, len, {}};
        WalkSpec weak{TableauKind::oscillating, WalkRegion::wk_weak, 2, len, {}};
        auto sc = count_walks_by_endpoint(strict);
        auto wc = count_walks_by_endpoint(weak);
        CHECK(sc.size() == wc.size());
        for (auto& [p, c] : wc) CHECK(sc[weak_to_strict(p)] == c);
    }
}

TEST_CASE("DP equals exhaustive enumeration for every family") {
    for (auto kind : {TableauKind::oscillating, TableauKind::vacillating, TableauKind::hesitating})
        for (int k = 1; k <= 2; ++k)
            for (int len = 7; len <= 8; ++len) {
                if (kind != TableauKind::oscillating && len % 2) continue;
                auto seqs = enumerate_tableaux(kind, len, k);
                WalkSpec spec{kind, WalkRegion::wk_weak, k, len, {}};
                CHECK(count_walks_total(spec) == Int(static_cast<long>(seqs.size())));
            }
}

TEST_CASE("reflection identity") {
    CHECK(reflection_check({1, 0}, {1, 0}, 0));
    for (int n = 0; n <= 10; n += 2) CHECK(reflection_check({1, 0}, {2, 0}, n));
    for (int x = 1; x <= 4; ++x)
        for (int y = 0; y < x && x + y <= 6; ++y)
            for (int n = 0; n <= 10; n += 2) CHECK(reflection_check({1, 0}, {x, y}, n));
    CHECK_THROWS(reflection_check({1, 1}, {1, 0}, 2));  // outside {x > y >= 0}
}

TEST_CASE("theorem 10 count equality") {
    // k = 1, n = 3: three half-line walks vs three positive strict walks
    WalkSpec osc{TableauKind::oscillating, WalkRegion::wk_strict, 1, 3, {}};
    CHECK(count_walks_row_endpoints(osc) == 3);
    CHECK(count_positive_oscillating(2, 3) == 3);
    for (int n = 0; n <= 10; ++n) {
        CHECK(theorem10_check(1, n));
        CHECK(theorem10_check(2, n));
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS(count_walks_by_endpoint({TableauKind::hesitating, WalkRegion::wk_weak, 2, 3, {}}));
    CHECK_THROWS(count_walks_by_endpoint({TableauKind::oscillating, WalkRegion::quadrant, 3, 2, {}}));
    CHECK_THROWS(count_walks_by_endpoint({TableauKind::oscillating, WalkRegion::wk_weak, 2, 2, {0, 1}}));
    CHECK_THROWS(count_walks_by_endpoint({TableauKind::oscillating, WalkRegion::wk_weak, 2, 2, {1}}));
}
