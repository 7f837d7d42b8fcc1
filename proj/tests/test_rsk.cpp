#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tw/involution.hpp"
#include "tw/rsk.hpp"
#include "tw/tableau.hpp"

using namespace tw;

TEST_CASE("single fixed point") {
    Involution id1(1, {});
    CHECK(rsk_involution_to_syt(id1) == StandardYoungTableau({{1}}));
}

TEST_CASE("the ten-point involution maps to the known tableau") {
    Involution a(10, {{1, 7}, {3, 9}, {4, 6}, {5, 10}});
    StandardYoungTableau expected({{1, 3, 5}, {2, 4, 8}, {6, 9, 10}, {7}});
    CHECK(rsk_involution_to_syt(a) == expected);
    CHECK(rsk_syt_to_involution(expected) == a);
}

TEST_CASE("longest decreasing subsequence") {
    CHECK(longest_decreasing_subsequence(Involution(4, {})) == 1);
    CHECK(longest_decreasing_subsequence(Involution(2, {{1, 2}})) == 2);
    CHECK(longest_decreasing_subsequence(Involution(10, {{1, 7}, {3, 9}, {4, 6}, {5, 10}})) == 4);
    CHECK(longest_decreasing_subsequence(Involution(0, {})) == 0);
}

TEST_CASE("roundtrip, fixed-point and height laws up to size 8") {
    for (int n = 0; n <= 8; ++n) {
        auto invs = enumerate_involutions(n);
        std::set<StandardYoungTableau> images;
        for (auto& a : invs) {
            auto t = rsk_involution_to_syt(a);
            images.insert(t);
            CHECK(rsk_syt_to_involution(t) == a);
            CHECK(static_cast<int>(a.fixed_points().size()) == t.shape().odd_column_count());
            CHECK(longest_decreasing_subsequence(a) == t.shape().height());
        }
        CHECK(images.size() == invs.size());  // injective, hence bijective onto SYT(n)
        CHECK(images.size() == enumerate_syt(n, n).size());
    }
}

TEST_CASE("empty tableau maps to the empty involution") {
    CHECK(rsk_syt_to_involution(StandardYoungTableau()) == Involution(0, {}));
}

TEST_CASE("non-standard fillings cannot be built") {
    CHECK_THROWS(StandardYoungTableau({{2, 1}}));
    CHECK_THROWS(StandardYoungTableau({{1, 2}, {3, 4, 5}}));
}

TEST_CASE("all involutions of size 5 give 26 distinct tableaux") {
    auto invs = enumerate_involutions(5);
    CHECK(invs.size() == 26);
    std::set<StandardYoungTableau> images;
    for (auto& a : invs) images.insert(rsk_involution_to_syt(a));
    CHECK(images.size() == 26);
}
