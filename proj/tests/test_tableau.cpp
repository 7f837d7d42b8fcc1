#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "tw/involution.hpp"
#include "tw/tableau.hpp"

using namespace tw;

TEST_CASE("enumerate_syt counts") {
    CHECK(enumerate_syt(0, 5).size() == 1);  // the empty tableau
    CHECK(enumerate_syt(3, 2).size() == 3);  // shape (3) once, shape (2,1) twice
    CHECK(enumerate_syt(4, 4).size() == 10);
    CHECK(enumerate_syt(3, 0).empty());

    // with no height bound the count is the number of involutions
    for (int n = 0; n <= 8; ++n)
        CHECK(enumerate_syt(n, n).size() == enumerate_involutions(n).size());
}

TEST_CASE("enumerate_syt output is valid, sorted, duplicate-free") {
    auto all = enumerate_syt(6, 3);
    for (auto& t : all) {
        CHECK(t.size() == 6);
        CHECK(t.height() <= 3);
    }
    for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK(all[i - 1].reading_word() <= all[i].reading_word());
        CHECK(all[i - 1] != all[i]);
    }
    std::set<StandardYoungTableau> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
}

TEST_CASE("syt validity") {
    CHECK(StandardYoungTableau::rows_are_valid_syt({{1, 3, 5}, {2, 4, 8}, {6, 9, 10}, {7}}));
    CHECK_FALSE(StandardYoungTableau::rows_are_valid_syt({{1, 2}, {3, 4, 5}}));  // row lengths grow
    CHECK_FALSE(StandardYoungTableau::rows_are_valid_syt({{2, 1}}));             // row not increasing
    CHECK_FALSE(StandardYoungTableau::rows_are_valid_syt({{1, 2}, {2}}));        // duplicate
    CHECK_FALSE(StandardYoungTableau::rows_are_valid_syt({{1, 4}, {2}}));        // entries not 1..n
}

TEST_CASE("odd column count") {
    CHECK(odd_column_count(Partition()) == 0);
    CHECK(odd_column_count(Partition({2, 1})) == 1);
    CHECK(odd_column_count(Partition({3, 3, 3, 1})) == 2);
}
