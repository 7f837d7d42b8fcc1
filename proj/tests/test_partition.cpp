#include <catch2/catch_amalgamated.hpp>

#include "tw/partition.hpp"

using tw::Partition;

TEST_CASE("partition basics") {
    Partition empty;
    CHECK(empty.height() == 0);
    CHECK(empty.size() == 0);
    CHECK(empty.odd_column_count() == 0);
    CHECK(empty.is_row());

    Partition p({3, 3, 3, 1});
    CHECK(p.height() == 4);
    CHECK(p.size() == 10);
    CHECK(p.conjugate() == Partition({4, 3, 3}));
    CHECK(p.odd_column_count() == 2);

    CHECK(Partition({2, 1}).odd_column_count() == 1);
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition::row(3) == Partition({3}));
    CHECK(Partition::column(3) == Partition({1, 1, 1}));
    CHECK(Partition(std::vector<int>{2, 1, 0, 0}) == Partition({2, 1}));
}

TEST_CASE("invalid partitions rejected") {
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("grow and shrink are inverse neighbors") {
    Partition p({3, 1});
    auto ups = p.grow();
    CHECK(ups.size() == 3);  // (4,1), (3,2), (3,1,1)
    for (auto& q : ups) {
        CHECK(q.size() == p.size() + 1);
        CHECK(p.one_box_diff_row(q) >= 0);
        auto downs = q.shrink();
        CHECK(std::find(downs.begin(), downs.end(), p) != downs.end());
    }
    CHECK(p.grow(2).size() == 2);  // height bound cuts (3,1,1)
    CHECK(Partition().grow().size() == 1);
    CHECK(Partition().shrink().empty());
}

TEST_CASE("one_box_diff_row") {
    CHECK(Partition({2, 1}).one_box_diff_row(Partition({2, 2})) == 1);
    CHECK(Partition({2, 2}).one_box_diff_row(Partition({2, 1})) == 1);
    CHECK(Partition({2, 1}).one_box_diff_row(Partition({2, 1})) == -1);
    CHECK(Partition({3}).one_box_diff_row(Partition({1, 1})) == -1);
}
