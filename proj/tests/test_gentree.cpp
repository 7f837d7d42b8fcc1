#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "tw/gentree.hpp"

using namespace tw;

namespace {
// naive expansion oracle: materialize label lists level by level
std::vector<Int> naive_levels(TreeLabel root,
                              const std::function<std::vector<TreeLabel>(TreeLabel)>& succ,
                              int depth) {
    std::vector<Int> sizes;
    std::vector<TreeLabel> level{root};
    for (int d = 0; d < depth; ++d) {
        sizes.push_back(Int(static_cast<long>(level.size())));
        if (d + 1 == depth) break;
        std::vector<TreeLabel> next;
        for (auto& l : level)
            for (auto& c : succ(l)) next.push_back(c);
        level = std::move(next);
    }
    return sizes;
}
}  // namespace

TEST_CASE("open partition rule root and first levels") {
    CHECK(tree_levels(RuleId::open_partitions, 1) == std::vector<Int>{1});
    CHECK(tree_levels(RuleId::open_partitions, 2) == std::vector<Int>{1, 2});
    CHECK(rule_successors(RuleId::open_partitions, {0, 0}) ==
          std::vector<TreeLabel>{{0, 0}, {1, 0}});
}

TEST_CASE("triples and open partition rules match Baxter to depth 10") {
    auto expect = baxter_prefix(10);
    CHECK(tree_levels(RuleId::triples, 10) == expect);
    CHECK(tree_levels(RuleId::open_partitions, 10) == expect);
}

TEST_CASE("multiset DP equals naive expansion to depth 6") {
    for (RuleId rule : {RuleId::triples, RuleId::open_partitions}) {
        auto succ = [&](TreeLabel l) { return rule_successors(rule, l); };
        CHECK(tree_levels(rule, 6) == naive_levels(rule_root(rule), succ, 6));
    }
}

TEST_CASE("rule 2 status is resolved one way or the other") {
    const auto& st = rule2_status();
    if (st.adopted) {
        CHECK(tree_levels(RuleId::permutations, 10) == baxter_prefix(10));
    } else {
        CHECK_THROWS(tree_levels(RuleId::permutations, 5));
        CHECK_NOTHROW(tree_levels(RuleId::permutations, 5, true));
    }
}

TEST_CASE("unknown rule rejected") {
    CHECK_THROWS(rule_from_string("nope"));
    CHECK_THROWS(tree_levels(RuleId::triples, 0));
}
