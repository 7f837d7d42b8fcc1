#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "tw/baxter.hpp"
#include "tw/marked_table.hpp"
#include "tw/qexcursions.hpp"
#include "tw/walks.hpp"

using namespace tw;

namespace {

// Independent oracle: enumerate W_2-hesitating walks (weak chamber) of
// length 2n to (i, j); a walk with E diagonal-ending non-stay steps
// carries C(E, m) mark choices.
std::map<std::tuple<int, int, int>, Int> marked_oracle(int n) {
    std::map<std::tuple<int, int, int>, Int> out;
    int x = 0, y = 0, diag_enders = 0;
    auto rec = [&](auto&& self, int pairs_left) -> void {
        if (pairs_left == 0) {
            for (int m = 0; m <= diag_enders; ++m)
                out[{x, y, m}] += binomial(diag_enders, m);
            return;
        }
        for (auto& pr : detail::hesitating_pairs()) {
            int x1 = x + pr[0].first, y1 = y + pr[0].second;
            if (y1 < 0 || x1 < y1) continue;
            int x2 = x1 + pr[1].first, y2 = y1 + pr[1].second;
            if (y2 < 0 || x2 < y2) continue;
            int add = 0;
            bool real1 = pr[0].first || pr[0].second, real2 = pr[1].first || pr[1].second;
            if (real1 && x1 == y1) ++add;
            if (real2 && x2 == y2) ++add;
            int ox = x, oy = y;
            x = x2; y = y2; diag_enders += add;
            self(self, pairs_left - 1);
            x = ox; y = oy; diag_enders -= add;
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace

TEST_CASE("base case and vanishing outside D") {
    MarkedTable t = MarkedTable::initial(4);
    CHECK(t.at(0, 0, 0) == 1);
    CHECK(t.at(1, 0, 0) == 0);
    CHECK(t.at(0, 0, 1) == 0);
    MarkedTable l2 = t.next().next();
    CHECK(l2.at(1, 2, 0) == 0);   // j > i
    CHECK(l2.at(-1, 0, 0) == 0);
    CHECK(l2.at(1, 0, 3) == 0);   // m > n
    CHECK(l2.at(0, 0, -1) == 0);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (int m = 0; m <= 4; ++m)
                if (j > i || m > 2) CHECK(l2.at(i, j, m) == 0);
}

TEST_CASE("recurrence equals the brute-force marked enumeration") {
    MarkedTable layer = MarkedTable::initial(5);
    for (int n = 0; n <= 5; ++n) {
        if (n > 0) layer = layer.next();
        auto oracle = marked_oracle(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= i; ++j)
                for (int m = 0; m <= n; ++m) {
                    auto it = oracle.find({i, j, m});
                    Int expect = it == oracle.end() ? Int(0) : it->second;
                    INFO("n=" << n << " i=" << i << " j=" << j << " m=" << m);
                    CHECK(layer.at(i, j, m) == expect);
                }
    }
}

TEST_CASE("mark-free slice equals plain walk counts") {
    MarkedTable layer = MarkedTable::initial(8);
    for (int n = 0; n <= 8; ++n) {
        if (n > 0) layer = layer.next();
        WalkSpec spec{TableauKind::hesitating, WalkRegion::wk_weak, 2, 2 * n, {}};
        auto counts = count_walks_by_endpoint(spec);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= i; ++j) {
                auto it = counts.find({i, j});
                Int expect = it == counts.end() ? Int(0) : it->second;
                CHECK(layer.at(i, j, 0) == expect);
            }
    }
}

TEST_CASE("axis totals are Baxter numbers") {
    MarkedTable layer = MarkedTable::initial(8);
    for (int n = 0; n <= 8; ++n) {
        if (n > 0) layer = layer.next();
        CHECK(layer.axis_total() == baxter(n + 1));
    }
}

TEST_CASE("proven reformulation: q(n,m) equals a(n;0,0,m)") {
    MarkedTable layer = MarkedTable::initial(6);
    for (int n = 0; n <= 6; ++n) {
        if (n > 0) layer = layer.next();
        auto q = q_distribution_exhaustive(n);
        for (int m = 0; m <= n; ++m) {
            Int qs = q.count(m) ? q[m] : Int(0);
            CHECK(qs == layer.at(0, 0, m));
        }
    }
}

TEST_CASE("conjecture 2 at small sizes") {
    MarkedTable layer = MarkedTable::initial(7);
    for (int n = 0; n <= 7; ++n) {
        if (n > 0) layer = layer.next();
        auto q = q_distribution_exhaustive(n);
        for (int m = 0; m <= n; ++m) {
            Int qs = q.count(m) ? q[m] : Int(0);
            CHECK(qs == layer.at(m, 0, 0));
        }
    }
}

TEST_CASE("conjecture 3 sweep to n = 20") {
    auto cex = check_conjecture3(20);
    CHECK_FALSE(cex.found());
}

TEST_CASE("switch marks match leaving-step mark choices") {
    // reflection construction: q(n, m) = number of pairs (weak-chamber
    // excursion, m-subset of its diagonal-leaving non-stay steps)
    for (int n = 0; n <= 6; ++n) {
        std::map<int, Int> by_marks;
        int x = 0, y = 0, leavers = 0;
        auto rec = [&](auto&& self, int pairs_left) -> void {
            if (pairs_left == 0) {
                if (x == 0 && y == 0)
                    for (int m = 0; m <= leavers; ++m) by_marks[m] += binomial(leavers, m);
                return;
            }
            for (auto& pr : detail::hesitating_pairs()) {
                int x1 = x + pr[0].first, y1 = y + pr[0].second;
                if (x1 < 0 || y1 < 0 || x1 < y1) continue;
                int x2 = x1 + pr[1].first, y2 = y1 + pr[1].second;
                if (x2 < 0 || y2 < 0 || x2 < y2) continue;
                int add = 0;
                if ((pr[0].first || pr[0].second) && x == y && x1 != y1) ++add;
                if ((pr[1].first || pr[1].second) && x1 == y1 && x2 != y2) ++add;
                int ox = x, oy = y;
                x = x2; y = y2; leavers += add;
                self(self, pairs_left - 1);
                x = ox; y = oy; leavers -= add;
            }
        };
        rec(rec, n);
        auto q = q_distribution_exhaustive(n);
        for (int m = 0; m <= n; ++m) {
            Int lhs = q.count(m) ? q[m] : Int(0);
            Int rhs = by_marks.count(m) ? by_marks[m] : Int(0);
            CHECK(lhs == rhs);
        }
    }
}
