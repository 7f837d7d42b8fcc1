// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Parameters are pinned to the stated scales; TW_ACCEPT_FAST=1
// trims the two long sweeps for quick local runs.

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "tw/verify.hpp"

int main() {
    bool fast = std::getenv("TW_ACCEPT_FAST") != nullptr;
    int conj3_n = fast ? 24 : 56;

    struct Criterion {
        int number;
        const char* label;
        tw::VerificationReport report;
    };

    std::vector<Criterion> criteria;
    criteria.push_back({1, "theorem 2 / eq. (2): hesitating walks = Baxter = W series",
                        tw::verify_theorem2(10)});
    criteria.push_back({2, "section 5.1 identity chain to n = 40", tw::verify_identities(40)});
    criteria.push_back({3, "theorem 1 / prop 8 counts and explicit bijection",
                        tw::verify_theorem1(8, 2)});
    criteria.push_back({4, "prop 1 + corollary 2 over all 877 partitions of size 7",
                        tw::verify_prop1(7)});
    criteria.push_back({5, "theorem 9 symmetry (n <= 9) and prop 13 swap (n <= 8)",
                        tw::verify_theorem9(9, 8)});
    criteria.push_back({6, "conjecture 3 replication", tw::verify_conjecture3(conj3_n)});
    criteria.push_back({7, "conjecture 2 exhaustive to n = 7", tw::verify_conjecture2(7)});
    criteria.push_back({8, "prop 14: excursions = path triples = Baxter (n <= 8)",
                        tw::verify_prop14(8)});
    criteria.push_back({9, "section 4.3.1 Bessel determinant series", tw::verify_series431(12)});
    criteria.push_back({10, "section 5.2 generating trees to depth 10", tw::verify_gentree(10)});
    criteria.push_back({11, "bijection roundtrips on the full stated domains",
                        tw::verify_roundtrips(7, 8)});

    bool all_ok = true;
    for (auto& c : criteria) {
        bool ok = c.report.ok();
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.number << "  "
                  << c.label << "  (" << std::fixed << std::setprecision(1) << c.report.seconds
                  << " s)\n";
        if (!ok)
            for (auto& cs : c.report.cases)
                if (!cs.pass) std::cout << "      " << cs.id << ": " << cs.detail << "\n";
    }
    std::cout << (all_ok ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: failures present") << "\n";
    return all_ok ? 0 : 1;
}
