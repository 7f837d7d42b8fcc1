#pragma once

// Baxter numbers and the Lagrange-inversion coefficient identities behind
// the hesitating-walk count.
//
//   a_n(l, k, j) = k/(n+1) C(n+1, j) C(n+1, j+k) C(n, j-l)
//   b_{n,j}      = C(n+1, j-1) C(n+1, j) C(n+1, j+1) / (C(n+1,1) C(n+1,2))
//
// with C(n, j) = 0 for j < 0 or j > n. The three identity families,
// summed over j, collapse W(1;t) = sum_r A_{r,1} + A_{1,3} - sum_r A_{r,2}
// to A_{0,1} + A_{3,1} - A_{1,2} = sum B_{n+1} t^n.

#include <optional>
#include <string>
#include <vector>

#include "tw/numeric.hpp"

namespace tw {

inline Int baxter(long n) {
    if (n < 1) throw std::invalid_argument("baxter: n must be at least 1");
    Int num = 0;
    for (long k = 1; k <= n; ++k)
        num += binomial(n + 1, k - 1) * binomial(n + 1, k) * binomial(n + 1, k + 1);
    return exact_div(num, binomial(n + 1, 1) * binomial(n + 1, 2), "baxter");
}

inline Rat a_term(long n, long l, long k, long j) {
    Int num = Int(k) * binomial(n + 1, j) * binomial(n + 1, j + k) * binomial(n, j - l);
    return Rat(num) / Rat(n + 1);
}

inline Rat b_term(long n, long j) {
    Int num = binomial(n + 1, j - 1) * binomial(n + 1, j) * binomial(n + 1, j + 1);
    return Rat(num) / Rat(binomial(n + 1, 1) * binomial(n + 1, 2));
}

// [t^n] A_{l,k}(t) = sum_j a_n(l, k, j); the support is finite.
inline Int a_coeff(long l, long k, long n) {
    Rat s = 0;
    for (long j = -k - 2; j <= n + l + 2; ++j) s += a_term(n, l, k, j);
    return to_integer(s, "a_coeff");
}

struct IdentityCheckResult {
    bool ok = true;
    long n = -1, j = 0;
    std::string relation;
};

// Verifies, for every n <= n_max and every j (finite support makes the
// sweep complete):
//   a_n(4,1,n-j+2) + a_n(1,3,j-1) - a_n(2,2,n-j+1) - a_n(3,2,j) = 0
//   a_n(1,1,n-j)   + a_n(2,1,j+1) - a_n(0,2,j)                  = 0
//   a_n(0,1,j)     + a_n(3,1,j+1) - a_n(1,2,j)                  = b_{n+1,j+1}
// plus the collapsed combination
//   sum_{r=0}^{4} A_{r,1} + A_{1,3} - sum_{r=0}^{3} A_{r,2}
//     = A_{0,1} + A_{3,1} - A_{1,2} = B_{n+1}.
inline IdentityCheckResult identity_checks(long n_max) {
    for (long n = 0; n <= n_max; ++n) {
        for (long j = -6; j <= n + 6; ++j) {
            Rat r1 = a_term(n, 4, 1, n - j + 2) + a_term(n, 1, 3, j - 1) -
                     a_term(n, 2, 2, n - j + 1) - a_term(n, 3, 2, j);
            if (r1 != 0) return {false, n, j, "a(4,1,n-j+2)+a(1,3,j-1)-a(2,2,n-j+1)-a(3,2,j)=0"};
            Rat r2 = a_term(n, 1, 1, n - j) + a_term(n, 2, 1, j + 1) - a_term(n, 0, 2, j);
            if (r2 != 0) return {false, n, j, "a(1,1,n-j)+a(2,1,j+1)-a(0,2,j)=0"};
            Rat r3 = a_term(n, 0, 1, j) + a_term(n, 3, 1, j + 1) - a_term(n, 1, 2, j) -
                     b_term(n + 1, j + 1);
            if (r3 != 0) return {false, n, j, "a(0,1,j)+a(3,1,j+1)-a(1,2,j)=b(n+1,j+1)"};
        }
        Int full = 0;
        for (long r = 0; r <= 4; ++r) full += a_coeff(r, 1, n);
        full += a_coeff(1, 3, n);
        for (long r = 0; r <= 3; ++r) full -= a_coeff(r, 2, n);
        Int collapsed = a_coeff(0, 1, n) + a_coeff(3, 1, n) - a_coeff(1, 2, n);
        if (full != collapsed) return {false, n, 0, "W(1;t) combination"};
        if (collapsed != baxter(n + 1)) return {false, n, 0, "W(1;t) = sum B_{n+1} t^n"};
    }
    return {};
}

// [t^n] of W(t) = A_{0,1} + A_{3,1} - A_{1,2} for n = 0..n_max.
inline std::vector<Int> w_series(long n_max) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n)
        out.push_back(a_coeff(0, 1, n) + a_coeff(3, 1, n) - a_coeff(1, 2, n));
    return out;
}

}  // namespace tw
