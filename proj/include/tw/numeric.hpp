#pragma once

// Exact arithmetic primitives shared by the counting and series code.
// Everything sits on GMP: counts routinely exceed 64 bits (B_57 has 33
// digits) and all equalities in the verification suites are exact.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tw {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// binomial(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
// n must be nonnegative here; that is the only case the formulas need.
inline Int binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// Exact division; throws if the divisor does not divide the dividend.
inline Int exact_div(const Int& a, const Int& b, const char* what) {
    if (b == 0) throw std::invalid_argument(std::string(what) + ": division by zero");
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::runtime_error(std::string(what) + ": inexact division " +
                                         a.get_str() + " / " + b.get_str());
    return q;
}

inline bool is_integer(const Rat& q) {
    return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0;
}

inline Int to_integer(const Rat& q, const char* what) {
    if (!is_integer(q))
        throw std::runtime_error(std::string(what) + ": non-integral rational " + q.get_str());
    return Int(mpq_numref(q.get_mpq_t()));
}

}  // namespace tw
