#pragma once

// Truncated power series with exact rational coefficients, and the Bessel
// determinant expressions for bounded-height tableau counts.
//
// b_j(t) = sum_n t^(2n+j) / (n! (n+j)!), the modified Bessel function
// I_j(2t); b_{-j} = b_j. With this normalization the height-bound
// determinants need no argument scaling: both calibration checks (the EGF
// of two-row tableaux and the chamber-walk DP) pin it down and stay in the
// test suite.

#include <stdexcept>
#include <vector>

#include "tw/numeric.hpp"
#include "tw/partition.hpp"

namespace tw {

class PowerSeries {
public:
    explicit PowerSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    }

    int order() const { return order_; }

    const Rat& coeff(int k) const {
        static const Rat zero;
        if (k < 0) return zero;
        if (k > order_) throw std::out_of_range("PowerSeries: coefficient beyond truncation order");
        return c_[static_cast<std::size_t>(k)];
    }

    Rat& coeff_mut(int k) { return c_[static_cast<std::size_t>(k)]; }

    PowerSeries operator+(const PowerSeries& o) const {
        PowerSeries r(std::min(order_, o.order_));
        for (int k = 0; k <= r.order_; ++k) r.c_[static_cast<std::size_t>(k)] = coeff(k) + o.coeff(k);
        return r;
    }

    PowerSeries operator-(const PowerSeries& o) const {
        PowerSeries r(std::min(order_, o.order_));
        for (int k = 0; k <= r.order_; ++k) r.c_[static_cast<std::size_t>(k)] = coeff(k) - o.coeff(k);
        return r;
    }

    PowerSeries operator*(const PowerSeries& o) const {
        PowerSeries r(std::min(order_, o.order_));
        for (int a = 0; a <= r.order_; ++a) {
            if (c_[static_cast<std::size_t>(a)] == 0) continue;
            for (int b = 0; a + b <= r.order_; ++b)
                r.c_[static_cast<std::size_t>(a + b)] +=
                    c_[static_cast<std::size_t>(a)] * o.c_[static_cast<std::size_t>(b)];
        }
        return r;
    }

    bool operator==(const PowerSeries& o) const {
        int n = std::min(order_, o.order_);
        for (int k = 0; k <= n; ++k)
            if (coeff(k) != o.coeff(k)) return false;
        return true;
    }

    static PowerSeries zero(int order) { return PowerSeries(order); }

    static PowerSeries one(int order) {
        PowerSeries r(order);
        r.c_[0] = 1;
        return r;
    }

private:
    int order_;
    std::vector<Rat> c_;
};

// Laplace expansion along the first row; the matrices here are at most 4x4.
inline PowerSeries series_determinant(const std::vector<std::vector<PowerSeries>>& m) {
    std::size_t k = m.size();
    if (k == 0) throw std::invalid_argument("series_determinant: empty matrix");
    for (auto& row : m)
        if (row.size() != k) throw std::invalid_argument("series_determinant: non-square matrix");
    if (k == 1) return m[0][0];
    PowerSeries acc = PowerSeries::zero(m[0][0].order());
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::vector<PowerSeries>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<PowerSeries> row;
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        PowerSeries term = m[0][c] * series_determinant(minor);
        acc = c % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

inline PowerSeries bessel_series(int j, int order) {
    if (j < 0) j = -j;  // b_{-j} = b_j
    PowerSeries b(order);
    for (int n = 0; 2 * n + j <= order; ++n)
        b.coeff_mut(2 * n + j) = Rat(1) / Rat(factorial(n) * factorial(n + j));
    return b;
}

// EGF of standard Young tableaux of height at most 2k:
// det[ b_{i-j} + b_{i+j-1} ], 1 <= i, j <= k.
inline PowerSeries syt_egf(int k, int order) {
    if (k < 1) throw std::invalid_argument("syt_egf: k must be positive");
    std::vector<std::vector<PowerSeries>> m;
    for (int i = 1; i <= k; ++i) {
        std::vector<PowerSeries> row;
        for (int j = 1; j <= k; ++j)
            row.push_back(bessel_series(i - j, order) + bessel_series(i + j - 1, order));
        m.push_back(std::move(row));
    }
    return series_determinant(m);
}

// EGF by length of chamber walks from lambda to mu with steps +-e_i in
// {x_1 > ... > x_k > 0}: det[ b_{mu_i - lambda_j} - b_{mu_i + lambda_j} ].
inline PowerSeries grabiner_magyar(const std::vector<int>& lambda, const std::vector<int>& mu,
                                   int order) {
    std::size_t k = lambda.size();
    if (k == 0 || mu.size() != k)
        throw std::invalid_argument("grabiner_magyar: dimension mismatch");
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (lambda[i] <= lambda[i + 1] || mu[i] <= mu[i + 1])
            throw std::invalid_argument("grabiner_magyar: points must be strictly decreasing");
    if (lambda.back() <= 0 || mu.back() <= 0)
        throw std::invalid_argument("grabiner_magyar: points must be positive");
    std::vector<std::vector<PowerSeries>> m;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<PowerSeries> row;
        for (std::size_t j = 0; j < k; ++j)
            row.push_back(bessel_series(mu[i] - lambda[j], order) -
                          bessel_series(mu[i] + lambda[j], order));
        m.push_back(std::move(row));
    }
    return series_determinant(m);
}

// EGF of oscillating tableaux of height <= k ending at a row shape:
// sum over m of the walk EGFs delta -> delta + m e_1. A walk of length n
// moves x_1 by at most n, so m beyond the truncation order cannot
// contribute.
inline PowerSeries osc_row_egf(int k, int order) {
    std::vector<int> delta(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) delta[static_cast<std::size_t>(i)] = k - i;
    PowerSeries acc = PowerSeries::zero(order);
    for (int m = 0; m <= order; ++m) {
        auto mu = delta;
        mu[0] += m;
        acc = acc + grabiner_magyar(delta, mu, order);
    }
    return acc;
}

// n-th counting coefficient of an EGF: n! [t^n].
inline Int egf_count(const PowerSeries& s, int n) {
    return to_integer(s.coeff(n) * Rat(factorial(n)), "egf_count");
}

}  // namespace tw
