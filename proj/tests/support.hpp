#pragma once

// Shared test helpers: random exact values and brute-force oracles that do
// not go through the library's own algorithms.

#include "qdet/exact_matrix.hpp"
#include "qdet/gaussian_rational.hpp"
#include "qdet/qseries.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace qdet::testing {

class RandomGQ {
public:
    explicit RandomGQ(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

    // Nonzero rational p/d with |p| <= 9, 1 <= d <= 9.
    GQ rational() {
        long num = 0;
        while (num == 0) num = integer(-9, 9);
        return GQ::fraction(num, integer(1, 9));
    }

    // Real or complex with equal odds; complex parts may vanish separately.
    GQ value() {
        if (integer(0, 1) == 0) return rational();
        return GQ(rational().real(), GQ::fraction(integer(-9, 9), integer(1, 9)).real());
    }

    // A q away from 0, 1, -1 and the roots of unity of low order.
    GQ base() {
        for (;;) {
            GQ q = rational();
            if (q.norm() != 1) return q;
        }
    }

    ExactMatrix matrix(std::size_t rows, std::size_t cols) {
        ExactMatrix m(rows, cols);
        for (std::size_t i = 1; i <= rows; ++i)
            for (std::size_t j = 1; j <= cols; ++j) m.at(i, j) = integer(0, 4) == 0 ? GQ(0) : value();
        return m;
    }

    ExactMatrix skew(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                m.at(i, j) = value();
                m.at(j, i) = -m.at(i, j);
            }
        return m;
    }

private:
    std::mt19937_64 eng_;
};

inline int permutation_sign(const std::vector<std::size_t>& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

// Sum over all permutations.
inline GQ leibniz_det(const ExactMatrix& m) {
    std::vector<std::size_t> p(m.rows());
    std::iota(p.begin(), p.end(), 0);
    GQ total;
    do {
        GQ term(permutation_sign(p));
        for (std::size_t i = 0; i < p.size(); ++i) term *= m.raw(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Pf = 1/(2^m m!) sum_sigma sgn(sigma) prod_i a_{sigma(2i-1), sigma(2i)}.
inline GQ permutation_pfaffian(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    GQ total;
    do {
        GQ term(permutation_sign(p));
        for (std::size_t i = 0; i + 1 < n; i += 2) term *= m.raw(p[i], p[i + 1]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    long norm = 1;
    for (std::size_t k = 1; k <= n / 2; ++k) norm *= 2 * static_cast<long>(k);
    return total / GQ(norm);
}

// Factor by factor, powers of q recomputed from scratch each time.
inline GQ naive_pochhammer(const GQ& a, const GQ& q, long n) {
    GQ out(1);
    for (long k = 0; k < n; ++k) out *= GQ(1) - a * pow(q, k);
    for (long k = 1; k <= -n; ++k) out /= GQ(1) - a * pow(q, -k);
    return out;
}

// All k-subsets of {1..n}, lexicographic.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i + 1);
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

}  // namespace qdet::testing
