#include "qdet/builders.hpp"

#include "qdet/errors.hpp"
#include "qdet/qseries.hpp"

#include <stdexcept>
#include <string>

namespace qdet {

namespace {

const GQ kOne(1);

long sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// prod_{l=1, l != j}^{i} (q^{k_l} - q^{k_j}), 1-based i and j.
GQ row_difference_product(std::span<const long> rows, const GQ& q, std::size_t i, std::size_t j) {
    GQ out(1);
    const GQ qkj = pow(q, rows[j - 1]);
    for (std::size_t l = 1; l <= i; ++l)
        if (l != j) out *= pow(q, rows[l - 1]) - qkj;
    return out;
}

}  // namespace

GQ moment(long m, const GQ& a, const GQ& b, const GQ& q) {
    const GQ den = q_pochhammer(a * b * q * q, q, m);
    if (den.is_zero()) throw PoleError("moment " + std::to_string(m) + ": (abq^2;q)_m = 0");
    return q_pochhammer(a * q, q, m) / den;
}

ExactMatrix build_theorem_matrix(long n, long r, const GQ& a, const GQ& b, const GQ& c, const GQ& q) {
    if (n < 1) throw DomainError("theorem matrix needs n >= 1");
    ExactMatrix m(n, n);
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            try {
                m.at(i, j) = (pow(q, i - 1) - c * pow(q, j - 1)) * moment(i + j + r - 2, a, b, q);
            } catch (const PoleError& e) {
                throw PoleError("entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.where());
            }
        }
    }
    return m;
}

ExactMatrix build_hankel_matrix(long n, long r, const GQ& a, const GQ& b, const GQ& q) {
    ExactMatrix m(n, n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) m.at(i, j) = moment(i + j + r - 2, a, b, q);
    return m;
}

ExactMatrix build_M(std::span<const long> rows, const GQ& a, const GQ& b, const GQ& c, const GQ& q) {
    const auto n = static_cast<long>(rows.size());
    ExactMatrix m(n, n);
    for (long i = 1; i <= n; ++i) {
        const GQ qk = pow(q, rows[i - 1]);
        for (long j = 1; j <= n; ++j) {
            m.at(i, j) = (qk / q - c * pow(q, j - 1)) * q_pochhammer(a * qk, q, j - 1) *
                         q_pochhammer(a * b * qk * pow(q, j), q, n - j);
        }
    }
    return m;
}

ExactMatrix build_triangular(TriangularKind kind, long n, std::span<const long> rows, const GQ& a, const GQ& b,
                             const GQ& q) {
    ExactMatrix m(n, n);
    switch (kind) {
        case TriangularKind::X:
        case TriangularKind::L: {
            if (static_cast<long>(rows.size()) < n) throw std::invalid_argument("row tuple shorter than n");
            for (long j = 1; j <= n; ++j) {
                const GQ qkj = pow(q, rows[j - 1]);
                const GQ diag = kind == TriangularKind::X ? kOne - a * qkj : kOne - a * b * qkj * pow(q, n - 1);
                for (long i = j; i <= n; ++i) {
                    const GQ den = qkj * diag * row_difference_product(rows, q, i, j);
                    if (den.is_zero()) throw PoleError("triangular entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
                    m.at(i, j) = -den.inverse();
                }
            }
            return m;
        }
        case TriangularKind::Y:
            for (long i = 1; i <= n; ++i)
                for (long j = 1; j <= i; ++j)
                    m.at(i, j) = GQ(sign(i + j)) * pow(q, -((i - j) * (2 * n + 1 - i - j)) / 2) * q_binomial(n - j, i - j, q);
            return m;
        case TriangularKind::U:
            for (long i = 1; i <= n; ++i)
                for (long j = i; j <= n; ++j)
                    m.at(i, j) = GQ(sign(i + j)) * pow(q, (j - i) * (j - i + 1) / 2) * q_binomial(j - 1, j - i, q);
            return m;
    }
    return m;
}

ExactMatrix build_triangular_inverse(TriangularKind kind, long n, const GQ& q) {
    ExactMatrix m(n, n);
    if (kind == TriangularKind::Y) {
        for (long i = 1; i <= n; ++i)
            for (long j = 1; j <= i; ++j) m.at(i, j) = pow(q, (j - i) * (n + 1 - i)) * q_binomial(n - j, i - j, q);
        return m;
    }
    if (kind == TriangularKind::U) {
        for (long i = 1; i <= n; ++i)
            for (long j = i; j <= n; ++j) m.at(i, j) = pow(q, j - i) * q_binomial(j - 1, i - 1, q);
        return m;
    }
    throw std::invalid_argument("closed-form inverse exists only for Y and U");
}

GQ compute_R(long n, long nu, std::span<const long> rows, const GQ& a, const GQ& b, const GQ& q) {
    if (nu < 0 || nu > n) return GQ(0);
    if (static_cast<long>(rows.size()) < n) throw std::invalid_argument("row tuple shorter than n");
    if (n > 30) throw std::invalid_argument("compute_R supports n <= 30");
    const GQ ab = a * b;
    GQ total(0);
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        if (__builtin_popcountl(mask) != nu) continue;
        long exponent = nu - n;
        GQ term(1);
        long li = 0;
        long lj = 0;
        for (long idx = 1; idx <= n; ++idx) {
            const long k = rows[idx - 1];
            if (mask & (1UL << (idx - 1))) {
                ++lj;
                term *= kOne - ab * pow(q, k + idx - lj + nu - 1);
            } else {
                ++li;
                exponent += idx;
                term *= kOne - a * pow(q, k - idx + li + nu);
            }
        }
        total += pow(q, exponent) * term;
    }
    return total;
}

GQ q_vandermonde(std::span<const long> rows, const GQ& q, long shift) {
    GQ out(1);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) out *= pow(q, rows[i] + shift) - pow(q, rows[j] + shift);
    return out;
}

GQ vandermonde(std::span<const GQ> xs) {
    GQ out(1);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) out *= xs[j] - xs[i];
    return out;
}

}  // namespace qdet
