#include "checks.hpp"

#include <numeric>
#include <string>

namespace qdet::checks {

namespace {

std::string idx(long i) { return std::to_string(i); }

// det((q^{k_i-1} - c q^{j-1}) mu_{k_i+j-2}).
GQ row_theorem_det(std::span<const long> ks, const GQ& a, const GQ& b, const GQ& c, const GQ& q) {
    const auto n = static_cast<long>(ks.size());
    ExactMatrix m(n, n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j)
            m.at(i, j) = (pow(q, ks[i - 1] - 1) - c * pow(q, j - 1)) * moment(ks[i - 1] + j - 2, a, b, q);
    return det(m);
}

// prod_i (aq;q)_{k_i-1} / (abq^2;q)_{k_i+n-2}.
GQ row_moment_factor(std::span<const long> ks, const GQ& a, const GQ& b, const GQ& q) {
    const auto n = static_cast<long>(ks.size());
    return prod(1, n, [&](long i) {
        return q_pochhammer(a * q, q, ks[i - 1] - 1) / q_pochhammer(a * b * q * q, q, ks[i - 1] + n - 2);
    });
}

// sum_nu sign(nu) (abcq^{2nu+1};q^2)_{n-nu} (acq;q^2)_nu R_{n,nu}.
GQ r_weighted_sum(long n, std::span<const long> ks, const GQ& a, const GQ& b, const GQ& c, const GQ& q,
                  bool alternate_from_top) {
    GQ s(0);
    for (long nu = 0; nu <= n; ++nu) {
        const GQ sg = alternate_from_top ? sign(n - nu) : sign(nu);
        s += sg * q_pochhammer(a * b * c * pow(q, 2 * nu + 1), q * q, n - nu) * q_pochhammer(a * c * q, q * q, nu) *
             compute_R(n, nu, ks, a, b, q);
    }
    return s;
}

long tuple_sum(std::span<const long> ks) { return std::accumulate(ks.begin(), ks.end(), 0L); }

struct Factorization {
    ExactMatrix m, p, q_mat;
};

Factorization factor(std::span<const long> ks, const GQ& a, const GQ& b, const GQ& c, const GQ& q) {
    const auto n = static_cast<long>(ks.size());
    const ExactMatrix m = build_M(ks, a, b, c, q);
    const ExactMatrix x = build_triangular(TriangularKind::X, n, ks, a, b, q);
    const ExactMatrix y = build_triangular(TriangularKind::Y, n, ks, a, b, q);
    const ExactMatrix l = build_triangular(TriangularKind::L, n, ks, a, b, q);
    const ExactMatrix u = build_triangular(TriangularKind::U, n, ks, a, b, q);
    return {m, x * m * y, l * m * u};
}

}  // namespace

std::vector<Equality> thm_rows(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const std::span<const long> ks(p.k_tuple.data(), n);
    const GQ rhs = pow(a, n * (n - 3) / 2) * pow(q, n * (n + 1) * (n - 4) / 6) *
                   prod(1, n, [&](long i) {
                       return q_pochhammer(a * q, q, ks[i - 1] - 1) * q_pochhammer(b * q, q, i - 2) /
                              q_pochhammer(a * b * q * q, q, ks[i - 1] + n - 2);
                   }) *
                   q_vandermonde(ks, q, -1) * r_weighted_sum(n, ks, a, b, c, q, true);
    return {{"row-selected determinant", row_theorem_det(ks, a, b, c, q), rhs}};
}

std::vector<Equality> q_kratt(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), q = p.q();
    const std::span<const long> ks(p.k_tuple.data(), n);
    ExactMatrix m(n, n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) m.at(i, j) = moment(ks[i - 1] + j - 2, a, b, q);
    const GQ rhs = pow(a, n * (n - 1) / 2) * pow(q, (n + 1) * n * (n - 1) / 6) * row_moment_factor(ks, a, b, q) *
                   q_vandermonde(ks, q, -1) * prod(1, n, [&](long j) { return q_pochhammer(b * q, q, j - 1); });
    return {{"row-selected Hankel determinant", det(m), rhs}};
}

std::vector<Equality> r_closed(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), q = p.q();
    std::vector<long> ks(n);
    std::iota(ks.begin(), ks.end(), 1L);
    std::vector<Equality> out;
    for (long nu = -1; nu <= n + 1; ++nu) {
        GQ expected(0);
        if (nu >= 0 && nu <= n) {
            expected = pow(q, (n - nu) * (n - nu - 1) / 2) * q_binomial(n, nu, q) *
                       q_pochhammer(a * pow(q, nu + 1), q, n - nu) * q_pochhammer(a * b * pow(q, n), q, nu);
        }
        out.push_back({"R_{n," + idx(nu) + "} at k = [1..n]", compute_R(n, nu, ks, a, b, q), expected});
    }
    return out;
}

std::vector<Equality> r_recurrence(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), q = p.q();
    const std::span<const long> ks(p.k_tuple.data(), n);
    const auto head = ks.first(n - 1);
    const long kn = ks[n - 1];
    std::vector<Equality> out;
    for (long nu = 0; nu <= n; ++nu) {
        const GQ rhs = (kOne - a * b * pow(q, kn + n - 1)) * compute_R(n - 1, nu - 1, head, a * q, b, q) +
                       pow(q, n - 1) * (kOne - a * pow(q, kn)) * compute_R(n - 1, nu, head, a, b, q);
        out.push_back({"R_{n," + idx(nu) + "} recurrence", compute_R(n, nu, ks, a, b, q), rhs});
    }
    return out;
}

std::vector<Equality> r_sum(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), q = p.q();
    const std::span<const long> ks(p.k_tuple.data(), n);
    GQ lhs(0);
    for (long nu = 0; nu <= n; ++nu) lhs += sign(n - nu) * compute_R(n, nu, ks, a, b, q);
    const GQ rhs = pow(a, n) * pow(q, n * (n - 1) / 2 + tuple_sum(ks)) * q_pochhammer(b, q, n);
    return {{"alternating sum of R_{n,nu}", lhs, rhs}};
}

namespace {

// Exceptional terms of the two Vandermonde-type determinants.
struct ResidueTerms {
    GQ first;  // extra term of V at k = 1
    GQ last;   // extra term of W at k = n
};

}  // namespace

std::vector<Equality> residue_ids(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const std::vector<GQ>& xs = p.x_list;
    const GQ px = prod(1, n, [&](long l) { return xs[l - 1]; });
    const GQ bq_poch = q_pochhammer(b * q, q, n - 1);
    const GQ first = sign(n) * pow(a, n - 1) / q * (kOne - a * c * q) * bq_poch /
                     prod(1, n, [&](long l) { return kOne - a * xs[l - 1]; });
    const GQ last = pow(a, n - 1) * pow(q, n * (n - 3) / 2) * (kOne - a * b * c * pow(q, 2 * n - 1)) * bq_poch /
                    prod(1, n, [&](long l) { return kOne - a * b * pow(q, n - 1) * xs[l - 1]; });
    std::vector<Equality> out;
    for (long j = 1; j <= n; ++j) {
        auto residue_sum = [&](const GQ& scale) {
            GQ s(0);
            for (long i = 0; i < n; ++i) {
                const GQ& x = xs[i];
                GQ others(1);
                for (long l = 0; l < n; ++l)
                    if (l != i) others *= xs[l] - x;
                s += (x / q - c * pow(q, j - 1)) * q_pochhammer(a * x, q, j - 1) *
                     q_pochhammer(a * b * pow(q, j) * x, q, n - j) / (x * (kOne - scale * x) * others);
            }
            return -s;
        };
        const GQ base = c * pow(q, j - 1) / px;
        out.push_back({"first residue sum, j=" + idx(j), residue_sum(a), base + (j == 1 ? first : GQ(0))});
        out.push_back({"second residue sum, j=" + idx(j), residue_sum(a * b * pow(q, n - 1)),
                       base - (j == n ? last : GQ(0))});
    }
    return out;
}

std::vector<Equality> vandermonde_vw(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const std::vector<GQ>& xs = p.x_list;
    const GQ px = prod(1, n, [&](long l) { return xs[l - 1]; });
    const GQ vx = vandermonde(std::span<const GQ>(xs.data(), n));
    const GQ bq_poch = q_pochhammer(b * q, q, n - 1);
    const ResidueTerms terms{
        sign(n) * pow(a, n - 1) * (kOne - a * c * q) * bq_poch / prod(1, n, [&](long l) { return kOne - a * xs[l - 1]; }),
        pow(a, n - 1) * pow(q, (n - 1) * (n - 2) / 2) * (kOne - a * b * c * pow(q, 2 * n - 1)) * bq_poch /
            prod(1, n, [&](long l) { return kOne - a * b * pow(q, n - 1) * xs[l - 1]; })};
    std::vector<Equality> out;
    for (long k = 1; k <= n; ++k) {
        auto build = [&](const GQ& scale) {
            ExactMatrix m(n, n);
            for (long i = 1; i <= n; ++i) {
                const GQ& x = xs[i - 1];
                for (long j = 1; j < n; ++j) m.at(i, j) = pow(x, j - 1);
                m.at(i, n) = -(x - c * pow(q, k)) * q_pochhammer(a * x, q, k - 1) *
                             q_pochhammer(a * b * pow(q, k) * x, q, n - k) / (x * (kOne - scale * x));
            }
            return sign(n - 1) * det(m) / vx;
        };
        const GQ base = c * pow(q, k) / px;
        out.push_back({"V determinant, k=" + idx(k), build(a), base + (k == 1 ? terms.first : GQ(0))});
        out.push_back({"W determinant, k=" + idx(k), build(a * b * pow(q, n - 1)), base - (k == n ? terms.last : GQ(0))});
    }
    return out;
}

std::vector<Equality> bottom_rows(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const std::span<const long> ks(p.k_tuple.data(), n);
    const long sk = tuple_sum(ks);
    const Factorization f = factor(ks, a, b, c, q);
    const GQ bq_poch = q_pochhammer(b * q, q, n - 1);
    const GQ first = sign(n) * pow(a, n - 1) / q * (kOne - a * c * q) * bq_poch /
                     prod(1, n, [&](long l) { return kOne - a * pow(q, ks[l - 1]); });
    const GQ last = -(pow(a, n - 1) * pow(q, n * (n - 3) / 2) * (kOne - a * b * c * pow(q, 2 * n - 1)) * bq_poch) /
                    prod(1, n, [&](long l) { return kOne - a * b * pow(q, ks[l - 1] + n - 1); });
    std::vector<Equality> out;
    for (long j = 1; j <= n; ++j) {
        const GQ e1 = (j == 1 ? first : GQ(0)) + (j == n ? c * pow(q, n - 1 - sk) : GQ(0));
        const GQ e2 = (j == 1 ? c * pow(q, -sk) : GQ(0)) + (j == n ? last : GQ(0));
        out.push_back({"X M Y bottom row, column " + idx(j), f.p.at(n, j), e1});
        out.push_back({"L M U bottom row, column " + idx(j), f.q_mat.at(n, j), e2});
    }
    return out;
}

std::vector<Equality> triangular_inverses(long n, const ParamPoint& p) {
    const GQ q = p.q();
    const ExactMatrix y = build_triangular(TriangularKind::Y, n, {}, GQ(0), GQ(0), q);
    const ExactMatrix u = build_triangular(TriangularKind::U, n, {}, GQ(0), GQ(0), q);
    const ExactMatrix yy = y * build_triangular_inverse(TriangularKind::Y, n, q);
    const ExactMatrix uu = u * build_triangular_inverse(TriangularKind::U, n, q);
    std::vector<Equality> out;
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            const GQ delta(i == j ? 1 : 0);
            out.push_back({"(Y Y^-1)(" + idx(i) + "," + idx(j) + ")", yy.at(i, j), delta});
            out.push_back({"(U U^-1)(" + idx(i) + "," + idx(j) + ")", uu.at(i, j), delta});
        }
    }
    const auto first_cols = index_range(1, n - 1);
    const auto last_cols = index_range(2, n);
    for (long i = 1; i <= n; ++i) {
        const auto rows = index_range_without(n, i);
        out.push_back({"Y minor without row " + idx(i), det(submatrix(y, rows, first_cols)), pow(-q, i - n)});
        out.push_back({"U minor without row " + idx(i), det(submatrix(u, rows, last_cols)), pow(-q, i - 1)});
    }
    return out;
}

std::vector<Equality> pq_lemma(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const std::span<const long> ks(p.k_tuple.data(), n);
    const Factorization f = factor(ks, a, b, c, q);
    const GQ det_m = det(f.m);
    const GQ dv = pow(q, tuple_sum(ks)) * q_vandermonde(ks, q, 0);
    const GQ prod_a = prod(1, n, [&](long i) { return kOne - a * pow(q, ks[i - 1]); });
    const GQ prod_ab = prod(1, n, [&](long i) { return kOne - a * b * pow(q, ks[i - 1] + n - 1); });
    std::vector<Equality> out{
        {"det(X M Y)", det(f.p), sign(n) * det_m / (dv * prod_a)},
        {"det(L M U)", det(f.q_mat), sign(n) * det_m / (dv * prod_ab)},
    };
    if (n < 2) return out;
    const auto head = ks.first(n - 1);
    const GQ dv1 = pow(q, tuple_sum(head)) * q_vandermonde(head, q, 0);
    const auto lead = index_range(1, n - 1);
    const auto tail = index_range(2, n);
    out.push_back({"P minor, columns 2..n", det(submatrix(f.p, lead, tail)),
                   sign(n - 1) * det(build_M(head, a * q, b, c * q, q)) / dv1});
    out.push_back({"Q minor, columns 1..n-1", det(submatrix(f.q_mat, lead, lead)),
                   sign(n - 1) * det(build_M(head, a, b, c, q)) / dv1});
    const GQ lhs = det(submatrix(f.p, lead, lead)) /
                   prod(1, n - 1, [&](long v) { return kOne - a * b * pow(q, ks[v - 1] + n - 1); });
    const GQ rhs = pow(-q, 1 - n) * det(submatrix(f.q_mat, lead, tail)) /
                   prod(1, n - 1, [&](long v) { return kOne - a * pow(q, ks[v - 1]); });
    out.push_back({"P and Q leading minors", lhs, rhs});
    return out;
}

std::vector<Equality> m_recurrence(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const std::span<const long> ks(p.k_tuple.data(), n);
    const auto head = ks.first(n - 1);
    const long kn = ks[n - 1];
    const GQ lhs = det(build_M(ks, a, b, c, q)) /
                   (pow(a, n - 2) * q_pochhammer(b * q, q, n - 2) *
                    prod(1, n - 1, [&](long i) { return pow(q, ks[i - 1]) - pow(q, kn); }));
    const GQ rhs = (kOne - a * c * q) * (kOne - a * b * pow(q, kn + n - 1)) / q * det(build_M(head, a * q, b, c * q, q)) -
                   pow(q, n * (n - 3) / 2) * (kOne - a * b * c * pow(q, 2 * n - 1)) * (kOne - a * pow(q, kn)) *
                       det(build_M(head, a, b, c, q));
    return {{"det M_n recurrence", lhs, rhs}};
}

std::vector<Equality> m_closed(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const std::span<const long> ks(p.k_tuple.data(), n);
    const GQ det_m = det(build_M(ks, a, b, c, q));
    const GQ closed = sign(n) * pow(a, n * (n - 3) / 2) * pow(q, n * (n + 1) * (n - 4) / 6) *
                      prod(1, n, [&](long i) { return q_pochhammer(b * q, q, i - 2); }) * q_vandermonde(ks, q, -1) *
                      r_weighted_sum(n, ks, a, b, c, q, false);
    return {{"det M_n closed form", det_m, closed},
            {"moment determinant = prefactor * det M_n", row_theorem_det(ks, a, b, c, q),
             row_moment_factor(ks, a, b, q) * det_m}};
}

}  // namespace qdet::checks
