#include "checks.hpp"

namespace qdet::checks {

namespace {

struct Condensation {
    GQ lhs, rhs;
};

Condensation condense(const ExactMatrix& a) {
    const auto n = static_cast<std::size_t>(a.rows());
    const auto inner = index_range(2, n - 1);
    const auto head = index_range(1, n - 1);
    const auto tail = index_range(2, n);
    return {det(submatrix(a, inner, inner)) * det(a),
            det(submatrix(a, head, head)) * det(submatrix(a, tail, tail)) -
                det(submatrix(a, head, tail)) * det(submatrix(a, tail, head))};
}

GQ theorem_det(long n, const GQ& a, const GQ& b, const GQ& c, const GQ& q) {
    if (n <= 0) return GQ(1);
    return det(build_theorem_matrix(n, 0, a, b, c, q));
}

}  // namespace

std::vector<Equality> dj_generic(long n, const ParamPoint& p) {
    ExactMatrix a(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) a.raw(i, j) = p.extra.at(i * n + j);
    const Condensation dj = condense(a);
    return {{"condensation on a generic matrix", dj.lhs, dj.rhs}};
}

std::vector<Equality> dj_specialized(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const GQ lhs = theorem_det(n, a, b, c, q) * theorem_det(n - 2, a * q * q, b, c, q);
    const GQ rhs = q * q_pochhammer(a * q, q, 2) / q_pochhammer(a * b * q * q, q, 2) * theorem_det(n - 1, a, b, c, q) *
                       theorem_det(n - 1, a * q * q, b, c, q) -
                   q * pow(kOne - a * q, n) * pow(kOne - a * b * pow(q, 3), n - 2) /
                       (pow(kOne - a * q * q, n - 2) * pow(kOne - a * b * q * q, n)) * theorem_det(n - 1, a * q, b, c * q, q) *
                       theorem_det(n - 1, a * q, b, c / q, q);
    const Condensation dj = condense(build_theorem_matrix(n, 0, a, b, c, q));
    return {{"shifted-parameter condensation", lhs, rhs}, {"condensation on the moment matrix", dj.lhs, dj.rhs}};
}

std::vector<Equality> quadratic_full(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), q = p.q();
    const GQ& k = p.kappa;
    const GQ ratio = p.alpha / p.gamma;
    const GQ ag = p.alpha * p.gamma;
    const GQ a1 = ag * k * kI, b1 = -ratio * k * kI;
    const GQ a3 = ag * pow(k, 3) * kI, b3 = -ratio * pow(k, 3) * kI;
    const GQ cc = p.beta * kI;
    auto poly = [&](long m, const GQ& x1, const GQ& x2) { return aw(m, GQ(0), x1, x2, cc, -cc, q); };
    const GQ lhs = a * q * (kOne - pow(q, n - 1)) * (kOne - b * pow(q, n - 2)) * poly(n, a1, b1) * poly(n - 2, a3, b3);
    const GQ rhs = (kOne - a * pow(q, n)) * (kOne - a * b * pow(q, n)) * poly(n - 1, a1, b1) * poly(n - 1, a3, b3) -
                   (kOne - a * q) * (kOne - a * b * pow(q, 2 * n - 1)) * poly(n - 1, a3, b1) * poly(n - 1, a1, b3);
    return {{"quadratic relation in the theorem's parameters", lhs, rhs}};
}

std::vector<Equality> quadratic_clean(long n, const ParamPoint& p) {
    const GQ q = p.q();
    const GQ &a = p.extra.at(0), &b = p.extra.at(1), &c = p.extra.at(2);
    const GQ c2 = c * c;
    auto poly = [&](long m, const GQ& x1, const GQ& x2) { return aw(m, GQ(0), x1, x2, c, -c, q); };
    const GQ lhs = a * b * (kOne - pow(q, n - 1)) * (kOne + c2 * pow(q, n - 2)) * poly(n, a, b) * poly(n - 2, a * q, b * q);
    const GQ rhs = (kOne - a * b * pow(q, n - 1)) * (kOne + a * b * c2 * pow(q, n - 1)) * poly(n - 1, a, b) *
                       poly(n - 1, a * q, b * q) -
                   (kOne - a * b) * (kOne + a * b * c2 * pow(q, 2 * n - 2)) * poly(n - 1, a * q, b) * poly(n - 1, a, b * q);
    return {{"quadratic relation for p_n(0; a,b,c,-c)", lhs, rhs}};
}

std::vector<Equality> quadratic_phi(long n, const ParamPoint& p) {
    const GQ q = p.q();
    const GQ &a = p.extra.at(0), &b = p.extra.at(1), &c = p.extra.at(2);
    const GQ ab = a * b, ac = a * c, c2 = c * c;
    const GQ ai = a * kI, aqi = a * q * kI;
    auto ph = [&](long m, std::vector<GQ> nums, std::vector<GQ> dens) { return phi_n(m, std::move(nums), std::move(dens), q, q); };
    auto top = [&](long m) { return pow(q, -m); };
    const GQ lhs = ab * q * (kOne - pow(q, n - 1)) * (kOne + c2 * pow(q, n - 2)) *
                   ph(n, {top(n), -ab * c2 * pow(q, n - 1), ai, -ai}, {ab, ac, -ac}) *
                   ph(n - 2, {top(n - 2), -ab * c2 * pow(q, n - 1), aqi, -aqi}, {ab * q * q, ac * q, -ac * q});
    const GQ rhs = (kOne - ab * pow(q, n)) * (kOne + ab * c2 * pow(q, n - 1)) *
                       ph(n - 1, {top(n - 1), -ab * c2 * pow(q, n - 2), ai, -ai}, {ab, ac, -ac}) *
                       ph(n - 1, {top(n - 1), -ab * c2 * pow(q, n), aqi, -aqi}, {ab * q * q, ac * q, -ac * q}) -
                   (kOne - ab * q) * (kOne + ab * c2 * pow(q, 2 * n - 2)) *
                       ph(n - 1, {top(n - 1), -ab * c2 * pow(q, n - 1), aqi, -aqi}, {ab * q, ac * q, -ac * q}) *
                       ph(n - 1, {top(n - 1), -ab * c2 * pow(q, n - 1), ai, -ai}, {ab * q, ac, -ac});
    // The same p_n seen both ways, tying this relation to the polynomial one.
    const GQ as_poly = aw(n, GQ(0), a, b, c, -c, q);
    const GQ as_series = q_pochhammer({ab, ac, -ac}, q, n) / pow(a, n) *
                         ph(n, {top(n), -ab * c2 * pow(q, n - 1), ai, -ai}, {ab, ac, -ac});
    return {{"quadratic relation in 4phi3 form", lhs, rhs}, {"p_n(0; a,b,c,-c) as a 4phi3", as_poly, as_series}};
}

std::vector<Equality> conjecture_mw3(long n, const ParamPoint& p) {
    const GQ q = p.q();
    const GQ &a = p.extra.at(0), &b = p.extra.at(1), &c = p.extra.at(2);
    const GQ& d = p.delta.value();
    const GQ& x = p.x.value();
    auto poly = [&](long m, const GQ& x1, const GQ& x2) { return aw(m, x, x1, x2, c, d, q); };
    const GQ abcd = a * b * c * d;
    const GQ lhs = a * b * (kOne - pow(q, n - 1)) * (kOne - c * d * pow(q, n - 2)) * poly(n, a, b) * poly(n - 2, a * q, b * q);
    const GQ rhs = (kOne - a * b * pow(q, n - 1)) * (kOne - abcd * pow(q, n - 1)) * poly(n - 1, a, b) * poly(n - 1, a * q, b * q) -
                   (kOne - a * b) * (kOne - abcd * pow(q, 2 * n - 2)) * poly(n - 1, a * q, b) * poly(n - 1, a, b * q);
    return {{"quadratic relation at generic x, c, d", lhs, rhs}};
}

}  // namespace qdet::checks
