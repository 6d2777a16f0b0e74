#include "checks.hpp"

#include <string>

namespace qdet::checks {

namespace {

GQ coeff(std::vector<GQ> nums, std::vector<GQ> dens, const GQ& q, long k) {
    if (k < 0) return GQ(0);
    return phi_coeff(SeriesSpec{std::move(nums), std::move(dens), q, GQ(1)}, k);
}

GQ w_value(const GQ& a1_sqrt, std::initializer_list<GQ> tail, const GQ& q, const GQ& z) {
    return w_series(a1_sqrt, std::span<const GQ>(tail.begin(), tail.size()), q, z);
}

}  // namespace

std::vector<Equality> phi_contiguous_1(long order, const ParamPoint& p) {
    const GQ q = p.q();
    const auto& v = p.extra;
    const GQ &a = v.at(0), &b = v.at(1), &c = v.at(2), &d = v.at(3), &e = v.at(4), &f = v.at(5), &g = v.at(6);
    const GQ scale = (b - a) * (kOne - c) * (kOne - d) / ((kOne - e) * (kOne - f) * (kOne - g));
    std::vector<Equality> out;
    for (long k = 0; k <= order; ++k) {
        const GQ lhs = coeff({a, b * q, c, d}, {e, f, g}, q, k) - coeff({a * q, b, c, d}, {e, f, g}, q, k);
        const GQ rhs = scale * coeff({a * q, b * q, c * q, d * q}, {e * q, f * q, g * q}, q, k - 1);
        out.push_back({"coefficient of z^" + std::to_string(k), lhs, rhs});
    }
    return out;
}

std::vector<Equality> phi_contiguous_2(long order, const ParamPoint& p) {
    const GQ q = p.q();
    const auto& v = p.extra;
    const GQ &a = v.at(0), &b = v.at(1), &c = v.at(2), &d = v.at(3), &e = v.at(4), &f = v.at(5), &g = v.at(6);
    std::vector<Equality> out;
    for (long k = 0; k <= order; ++k) {
        const GQ lhs = (kOne - f) * (a - e) * coeff({a, b, c, d}, {e * q, f, g}, q, k) -
                       (kOne - e) * (a - f) * coeff({a, b, c, d}, {e, f * q, g}, q, k);
        const GQ rhs = (kOne - a) * (f - e) * coeff({a * q, b, c, d}, {e * q, f * q, g}, q, k);
        out.push_back({"coefficient of z^" + std::to_string(k), lhs, rhs});
    }
    return out;
}

std::vector<Equality> phi_contiguous_3(long n, const ParamPoint& p) {
    const GQ q = p.q();
    const auto& v = p.extra;
    const GQ &c = v.at(0), &d = v.at(1), &e = v.at(2), &f = v.at(3), &g = v.at(4);
    const GQ top = pow(q, -n);
    // Balanced: the remaining numerator is fixed by top * B * c * d * q = e f g.
    const GQ bal = e * f * g / (top * c * d * q);
    const GQ lhs = (kOne - e) * (kOne - f) * (kOne - g) * phi_n(n, {top, bal, c, d}, {e, f, g}, q, q);
    const GQ rhs = c * (kOne - e) * (kOne - f / c) * (kOne - g / c) *
                       phi_n(n, {top * q, bal * q, c, d}, {e, f * q, g * q}, q, q) +
                   d * (kOne - c) * (kOne - e / d) * (kOne - f * g / (c * d)) *
                       phi_n(n, {top * q, bal * q, c * q, d}, {e * q, f * q, g * q}, q, q);
    return {{"balanced 4phi3 three-term relation", lhs, rhs}};
}

std::vector<Equality> watson(long n, const ParamPoint& p) {
    const GQ q = p.q();
    const auto& v = p.extra;
    const GQ &b = v.at(0), &c = v.at(1), &d = v.at(2), &e = v.at(3), &a1s = v.at(4);
    const GQ a1 = a1s * a1s;
    const GQ lhs = w_value(a1s, {b, c, d, e, pow(q, -n)}, q, a1 * a1 * pow(q, n + 2) / (b * c * d * e));
    const GQ rhs = q_pochhammer({a1 * q, a1 * q / (d * e)}, q, n) / q_pochhammer({a1 * q / d, a1 * q / e}, q, n) *
                   phi_n(n, {pow(q, -n), d, e, a1 * q / (b * c)}, {a1 * q / b, a1 * q / c, d * e * pow(q, -n) / a1}, q, q);
    return {{"8W7 = balanced 4phi3", lhs, rhs}};
}

std::vector<Equality> w8_contiguous(long n, const ParamPoint& p) {
    const GQ q = p.q();
    const auto& v = p.extra;
    const GQ &b = v.at(0), &c = v.at(1), &d = v.at(2), &e = v.at(3), &a1s = v.at(4);
    const GQ a1 = a1s * a1s;
    const GQ z = a1 * a1 * pow(q, n + 1) / (b * c * d * e);
    const GQ lhs = (c - a1) * (d - a1 * q) * (e - a1 * q) * (b - a1 * pow(q, n)) *
                   w_value(a1s, {b, c * q, d, e, pow(q, -n)}, q, z);
    // a1 q has square root a1s * kappa.
    const GQ rhs = a1 * (kOne - b) * (kOne - a1 * q) * (d * e - a1 * q) * (kOne - c * pow(q, n)) *
                       w_value(a1s * p.kappa, {b * q, c * q, d, e, pow(q, 1 - n)}, q, z) +
                   (b * c - a1) * (d - a1 * q) * (e - a1 * q) * (kOne - a1 * pow(q, n)) *
                       w_value(a1s, {b, c, d, e, pow(q, 1 - n)}, q, z);
    return {{"8W7 three-term relation", lhs, rhs}};
}

std::vector<Equality> even_odd_factorization(long m, const ParamPoint& p) {
    const GQ q = p.q();
    const GQ q2 = q * q;
    const auto& v = p.extra;
    const GQ &a = v.at(0), &b = v.at(1), &c = v.at(2);
    const GQ c2 = c * c;
    const GQ x0 = -(a / b + b / a) * GQ::fraction(1, 2);
    const GQ even_lhs = aw(2 * m, GQ(0), a, b, c, -c, q);
    const GQ even_rhs = sign(m) * pow(a * b, m) * pow(c, 2 * m) * pow(q, m * (3 * m - 1)) * q_pochhammer(-c2, q2, m) *
                        aw(m, x0, kOne, q, a * b, -pow(q, 2 - 4 * m) / (a * b * c2), q2);
    const GQ odd_lhs = aw(2 * m + 1, GQ(0), a, b, c, -c, q);
    const GQ odd_rhs = sign(m + 1) * pow(a, m) * pow(b, m + 1) * pow(c, 2 * m) * (kOne + a / b) *
                       pow(q, m * (3 * m + 1)) * q_pochhammer(-c2, q2, m + 1) *
                       aw(m, x0, q, q2, a * b, -pow(q, -4 * m) / (a * b * c2), q2);
    return {{"p_{2m} at x = 0", even_lhs, even_rhs}, {"p_{2m+1} at x = 0", odd_lhs, odd_rhs}};
}

std::vector<Equality> andrews(long n, const ParamPoint& p) {
    const GQ q = p.q();
    const GQ &a = p.extra.at(0), &b = p.extra.at(1);
    const AWParams params{a, -a, b, -b, q, GQ(0)};
    const GQ hyp = askey_wilson(n, params, AWMethod::hypergeometric);
    return {{"p_n(0; a,-a,b,-b) closed form", hyp, andrews_rhs(n, a, b, q)},
            {"recurrence = 4phi3", askey_wilson(n, params, AWMethod::recurrence), hyp}};
}

}  // namespace qdet::checks
