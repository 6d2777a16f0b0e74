#include "checks.hpp"

namespace qdet::checks {

namespace {

const GQ kHalf = GQ::fraction(1, 2);

// Shared product of the AW-form right-hand sides:
// prod_k (q;q)_{k-1} (aq;q)_{k+r-1} / (abq^2;q)_{k+shift}.
GQ aw_form_product(long count, long shift, long r, const GQ& a, const GQ& b, const GQ& q) {
    return prod(1, count, [&](long k) {
        return q_pochhammer(q, q, k - 1) * q_pochhammer(a * q, q, k + r - 1) / q_pochhammer(a * b * q * q, q, k + shift);
    });
}

// det((gamma + j - i) (alpha+1)_{i+j+r-2} / (alpha+beta+2)_{i+j+r-2}).
GQ classical_det(long n, long r, const GQ& al, const GQ& be, const GQ& ga) {
    ExactMatrix m(n, n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j)
            m.at(i, j) = (ga + GQ(j - i)) * rising_factorial(al + kOne, i + j + r - 2) /
                         rising_factorial(al + be + GQ(2), i + j + r - 2);
    return det(m);
}

}  // namespace

std::vector<Equality> hankel(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), q = p.q();
    const long r = p.r;
    const GQ lhs = det(build_hankel_matrix(n, r, a, b, q));
    const GQ rhs = pow(a, n * (n - 1) / 2) * pow(q, n * (n - 1) * (2 * n - 1) / 6 + n * (n - 1) * r / 2) *
                   prod(1, n, [&](long k) {
                       return q_pochhammer(q, q, k - 1) * q_pochhammer(b * q, q, k - 1) *
                              q_pochhammer(a * q, q, k + r - 1) / q_pochhammer(a * b * q * q, q, k + n + r - 2);
                   });
    return {{"Hankel determinant", lhs, rhs}};
}

std::vector<Equality> pfaffian_moments(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), q = p.q();
    const long r = p.r;
    const GQ lhs = pfaffian(build_theorem_matrix(2 * n, r, a, b, GQ(1), q));
    const GQ rhs = pow(a, n * (n - 1)) * pow(q, n * (n - 1) * (4 * n + 1) / 3 + n * (n - 1) * r) *
                   prod(1, n - 1, [&](long k) { return q_pochhammer(b * q, q, 2 * k); }) *
                   prod(1, n, [&](long k) {
                       return q_pochhammer(q, q, 2 * k - 1) * q_pochhammer(a * q, q, 2 * k + r - 1) /
                              q_pochhammer(a * b * q * q, q, 2 * (k + n) + r - 3);
                   });
    return {{"Pfaffian of the c = 1 moment matrix", lhs, rhs}};
}

std::vector<Equality> mehta_wang(long n, const ParamPoint& p) {
    const GQ& a = p.extra.at(0);
    const GQ& b = p.extra.at(1);
    ExactMatrix m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.raw(i, j) = (a + GQ(j - i)) * rising_factorial(b, i + j);
    const GQ d_rec = mehta_wang_D(n, a, b, MWMethod::recurrence);
    const GQ rhs = d_rec * prod(0, n - 1, [&](long i) { return factorial(i) * rising_factorial(b, i); });
    return {{"determinant = D_n prod i! (b)_i", det(m), rhs},
            {"D_n recurrence = binomial sum", d_rec, mehta_wang_D(n, a, b, MWMethod::sum)}};
}

std::vector<Equality> nishizawa(long n, const ParamPoint& p) {
    const GQ& s = p.s_half.value();
    const GQ& t = p.t_half.value();
    const GQ q = p.q();
    const GQ s2 = s * s, t2 = t * t;
    const GQ one_minus_q = kOne - q;

    ExactMatrix m1(n, n), m2(n, n);
    for (long i = 1; i <= n; ++i) {
        for (long j = 1; j <= n; ++j) {
            m1.at(i, j) = (pow(q, i - 1) - s2 * pow(q, j - 1)) * q_pochhammer(t2, q, i + j - 2);
            // With 0-based indices this is the entry of the original q-analogue statement.
            m2.at(i, j) = (kOne - s2 * pow(q, j - i)) / one_minus_q * q_pochhammer(t2, q, i + j - 2) /
                          pow(one_minus_q, i + j - 2);
        }
    }
    const GQ l1 = det(m1);
    const GQ det2 = det(m2);
    const GQ l2 = pow(q, n * (n - 1) / 2) * pow(one_minus_q, n * n) * det2;
    const GQ asc = al_salam_chihara(n, GQ(0), s * t * kI, -(t / s) * kI, q, ASCMethod::recurrence);
    const GQ rhs = pow(-kI, n) * pow(t, n * (n - 2)) * pow(s, n) * pow(q, n * (n - 1) * (n - 2) / 3) *
                   prod(1, n, [&](long k) { return q_pochhammer(q, q, k - 1) * q_pochhammer(t2, q, k - 1); }) * asc;

    const GQ d_rec = nishizawa_D(n, s, t, q, NishizawaMethod::recurrence);
    const GQ original = pow(s, 2 * n) * pow(t, n * (n - 1)) * pow(q, n * (n - 1) * (2 * n - 7) / 6) * d_rec *
                        prod(0, n - 1, [&](long k) {
                            return q_factorial(k, q) * q_pochhammer(t2, q, k) / pow(one_minus_q, k);
                        });
    return {{"two determinant normalizations agree", l1, l2},
            {"normalized determinant = Al-Salam-Chihara closed form", l2, rhs},
            {"original prefactor with D_{n,q}", det2, original},
            {"D_{n,q} recurrence = explicit sum", d_rec, nishizawa_D(n, s, t, q, NishizawaMethod::explicit_sum)},
            {"D_{n,q} recurrence = Al-Salam-Chihara form", d_rec,
             nishizawa_D(n, s, t, q, NishizawaMethod::al_salam_chihara)}};
}

namespace {

GQ theorem_phi_rhs(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const long r = p.r;
    const GQ& kap = p.kappa;
    const long e = n * (n + 1) * (2 * n - 5) / 6 + n * (n - 3) * r / 2;
    const GQ product = prod(1, n, [&](long k) {
        return q_pochhammer(q, q, k - 1) * q_pochhammer(a * q, q, k + r) * q_pochhammer(b * q, q, k - 2) /
               q_pochhammer(a * b * q * q, q, k + n + r - 2);
    });
    const GQ t = p.alpha * p.gamma * pow(kap, r + 1);
    const GQ u = p.alpha * p.beta * p.gamma * pow(kap, r + 1);
    const GQ series = phi_n(n, {pow(q, -n), t, -t, a * b * pow(q, n + r)}, {a * pow(q, r + 1), u, -u}, q, q);
    return sign(n) * pow(a, n * (n - 3) / 2) * pow(q, e) * q_pochhammer(a * b * c * pow(q, r + 1), q * q, n) * product *
           series;
}

GQ theorem_aw_rhs(long n, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), q = p.q();
    const long r = p.r;
    const GQ& kap = p.kappa;
    const GQ product = prod(1, n, [&](long k) {
        return q_pochhammer(q, q, k - 1) * q_pochhammer(a * q, q, k + r - 1) * q_pochhammer(b * q, q, k - 2) /
               q_pochhammer(a * b * q * q, q, k + n + r - 2);
    });
    const GQ t = p.alpha * p.gamma * pow(kap, r + 1);
    const GQ poly = aw(n, GQ(0), t * kI, -(p.alpha / p.gamma) * pow(kap, r + 1) * kI, p.beta * kI, -p.beta * kI, q);
    return pow(-kI, n) * pow(p.alpha, n * (n - 2)) * pow(p.gamma, n) *
           pow(kap, n * (n - 2) * (2 * n + 1) / 3 + n * (n - 2) * r) * product * poly;
}

}  // namespace

std::vector<Equality> thm_main_phi(long n, const ParamPoint& p) {
    const GQ lhs = det(build_theorem_matrix(n, p.r, p.a(), p.b(), p.c(), p.q()));
    return {{"determinant = 4phi3 form", lhs, theorem_phi_rhs(n, p)}};
}

std::vector<Equality> thm_main_aw(long n, const ParamPoint& p) {
    const GQ lhs = det(build_theorem_matrix(n, p.r, p.a(), p.b(), p.c(), p.q()));
    const GQ rhs = theorem_aw_rhs(n, p);
    return {{"determinant = Askey-Wilson form", lhs, rhs},
            {"Askey-Wilson form = 4phi3 form", rhs, theorem_phi_rhs(n, p)}};
}

std::vector<Equality> cor_even_phi(long m, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const long r = p.r;
    const GQ lhs = det(build_theorem_matrix(2 * m, r, a, b, c, q));
    const GQ product = prod(1, m, [&](long k) {
        const GQ f = q_pochhammer(q, q, 2 * k - 1) * q_pochhammer(a * q, q, 2 * k + r - 1) *
                     q_pochhammer(b * q, q, 2 * k - 2) / q_pochhammer(a * b * q * q, q, 2 * (k + m) + r - 3);
        return f * f;
    });
    const GQ series = phi_n(m, {pow(q, -2 * m), pow(q, 1 - 2 * m) / b, c, c.inverse()},
                            {q, a * pow(q, r + 1), pow(q, 1 - 4 * m - r) / (a * b)}, q * q, q * q);
    const GQ rhs = pow(a, 2 * m * (m - 1)) * pow(c, m) *
                   pow(q, 2 * m * (m - 1) * (4 * m + 1) / 3 + 2 * m * (m - 1) * r) * product * series;
    return {{"even determinant = 4phi3 in base q^2", lhs, rhs}};
}

std::vector<Equality> cor_even_aw(long m, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const long r = p.r;
    const GQ lhs = det(build_theorem_matrix(2 * m, r, a, b, c, q));
    const GQ poly = aw(m, (c + c.inverse()) * kHalf, kOne, q, a * pow(q, r + 1), pow(q, 1 - 4 * m - r) / (a * b), q * q);
    const GQ rhs = sign(m) * pow(a, m * (2 * m - 1)) * pow(b, m) * pow(c, m) *
                   pow(q, m * (8 * m * m + 3 * m - 2) / 3 + m * (2 * m - 1) * r) *
                   aw_form_product(2 * m, 2 * m + r - 2, r, a, b, q) *
                   prod(1, m, [&](long k) {
                       const GQ f = q_pochhammer(b * q, q, 2 * k - 2);
                       return f * f;
                   }) *
                   poly;
    return {{"even determinant = Askey-Wilson in base q^2", lhs, rhs}};
}

std::vector<Equality> cor_odd_phi(long m, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const long r = p.r;
    const GQ lhs = det(build_theorem_matrix(2 * m + 1, r, a, b, c, q));
    auto factor = [&](long k, long a_shift) {
        return q_pochhammer(q, q, 2 * k - 1) * q_pochhammer(a * q, q, 2 * k + r + a_shift) *
               q_pochhammer(b * q, q, 2 * k - 2) / q_pochhammer(a * b * q * q, q, 2 * (k + m - 1) + r);
    };
    const GQ series = phi_n(m, {pow(q, -2 * m), pow(q, 1 - 2 * m) / b, c * q, q / c},
                            {pow(q, 3), a * pow(q, r + 2), pow(q, -4 * m - r) / (a * b)}, q * q, q * q);
    const GQ rhs = pow(a, 2 * m * m) * pow(c, m) * pow(q, 2 * m * (m + 1) * (4 * m - 1) / 3 + 2 * m * m * r) *
                   (kOne - c) / (kOne - q) * prod(1, m + 1, [&](long k) { return factor(k, -2); }) *
                   prod(1, m, [&](long k) { return factor(k, 0); }) * series;
    return {{"odd determinant = 4phi3 in base q^2", lhs, rhs}};
}

std::vector<Equality> cor_odd_aw(long m, const ParamPoint& p) {
    const GQ a = p.a(), b = p.b(), c = p.c(), q = p.q();
    const long r = p.r;
    const GQ lhs = det(build_theorem_matrix(2 * m + 1, r, a, b, c, q));
    const GQ poly = aw(m, (c + c.inverse()) * kHalf, q, q * q, a * pow(q, r + 1), pow(q, -4 * m - r - 1) / (a * b), q * q);
    auto b_product = [&](long count) { return prod(1, count, [&](long k) { return q_pochhammer(b * q, q, 2 * k - 2); }); };
    const GQ rhs = sign(m) * pow(a, m * (2 * m + 1)) * pow(b, m) * pow(c, m) * (kOne - c) *
                   pow(q, m * (8 * m * m + 15 * m + 4) / 3 + m * (2 * m + 1) * r) *
                   aw_form_product(2 * m + 1, 2 * m + r - 1, r, a, b, q) * b_product(m + 1) * b_product(m) * poly;
    return {{"odd determinant = Askey-Wilson in base q^2", lhs, rhs}};
}

std::vector<Equality> c1_pfaffian_square(long m, const ParamPoint& p) {
    const ExactMatrix skew = build_theorem_matrix(2 * m, p.r, p.a(), p.b(), GQ(1), p.q());
    const GQ pf = pfaffian(skew);
    return {{"det = Pf^2 at c = 1", det(skew), pf * pf}};
}

std::vector<Equality> classical_hahn(long n, const ParamPoint& p) {
    const GQ& al = p.alpha_c.value();
    const GQ& be = p.beta_c.value();
    const GQ& ga = p.gamma_c.value();
    const long r = p.r;
    const GQ lhs = classical_det(n, r, al, be, ga);
    const GQ h = (al + be + ga + GQ(r + 1)) * kHalf;
    const GQ g_plus = (al + ga + GQ(r + 1)) * kHalf;
    const GQ g_minus = (al - ga + GQ(r + 1)) * kHalf;
    const GQ rhs1 = pow(GQ(-2), n) * rising_factorial(h, n) *
                    prod(1, n, [&](long k) {
                        return factorial(k - 1) * rising_factorial(al + kOne, k + r) * rising_factorial(be + kOne, k - 2) /
                               rising_factorial(al + be + GQ(2), k + n + r - 2);
                    }) *
                    f_hyper({GQ(-n), g_plus, al + be + GQ(n + r)}, {h, al + GQ(r + 1)}, kOne);
    const GQ rhs2 = pow(GQ(2) * kI, n) *
                    prod(1, n, [&](long k) {
                        return factorial(k) * rising_factorial(al + kOne, k + r - 1) * rising_factorial(be + kOne, k - 2) /
                               rising_factorial(al + be + GQ(2), k + n + r - 2);
                    }) *
                    continuous_hahn(n, GQ(0), g_plus, be * kHalf, g_minus, be * kHalf);
    return {{"determinant = 3F2 form", lhs, rhs1}, {"determinant = continuous Hahn form", lhs, rhs2}};
}

std::vector<Equality> classical_wilson_even(long m, const ParamPoint& p) {
    const GQ& al = p.alpha_c.value();
    const GQ& be = p.beta_c.value();
    const GQ& ga = p.gamma_c.value();
    const long r = p.r;
    const GQ lhs = classical_det(2 * m, r, al, be, ga);
    const GQ low = GQ(-2 * m) - (al + be + GQ(r - 1)) * kHalf;
    const GQ rhs1 = prod(1, m, [&](long k) {
                        const GQ f = factorial(2 * k - 1) * rising_factorial(al + kOne, 2 * k + r - 1) *
                                     rising_factorial(be + kOne, 2 * k - 2) /
                                     rising_factorial(al + be + GQ(2), 2 * (k + m) + r - 3);
                        return f * f;
                    }) *
                    f_hyper({GQ(-m), -(be - kOne) * kHalf - GQ(m), ga * kHalf, -ga * kHalf},
                            {kHalf, (al + GQ(r + 1)) * kHalf, low}, kOne);
    const GQ rhs2 = pow(GQ(-2), 3 * m) *
                    prod(1, 2 * m, [&](long k) {
                        return factorial(k - 1) * rising_factorial(al + kOne, k + r - 1) /
                               rising_factorial(al + be + GQ(2), k + 2 * m + r - 2);
                    }) *
                    prod(1, m, [&](long k) {
                        const GQ f = rising_factorial(be + kOne, 2 * k - 2);
                        return f * f;
                    }) *
                    wilson(m, ga * kHalf, GQ(0), kHalf, (al + GQ(r + 1)) * kHalf, low);
    return {{"even determinant = 4F3 form", lhs, rhs1}, {"even determinant = Wilson form", lhs, rhs2}};
}

std::vector<Equality> classical_wilson_odd(long m, const ParamPoint& p) {
    const GQ& al = p.alpha_c.value();
    const GQ& be = p.beta_c.value();
    const GQ& ga = p.gamma_c.value();
    const long r = p.r;
    const GQ lhs = classical_det(2 * m + 1, r, al, be, ga);
    auto factor = [&](long k, long a_shift) {
        return factorial(2 * k - 1) * rising_factorial(al + kOne, 2 * k + r + a_shift) *
               rising_factorial(be + kOne, 2 * k - 2) / rising_factorial(al + be + GQ(2), 2 * (k + m - 1) + r);
    };
    const GQ rhs1 = ga * prod(1, m + 1, [&](long k) { return factor(k, -2); }) *
                    prod(1, m, [&](long k) { return factor(k, 0); }) *
                    f_hyper({GQ(-m), -(be - kOne) * kHalf - GQ(m), (kOne + ga) * kHalf, (kOne - ga) * kHalf},
                            {GQ::fraction(3, 2), (al + GQ(r)) * kHalf + kOne, GQ(-2 * m) - (al + be + GQ(r)) * kHalf},
                            kOne);
    auto be_product = [&](long count) {
        return prod(1, count, [&](long k) { return rising_factorial(be + kOne, 2 * k - 2); });
    };
    const GQ rhs2 = pow(GQ(-2), 3 * m) * ga *
                    prod(1, 2 * m + 1, [&](long k) {
                        return factorial(k - 1) * rising_factorial(al + kOne, k + r - 1) /
                               rising_factorial(al + be + GQ(2), k + 2 * m + r - 1);
                    }) *
                    be_product(m + 1) * be_product(m) *
                    wilson(m, ga * kHalf, kHalf, kOne, (al + GQ(r + 1)) * kHalf,
                           GQ(-2 * m) - (al + be + GQ(r + 1)) * kHalf);
    return {{"odd determinant = 4F3 form", lhs, rhs1}, {"odd determinant = Wilson form", lhs, rhs2}};
}

}  // namespace qdet::checks
