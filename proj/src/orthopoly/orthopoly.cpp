#include "qdet/orthopoly.hpp"

#include "qdet/errors.hpp"
#include "qdet/qseries.hpp"

#include <string>

namespace qdet {

namespace {

const GQ kOne(1);

GQ require_nonzero(GQ v, const char* what, long index) {
    if (v.is_zero()) throw PoleError(std::string(what) + " at n=" + std::to_string(index));
    return v;
}

GQ aw_recurrence(long n, const AWParams& p) {
    const auto& [a, b, c, d, q, x] = p;
    if (a.is_zero()) throw PoleError("Askey-Wilson recurrence with a = 0");
    const GQ abcd = a * b * c * d;
    const GQ ainv = a.inverse();
    GQ prev(0);
    GQ cur(1);
    for (long k = 0; k < n; ++k) {
        const GQ qk = pow(q, k);
        const GQ qk1 = pow(q, k - 1);
        const GQ A = (kOne - abcd * qk1) /
                     require_nonzero((kOne - abcd * pow(q, 2 * k - 1)) * (kOne - abcd * pow(q, 2 * k)), "A_n denominator", k);
        const GQ guard = (kOne - a * b * qk1) * (kOne - a * c * qk1) * (kOne - a * d * qk1);
        const GQ C = (kOne - qk) * guard * (kOne - b * c * qk1) * (kOne - b * d * qk1) * (kOne - c * d * qk1) /
                     require_nonzero((kOne - abcd * pow(q, 2 * k - 2)) * (kOne - abcd * pow(q, 2 * k - 1)), "C_n denominator", k);
        const GQ B = a + ainv - A * ainv * (kOne - a * b * qk) * (kOne - a * c * qk) * (kOne - a * d * qk) -
                     C * a / require_nonzero(guard, "B_n divisor", k);
        GQ next = ((GQ(2) * x - B) * cur - C * prev) / require_nonzero(A, "A_n", k);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

GQ aw_hypergeometric(long n, const AWParams& p) {
    const auto& [a, b, c, d, q, x] = p;
    if (n == 0) return kOne;
    if (a.is_zero()) throw PoleError("Askey-Wilson 4phi3 with a = 0");
    const GQ qn_inv = pow(q, -n);
    const GQ top = a * b * c * d * pow(q, n - 1);
    GQ sum(0);
    GQ head(1);  // (q^-n, abcd q^{n-1}; q)_k (a e^{it}, a e^{-it}; q)_k q^k / (q;q)_k
    GQ qk(1);
    for (long k = 0; k <= n; ++k) {
        sum += head * q_pochhammer({a * b * qk, a * c * qk, a * d * qk}, q, n - k);
        if (k == n) break;
        const GQ pair = kOne - GQ(2) * a * x * qk + a * a * qk * qk;
        head *= (kOne - qn_inv * qk) * (kOne - top * qk) * pair * q;
        const GQ qk1 = qk * q;
        head /= require_nonzero(kOne - qk1, "(q;q)_k", k + 1);
        qk = qk1;
    }
    return sum / pow(a, n);
}

}  // namespace

GQ askey_wilson(long n, const AWParams& p, AWMethod method) {
    if (n < 0) return GQ(0);
    return method == AWMethod::recurrence ? aw_recurrence(n, p) : aw_hypergeometric(n, p);
}

GQ al_salam_chihara(long n, const GQ& x, const GQ& A, const GQ& B, const GQ& q, ASCMethod method) {
    if (n < 0) return GQ(0);
    switch (method) {
        case ASCMethod::recurrence: {
            GQ prev(0);
            GQ cur(1);
            for (long k = 0; k < n; ++k) {
                GQ next = (GQ(2) * x - (A + B) * pow(q, k)) * cur -
                          (kOne - pow(q, k)) * (kOne - A * B * pow(q, k - 1)) * prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
        case ASCMethod::hypergeometric: {
            if (n == 0) return kOne;
            if (A.is_zero()) throw PoleError("Al-Salam-Chihara 3phi2 with A = 0");
            const GQ qn_inv = pow(q, -n);
            GQ sum(0);
            GQ head(1);
            GQ qk(1);
            for (long k = 0; k <= n; ++k) {
                sum += head * q_pochhammer(A * B * qk, q, n - k);
                if (k == n) break;
                head *= (kOne - qn_inv * qk) * (kOne - GQ(2) * A * x * qk + A * A * qk * qk) * q;
                qk *= q;
                head /= require_nonzero(kOne - qk, "(q;q)_k", k + 1);
            }
            return sum / pow(A, n);
        }
        case ASCMethod::aw_special:
            return askey_wilson(n, AWParams{A, B, GQ(0), GQ(0), q, x}, AWMethod::hypergeometric);
    }
    return GQ(0);
}

GQ continuous_hahn(long n, const GQ& t, const GQ& a, const GQ& b, const GQ& c, const GQ& d) {
    const GQ pre = pow(kI, n) * rising_factorial(a + c, n) * rising_factorial(a + d, n) / factorial(n);
    return pre * f_hyper({GQ(-n), GQ(n) + a + b + c + d - kOne, a + t}, {a + c, a + d}, kOne);
}

GQ wilson(long n, const GQ& t, const GQ& alpha, const GQ& beta, const GQ& gamma, const GQ& delta) {
    const GQ pre = rising_factorial(alpha + beta, n) * rising_factorial(alpha + gamma, n) *
                   rising_factorial(alpha + delta, n);
    return pre * f_hyper({GQ(-n), alpha + beta + gamma + delta + GQ(n - 1), alpha + t, alpha - t},
                         {alpha + beta, alpha + gamma, alpha + delta}, kOne);
}

GQ mehta_wang_D(long n, const GQ& a, const GQ& b, MWMethod method) {
    if (n < 0) return GQ(0);
    if (method == MWMethod::recurrence) {
        GQ prev(0);
        GQ cur(1);
        for (long k = 0; k < n; ++k) {
            GQ next = a * cur + GQ(k) * (b + GQ(k - 1)) * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    const GQ half = GQ::fraction(1, 2);
    const GQ lo = (b - a) * half;
    const GQ hi = (a + b) * half;
    GQ sum(0);
    mpz_class binom(1);
    for (long k = 0; k <= n; ++k) {
        GQ term = GQ(binom) * rising_factorial(lo, k) * rising_factorial(hi, n - k);
        sum += (k % 2 == 0) ? term : -term;
        binom = binom * (n - k) / (k + 1);
    }
    return sum;
}

GQ nishizawa_D(long n, const GQ& s, const GQ& t, const GQ& q, NishizawaMethod method) {
    if (n < 0) return GQ(0);
    if (s.is_zero() || t.is_zero() || q.is_zero()) throw PoleError("Nishizawa D with zero s, t or q");
    if (q.is_one()) throw DomainError("Nishizawa D at q = 1");
    const GQ s2 = s * s;
    const GQ t2 = t * t;
    const GQ one_minus_q = kOne - q;
    switch (method) {
        case NishizawaMethod::recurrence: {
            const GQ qa_number = (kOne - s2) / one_minus_q;  // [a]_q
            const GQ inv_s2t2 = (s2 * t2).inverse();
            GQ prev(0);
            GQ cur(1);
            for (long k = 0; k < n; ++k) {
                const GQ b_shift = (kOne - t2 * pow(q, k - 1)) / one_minus_q;  // [b+k-1]_q
                GQ next = pow(q, k) / s2 * qa_number * cur + inv_s2t2 * q_number(k, q) * b_shift * prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
            return cur;
        }
        case NishizawaMethod::explicit_sum: {
            const GQ qn_inv = pow(q, -n);
            GQ sum(0);
            GQ term(1);
            GQ qk(1);
            for (long k = 0; k <= n; ++k) {
                sum += term;
                if (k == n) break;
                const GQ den = (kOne - qk * q) * (kOne - t2 * qk);
                if (den.is_zero()) throw PoleError("Nishizawa explicit sum at k=" + std::to_string(k));
                term *= q * (kOne - qn_inv * qk) * (kOne - s2 * t2 * qk * qk) / den;
                qk *= q;
            }
            return q_pochhammer(t2, q, n) / (pow(s2 * t2, n) * pow(q - kOne, n)) * sum;
        }
        case NishizawaMethod::al_salam_chihara: {
            const GQ st = s * t;
            const GQ Q = al_salam_chihara(n, GQ(0), st * kI, -(t / s) * kI, q, ASCMethod::recurrence);
            return pow(-kI, n) * pow(st, -n) * pow(one_minus_q, -n) * Q;
        }
    }
    return GQ(0);
}

GQ andrews_rhs(long n, const GQ& a, const GQ& b, const GQ& q) {
    if (n < 0 || n % 2 != 0) return GQ(0);
    const long m = n / 2;
    const GQ q2 = q * q;
    const GQ a2 = a * a;
    const GQ b2 = b * b;
    const GQ v = q_pochhammer({q, -a2, -b2, a2 * b2 * pow(q, 2 * m)}, q2, m);
    return m % 2 == 0 ? v : -v;
}

}  // namespace qdet
