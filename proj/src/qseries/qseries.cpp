#include "qdet/qseries.hpp"

#include "qdet/errors.hpp"

#include <algorithm>
#include <string>

namespace qdet {

namespace {

constexpr long kMaxTerminationSearch = 4096;

// Smallest n >= 0 with x * base^n == 1, found by walking |x base^n|^2 towards 1.
std::optional<long> inverse_power_index(const GQ& x, const GQ& base) {
    if (x.is_zero()) return std::nullopt;
    const mpq_class base_norm = base.norm();
    const int direction = cmp(base_norm, 1);
    GQ y = x;
    for (long n = 0; n <= kMaxTerminationSearch; ++n) {
        if (y.is_one()) return n;
        const int side = cmp(y.norm(), 1);
        // Once the norm has moved past 1 in the direction base pushes it, no
        // later power can return to 1.
        if (direction > 0 && side > 0) return std::nullopt;
        if (direction < 0 && side < 0) return std::nullopt;
        y *= base;
    }
    return std::nullopt;
}

}  // namespace

GQ q_pochhammer(const GQ& a, const GQ& q, long n) {
    GQ result(1);
    if (n >= 0) {
        GQ qk(1);
        for (long k = 0; k < n; ++k) {
            result *= GQ(1) - a * qk;
            qk *= q;
        }
        return result;
    }
    const GQ qinv = q.inverse();
    GQ qk = qinv;
    for (long k = 1; k <= -n; ++k) {
        const GQ factor = GQ(1) - a * qk;
        if (factor.is_zero()) throw PoleError("(a;q)_" + std::to_string(n) + " reciprocal factor k=" + std::to_string(k));
        result /= factor;
        qk *= qinv;
    }
    return result;
}

GQ q_pochhammer(std::span<const GQ> as, const GQ& q, long n) {
    GQ result(1);
    for (const auto& a : as) result *= q_pochhammer(a, q, n);
    return result;
}

GQ q_number(long n, const GQ& q) {
    if (q.is_one()) throw DomainError("q-number at q = 1");
    return (GQ(1) - pow(q, n)) / (GQ(1) - q);
}

GQ q_factorial(long n, const GQ& q) {
    GQ result(1);
    for (long k = 1; k <= n; ++k) result *= q_number(k, q);
    return result;
}

GQ q_binomial(long n, long k, const GQ& q) {
    if (n < 0) throw DomainError("q-binomial with negative n");
    if (k < 0 || k > n) return GQ(0);
    GQ num(1);
    GQ den(1);
    for (long j = 1; j <= k; ++j) {
        num *= GQ(1) - pow(q, n - k + j);
        den *= GQ(1) - pow(q, j);
    }
    if (den.is_zero()) throw PoleError("q-binomial denominator (q is a root of unity)");
    return num / den;
}

GQ rising_factorial(const GQ& x, long n) {
    GQ result(1);
    if (n >= 0) {
        for (long k = 0; k < n; ++k) result *= x + GQ(k);
        return result;
    }
    for (long k = 1; k <= -n; ++k) {
        const GQ factor = x - GQ(k);
        if (factor.is_zero()) throw PoleError("rising factorial reciprocal factor k=" + std::to_string(k));
        result /= factor;
    }
    return result;
}

GQ factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return GQ(f);
}

std::optional<long> termination_length(const SeriesSpec& spec) {
    std::optional<long> best;
    for (const auto& a : spec.numerators) {
        auto n = inverse_power_index(a, spec.base);
        if (n && (!best || *n < *best)) best = n;
    }
    return best;
}

GQ phi(const SeriesSpec& spec) {
    const auto length = termination_length(spec);
    if (!length) throw DomainError("phi: series does not terminate");
    const long terms = *length;
    const GQ& q = spec.base;

    for (std::size_t j = 0; j < spec.denominators.size(); ++j) {
        GQ v = spec.denominators[j];
        for (long m = 0; m <= terms; ++m) {
            if (v.is_one()) {
                throw PoleError("phi denominator #" + std::to_string(j + 1) + " equals base^-" + std::to_string(m));
            }
            v *= q;
        }
    }

    GQ sum(1);
    GQ term(1);
    GQ qk(1);
    for (long k = 0; k < terms; ++k) {
        GQ num(1);
        for (const auto& a : spec.numerators) num *= GQ(1) - a * qk;
        GQ den(1);
        for (const auto& b : spec.denominators) den *= GQ(1) - b * qk;
        qk *= q;
        den *= GQ(1) - qk;
        if (den.is_zero()) throw PoleError("phi (q;q)_" + std::to_string(k + 1));
        term *= num * spec.argument / den;
        sum += term;
    }
    return sum;
}

GQ phi_coeff(const SeriesSpec& spec, long k) {
    if (k < 0) return GQ(0);
    const GQ& q = spec.base;
    GQ num(1);
    GQ den(1);
    GQ qj(1);
    for (long j = 0; j < k; ++j) {
        for (const auto& a : spec.numerators) num *= GQ(1) - a * qj;
        for (const auto& b : spec.denominators) den *= GQ(1) - b * qj;
        qj *= q;
        den *= GQ(1) - qj;
        if (den.is_zero()) throw PoleError("phi coefficient denominator at j=" + std::to_string(j));
    }
    return num / den;
}

SeriesSpec w_series_spec(const GQ& a1_sqrt, std::span<const GQ> tail, const GQ& q, const GQ& z) {
    const GQ a1 = a1_sqrt * a1_sqrt;
    SeriesSpec spec{{a1, q * a1_sqrt, -q * a1_sqrt}, {a1_sqrt, -a1_sqrt}, q, z};
    for (const auto& t : tail) {
        if (t.is_zero()) throw PoleError("very-well-poised tail parameter is zero");
        spec.numerators.push_back(t);
        spec.denominators.push_back(q * a1 / t);
    }
    return spec;
}

GQ w_series(const GQ& a1_sqrt, std::span<const GQ> tail, const GQ& q, const GQ& z) {
    return phi(w_series_spec(a1_sqrt, tail, q, z));
}

GQ f_hyper(std::span<const GQ> numerators, std::span<const GQ> denominators, const GQ& z) {
    std::optional<long> length;
    for (const auto& a : numerators) {
        if (!a.is_nonpositive_integer()) continue;
        const long m = -a.real().get_num().get_si();
        if (!length || m < *length) length = m;
    }
    if (!length) throw DomainError("hypergeometric series does not terminate");
    for (std::size_t j = 0; j < denominators.size(); ++j) {
        const auto& b = denominators[j];
        if (b.is_nonpositive_integer() && -b.real().get_num().get_si() <= *length) {
            throw PoleError("hypergeometric denominator #" + std::to_string(j + 1) + " = " + b.to_string());
        }
    }
    GQ sum(1);
    GQ term(1);
    for (long k = 0; k < *length; ++k) {
        GQ num(1);
        for (const auto& a : numerators) num *= a + GQ(k);
        GQ den(k + 1);
        for (const auto& b : denominators) den *= b + GQ(k);
        term *= num * z / den;
        sum += term;
    }
    return sum;
}

}  // namespace qdet
