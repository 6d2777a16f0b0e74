#pragma once

#include "qdet/gaussian_rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qdet {

/// (a;q)_n. For n < 0 this is the finite reciprocal prod_{k=1}^{-n} 1/(1 - a q^{-k});
/// a vanishing factor there raises PoleError naming k.
GQ q_pochhammer(const GQ& a, const GQ& q, long n);

/// (a_1,...,a_r;q)_n as the factor-wise product.
GQ q_pochhammer(std::span<const GQ> as, const GQ& q, long n);

/// [n]_q = (1 - q^n)/(1 - q). Throws DomainError for q = 1.
GQ q_number(long n, const GQ& q);

/// [n]_q! = prod_{k=1}^n [k]_q.
GQ q_factorial(long n, const GQ& q);

/// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}); zero outside 0 <= k <= n.
GQ q_binomial(long n, long k, const GQ& q);

/// (x)_n = x (x+1) ... (x+n-1). Negative n gives 1/((x-1)(x-2)...(x+n)),
/// i.e. Gamma(x+n)/Gamma(x); a vanishing factor there raises PoleError.
GQ rising_factorial(const GQ& x, long n);

GQ factorial(long n);

/// Parameters of r+1 phi r [numerators; denominators; base, argument].
struct SeriesSpec {
    std::vector<GQ> numerators;
    std::vector<GQ> denominators;
    GQ base;
    GQ argument;
};

/// Smallest n >= 0 such that some numerator equals base^{-n}, if any.
std::optional<long> termination_length(const SeriesSpec& spec);

/// Terminating basic hypergeometric sum. Throws DomainError when no numerator
/// terminates the series, and PoleError when a denominator equals base^{-m}
/// with 0 <= m <= the termination length (which would zero, or leave
/// indeterminate, a term in range).
GQ phi(const SeriesSpec& spec);

/// Coefficient of z^k in the phi series (the argument is ignored).
GQ phi_coeff(const SeriesSpec& spec, long k);

/// The very-well-poised series r+1 W r (a1; tail; q, z) where a1 = a1_sqrt^2.
SeriesSpec w_series_spec(const GQ& a1_sqrt, std::span<const GQ> tail, const GQ& q, const GQ& z);
GQ w_series(const GQ& a1_sqrt, std::span<const GQ> tail, const GQ& q, const GQ& z);

/// Terminating r+1 F r with rising factorials. The series stops at the first
/// nonpositive-integer numerator; a nonpositive-integer denominator -m with
/// m <= that length raises PoleError.
GQ f_hyper(std::span<const GQ> numerators, std::span<const GQ> denominators, const GQ& z);

inline GQ q_pochhammer(std::initializer_list<GQ> as, const GQ& q, long n) {
    return q_pochhammer(std::span<const GQ>(as.begin(), as.size()), q, n);
}

inline GQ f_hyper(std::initializer_list<GQ> numerators, std::initializer_list<GQ> denominators, const GQ& z) {
    return f_hyper(std::span<const GQ>(numerators.begin(), numerators.size()),
                   std::span<const GQ>(denominators.begin(), denominators.size()), z);
}

}  // namespace qdet
