#pragma once

// Evaluators behind the registry, plus small helpers they share.

#include "qdet/builders.hpp"
#include "qdet/exact_matrix.hpp"
#include "qdet/identitylab.hpp"
#include "qdet/orthopoly.hpp"
#include "qdet/qseries.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qdet::checks {

inline const GQ kOne(1);

inline GQ sign(long e) { return GQ((e % 2 == 0) ? 1 : -1); }

inline GQ prod(long lo, long hi, const std::function<GQ(long)>& f) {
    GQ out(1);
    for (long k = lo; k <= hi; ++k) out *= f(k);
    return out;
}

inline GQ det(const ExactMatrix& m) { return determinant(m); }

// p_n(x; a,b,c,d | q) with p_{-1} = 0, via the 4phi3 form.
inline GQ aw(long n, const GQ& x, const GQ& a, const GQ& b, const GQ& c, const GQ& d, const GQ& q) {
    return askey_wilson(n, AWParams{a, b, c, d, q, x}, AWMethod::hypergeometric);
}

// Terminating phi with base q and argument z; zero for negative length so
// relations can reference p_{-1}.
inline GQ phi_n(long n, std::vector<GQ> nums, std::vector<GQ> dens, const GQ& q, const GQ& z) {
    if (n < 0) return GQ(0);
    return phi(SeriesSpec{std::move(nums), std::move(dens), q, z});
}

// Main determinant family.
std::vector<Equality> hankel(long n, const ParamPoint& p);
std::vector<Equality> pfaffian_moments(long n, const ParamPoint& p);
std::vector<Equality> mehta_wang(long n, const ParamPoint& p);
std::vector<Equality> nishizawa(long n, const ParamPoint& p);
std::vector<Equality> thm_main_phi(long n, const ParamPoint& p);
std::vector<Equality> thm_main_aw(long n, const ParamPoint& p);
std::vector<Equality> cor_even_phi(long m, const ParamPoint& p);
std::vector<Equality> cor_even_aw(long m, const ParamPoint& p);
std::vector<Equality> cor_odd_phi(long m, const ParamPoint& p);
std::vector<Equality> cor_odd_aw(long m, const ParamPoint& p);
std::vector<Equality> c1_pfaffian_square(long m, const ParamPoint& p);
std::vector<Equality> classical_hahn(long n, const ParamPoint& p);
std::vector<Equality> classical_wilson_even(long m, const ParamPoint& p);
std::vector<Equality> classical_wilson_odd(long m, const ParamPoint& p);

// Row-selected determinants and the lemmas behind them.
std::vector<Equality> thm_rows(long n, const ParamPoint& p);
std::vector<Equality> q_kratt(long n, const ParamPoint& p);
std::vector<Equality> r_closed(long n, const ParamPoint& p);
std::vector<Equality> r_recurrence(long n, const ParamPoint& p);
std::vector<Equality> r_sum(long n, const ParamPoint& p);
std::vector<Equality> residue_ids(long n, const ParamPoint& p);
std::vector<Equality> vandermonde_vw(long n, const ParamPoint& p);
std::vector<Equality> bottom_rows(long n, const ParamPoint& p);
std::vector<Equality> triangular_inverses(long n, const ParamPoint& p);
std::vector<Equality> pq_lemma(long n, const ParamPoint& p);
std::vector<Equality> m_recurrence(long n, const ParamPoint& p);
std::vector<Equality> m_closed(long n, const ParamPoint& p);

// Basic hypergeometric relations and Askey-Wilson specializations.
std::vector<Equality> phi_contiguous_1(long order, const ParamPoint& p);
std::vector<Equality> phi_contiguous_2(long order, const ParamPoint& p);
std::vector<Equality> phi_contiguous_3(long n, const ParamPoint& p);
std::vector<Equality> watson(long n, const ParamPoint& p);
std::vector<Equality> w8_contiguous(long n, const ParamPoint& p);
std::vector<Equality> even_odd_factorization(long m, const ParamPoint& p);
std::vector<Equality> andrews(long n, const ParamPoint& p);

// Condensation and quadratic relations.
std::vector<Equality> dj_generic(long n, const ParamPoint& p);
std::vector<Equality> dj_specialized(long n, const ParamPoint& p);
std::vector<Equality> quadratic_full(long n, const ParamPoint& p);
std::vector<Equality> quadratic_clean(long n, const ParamPoint& p);
std::vector<Equality> quadratic_phi(long n, const ParamPoint& p);
std::vector<Equality> conjecture_mw3(long n, const ParamPoint& p);

}  // namespace qdet::checks
