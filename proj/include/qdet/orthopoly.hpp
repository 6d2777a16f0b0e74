#pragma once

#include "qdet/gaussian_rational.hpp"

namespace qdet {

/// Askey-Wilson parameters. x stands for cos(theta); theta itself never appears.
struct AWParams {
    GQ a, b, c, d;
    GQ q;
    GQ x;
};

enum class AWMethod { recurrence, hypergeometric };
enum class ASCMethod { recurrence, hypergeometric, aw_special };
enum class MWMethod { recurrence, sum };
enum class NishizawaMethod { recurrence, explicit_sum, al_salam_chihara };

/// p_n(x; a,b,c,d | q) for n >= -1.
///
/// recurrence: three-term recurrence from p_{-1} = 0, p_0 = 1 with A_n, B_n,
/// C_n evaluated as written (B_n keeps its division terms; a zero divisor
/// raises PoleError naming n).
///
/// hypergeometric: the 4phi3 form. The conjugate pair
/// (a e^{i theta}, a e^{-i theta}; q)_k is the product of
/// (1 - 2 a x q^j + a^2 q^{2j}), and the prefactor (ab,ac,ad;q)_n is folded
/// into each term as (abq^k,acq^k,adq^k;q)_{n-k}, so only a and (q;q)_k can
/// produce a pole.
GQ askey_wilson(long n, const AWParams& p, AWMethod method = AWMethod::hypergeometric);

/// Al-Salam-Chihara Q_n(x; A, B | q).
GQ al_salam_chihara(long n, const GQ& x, const GQ& A, const GQ& B, const GQ& q,
                    ASCMethod method = ASCMethod::recurrence);

/// Continuous Hahn polynomial at argument t = i*x (supplied directly):
/// i^n (a+c)_n (a+d)_n / n! * 3F2(-n, n+a+b+c+d-1, a+t; a+c, a+d; 1).
GQ continuous_hahn(long n, const GQ& t, const GQ& a, const GQ& b, const GQ& c, const GQ& d);

/// Wilson polynomial W_n(x^2; ...) with t = i*x; t enters only through
/// (alpha+t)_k (alpha-t)_k so the sign of t is irrelevant.
GQ wilson(long n, const GQ& t, const GQ& alpha, const GQ& beta, const GQ& gamma, const GQ& delta);

/// D_n of the classical determinant: D_{-1}=0, D_0=1,
/// D_{n+1} = a D_n + n(b+n-1) D_{n-1}, or the binomial sum
/// sum_k (-1)^k C(n,k) ((b-a)/2)_k ((a+b)/2)_{n-k}.
GQ mehta_wang_D(long n, const GQ& a, const GQ& b, MWMethod method = MWMethod::recurrence);

/// D_{n,q} with half-integer powers carried by s = q^{a/2}, t = q^{b/2}.
GQ nishizawa_D(long n, const GQ& s, const GQ& t, const GQ& q,
               NishizawaMethod method = NishizawaMethod::recurrence);

/// (-1)^m (q, -a^2, -b^2, a^2 b^2 q^{2m}; q^2)_m for n = 2m, 0 for odd n.
GQ andrews_rhs(long n, const GQ& a, const GQ& b, const GQ& q);

}  // namespace qdet
