#pragma once

#include "qdet/exact_matrix.hpp"
#include "qdet/gaussian_rational.hpp"

#include <span>

namespace qdet {

/// Little q-Jacobi moment (aq;q)_m / (abq^2;q)_m. Negative m uses the
/// reciprocal Pochhammer convention.
GQ moment(long m, const GQ& a, const GQ& b, const GQ& q);

/// n x n matrix with entries (q^{i-1} - c q^{j-1}) * moment(i+j+r-2).
/// A pole is reported with the offending (i, j).
ExactMatrix build_theorem_matrix(long n, long r, const GQ& a, const GQ& b, const GQ& c, const GQ& q);

/// Hankel matrix moment(i+j+r-2), 1 <= i, j <= n.
ExactMatrix build_hankel_matrix(long n, long r, const GQ& a, const GQ& b, const GQ& q);

/// Row-selected matrix: entry (i, j) = (q^{k_i-1} - c q^{j-1})
/// (a q^{k_i}; q)_{j-1} (ab q^{k_i+j}; q)_{n-j} with n = |rows|.
ExactMatrix build_M(std::span<const long> rows, const GQ& a, const GQ& b, const GQ& c, const GQ& q);

enum class TriangularKind { X, Y, L, U };

/// The four triangular factors. X and L depend on the row tuple (which must
/// have length n); Y and U ignore it.
ExactMatrix build_triangular(TriangularKind kind, long n, std::span<const long> rows, const GQ& a, const GQ& b,
                             const GQ& q);

/// Closed-form inverses of Y_n and U_n.
ExactMatrix build_triangular_inverse(TriangularKind kind, long n, const GQ& q);

/// R_{n,nu}(k) summed over ordered splits of [n] into nu-element J and the
/// complement. Zero unless 0 <= nu <= n. Uses the first n entries of rows.
GQ compute_R(long n, long nu, std::span<const long> rows, const GQ& a, const GQ& b, const GQ& q);

/// prod_{i<j} (q^{k_i+shift} - q^{k_j+shift}).
GQ q_vandermonde(std::span<const long> rows, const GQ& q, long shift);

/// prod_{i<j} (x_j - x_i).
GQ vandermonde(std::span<const GQ> xs);

}  // namespace qdet
