#pragma once

#include "qdet/gaussian_rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qdet {

/// Dense matrix over Q(i). Public indices are 1-based; entry (i, j) lives at
/// storage offset (i-1)*cols + (j-1).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::initializer_list<std::initializer_list<GQ>> rows);

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    GQ& at(std::size_t i, std::size_t j);
    const GQ& at(std::size_t i, std::size_t j) const;

    // Unchecked 0-based access for inner loops.
    GQ& raw(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const GQ& raw(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    ExactMatrix transpose() const;
    bool is_skew_symmetric() const;
    std::string to_string() const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GQ> entries_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

enum class DetMethod { elimination, cofactor };
enum class PfaffianMethod { elimination, expansion };

/// Elimination uses the first nonzero pivot in each column. Cofactor is a
/// first-row expansion, exponential in n. det of the 0x0 matrix is 1.
/// Throws DomainError for a non-square matrix.
GQ determinant(const ExactMatrix& m, DetMethod method = DetMethod::elimination);

/// Pfaffian of an exactly skew-symmetric matrix of even size. Odd size or a
/// non-skew matrix throws DomainError. Pf of the 0x0 matrix is 1.
GQ pfaffian(const ExactMatrix& m, PfaffianMethod method = PfaffianMethod::elimination);

/// Rows and columns selected in the given order (1-based). Out of range
/// indices throw std::out_of_range.
ExactMatrix submatrix(const ExactMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// Contiguous index list [from, to], empty when from > to.
std::vector<std::size_t> index_range(std::size_t from, std::size_t to);

/// [1, n] without `skip`.
std::vector<std::size_t> index_range_without(std::size_t n, std::size_t skip);

}  // namespace qdet
