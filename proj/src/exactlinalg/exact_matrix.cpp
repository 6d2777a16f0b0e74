#include "qdet/exact_matrix.hpp"

#include "qdet/errors.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qdet {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GQ>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DomainError("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = GQ(1);
    return m;
}

GQ& ExactMatrix::at(std::size_t i, std::size_t j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("matrix index out of range");
    return raw(i - 1, j - 1);
}

const GQ& ExactMatrix::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("matrix index out of range");
    return raw(i - 1, j - 1);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.raw(j, i) = raw(i, j);
    return t;
}

bool ExactMatrix::is_skew_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!raw(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (raw(i, j) != -raw(j, i)) return false;
    }
    return true;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i != 0) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j != 0) os << ',';
            os << raw(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix product shape mismatch");
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const GQ& aik = a.raw(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.raw(i, j) += aik * b.raw(k, j);
        }
    }
    return c;
}

namespace {

GQ det_elimination(ExactMatrix a) {
    const std::size_t n = a.rows();
    GQ result(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a.raw(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return GQ(0);
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a.raw(pivot, j), a.raw(k, j));
            result = -result;
        }
        const GQ p = a.raw(k, k);
        result *= p;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.raw(i, k).is_zero()) continue;
            const GQ factor = a.raw(i, k) / p;
            for (std::size_t j = k + 1; j < n; ++j) a.raw(i, j) -= factor * a.raw(k, j);
        }
    }
    return result;
}

GQ det_cofactor(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return GQ(1);
    if (n == 1) return a.raw(0, 0);
    GQ result(0);
    const auto rest = index_range(2, n);
    for (std::size_t j = 1; j <= n; ++j) {
        const GQ& entry = a.at(1, j);
        if (entry.is_zero()) continue;
        const auto cols = index_range_without(n, j);
        GQ term = entry * det_cofactor(submatrix(a, rest, cols));
        if (j % 2 == 0) result -= term;
        else result += term;
    }
    return result;
}

GQ pf_elimination(ExactMatrix a) {
    const std::size_t n = a.rows();
    GQ result(1);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t pivot = k + 1;
        while (pivot < n && a.raw(k, pivot).is_zero()) ++pivot;
        if (pivot == n) return GQ(0);
        if (pivot != k + 1) {
            // Simultaneous row and column swap keeps the matrix skew.
            for (std::size_t j = 0; j < n; ++j) std::swap(a.raw(pivot, j), a.raw(k + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a.raw(i, pivot), a.raw(i, k + 1));
            result = -result;
        }
        const GQ p = a.raw(k, k + 1);
        result *= p;
        for (std::size_t i = k + 2; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                a.raw(i, j) += (a.raw(k + 1, i) * a.raw(k, j) - a.raw(k, i) * a.raw(k + 1, j)) / p;
                a.raw(j, i) = -a.raw(i, j);
            }
        }
    }
    return result;
}

GQ pf_expansion(const ExactMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return GQ(1);
    GQ result(0);
    for (std::size_t j = 2; j <= n; ++j) {
        const GQ& entry = a.at(1, j);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> keep;
        for (std::size_t l = 2; l <= n; ++l)
            if (l != j) keep.push_back(l);
        GQ term = entry * pf_expansion(submatrix(a, keep, keep));
        if (j % 2 == 0) result += term;
        else result -= term;
    }
    return result;
}

}  // namespace

GQ determinant(const ExactMatrix& m, DetMethod method) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    return method == DetMethod::elimination ? det_elimination(m) : det_cofactor(m);
}

GQ pfaffian(const ExactMatrix& m, PfaffianMethod method) {
    if (!m.is_square() || m.rows() % 2 != 0) throw DomainError("pfaffian needs an even square matrix");
    if (!m.is_skew_symmetric()) throw DomainError("pfaffian of a matrix that is not skew-symmetric");
    return method == PfaffianMethod::elimination ? pf_elimination(m) : pf_expansion(m);
}

ExactMatrix submatrix(const ExactMatrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    ExactMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.raw(i, j) = m.at(rows[i], cols[j]);
    return out;
}

std::vector<std::size_t> index_range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> out;
    if (from > to) return out;
    out.resize(to - from + 1);
    std::iota(out.begin(), out.end(), from);
    return out;
}

std::vector<std::size_t> index_range_without(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= n; ++i)
        if (i != skip) out.push_back(i);
    return out;
}

}  // namespace qdet
