#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qdet {

/// Exact element of Q(i): re + im*i with GMP rationals in lowest terms.
///
/// Every constructor and operator leaves both parts canonical (positive
/// denominator, gcd 1), so `==` is structural equality and zero has exactly
/// one representation. Values are immutable from the outside.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(const mpz_class& value) : re_(value) {}  // NOLINT
    GaussianRational(mpq_class re, mpq_class im);
    explicit GaussianRational(const mpq_class& re) : GaussianRational(re, 0) {}

    static GaussianRational fraction(long num, long den);
    static GaussianRational imag_unit() { return {0, 1}; }

    const mpq_class& real() const noexcept { return re_; }
    const mpq_class& imag() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    // True for 0, -1, -2, ... (the poles of the rising factorial).
    bool is_nonpositive_integer() const;

    GaussianRational conj() const { return {re_, -im_}; }
    // |z|^2
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    // Throws DivisionByZero for zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Canonical text form: "0", "-1/3", "2i", "3/4+1/2i", "-1-1i".
    std::string to_string() const;
    /// Accepts `[+-]p[/q]`, `[+-][p[/q]]i`, or a real part followed by a
    /// signed imaginary part. Throws ParseError with the failing offset.
    static GaussianRational parse(std::string_view text);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

using GQ = GaussianRational;

/// Binary exponentiation; negative k inverts first (0^k for k<0 throws).
GaussianRational pow(const GaussianRational& x, long k);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

inline const GaussianRational kI = GaussianRational::imag_unit();

}  // namespace qdet
