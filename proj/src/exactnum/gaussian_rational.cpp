#include "qdet/gaussian_rational.hpp"

#include "qdet/errors.hpp"

#include <cctype>
#include <optional>
#include <ostream>

namespace qdet {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den) {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

bool GaussianRational::is_nonpositive_integer() const {
    return sgn(im_) == 0 && re_.get_den() == 1 && sgn(re_) <= 0;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    const mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const mpq_class n = o.norm();
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational pow(const GaussianRational& x, long k) {
    if (k < 0) {
        if (x.is_zero()) throw DivisionByZero("zero raised to a negative power");
        return pow(x.inverse(), -k);
    }
    GaussianRational result(1);
    GaussianRational base = x;
    auto e = static_cast<unsigned long>(k);
    while (e != 0) {
        if (e & 1UL) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

std::string GaussianRational::to_string() const {
    const bool has_re = sgn(re_) != 0;
    const bool has_im = sgn(im_) != 0;
    if (!has_re && !has_im) return "0";
    std::string out;
    if (has_re) out = re_.get_str();
    if (has_im) {
        if (has_re && sgn(im_) > 0) out += '+';
        out += im_.get_str();
        out += 'i';
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    GaussianRational run() {
        if (s_.empty()) throw ParseError("empty input", 0);
        const int sign1 = sign();
        auto first = rational();
        if (at('i')) {
            ++pos_;
            finish();
            return {0, sign1 * first.value_or(1)};
        }
        if (!first) throw ParseError("expected digits", pos_);
        const mpq_class re = sign1 * *first;
        if (pos_ == s_.size()) return GaussianRational(re);
        if (!at('+') && !at('-')) throw ParseError("expected '+', '-' or 'i'", pos_);
        const int sign2 = sign();
        auto second = rational();
        if (!at('i')) throw ParseError("expected 'i'", pos_);
        ++pos_;
        finish();
        return {re, sign2 * second.value_or(1)};
    }

private:
    bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    int sign() {
        if (at('-')) {
            ++pos_;
            return -1;
        }
        if (at('+')) ++pos_;
        return 1;
    }

    std::optional<mpz_class> integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0) ++pos_;
        if (pos_ == start) return std::nullopt;
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    std::optional<mpq_class> rational() {
        auto num = integer();
        if (!num) return std::nullopt;
        if (!at('/')) return mpq_class(*num);
        ++pos_;
        const std::size_t den_pos = pos_;
        auto den = integer();
        if (!den) throw ParseError("expected denominator", pos_);
        if (*den == 0) throw ParseError("zero denominator", den_pos);
        mpq_class q(*num, *den);
        q.canonicalize();
        return q;
    }

    void finish() const {
        if (pos_ != s_.size()) throw ParseError("trailing characters", pos_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) { return Parser(text).run(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

}  // namespace qdet
