#pragma once

#include <complex>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace planeperiods {

/// re + im*i with arbitrary-precision rational parts. Q(i) is a field, so all
/// eliminations in the exact layer run over this type.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {  // NOLINT
        re_.canonicalize();
        im_.canonicalize();
    }

    [[nodiscard]] const mpq_class& re() const noexcept { return re_; }
    [[nodiscard]] const mpq_class& im() const noexcept { return im_; }
    [[nodiscard]] bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    [[nodiscard]] mpq_class norm() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] GaussRational conj() const { return {re_, -im_}; }
    [[nodiscard]] GaussRational inverse() const;
    [[nodiscard]] std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Parses an exact rational such as "-3/2", "7" or "0.25" (finite decimals
/// are converted exactly). Throws FormatError.
mpq_class parse_rational(std::string_view text);

std::string to_string(const mpq_class& q);
std::string to_string(const GaussRational& z);

/// Closest double to an exact rational even when numerator and denominator
/// overflow a double individually; returns {mantissa, exponent} with
/// value = mantissa * 2^exponent.
std::pair<double, long> to_double_2exp(const mpq_class& q);

}  // namespace planeperiods
