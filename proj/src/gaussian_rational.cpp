#include "planeperiods/gaussian_rational.hpp"

#include <cctype>
#include <cmath>

#include "planeperiods/error.hpp"

namespace planeperiods {

GaussRational GaussRational::inverse() const {
    const mpq_class n = norm();
    if (sgn(n) == 0) throw InvalidArgument("exact", "division by zero in Q(i)");
    return {re_ / n, -im_ / n};
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

mpq_class parse_rational(std::string_view text) {
    auto fail = [&]() -> mpq_class { throw FormatError("exact", "not an exact rational: '" + std::string(text) + "'"); };
    std::string s(text);
    if (s.empty()) return fail();

    std::size_t dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos) return fail();
        // Exact decimal: digits with a single point, optional sign.
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const std::size_t frac = s.size() - dot - 1;
        std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
        if (digits.size() == start) return fail();
        for (std::size_t i = start; i < digits.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) return fail();
        if (digits[0] == '+') digits.erase(0, 1);
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false, digit_before = false, digit_after = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/' && !seen_slash) {
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            return fail();
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) return fail();
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) return fail();
    if (sgn(q.get_den()) == 0) throw FormatError("exact", "zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const mpq_class& q) { return q.get_str(10); }

std::string to_string(const GaussRational& z) {
    if (sgn(z.im()) == 0) return to_string(z.re());
    if (sgn(z.re()) == 0) return to_string(z.im()) + "*i";
    std::string im = to_string(z.im());
    if (im[0] != '-') im = "+" + im;
    return "(" + to_string(z.re()) + im + "*i)";
}

std::pair<double, long> to_double_2exp(const mpq_class& q) {
    if (sgn(q) == 0) return {0.0, 0};
    long ne = 0, de = 0;
    const double nm = mpz_get_d_2exp(&ne, q.get_num_mpz_t());
    const double dm = mpz_get_d_2exp(&de, q.get_den_mpz_t());
    int e = 0;
    const double m = std::frexp(nm / dm, &e);
    return {m, ne - de + e};
}

}  // namespace planeperiods
