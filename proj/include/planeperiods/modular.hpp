#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planeperiods/gaussian_rational.hpp"

namespace planeperiods::modular {

/// 2^61 - 1. Since p = 3 (mod 4), x^2 + 1 is irreducible over F_p and
/// F_p[i] is the field with p^2 elements; Gaussian rationals reduce into it.
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

class Fp {
public:
    constexpr Fp() = default;
    constexpr explicit Fp(std::uint64_t v) : v_(reduce(v)) {}

    [[nodiscard]] constexpr std::uint64_t value() const noexcept { return v_; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return v_ == 0; }

    friend constexpr Fp operator+(Fp a, Fp b) noexcept { return Fp(a.v_ + b.v_); }
    friend constexpr Fp operator-(Fp a, Fp b) noexcept { return Fp(a.v_ + kPrime - b.v_); }
    friend constexpr Fp operator-(Fp a) noexcept { return Fp(kPrime - a.v_); }
    friend constexpr Fp operator*(Fp a, Fp b) noexcept {
        const unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
        const std::uint64_t lo = static_cast<std::uint64_t>(prod) & kPrime;
        const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
        return Fp(lo + hi);
    }
    friend constexpr bool operator==(Fp, Fp) noexcept = default;

    [[nodiscard]] Fp pow(std::uint64_t e) const noexcept;
    /// Requires a nonzero value.
    [[nodiscard]] Fp inverse() const noexcept { return pow(kPrime - 2); }

private:
    static constexpr std::uint64_t reduce(std::uint64_t v) noexcept {
        v = (v & kPrime) + (v >> 61);
        return v >= kPrime ? v - kPrime : v;
    }
    std::uint64_t v_ = 0;
};

/// a + b*i in F_p[i].
struct Fp2 {
    Fp a, b;

    [[nodiscard]] bool is_zero() const noexcept { return a.is_zero() && b.is_zero(); }
    friend Fp2 operator+(Fp2 x, Fp2 y) noexcept { return {x.a + y.a, x.b + y.b}; }
    friend Fp2 operator-(Fp2 x, Fp2 y) noexcept { return {x.a - y.a, x.b - y.b}; }
    friend Fp2 operator*(Fp2 x, Fp2 y) noexcept { return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a}; }
    friend bool operator==(Fp2, Fp2) noexcept = default;
    [[nodiscard]] Fp2 inverse() const noexcept {
        const Fp inv = (a * a + b * b).inverse();
        return {a * inv, -(b * inv)};
    }
};

/// Reduction of an exact value; nullopt when a denominator vanishes mod p.
std::optional<Fp2> reduce(const GaussRational& z);

using Poly = std::vector<Fp2>;  // ascending coefficients

void trim(Poly& p);
Poly derivative(const Poly& p);
Poly gcd(Poly a, Poly b);

/// Greedy row selection: indices of rows (in order) that are linearly
/// independent of all previously accepted rows.
std::vector<std::size_t> independent_rows(const std::vector<std::vector<Fp2>>& rows);

}  // namespace planeperiods::modular
