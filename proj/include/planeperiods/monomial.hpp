#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace planeperiods {

/// x^xdeg * y^ydeg.
struct Monomial {
    int xdeg = 0;
    int ydeg = 0;

    [[nodiscard]] constexpr int degree() const noexcept { return xdeg + ydeg; }

    friend constexpr Monomial operator*(Monomial a, Monomial b) noexcept {
        return {a.xdeg + b.xdeg, a.ydeg + b.ydeg};
    }
    friend constexpr bool operator==(Monomial, Monomial) noexcept = default;

    /// Graded order: total degree first, then x-power descending, so that
    /// 1 < x < y < x^2 < xy < y^2 < x^3 < ...
    friend constexpr std::strong_ordering operator<=>(Monomial a, Monomial b) noexcept {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return b.xdeg <=> a.xdeg;
    }

    [[nodiscard]] Monomial swapped() const noexcept { return {ydeg, xdeg}; }
};

/// Renders "1", "x", "y^3", "x^2*y^3".
std::string to_string(Monomial m);

/// Parses the grammar produced by `to_string`. Factors may appear in either
/// order and repeat ("y*x*x" is x^2*y). Throws FormatError.
Monomial parse_monomial(std::string_view text);

/// Comma separated list of monomials, e.g. "1,x^4,y^4,x^2*y^2".
std::vector<Monomial> parse_monomial_list(std::string_view text);

/// All monomials of total degree <= max_degree in graded order.
std::vector<Monomial> monomials_up_to(int max_degree);

/// Number of monomials of total degree <= max_degree.
constexpr long long count_monomials_up_to(long long max_degree) noexcept {
    return max_degree < 0 ? 0 : (max_degree + 1) * (max_degree + 2) / 2;
}

/// (d-1)(d-2)/2. Throws InvalidArgument for d < 3.
int genus(int d);

/// Ordered monomials of degree <= d-3: the proxy basis m_j of the holomorphic
/// differentials m_j dx / f_y on a smooth plane curve of degree d.
class AdjointBasis {
public:
    /// Throws InvalidArgument for d < 4.
    explicit AdjointBasis(int d);

    [[nodiscard]] int degree() const noexcept { return d_; }
    [[nodiscard]] std::size_t size() const noexcept { return monomials_.size(); }
    [[nodiscard]] const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    [[nodiscard]] Monomial operator[](std::size_t i) const { return monomials_[i]; }

    /// Zero-based position, or nullopt when m has degree > d-3.
    [[nodiscard]] std::optional<std::size_t> index_of(Monomial m) const noexcept;

    [[nodiscard]] auto begin() const noexcept { return monomials_.begin(); }
    [[nodiscard]] auto end() const noexcept { return monomials_.end(); }

private:
    friend AdjointBasis adjoint_monomials(int d);
    AdjointBasis(int d, std::vector<Monomial> monomials) : d_(d), monomials_(std::move(monomials)) {}

    int d_;
    std::vector<Monomial> monomials_;
};

AdjointBasis adjoint_basis(int d);

/// Same as adjoint_basis but also admits d = 3 (the single constant adjoint
/// of a plane cubic). Used by the numeric engine on genus-one test curves.
AdjointBasis adjoint_monomials(int d);

std::optional<std::size_t> monomial_index(Monomial m, const AdjointBasis& basis);

}  // namespace planeperiods
