#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planeperiods/gaussian_rational.hpp"
#include "planeperiods/modular.hpp"
#include "planeperiods/monomial.hpp"

namespace planeperiods::exact {

/// Univariate polynomial over Q(i), ascending coefficients, no trailing zeros.
using Poly = std::vector<GaussRational>;

void trim(Poly& p);
[[nodiscard]] int degree(const Poly& p);  // -1 for the zero polynomial
Poly derivative(const Poly& p);
GaussRational evaluate(const Poly& p, const GaussRational& x);
/// Monic gcd (zero polynomial if both inputs are zero).
Poly gcd(Poly a, Poly b);
/// Exact quotient a / b; throws if b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);
/// a / gcd(a, a').
Poly squarefree_part(const Poly& a);
std::optional<modular::Poly> reduce(const Poly& p);

/// Sparse bivariate polynomial over Q(i).
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::map<Monomial, GaussRational> terms);

    [[nodiscard]] const std::map<Monomial, GaussRational>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] int total_degree() const;
    [[nodiscard]] int degree_in_y() const;
    [[nodiscard]] GaussRational coefficient(Monomial m) const;

    /// Coefficient of y^k as a polynomial in x.
    [[nodiscard]] Poly y_coefficient(int k) const;
    /// f(x0, y) as a polynomial in y.
    [[nodiscard]] Poly at_x(const GaussRational& x0) const;
    [[nodiscard]] GaussRational evaluate(const GaussRational& x, const GaussRational& y) const;

    [[nodiscard]] BiPoly dx() const;
    [[nodiscard]] BiPoly dy() const;
    /// Homogeneous part of the given total degree.
    [[nodiscard]] BiPoly homogeneous_part(int deg) const;
    [[nodiscard]] BiPoly times(Monomial m) const;
    /// f(x + t*y, y).
    [[nodiscard]] BiPoly sheared(const GaussRational& t) const;

    void add_term(Monomial m, const GaussRational& c);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    std::map<Monomial, GaussRational> terms_;
};

std::string to_string(const BiPoly& p);

/// Determinant by Gaussian elimination over Q(i); the matrix is consumed.
GaussRational determinant(std::vector<std::vector<GaussRational>> m);

/// Resultant of two univariate polynomials with formal degrees m and n via
/// the Sylvester matrix (coefficient vectors may be shorter than m+1, n+1).
GaussRational sylvester_resultant(const Poly& a, int m, const Poly& b, int n);

/// Res_y(f, g) as a polynomial in x, by evaluation at degree_bound+1 integer
/// points and Newton interpolation.
Poly resultant_y(const BiPoly& f, const BiPoly& g, int degree_bound);

/// Greedy row selection over Q(i): indices of rows independent of all rows
/// accepted before them.
std::vector<std::size_t> independent_rows(const std::vector<std::vector<GaussRational>>& rows);

}  // namespace planeperiods::exact
