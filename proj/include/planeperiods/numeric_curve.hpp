#pragma once

#include <vector>

#include "planeperiods/exact_poly.hpp"
#include "planeperiods/roots.hpp"

namespace planeperiods {

/// Double-precision view of f(x, y) organised as a polynomial in y whose
/// coefficients are polynomials in x. The leading y-coefficient must be a
/// nonzero constant, so every fiber has exactly sheets() finite points.
class NumericCurve {
public:
    /// Throws NeedsShear when the leading y-coefficient depends on x or the
    /// polynomial does not involve y.
    explicit NumericCurve(const exact::BiPoly& f);

    [[nodiscard]] int sheets() const noexcept { return ny_; }
    [[nodiscard]] int total_degree() const noexcept { return total_degree_; }

    struct Values {
        cplx f, fx, fy;
        double scale;  ///< sum |c_ab| |x|^a |y|^b, for relative residuals
    };

    /// Coefficients of f(x, .) in y (ascending).
    [[nodiscard]] std::vector<cplx> fiber_polynomial(cplx x) const;
    [[nodiscard]] Values evaluate(cplx x, cplx y) const;
    /// Roots of f(x, .) sorted by (real, imag).
    [[nodiscard]] std::vector<cplx> fiber(cplx x, const RootOptions& options = {}) const;

private:
    int ny_ = 0;
    int total_degree_ = 0;
    // coeffs_[b][a]: coefficient of x^a y^b
    std::vector<std::vector<cplx>> coeffs_;
};

}  // namespace planeperiods
