#pragma once

#include <complex>
#include <span>
#include <vector>

namespace planeperiods {

using cplx = std::complex<double>;

struct RootOptions {
    /// Relative size of the last Aberth correction at which a root is final.
    double convergence_tol = 1e-13;
    /// Accepted |p(r)| / sum_k |a_k| |r|^k after convergence.
    double residual_tol = 1e-11;
    int max_iterations = 200;
};

/// All complex roots of sum_k coeffs[k] z^k by Aberth-Ehrlich simultaneous
/// iteration. Requires a nonzero leading coefficient and degree >= 1; throws
/// NumericalError (with the worst residual) when the iteration stalls.
std::vector<cplx> roots(std::span<const cplx> coeffs, const RootOptions& options = {});

/// p(z) and p'(z) by Horner.
std::pair<cplx, cplx> horner(std::span<const cplx> coeffs, cplx z) noexcept;

/// sum_k |a_k| |z|^k, the scale for relative residuals.
double horner_scale(std::span<const cplx> coeffs, double abs_z) noexcept;

}  // namespace planeperiods
