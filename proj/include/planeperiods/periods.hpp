#pragma once

#include <Eigen/Dense>

#include <vector>

#include "planeperiods/homology.hpp"
#include "planeperiods/monomial.hpp"
#include "planeperiods/monodromy.hpp"

namespace planeperiods {

using ComplexMatrix = Eigen::MatrixXcd;

struct PeriodOptions {
    /// Per-segment tolerance of the adaptive Gauss-Legendre rule.
    double quad_tol = 1e-10;
    int max_depth = 30;
    /// |f_y| / scale below this aborts the integration.
    double fy_floor = 1e-13;
    MonodromyOptions monodromy;
    SmoothnessOptions smoothness;
};

/// Result of integrating all differentials along a path for every sheet.
struct PathIntegral {
    /// values[s][j]: integral of basis[j] on the lift starting on sheet s.
    std::vector<std::vector<cplx>> values;
    std::vector<cplx> end_fiber;
    /// Sum of |whole - halves| over accepted segments (max over entries).
    double error = 0;
};

/// Integrates m_j(x, y) dx / f_y along the path, continuing all fiber points
/// of `start_fiber` at once.
PathIntegral integrate_path(const NumericCurve& curve, const std::vector<Monomial>& basis, const Path& path,
                            std::vector<cplx> start_fiber, const PeriodOptions& options,
                            std::span<const cplx> avoid = {});

/// Integrals along each ray and around each small circle, per sheet.
struct ElementaryIntegrals {
    std::vector<PathIntegral> rays;
    std::vector<PathIntegral> circles;
};

ElementaryIntegrals elementary_integrals(const NumericCurve& curve, const MonodromyRep& mono,
                                         const std::vector<Monomial>& basis, const PeriodOptions& options);

/// Integral of every basis differential over the cycle, assembled from the
/// elementary integrals.
std::vector<cplx> integrate_cycle(const MonodromyRep& mono, const ElementaryIntegrals& integrals,
                                  const CycleWord& cycle);
/// Quadrature error bound for integrate_cycle.
double cycle_error(const MonodromyRep& mono, const ElementaryIntegrals& integrals, const CycleWord& cycle);

struct RiemannReport {
    bool pass = false;
    /// max |Omega - Omega^T|, absolute and relative to max |Omega_ij|.
    double sym_residual = 0;
    double sym_residual_relative = 0;
    /// Smallest eigenvalue of (Im Omega + Im Omega^T) / 2.
    double min_im_eigenvalue = 0;
    bool positive_definite = false;
};

/// Pass iff the relative symmetry residual is at most tol and the
/// symmetrized imaginary part admits a Cholesky factorization.
RiemannReport riemann_validate(const ComplexMatrix& omega, double tol);

/// Omega = B A^{-1}: with rows indexing cycles and columns differentials,
/// the differentials w^_k = sum_j w_j (A^{-1})_jk satisfy int_{alpha_i} w^_k
/// = delta_ik and Omega_ik = int_{beta_i} w^_k. Throws NumericalError when
/// A is numerically singular.
ComplexMatrix normalize(const ComplexMatrix& A, const ComplexMatrix& B);

/// sigma_max / sigma_min.
double condition_number(const ComplexMatrix& A);

struct PeriodMatrix {
    int d = 0;
    int genus = 0;
    std::vector<Monomial> basis;
    /// Shear t used for the working coordinates (0 when none was needed).
    mpq_class shear = 0;
    ComplexMatrix A, B, Omega;
    RiemannReport riemann;
    double A_condition_estimate = 0;
    /// Largest quadrature error bound over the alpha and beta cycles.
    double quadrature_error = 0;
};

/// Periods of an arbitrary curve f(x, y) = 0 whose projection to x has a
/// constant leading y-coefficient and simple branch points, for the given
/// holomorphic differentials.
PeriodMatrix compute_periods(const exact::BiPoly& f, const std::vector<Monomial>& basis,
                             const PeriodOptions& options = {});

/// Full pipeline for a smooth plane curve: generic coordinates, monodromy,
/// symplectic homology, adjoint differentials, normalization, validation.
PeriodMatrix period_matrix(const PlaneCurve& curve, const PeriodOptions& options = {});

}  // namespace planeperiods
