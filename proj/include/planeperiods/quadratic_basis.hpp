#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "planeperiods/plane_curve.hpp"
#include "planeperiods/product_cover.hpp"

namespace planeperiods {

/// Quadratic differentials of a smooth plane curve of degree d, modelled as
/// polynomials of degree <= 2d-6 (times (dx/f_y)^2) modulo the multiples
/// f*m with deg m <= d-6.
struct QuadSpaceInfo {
    int d = 0;
    std::vector<Monomial> target_monomials;
    std::vector<exact::BiPoly> ideal_slice;
    std::size_t ideal_rank = 0;
    std::size_t dim = 0;
};

/// Exact rank computation; throws Error if the dimension differs from
/// 3*genus(d) - 3 and InvalidArgument if the curve is not smooth.
QuadSpaceInfo quad_dim(const PlaneCurve& curve);

/// (i, j) index pairs into the adjoint basis: basis[i]*basis[j] for the
/// selected pairs form a basis of the quadratic differentials.
struct BasisIndexSet {
    int d = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    /// Whether the greedy selection over F_{p^2}, p = 2^61-1, picked the same
    /// pairs as the exact one (false also when reduction mod p failed).
    bool modular_agrees = false;
};

/// Greedy exact elimination over the products basis[i]*cols[k], scanned
/// column by column (in cols order) and by row index within a column, modulo
/// the ideal slice. Throws Error unless exactly 3g-3 pairs are found.
BasisIndexSet select_basis_pairs(const PlaneCurve& curve, const ColumnSet& cols);

}  // namespace planeperiods
