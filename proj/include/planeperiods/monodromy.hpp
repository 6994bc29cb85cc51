#pragma once

#include <string>
#include <vector>

#include "planeperiods/exact_poly.hpp"
#include "planeperiods/numeric_curve.hpp"
#include "planeperiods/path.hpp"
#include "planeperiods/plane_curve.hpp"
#include "planeperiods/tracking.hpp"

namespace planeperiods {

/// p[i] = j: sheet i is carried to sheet j. Sheets are 0-based internally.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
/// (a * b)(i) = a(b(i)): apply b first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
std::vector<std::vector<int>> cycles(const Permutation& p);
/// Cycle notation on 1-based sheets, fixed points included: "(1 2)(3)".
std::string cycle_notation(const Permutation& p);

struct BranchPointSet {
    /// Roots of Res_y(f, f_y), sorted by arg(point - basepoint) in [0, 2pi);
    /// points collinear with the basepoint are ordered by distance.
    std::vector<cplx> points;
    int discriminant_degree = 0;
    cplx basepoint;
    /// Smallest pairwise distance (infinite for fewer than two points).
    double min_separation = 0;
};

/// Points whose distance to a ray from the basepoint is below this count as
/// lying on it.
double collinear_tolerance(const BranchPointSet& branch);

/// Numeric roots of the exact discriminant. Throws NeedsShear when two roots
/// are closer than `separation_tol` relative to the point cloud's size.
BranchPointSet branch_points(const exact::Poly& discriminant, double separation_tol = 1e-8);
/// For a curve in generic position (check_projection passes); throws
/// NeedsShear otherwise.
BranchPointSet branch_points(const PlaneCurve& curve);
/// Res_y(f, f_y) for an arbitrary polynomial that involves y.
exact::Poly discriminant(const exact::BiPoly& f);

/// One loop per branch point: out along `rays[k]` from the basepoint to a
/// point on the circle of radius `radii[k]`, once counterclockwise around
/// `circles[k]`, and back. Rays follow the straight segment except near
/// other branch points, where they take the minor arc of a circle of 3/4 of
/// that point's loop radius (the arc on the left of the direction of travel
/// when the ray meets the center).
struct LoopSystem {
    cplx basepoint;
    std::vector<double> radii;
    std::vector<Path> rays;
    std::vector<Path> circles;
    /// |x| = |basepoint|, counterclockwise from the basepoint.
    Path big_circle;

    [[nodiscard]] Path loop(std::size_t k) const { return rays[k] + circles[k] + rays[k].reversed(); }
};

LoopSystem loop_system(const BranchPointSet& branch);

struct MonodromyOptions {
    TrackOptions track;
    RootOptions roots;
    /// Path clearance as a fraction of the smallest branch-point separation.
    double clearance_factor = 0.2;
    int threads = 1;
};

struct MonodromyRep {
    BranchPointSet branch_points;
    LoopSystem loops;
    /// Fiber over the basepoint, sorted by (real, imag); sheet i is base_fiber[i].
    std::vector<cplx> base_fiber;
    /// Fiber over each ray's end point, labelled by sheet.
    std::vector<std::vector<cplx>> entry_fibers;
    std::vector<Permutation> perms;
    /// Monodromy along the big circle.
    Permutation at_infinity;

    [[nodiscard]] int sheets() const noexcept { return static_cast<int>(base_fiber.size()); }
    /// Sum over branch points and infinity of (sheets - number of cycles).
    [[nodiscard]] int total_branching() const;
    /// Riemann-Hurwitz: 2 - 2g = 2n - B.
    [[nodiscard]] int genus() const;
    [[nodiscard]] bool transitive() const;
    /// perms[K-1] * ... * perms[0] == at_infinity.
    [[nodiscard]] bool product_relation_holds() const;
};

/// Tracks the base fiber around every loop and the big circle. Throws
/// NumericalError (naming the loop) on tracking failure and when the product
/// relation fails.
MonodromyRep monodromy(const NumericCurve& curve, const BranchPointSet& branch, const MonodromyOptions& options = {});
/// For a curve in generic position.
MonodromyRep monodromy(const PlaneCurve& curve, const MonodromyOptions& options = {});

}  // namespace planeperiods
