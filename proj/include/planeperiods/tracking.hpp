#pragma once

#include <span>
#include <vector>

#include "planeperiods/numeric_curve.hpp"
#include "planeperiods/path.hpp"

namespace planeperiods {

struct TrackOptions {
    /// Accepted |f| / scale at every corrected fiber point.
    double residual_tol = 1e-10;
    /// Minimum distance between the path and the avoided points; 0 disables.
    double clearance = 0;
    int max_newton = 8;
    /// Bounds on the step in the piece parameter t in [0, 1].
    double min_step = 1e-9;
    double max_step = 0.125;
};

/// Newton-polishes every y in the fiber over x. Throws NumericalError when a
/// point does not reach the residual tolerance.
std::vector<cplx> correct_fiber(const NumericCurve& curve, cplx x, std::vector<cplx> ys, const TrackOptions& options);

/// Continues the fiber along the piece from parameter t0 to t1 (either
/// direction). Steps are bisected until every corrected root stays within a
/// quarter of its separation from its predicted position; `avoid` (branch
/// points) additionally limits the step to half the distance to the nearest
/// one.
std::vector<cplx> track_piece(const NumericCurve& curve, const Piece& piece, double t0, double t1,
                              std::vector<cplx> fiber, const TrackOptions& options, std::span<const cplx> avoid = {});

/// Continues start_fiber along the whole path; entry i of the result is the
/// continuation of start_fiber[i].
std::vector<cplx> track_fiber(const NumericCurve& curve, const Path& path, std::vector<cplx> start_fiber,
                              const TrackOptions& options = {}, std::span<const cplx> avoid = {});

/// p[i] = j when `end[i]` is the point `base[j]`. Throws NumericalError when
/// the matching is ambiguous.
std::vector<int> match_fibers(std::span<const cplx> base, std::span<const cplx> end);

}  // namespace planeperiods
