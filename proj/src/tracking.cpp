#include "planeperiods/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "planeperiods/error.hpp"

namespace planeperiods {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double separation(std::span<const cplx> ys, std::size_t i) {
    double best = kInf;
    for (std::size_t j = 0; j < ys.size(); ++j)
        if (j != i) best = std::min(best, std::abs(ys[i] - ys[j]));
    return best;
}

double nearest(std::span<const cplx> points, cplx x) {
    double best = kInf;
    for (const cplx& p : points) best = std::min(best, std::abs(p - x));
    return best;
}

// Newton on one fiber point; false if the residual tolerance is not reached.
bool newton(const NumericCurve& curve, cplx x, cplx& y, const TrackOptions& options) {
    for (int it = 0; it < options.max_newton; ++it) {
        const auto v = curve.evaluate(x, y);
        if (v.fy == cplx{}) return false;
        const cplx dy = v.f / v.fy;
        y -= dy;
        if (std::abs(dy) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(y))) break;
    }
    const auto v = curve.evaluate(x, y);
    return std::isfinite(std::abs(y)) && std::abs(v.f) <= options.residual_tol * v.scale;
}

}  // namespace

std::vector<cplx> correct_fiber(const NumericCurve& curve, cplx x, std::vector<cplx> ys, const TrackOptions& options) {
    for (auto& y : ys)
        if (!newton(curve, x, y, options)) {
            std::ostringstream os;
            os << "fiber point " << y << " over x = " << x << " does not meet the residual tolerance";
            throw NumericalError("tracking", os.str());
        }
    return ys;
}

std::vector<cplx> track_piece(const NumericCurve& curve, const Piece& piece, double t0, double t1,
                              std::vector<cplx> fiber, const TrackOptions& options, std::span<const cplx> avoid) {
    const std::size_t n = fiber.size();
    const double direction = t1 >= t0 ? 1.0 : -1.0;
    double t = t0;
    double h = options.max_step;
    std::vector<cplx> predicted(n), corrected(n);
    while (direction * (t1 - t) > 0) {
        const cplx x = point(piece, t);
        const cplx dxdt = tangent(piece, t);
        h = std::min(h, std::abs(t1 - t));
        if (!avoid.empty() && std::abs(dxdt) > 0) h = std::min(h, 0.5 * nearest(avoid, x) / std::abs(dxdt));
        bool accepted = false;
        while (!accepted) {
            if (h < options.min_step * std::max(1.0, std::abs(t1 - t0)) && std::abs(t1 - t) > h) {
                std::ostringstream os;
                os << "step size underflow near x = " << x;
                throw NumericalError("tracking", os.str());
            }
            const double tn = std::abs(t1 - t) <= h ? t1 : t + direction * h;
            const cplx xn = point(piece, tn);
            const cplx dx = xn - x;
            for (std::size_t i = 0; i < n; ++i) {
                const auto v = curve.evaluate(x, fiber[i]);
                predicted[i] = v.fy == cplx{} ? fiber[i] : fiber[i] - v.fx / v.fy * dx;
            }
            accepted = true;
            for (std::size_t i = 0; i < n && accepted; ++i) {
                corrected[i] = predicted[i];
                if (!newton(curve, xn, corrected[i], options) ||
                    !(std::abs(corrected[i] - predicted[i]) < 0.25 * separation(predicted, i)))
                    accepted = false;
            }
            if (accepted) {
                t = tn;
                fiber.swap(corrected);
                h = std::min(2 * h, options.max_step);
            } else {
                h *= 0.5;
            }
        }
    }
    return fiber;
}

std::vector<cplx> track_fiber(const NumericCurve& curve, const Path& path, std::vector<cplx> start_fiber,
                              const TrackOptions& options, std::span<const cplx> avoid) {
    if (start_fiber.size() != static_cast<std::size_t>(curve.sheets()))
        throw InvalidArgument("tracking", "start fiber has the wrong number of points");
    if (path.empty()) return start_fiber;
    if (options.clearance > 0 && !avoid.empty()) {
        const double c = path.clearance(avoid);
        if (c < options.clearance) {
            std::ostringstream os;
            os << "path passes within " << c << " of a branch point (clearance " << options.clearance << ")";
            throw NumericalError("tracking", os.str());
        }
    }
    for (const cplx& y : start_fiber) {
        const auto v = curve.evaluate(path.start(), y);
        if (!(std::abs(v.f) <= options.residual_tol * v.scale))
            throw InvalidArgument("tracking", "start fiber does not lie on the curve");
    }
    for (const auto& piece : path.pieces()) start_fiber = track_piece(curve, piece, 0, 1, std::move(start_fiber), options, avoid);
    return start_fiber;
}

std::vector<int> match_fibers(std::span<const cplx> base, std::span<const cplx> end) {
    const std::size_t n = base.size();
    if (end.size() != n) throw InvalidArgument("tracking", "fibers differ in size");
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        double dist = kInf;
        for (std::size_t j = 0; j < n; ++j) {
            const double dj = std::abs(end[i] - base[j]);
            if (dj < dist) {
                dist = dj;
                best = j;
            }
        }
        if (used[best] || !(dist < 0.25 * separation(base, best)))
            throw NumericalError("tracking", "tracked fiber does not return to the base fiber unambiguously");
        used[best] = true;
        perm[i] = static_cast<int>(best);
    }
    return perm;
}

}  // namespace planeperiods
