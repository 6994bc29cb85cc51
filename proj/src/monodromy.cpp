#include "planeperiods/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "parallel.hpp"
#include "planeperiods/error.hpp"

namespace planeperiods {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2 * std::numbers::pi;
// Rays pass other branch points on a circle inside theirs, so a ray end on
// one loop circle never lies on a neighbouring one.
constexpr double kDetourFactor = 0.75;

// Coefficients as doubles after a common power-of-two rescaling, so huge or
// tiny rationals do not overflow.
std::vector<cplx> scaled_coefficients(const exact::Poly& p) {
    std::vector<std::pair<double, long>> re, im;
    long top = std::numeric_limits<long>::min();
    for (const auto& c : p) {
        re.push_back(to_double_2exp(c.re()));
        im.push_back(to_double_2exp(c.im()));
        if (re.back().first != 0) top = std::max(top, re.back().second);
        if (im.back().first != 0) top = std::max(top, im.back().second);
    }
    std::vector<cplx> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        out.emplace_back(std::ldexp(re[i].first, static_cast<int>(re[i].second - top)),
                         std::ldexp(im[i].first, static_cast<int>(im[i].second - top)));
    return out;
}

double angle_from(cplx p, cplx base) {
    double a = std::arg(p - base);
    if (a < 0) a += kTwoPi;
    return a;
}

}  // namespace

Permutation identity_permutation(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return out;
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (auto j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            c.push_back(static_cast<int>(j));
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string cycle_notation(const Permutation& p) {
    std::string s;
    for (const auto& c : cycles(p)) {
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(c[i] + 1);
        }
        s += ')';
    }
    return s;
}

exact::Poly discriminant(const exact::BiPoly& f) {
    const int n = f.total_degree();
    return exact::resultant_y(f, f.dy(), n * (n - 1));
}

BranchPointSet branch_points(const exact::Poly& disc, double separation_tol) {
    BranchPointSet out;
    out.discriminant_degree = exact::degree(disc);
    if (out.discriminant_degree < 0) throw NeedsShear("branch-points", "discriminant vanishes identically");
    if (out.discriminant_degree > 0) {
        RootOptions opt;
        opt.residual_tol = 1e-9;
        out.points = roots(scaled_coefficients(disc), opt);
    }
    double radius = 0.5;
    for (const cplx& p : out.points) radius = std::max(radius, std::abs(p));
    out.basepoint = cplx(2 * radius, 0);

    out.min_separation = kInf;
    for (std::size_t i = 0; i < out.points.size(); ++i)
        for (std::size_t j = i + 1; j < out.points.size(); ++j)
            out.min_separation = std::min(out.min_separation, std::abs(out.points[i] - out.points[j]));
    if (out.min_separation < separation_tol * radius) {
        std::ostringstream os;
        os << "branch points closer than " << out.min_separation << "; shear the curve";
        throw NeedsShear("branch-points", os.str());
    }
    // Points collinear with the basepoint (within collinear_tolerance of the
    // ray) form one group ordered by distance; loop_system detours around the
    // nearer ones consistently with this order.
    const cplx b = out.basepoint;
    std::sort(out.points.begin(), out.points.end(),
              [b](cplx p, cplx q) { return angle_from(p, b) < angle_from(q, b); });
    const double tol = collinear_tolerance(out);
    std::size_t start = 0;
    for (std::size_t i = 1; i <= out.points.size(); ++i) {
        const bool tied = i < out.points.size() &&
                          std::abs(out.points[i - 1] - b) *
                                  std::abs(angle_from(out.points[i], b) - angle_from(out.points[i - 1], b)) <
                              tol;
        if (tied) continue;
        std::sort(out.points.begin() + static_cast<std::ptrdiff_t>(start), out.points.begin() + static_cast<std::ptrdiff_t>(i),
                  [b](cplx p, cplx q) { return std::abs(p - b) < std::abs(q - b); });
        start = i;
    }
    return out;
}

double collinear_tolerance(const BranchPointSet& branch) {
    const double scale = std::isfinite(branch.min_separation) ? branch.min_separation : std::abs(branch.basepoint);
    return 1e-7 * scale;
}

BranchPointSet branch_points(const PlaneCurve& curve) {
    const ProjectionCheck check = check_projection(curve);
    if (!check.generic) throw NeedsShear("branch-points", "projection to x is not generic: " + check.reason);
    return branch_points(check.discriminant);
}

LoopSystem loop_system(const BranchPointSet& branch) {
    const auto& pts = branch.points;
    const cplx b = branch.basepoint;
    const std::size_t count = pts.size();
    const double collinear = collinear_tolerance(branch);
    LoopSystem out;
    out.basepoint = b;
    out.big_circle = Path({Arc{0, std::abs(b), std::arg(b), kTwoPi}});

    for (std::size_t k = 0; k < count; ++k) {
        double nn = kInf;
        for (std::size_t j = 0; j < count; ++j)
            if (j != k) nn = std::min(nn, std::abs(pts[j] - pts[k]));
        double r = 0.5 * std::abs(b - pts[k]);
        if (std::isfinite(nn)) r = std::min(r, 0.5 * nn);
        out.radii.push_back(r);
    }

    for (std::size_t k = 0; k < count; ++k) {
        const cplx p = pts[k];
        const double rho = out.radii[k];
        const cplx entry = p + rho * (b - p) / std::abs(b - p);
        const cplx dir = entry - b;

        struct Crossing {
            double t_in, t_out;
            std::size_t j;
            bool through_center;
        };
        std::vector<Crossing> crossings;
        for (std::size_t j = 0; j < count; ++j) {
            if (j == k) continue;
            const double rj = kDetourFactor * out.radii[j];
            const cplx m = b - pts[j];
            const double a2 = std::norm(dir);
            const double b1 = (m * std::conj(dir)).real();
            const double c0 = std::norm(m) - rj * rj;
            const double disc = b1 * b1 - a2 * c0;
            if (disc <= 0) continue;
            const double t1 = (-b1 - std::sqrt(disc)) / a2, t2 = (-b1 + std::sqrt(disc)) / a2;
            if (t2 <= 0 || t1 >= 1) continue;
            if (t1 <= 0 || t2 >= 1)
                throw NeedsShear("loops", "ray endpoint falls inside another branch point's disk");
            const double s = std::clamp(-b1 / a2, 0.0, 1.0);
            const bool through_center = std::abs(b + s * dir - pts[j]) < collinear;
            crossings.push_back({t1, t2, j, through_center});
        }
        std::sort(crossings.begin(), crossings.end(), [](const Crossing& u, const Crossing& v) { return u.t_in < v.t_in; });

        Path ray;
        cplx current = b;
        for (const auto& c : crossings) {
            const cplx in = b + c.t_in * dir, out_pt = b + c.t_out * dir;
            const cplx center = pts[c.j];
            ray.append(Segment{current, in});
            const double a_in = std::arg(in - center);
            double sweep = -std::numbers::pi;  // center on the ray: keep it on the right
            if (!c.through_center) {
                sweep = std::arg(out_pt - center) - a_in;
                while (sweep > std::numbers::pi) sweep -= kTwoPi;
                while (sweep <= -std::numbers::pi) sweep += kTwoPi;
            }
            ray.append(Arc{center, kDetourFactor * out.radii[c.j], a_in, sweep});
            current = out_pt;
        }
        ray.append(Segment{current, entry});
        out.rays.push_back(std::move(ray));
        out.circles.push_back(Path({Arc{p, rho, std::arg(entry - p), kTwoPi}}));
    }
    return out;
}

int MonodromyRep::total_branching() const {
    const int n = sheets();
    int total = n - static_cast<int>(cycles(at_infinity).size());
    for (const auto& p : perms) total += n - static_cast<int>(cycles(p).size());
    return total;
}

int MonodromyRep::genus() const {
    const int twice = total_branching() - 2 * sheets() + 2;
    if (twice < 0 || twice % 2 != 0)
        throw NumericalError("monodromy", "branching data violate Riemann-Hurwitz parity");
    return twice / 2;
}

bool MonodromyRep::transitive() const {
    const int n = sheets();
    if (n == 0) return false;
    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        const int s = stack.back();
        stack.pop_back();
        for (const auto& p : perms) {
            const int t = p[static_cast<std::size_t>(s)];
            if (!reached[static_cast<std::size_t>(t)]) {
                reached[static_cast<std::size_t>(t)] = true;
                stack.push_back(t);
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
}

bool MonodromyRep::product_relation_holds() const {
    Permutation prod = identity_permutation(sheets());
    for (const auto& p : perms) prod = compose(p, prod);
    return prod == at_infinity;
}

MonodromyRep monodromy(const NumericCurve& curve, const BranchPointSet& branch, const MonodromyOptions& options) {
    MonodromyRep rep;
    rep.branch_points = branch;
    rep.loops = loop_system(branch);
    const cplx b = branch.basepoint;
    TrackOptions track = options.track;
    if (std::isfinite(branch.min_separation)) track.clearance = options.clearance_factor * branch.min_separation;
    const std::span<const cplx> avoid(branch.points);

    rep.base_fiber = correct_fiber(curve, b, curve.fiber(b, options.roots), track);
    for (std::size_t i = 0; i < rep.base_fiber.size(); ++i)
        for (std::size_t j = i + 1; j < rep.base_fiber.size(); ++j)
            if (std::abs(rep.base_fiber[i] - rep.base_fiber[j]) < 1e-8 * (1 + std::abs(rep.base_fiber[i])))
                throw NeedsShear("monodromy", "basepoint fiber has coincident points");

    const std::size_t count = branch.points.size();
    rep.entry_fibers.resize(count);
    rep.perms.resize(count);
    detail::parallel_for(count, options.threads, [&](std::size_t k) {
        try {
            auto entry = track_fiber(curve, rep.loops.rays[k], rep.base_fiber, track, avoid);
            auto around = track_fiber(curve, rep.loops.circles[k], entry, track, avoid);
            rep.perms[k] = match_fibers(entry, around);
            rep.entry_fibers[k] = std::move(entry);
        } catch (const Error& e) {
            throw NumericalError("monodromy", "loop " + std::to_string(k) + ": " + e.what());
        }
    });
    try {
        rep.at_infinity = match_fibers(rep.base_fiber, track_fiber(curve, rep.loops.big_circle, rep.base_fiber, track, avoid));
    } catch (const Error& e) {
        throw NumericalError("monodromy", std::string("circle at infinity: ") + e.what());
    }
    if (!rep.product_relation_holds())
        throw NumericalError("monodromy", "product of the loop permutations differs from the monodromy at infinity");
    return rep;
}

MonodromyRep monodromy(const PlaneCurve& curve, const MonodromyOptions& options) {
    return monodromy(NumericCurve(curve.polynomial()), branch_points(curve), options);
}

}  // namespace planeperiods
