#include "planeperiods/periods.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "parallel.hpp"
#include "planeperiods/error.hpp"

namespace planeperiods {

namespace {

constexpr int kOrder = 16;

struct GaussLegendre {
    std::array<double, kOrder> nodes{}, weights{};  // on [-1, 1], ascending

    GaussLegendre() {
        const auto zeros = boost::math::legendre_p_zeros<double>(kOrder);  // nonnegative half
        std::vector<double> x;
        for (double z : zeros) {
            x.push_back(z);
            x.push_back(-z);
        }
        std::sort(x.begin(), x.end());
        for (int i = 0; i < kOrder; ++i) {
            const double xi = x[static_cast<std::size_t>(i)];
            const double dp = boost::math::legendre_p_prime(kOrder, xi);
            nodes[static_cast<std::size_t>(i)] = xi;
            weights[static_cast<std::size_t>(i)] = 2 / ((1 - xi * xi) * dp * dp);
        }
    }
};

const GaussLegendre& rule() {
    static const GaussLegendre gl;
    return gl;
}

using Table = std::vector<std::vector<cplx>>;  // [sheet][differential]

void add_into(Table& acc, const Table& v, cplx factor = 1) {
    for (std::size_t s = 0; s < acc.size(); ++s)
        for (std::size_t j = 0; j < acc[s].size(); ++j) acc[s][j] += factor * v[s][j];
}

class PieceIntegrator {
public:
    PieceIntegrator(const NumericCurve& curve, const std::vector<Monomial>& basis, const Piece& piece,
                    const PeriodOptions& options, std::span<const cplx> avoid)
        : curve_(curve), basis_(basis), piece_(piece), options_(options), avoid_(avoid) {}

    // Integrates over [ta, tb] starting from the fiber over point(ta);
    // returns the fiber over point(tb).
    std::vector<cplx> run(double ta, double tb, std::vector<cplx> fiber, Table& acc, double& error, int depth) {
        const double tm = 0.5 * (ta + tb);
        // Every node of the whole interval and of both halves, tracked in order.
        std::vector<double> ts;
        for (double x : rule().nodes) {
            ts.push_back(tm + 0.5 * (tb - ta) * x);
            ts.push_back(0.5 * (ta + tm) + 0.5 * (tm - ta) * x);
            ts.push_back(0.5 * (tm + tb) + 0.5 * (tb - tm) * x);
        }
        ts.push_back(tm);
        ts.push_back(tb);
        std::sort(ts.begin(), ts.end());
        std::vector<std::vector<cplx>> fibers;
        double t = ta;
        std::vector<cplx> current = fiber;
        for (double tn : ts) {
            current = track_piece(curve_, piece_, t, tn, std::move(current), options_.monodromy.track, avoid_);
            t = tn;
            fibers.push_back(current);
        }
        auto fiber_at = [&](double tq) -> const std::vector<cplx>& {
            const auto it = std::lower_bound(ts.begin(), ts.end(), tq);
            return fibers[static_cast<std::size_t>(it - ts.begin())];
        };

        auto estimate = [&](double lo, double hi) {
            Table out(fiber.size(), std::vector<cplx>(basis_.size()));
            const double half = 0.5 * (hi - lo), mid = 0.5 * (lo + hi);
            for (int i = 0; i < kOrder; ++i) {
                const double tq = mid + half * rule().nodes[static_cast<std::size_t>(i)];
                add_into(out, integrand(tq, fiber_at(tq)), half * rule().weights[static_cast<std::size_t>(i)]);
            }
            return out;
        };
        const Table whole = estimate(ta, tb);
        Table halves = estimate(ta, tm);
        add_into(halves, estimate(tm, tb));
        double diff = 0;
        for (std::size_t s = 0; s < whole.size(); ++s)
            for (std::size_t j = 0; j < whole[s].size(); ++j) diff = std::max(diff, std::abs(whole[s][j] - halves[s][j]));

        if (diff <= options_.quad_tol) {
            add_into(acc, halves);
            error += diff;
            return fibers.back();
        }
        if (depth >= options_.max_depth) {
            std::ostringstream os;
            os << "quadrature did not converge near x = " << point(piece_, tm) << " (difference " << diff << ")";
            throw NumericalError("periods", os.str());
        }
        auto mid_fiber = run(ta, tm, std::move(fiber), acc, error, depth + 1);
        return run(tm, tb, std::move(mid_fiber), acc, error, depth + 1);
    }

private:
    Table integrand(double t, const std::vector<cplx>& ys) const {
        const cplx x = point(piece_, t);
        const cplx dx = tangent(piece_, t);
        Table out(ys.size(), std::vector<cplx>(basis_.size()));
        for (std::size_t s = 0; s < ys.size(); ++s) {
            const auto v = curve_.evaluate(x, ys[s]);
            if (!(std::abs(v.fy) > options_.fy_floor * v.scale)) {
                std::ostringstream os;
                os << "f_y below the safety floor at x = " << x;
                throw NumericalError("periods", os.str());
            }
            const cplx factor = dx / v.fy;
            for (std::size_t j = 0; j < basis_.size(); ++j)
                out[s][j] = factor * std::pow(x, basis_[j].xdeg) * std::pow(ys[s], basis_[j].ydeg);
        }
        return out;
    }

    const NumericCurve& curve_;
    const std::vector<Monomial>& basis_;
    const Piece& piece_;
    const PeriodOptions& options_;
    std::span<const cplx> avoid_;
};

// Number of equal parameter slices so each is no longer than the piece's
// distance to the nearest branch point.
int initial_slices(const Piece& piece, std::span<const cplx> avoid) {
    double clearance = std::numeric_limits<double>::infinity();
    for (const cplx& q : avoid) clearance = std::min(clearance, distance(piece, q));
    if (!std::isfinite(clearance) || clearance <= 0) return 1;
    return std::clamp(static_cast<int>(std::ceil(length(piece) / clearance)), 1, 4096);
}

ComplexMatrix combine(const IntMatrix& S, std::size_t first, std::size_t count, const ComplexMatrix& raw) {
    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(count), raw.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t c = 0; c < S[first + i].size(); ++c)
            if (S[first + i][c] != 0)
                out.row(static_cast<Eigen::Index>(i)) +=
                    static_cast<double>(S[first + i][c]) * raw.row(static_cast<Eigen::Index>(c));
    return out;
}

// Sheets visited while winding around a branch point from `from` until `to`.
std::vector<int> winding_orbit(const Permutation& perm, int from, int to) {
    std::vector<int> orbit{from};
    while (orbit.back() != to) {
        orbit.push_back(perm[static_cast<std::size_t>(orbit.back())]);
        if (orbit.size() > perm.size() + 1) throw InvalidArgument("periods", "cycle step joins sheets of different ramification points");
    }
    return orbit;
}

PeriodMatrix assemble(const NumericCurve& curve, const BranchPointSet& branch, const std::vector<Monomial>& basis,
                      const PeriodOptions& options) {
    const MonodromyRep mono = monodromy(curve, branch, options.monodromy);
    const CanonicalHomology hom = canonical_homology(mono);
    if (static_cast<std::size_t>(hom.genus) != basis.size())
        throw NumericalError("periods", "homology has genus " + std::to_string(hom.genus) + " but " +
                                            std::to_string(basis.size()) + " differentials were given");
    const ElementaryIntegrals integrals = elementary_integrals(curve, mono, basis, options);

    const auto n_raw = static_cast<Eigen::Index>(hom.raw.size());
    const auto g = static_cast<Eigen::Index>(basis.size());
    ComplexMatrix raw(n_raw, g);
    std::vector<double> raw_error;
    for (Eigen::Index c = 0; c < n_raw; ++c) {
        const auto v = integrate_cycle(mono, integrals, hom.raw[static_cast<std::size_t>(c)]);
        for (Eigen::Index j = 0; j < g; ++j) raw(c, j) = v[static_cast<std::size_t>(j)];
        raw_error.push_back(cycle_error(mono, integrals, hom.raw[static_cast<std::size_t>(c)]));
    }

    PeriodMatrix out;
    out.genus = hom.genus;
    out.basis = basis;
    const auto gs = static_cast<std::size_t>(hom.genus);
    out.A = combine(hom.change_of_basis, 0, gs, raw);
    out.B = combine(hom.change_of_basis, gs, gs, raw);
    for (std::size_t i = 0; i < 2 * gs; ++i) {
        double e = 0;
        for (std::size_t c = 0; c < raw_error.size(); ++c)
            e += std::abs(static_cast<double>(hom.change_of_basis[i][c])) * raw_error[c];
        out.quadrature_error = std::max(out.quadrature_error, e);
    }
    out.A_condition_estimate = condition_number(out.A);
    out.Omega = normalize(out.A, out.B);
    out.riemann = riemann_validate(out.Omega, 1e-6);
    return out;
}

}  // namespace

PathIntegral integrate_path(const NumericCurve& curve, const std::vector<Monomial>& basis, const Path& path,
                            std::vector<cplx> start_fiber, const PeriodOptions& options, std::span<const cplx> avoid) {
    PathIntegral out;
    out.values.assign(start_fiber.size(), std::vector<cplx>(basis.size()));
    for (const auto& piece : path.pieces()) {
        PieceIntegrator integrator(curve, basis, piece, options, avoid);
        const int slices = initial_slices(piece, avoid);
        for (int i = 0; i < slices; ++i) {
            const double ta = static_cast<double>(i) / slices, tb = static_cast<double>(i + 1) / slices;
            start_fiber = integrator.run(ta, tb, std::move(start_fiber), out.values, out.error, 0);
        }
    }
    out.end_fiber = std::move(start_fiber);
    return out;
}

ElementaryIntegrals elementary_integrals(const NumericCurve& curve, const MonodromyRep& mono,
                                         const std::vector<Monomial>& basis, const PeriodOptions& options) {
    const std::size_t count = mono.perms.size();
    ElementaryIntegrals out;
    out.rays.resize(count);
    out.circles.resize(count);
    const std::span<const cplx> avoid(mono.branch_points.points);
    detail::parallel_for(count, options.monodromy.threads, [&](std::size_t k) {
        try {
            out.rays[k] = integrate_path(curve, basis, mono.loops.rays[k], mono.base_fiber, options, avoid);
            out.circles[k] = integrate_path(curve, basis, mono.loops.circles[k], out.rays[k].end_fiber, options, avoid);
            if (match_fibers(out.rays[k].end_fiber, out.circles[k].end_fiber) != mono.perms[k])
                throw NumericalError("periods", "integration path disagrees with the monodromy");
        } catch (const Error& e) {
            throw NumericalError("periods", "branch point " + std::to_string(k) + ": " + e.what());
        }
    });
    return out;
}

std::vector<cplx> integrate_cycle(const MonodromyRep& mono, const ElementaryIntegrals& integrals,
                                  const CycleWord& cycle) {
    const std::size_t g = integrals.rays.empty() || integrals.rays[0].values.empty() ? 0 : integrals.rays[0].values[0].size();
    std::vector<cplx> total(g);
    const std::size_t len = cycle.steps.size();
    for (std::size_t l = 0; l < len; ++l) {
        const auto k = static_cast<std::size_t>(cycle.steps[l].branch);
        const int from = cycle.steps[l].sheet, to = cycle.steps[(l + 1) % len].sheet;
        const auto orbit = winding_orbit(mono.perms[k], from, to);
        for (std::size_t j = 0; j < g; ++j) {
            total[j] += integrals.rays[k].values[static_cast<std::size_t>(from)][j];
            for (std::size_t m = 0; m + 1 < orbit.size(); ++m)
                total[j] += integrals.circles[k].values[static_cast<std::size_t>(orbit[m])][j];
            total[j] -= integrals.rays[k].values[static_cast<std::size_t>(to)][j];
        }
    }
    return total;
}

double cycle_error(const MonodromyRep& mono, const ElementaryIntegrals& integrals, const CycleWord& cycle) {
    double total = 0;
    const std::size_t len = cycle.steps.size();
    for (std::size_t l = 0; l < len; ++l) {
        const auto k = static_cast<std::size_t>(cycle.steps[l].branch);
        const auto orbit = winding_orbit(mono.perms[k], cycle.steps[l].sheet, cycle.steps[(l + 1) % len].sheet);
        total += 2 * integrals.rays[k].error + static_cast<double>(orbit.size() - 1) * integrals.circles[k].error;
    }
    return total;
}

RiemannReport riemann_validate(const ComplexMatrix& omega, double tol) {
    RiemannReport r;
    if (omega.rows() != omega.cols() || omega.rows() == 0) return r;
    r.sym_residual = (omega - omega.transpose()).cwiseAbs().maxCoeff();
    const double scale = omega.cwiseAbs().maxCoeff();
    r.sym_residual_relative = scale > 0 ? r.sym_residual / scale : r.sym_residual;
    const Eigen::MatrixXd im = 0.5 * (omega.imag() + omega.imag().transpose());
    r.min_im_eigenvalue = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(im, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
    const Eigen::LLT<Eigen::MatrixXd> llt(im);
    r.positive_definite = llt.info() == Eigen::Success && r.min_im_eigenvalue > 0;
    r.pass = r.positive_definite && r.sym_residual_relative <= tol;
    return r;
}

double condition_number(const ComplexMatrix& A) {
    if (A.size() == 0) return 1;
    const Eigen::JacobiSVD<ComplexMatrix> svd(A);
    const auto& sv = svd.singularValues();
    const double lo = sv(sv.size() - 1);
    return lo > 0 ? sv(0) / lo : std::numeric_limits<double>::infinity();
}

ComplexMatrix normalize(const ComplexMatrix& A, const ComplexMatrix& B) {
    if (A.rows() != A.cols() || B.rows() != A.rows() || B.cols() != A.cols())
        throw InvalidArgument("periods", "A and B must be square of the same size");
    const double cond = condition_number(A);
    if (!(cond < 1e12)) {
        std::ostringstream os;
        os << "A is numerically singular (condition estimate " << cond << ")";
        throw NumericalError("periods", os.str());
    }
    // Omega A = B  <=>  A^T Omega^T = B^T.
    return A.transpose().fullPivLu().solve(B.transpose()).transpose();
}

PeriodMatrix compute_periods(const exact::BiPoly& f, const std::vector<Monomial>& basis, const PeriodOptions& options) {
    const NumericCurve curve(f);
    PeriodMatrix out = assemble(curve, branch_points(discriminant(f)), basis, options);
    out.d = f.total_degree();
    return out;
}

PeriodMatrix period_matrix(const PlaneCurve& curve, const PeriodOptions& options) {
    const PlaneCurve c = checked(curve, options.smoothness);
    if (c.smoothness() != Smoothness::Smooth)
        throw InvalidArgument("periods", "curve is " + to_string(c.smoothness()) + ", a smooth curve is required");
    auto [working, t] = generic_coordinates(c, options.smoothness);
    const NumericCurve numeric(working.polynomial());
    PeriodMatrix out = assemble(numeric, branch_points(working), adjoint_monomials(curve.degree()).monomials(), options);
    out.d = curve.degree();
    out.shear = t;
    return out;
}

}  // namespace planeperiods
