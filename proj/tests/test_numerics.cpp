#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "curves.hpp"
#include "planeperiods/error.hpp"
#include "planeperiods/numeric_curve.hpp"
#include "planeperiods/path.hpp"
#include "planeperiods/roots.hpp"
#include "planeperiods/tracking.hpp"

using namespace planeperiods;

namespace {

std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> p{1.0};
    for (cplx r : roots) {
        std::vector<cplx> next(p.size() + 1, 0.0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k + 1] += p[k];
            next[k] -= r * p[k];
        }
        p = next;
    }
    return p;
}

double match_error(std::vector<cplx> a, std::vector<cplx> b) {
    double worst = 0;
    for (cplx z : a) {
        auto it = std::min_element(b.begin(), b.end(), [&](cplx u, cplx v) { return std::abs(u - z) < std::abs(v - z); });
        worst = std::max(worst, std::abs(*it - z));
        b.erase(it);
    }
    return worst;
}

}  // namespace

TEST(Roots, RecoversKnownRoots) {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int n = 1; n <= 30; n += 3) {
        std::vector<cplx> r;
        for (int k = 0; k < n; ++k) r.emplace_back(u(rng), u(rng));
        EXPECT_LT(match_error(roots(poly_from_roots(r)), r), 1e-8) << n;
    }
}

TEST(Roots, UnityRoots) {
    std::vector<cplx> p(13, 0.0);
    p[0] = -1.0;
    p[12] = 1.0;
    std::vector<cplx> expected;
    for (int k = 0; k < 12; ++k) expected.push_back(std::polar(1.0, 2 * std::numbers::pi * k / 12));
    EXPECT_LT(match_error(roots(p), expected), 1e-13);
}

TEST(Roots, RejectsDegenerateInput) {
    const std::vector<cplx> constant{1.0};
    EXPECT_THROW(roots(constant), Error);
    const std::vector<cplx> zero_lead{1.0, 2.0, 0.0};
    EXPECT_THROW(roots(zero_lead), Error);
}

TEST(Roots, HornerMatchesDirectEvaluation) {
    const std::vector<cplx> p{cplx(1, 2), cplx(-3, 0), cplx(0, 1), 2.0};
    const cplx z(0.3, -0.7);
    const auto [v, dv] = horner(p, z);
    EXPECT_LT(std::abs(v - (p[0] + p[1] * z + p[2] * z * z + p[3] * z * z * z)), 1e-14);
    EXPECT_LT(std::abs(dv - (p[1] + 2.0 * p[2] * z + 3.0 * p[3] * z * z)), 1e-14);
}

TEST(NumericCurve, FiberSatisfiesEquation) {
    const NumericCurve c(testing_curves::random_smooth(5, 1).polynomial());
    EXPECT_EQ(c.sheets(), 5);
    const cplx x(0.4, -1.1);
    const auto ys = c.fiber(x);
    ASSERT_EQ(ys.size(), 5u);
    for (cplx y : ys) {
        const auto v = c.evaluate(x, y);
        EXPECT_LT(std::abs(v.f) / v.scale, 1e-12);
    }
    EXPECT_TRUE(std::is_sorted(ys.begin(), ys.end(), [](cplx a, cplx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    }));
}

TEST(NumericCurve, LeadingCoefficientMustBeConstant) {
    exact::BiPoly f;
    f.add_term({1, 2}, 1);
    f.add_term({3, 0}, 1);
    EXPECT_THROW(NumericCurve{f}, NeedsShear);
}

TEST(NumericCurve, PartialDerivativesByFiniteDifference) {
    const NumericCurve c(testing_curves::fermat(5, 1).polynomial());
    const cplx x(0.3, 0.2), y(-0.5, 0.9), h(1e-6, 0);
    const auto v = c.evaluate(x, y);
    EXPECT_LT(std::abs((c.evaluate(x + h, y).f - c.evaluate(x - h, y).f) / (2.0 * h) - v.fx), 1e-6);
    EXPECT_LT(std::abs((c.evaluate(x, y + h).f - c.evaluate(x, y - h).f) / (2.0 * h) - v.fy), 1e-6);
}

TEST(Path, SegmentAndArcGeometry) {
    const Piece s = Segment{0.0, cplx(3, 4)};
    EXPECT_DOUBLE_EQ(length(s), 5.0);
    EXPECT_LT(std::abs(point(s, 0.5) - cplx(1.5, 2)), 1e-15);
    const Piece a = Arc{cplx(1, 1), 2.0, 0.0, std::numbers::pi};
    EXPECT_NEAR(length(a), 2 * std::numbers::pi, 1e-14);
    EXPECT_LT(std::abs(point(a, 1) - cplx(-1, 1)), 1e-14);
    EXPECT_LT(std::abs(point(reversed(a), 0) - point(a, 1)), 1e-14);
    EXPECT_LT(std::abs(point(sub_piece(a, 0.25, 0.75), 0) - point(a, 0.25)), 1e-14);
    EXPECT_NEAR(distance(a, cplx(1, 1)), 2.0, 1e-14);
    EXPECT_NEAR(distance(s, cplx(3, 0)), 12.0 / 5.0, 1e-14);
    // tangent of the arc is the derivative in t
    const double t = 0.3, e = 1e-6;
    EXPECT_LT(std::abs((point(a, t + e) - point(a, t - e)) / (2 * e) - tangent(a, t)), 1e-6);
}

TEST(Path, ReversedPathRunsBackwards) {
    Path p({Segment{0.0, 1.0}, Arc{0.0, 1.0, 0.0, std::numbers::pi / 2}});
    const Path r = p.reversed();
    EXPECT_LT(std::abs(r.start() - p.end()), 1e-15);
    EXPECT_LT(std::abs(r.end() - p.start()), 1e-15);
    EXPECT_NEAR(r.length(), p.length(), 1e-14);
    const std::vector<cplx> pts{cplx(0, 2)};
    EXPECT_NEAR(p.clearance(pts), 1.0, 1e-14);
}

TEST(Tracking, SegmentContinuationMatchesFreshFiber) {
    const NumericCurve c(testing_curves::fermat(4).polynomial());
    const cplx a(0.2, 0.3), b(0.5, -0.2);
    const auto start = c.fiber(a);
    const auto end = track_fiber(c, Path({Segment{a, b}}), start);
    const auto fresh = c.fiber(b);
    EXPECT_LT(match_error(end, fresh), 1e-10);
    // A short segment cannot permute the sheets: nearest-point matching holds.
    const auto perm = match_fibers(fresh, end);
    for (std::size_t i = 0; i < end.size(); ++i) EXPECT_LT(std::abs(fresh[static_cast<std::size_t>(perm[i])] - end[i]), 1e-10);
}

TEST(Tracking, ContractibleLoopIsIdentity) {
    // x^4 + y^4 = 1 branches at the fourth roots of unity; a circle of
    // radius 0.5 around 0 encloses none of them.
    const NumericCurve c(testing_curves::fermat(4).polynomial());
    const Path loop({Arc{0.0, 0.5, 0.0, 2 * std::numbers::pi}});
    const auto start = c.fiber(0.5);
    const auto end = track_fiber(c, loop, start);
    const auto perm = match_fibers(start, end);
    for (std::size_t i = 0; i < perm.size(); ++i) EXPECT_EQ(perm[i], static_cast<int>(i));
}

TEST(Tracking, LoopAroundBranchPointCyclesSheets) {
    // Around x = 1 the four sheets of y^4 = 1 - x^4 form one 4-cycle.
    const NumericCurve c(testing_curves::fermat(4).polynomial());
    const Path loop({Arc{1.0, 0.3, std::numbers::pi, 2 * std::numbers::pi}});
    const auto start = c.fiber(0.7);
    const auto perm = match_fibers(start, track_fiber(c, loop, start));
    int i = 0, len = 0;
    do {
        i = perm[static_cast<std::size_t>(i)];
        ++len;
    } while (i != 0 && len < 10);
    EXPECT_EQ(len, 4);
}

TEST(Tracking, CorrectFiberPolishesPerturbedPoints) {
    const NumericCurve c(testing_curves::fermat(5, 1).polynomial());
    const cplx x(0.1, 0.4);
    auto ys = c.fiber(x);
    const auto exact = ys;
    for (auto& y : ys) y += cplx(1e-5, -1e-5);
    const auto fixed = correct_fiber(c, x, ys, TrackOptions{});
    for (std::size_t i = 0; i < ys.size(); ++i) EXPECT_LT(std::abs(fixed[i] - exact[i]), 1e-12);
}

TEST(Tracking, MatchFibersRejectsAmbiguity) {
    const std::vector<cplx> base{0.0, 1.0}, end{0.5, 0.5};
    EXPECT_THROW(match_fibers(base, end), NumericalError);
}
