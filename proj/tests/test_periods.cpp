#include <gtest/gtest.h>

#include <numbers>

#include "curves.hpp"
#include "planeperiods/error.hpp"
#include "planeperiods/periods.hpp"

using namespace planeperiods;

namespace {

exact::BiPoly elliptic(long a, long b) {
    exact::BiPoly f;
    f.add_term({0, 2}, 1);
    f.add_term({3, 0}, -1);
    f.add_term({1, 0}, -a);
    f.add_term({0, 0}, -b);
    return f;
}

// Klein j from Eisenstein q-series after reduction to the fundamental domain.
cplx klein_j(cplx tau) {
    for (int it = 0; it < 100; ++it) {
        tau -= std::round(tau.real());
        if (std::norm(tau) < 1 - 1e-12)
            tau = -1.0 / tau;
        else
            break;
    }
    const cplx q = std::exp(2.0 * std::numbers::pi * cplx(0, 1) * tau);
    cplx e4 = 1, e6 = 1, qn = 1;
    for (int n = 1; n < 60; ++n) {
        qn *= q;
        double s3 = 0, s5 = 0;
        for (int k = 1; k <= n; ++k)
            if (n % k == 0) {
                s3 += std::pow(k, 3);
                s5 += std::pow(k, 5);
            }
        e4 += 240.0 * s3 * qn;
        e6 -= 504.0 * s5 * qn;
    }
    return 1728.0 * e4 * e4 * e4 / (e4 * e4 * e4 - e6 * e6);
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Riemann, ValidateOnHandMatrices) {
    ComplexMatrix good(2, 2);
    good << cplx(0.1, 1.0), cplx(0.3, 0.2), cplx(0.3, 0.2), cplx(-0.4, 2.0);
    const RiemannReport r = riemann_validate(good, 1e-12);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.positive_definite);
    EXPECT_DOUBLE_EQ(r.sym_residual, 0.0);
    ComplexMatrix skew = good;
    skew(0, 1) += 1e-3;
    EXPECT_FALSE(riemann_validate(skew, 1e-6).pass);
    ComplexMatrix indefinite = good;
    indefinite(1, 1) = cplx(0, -1);
    const RiemannReport r2 = riemann_validate(indefinite, 1e-6);
    EXPECT_FALSE(r2.positive_definite);
    EXPECT_LT(r2.min_im_eigenvalue, 0);
}

TEST(Normalize, RecoversOmega) {
    ComplexMatrix omega(2, 2), A(2, 2);
    omega << cplx(0, 1), cplx(0.5, 0.1), cplx(0.5, 0.1), cplx(0.2, 1.5);
    A << cplx(1, 2), cplx(-1, 0.5), cplx(0.3, 0), cplx(2, -1);
    const ComplexMatrix B = omega * A;
    EXPECT_LT(max_abs(normalize(A, B) - omega), 1e-13);
    ComplexMatrix singular = A;
    singular.row(1) = singular.row(0);
    EXPECT_THROW(normalize(singular, B), NumericalError);
    EXPECT_NEAR(condition_number(ComplexMatrix::Identity(3, 3) * 2.0), 1.0, 1e-14);
}

TEST(PathIntegral, EllipticSegmentMatchesSimpson) {
    // int_2^3 dx / (2 y) on the sheet y > 0 of y^2 = x^3 - x
    const NumericCurve c(elliptic(-1, 0));
    auto fiber = c.fiber(2.0);
    const PathIntegral pi = integrate_path(c, {Monomial{0, 0}}, Path({Segment{2.0, 3.0}}), fiber, PeriodOptions{});
    const int n = 20000;
    double simpson = 0;
    for (int k = 0; k <= n; ++k) {
        const double x = 2.0 + static_cast<double>(k) / n;
        const double w = (k == 0 || k == n) ? 1 : (k % 2 ? 4 : 2);
        simpson += w / (2 * std::sqrt(x * x * x - x));
    }
    simpson /= 3.0 * n;
    for (std::size_t s = 0; s < fiber.size(); ++s) {
        const double sign = fiber[s].real() > 0 ? 1 : -1;
        EXPECT_NEAR(pi.values[s][0].real(), sign * simpson, 1e-11);
        EXPECT_NEAR(pi.values[s][0].imag(), 0, 1e-12);
    }
    EXPECT_LT(pi.error, 1e-9);
}

TEST(Periods, EllipticJInvariants) {
    // y^2 = x^3 + a x + b has j = 1728 * 4a^3 / (4a^3 + 27b^2).
    for (auto [a, b] : {std::pair{-1L, 0L}, std::pair{0L, -1L}, std::pair{-2L, 1L}, std::pair{-7L, 6L}}) {
        const PeriodMatrix P = compute_periods(elliptic(a, b), {Monomial{0, 0}});
        ASSERT_EQ(P.Omega.rows(), 1);
        const cplx tau = P.Omega(0, 0);
        EXPECT_GT(tau.imag(), 0);
        const double expected = 1728.0 * 4 * a * a * a / (4.0 * a * a * a + 27.0 * b * b);
        const cplx j = klein_j(tau);
        EXPECT_NEAR(j.real(), expected, 1e-7 * std::max(1.0, std::abs(expected))) << a << " " << b;
        EXPECT_NEAR(j.imag(), 0, 1e-7 * std::max(1.0, std::abs(expected)));
    }
}

TEST(Periods, FermatQuarticSatisfiesRiemannRelations) {
    const PeriodMatrix P = period_matrix(checked(testing_curves::fermat(4)));
    EXPECT_EQ(P.genus, 3);
    EXPECT_TRUE(P.riemann.pass);
    EXPECT_LT(P.riemann.sym_residual_relative, 1e-9);
    EXPECT_GT(P.riemann.min_im_eigenvalue, 0);
    EXPECT_LT(P.A_condition_estimate, 1e12);
    EXPECT_LT(max_abs(P.Omega * P.A - P.B), 1e-9 * max_abs(P.B));
}

TEST(Periods, QuinticStableUnderTighterQuadrature) {
    const PlaneCurve c = checked(testing_curves::fermat(5, 1));
    PeriodOptions tight;
    tight.quad_tol = 1e-15;
    const PeriodMatrix a = period_matrix(c), b = period_matrix(c, tight);
    EXPECT_TRUE(a.riemann.pass);
    EXPECT_LT(max_abs(a.Omega - b.Omega), 1e-8);
}

TEST(Periods, RandomQuinticSatisfiesRiemannRelations) {
    const PeriodMatrix P = period_matrix(testing_curves::random_smooth(5, 2));
    EXPECT_TRUE(P.riemann.pass);
    EXPECT_LT(P.riemann.sym_residual_relative, 1e-6);
}

TEST(Periods, RequiresSmoothCurve) {
    exact::BiPoly f = testing_curves::fermat(4, 0).polynomial();
    f.add_term({2, 0}, 1);
    f.add_term({0, 2}, -1);
    EXPECT_THROW(period_matrix(PlaneCurve(4, f)), Error);
}
