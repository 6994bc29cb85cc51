#include <gtest/gtest.h>

#include "curves.hpp"
#include "planeperiods/error.hpp"
#include "planeperiods/plane_curve.hpp"

using namespace planeperiods;
using testing_curves::fermat;

TEST(CurveFormat, ParseFormatRoundTrip) {
    const PlaneCurve c = parse_curve("# comment\ndegree 4\n1 0 4 0\n\n1/2 -3 1 2\n-1 0 0 0\n1 0 0 4\n");
    EXPECT_EQ(c.degree(), 4);
    EXPECT_EQ(c.polynomial().coefficient({1, 2}), GaussRational(mpq_class(1, 2), mpq_class(-3)));
    EXPECT_EQ(parse_curve(format_curve(c)), c);
    EXPECT_EQ(c.smoothness(), Smoothness::Unchecked);
}

TEST(CurveFormat, Errors) {
    EXPECT_THROW(parse_curve("1 0 4 0\n"), FormatError);
    EXPECT_THROW(parse_curve("degree 4\n1 0 5 0\n"), Error);
    EXPECT_THROW(parse_curve("degree 4\n1 0 1 0\n"), Error);
    EXPECT_THROW(parse_curve("degree 4\n1 zero 4 0\n"), FormatError);
    EXPECT_THROW(load_curve("/nonexistent/curve"), FormatError);
}

TEST(CurveFormat, BundledFilesLoad) {
    EXPECT_EQ(load_curve(testing_curves::data_path("fermat5.curve")), fermat(5, 1));
    EXPECT_EQ(load_curve(testing_curves::data_path("fermat6.curve")), fermat(6));
}

TEST(Smoothness, FermatCurvesAreSmooth) {
    for (int d = 4; d <= 7; ++d) EXPECT_EQ(checked(fermat(d)).smoothness(), Smoothness::Smooth) << d;
}

TEST(Smoothness, NodeAtOriginIsFound) {
    // x^4 + y^4 + x^2 - y^2 has a node at (0, 0).
    exact::BiPoly f = fermat(4, 0).polynomial();
    f.add_term({2, 0}, 1);
    f.add_term({0, 2}, -1);
    const SmoothnessReport r = smoothness_check(PlaneCurve(4, f));
    ASSERT_EQ(r.verdict, Smoothness::Singular);
    ASSERT_TRUE(r.singular_point);
    EXPECT_TRUE(r.singular_point->first.is_zero());
    EXPECT_TRUE(r.singular_point->second.is_zero());
}

TEST(Smoothness, ReportedSingularPointIsSingular) {
    // y^4 + x^4 + y^2 - x^3 has a cusp at the origin.
    exact::BiPoly f;
    f.add_term({0, 4}, 1);
    f.add_term({4, 0}, 1);
    f.add_term({0, 2}, 1);
    f.add_term({3, 0}, -1);
    const SmoothnessReport r = smoothness_check(PlaneCurve(4, f));
    ASSERT_EQ(r.verdict, Smoothness::Singular);
    const auto& [x0, y0] = *r.singular_point;
    EXPECT_TRUE(f.evaluate(x0, y0).is_zero());
    EXPECT_TRUE(f.dx().evaluate(x0, y0).is_zero());
    EXPECT_TRUE(f.dy().evaluate(x0, y0).is_zero());
}

TEST(Smoothness, ReducibleCurveIsSingular) {
    // (x^2 + y^2 - 1)(x^2 + y^2 - 4): two conics meeting at the circular points.
    exact::BiPoly a;
    a.add_term({2, 0}, 1);
    a.add_term({0, 2}, 1);
    a.add_term({0, 0}, -1);
    exact::BiPoly b = a;
    b.add_term({0, 0}, -3);
    const SmoothnessReport r = smoothness_check(PlaneCurve(4, a * b));
    EXPECT_NE(r.verdict, Smoothness::Smooth);
}

TEST(Shear, SexticNeedsShearAndPreservesVerdict) {
    const PlaneCurve c = checked(fermat(6));
    const ProjectionCheck direct = check_projection(c);
    EXPECT_FALSE(direct.generic);
    const auto [working, t] = generic_coordinates(c);
    EXPECT_NE(t, 0);
    EXPECT_TRUE(check_projection(working).generic);
    EXPECT_EQ(working.smoothness(), Smoothness::Smooth);
    EXPECT_EQ(working, shear(c, t));
    EXPECT_EQ(exact::degree(check_projection(working).discriminant), 30);
}

TEST(Shear, ParametersAreDeterministicAndNonzero) {
    for (int k = 1; k <= 10; ++k) {
        EXPECT_EQ(shear_parameter(1, k), shear_parameter(1, k));
        EXPECT_NE(shear_parameter(1, k), 0);
    }
}

TEST(Shear, ZeroRetriesOnNongenericCurveThrows) {
    EXPECT_THROW(generic_coordinates(fermat(6), SmoothnessOptions{0, 1}), NeedsShear);
}
