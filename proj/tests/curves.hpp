#pragma once

#include <random>
#include <string>

#include "planeperiods/plane_curve.hpp"

namespace testing_curves {

using planeperiods::GaussRational;
using planeperiods::Monomial;
using planeperiods::PlaneCurve;

inline std::string data_path(const std::string& name) { return std::string(PLANEPERIODS_TEST_DATA) + "/" + name; }

inline PlaneCurve fermat(int d, long constant = -1) {
    planeperiods::exact::BiPoly f;
    f.add_term({d, 0}, 1);
    f.add_term({0, d}, 1);
    f.add_term({0, 0}, constant);
    return PlaneCurve(d, f);
}

// x^d + y^d - 1 plus a few random low-degree terms with coefficients in
// {-2..2}/3. Seeds that give a singular or inconclusive curve are skipped.
inline PlaneCurve random_smooth(int d, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coeff(-2, 2), deg(0, d - 1);
    for (;;) {
        planeperiods::exact::BiPoly f = fermat(d).polynomial();
        for (int k = 0; k < 4; ++k) {
            const int total = deg(rng);
            const int a = std::uniform_int_distribution<int>(0, total)(rng);
            const int c = coeff(rng);
            if (c != 0) f.add_term({a, total - a}, GaussRational(mpq_class(c, 3)));
        }
        PlaneCurve curve = planeperiods::checked(PlaneCurve(d, f));
        if (curve.smoothness() == planeperiods::Smoothness::Smooth) return curve;
        seed = static_cast<unsigned>(rng());
        rng.seed(seed);
    }
}

}  // namespace testing_curves
