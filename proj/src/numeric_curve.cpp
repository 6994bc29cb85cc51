#include "planeperiods/numeric_curve.hpp"

#include <algorithm>

#include "planeperiods/error.hpp"

namespace planeperiods {

NumericCurve::NumericCurve(const exact::BiPoly& f) {
    ny_ = f.degree_in_y();
    total_degree_ = f.total_degree();
    if (ny_ < 1) throw NeedsShear("numerics", "polynomial does not involve y");
    coeffs_.assign(static_cast<std::size_t>(ny_) + 1, {});
    for (const auto& [m, c] : f.terms()) {
        auto& row = coeffs_[static_cast<std::size_t>(m.ydeg)];
        if (row.size() <= static_cast<std::size_t>(m.xdeg)) row.resize(static_cast<std::size_t>(m.xdeg) + 1);
        row[static_cast<std::size_t>(m.xdeg)] = c.to_complex();
    }
    if (coeffs_.back().size() != 1)
        throw NeedsShear("numerics", "leading coefficient in y depends on x (vertical asymptotes); shear the curve");
}

std::vector<cplx> NumericCurve::fiber_polynomial(cplx x) const {
    std::vector<cplx> out(coeffs_.size());
    for (std::size_t b = 0; b < coeffs_.size(); ++b) out[b] = horner(coeffs_[b], x).first;
    return out;
}

NumericCurve::Values NumericCurve::evaluate(cplx x, cplx y) const {
    Values v{0, 0, 0, 0};
    const double ax = std::abs(x), ay = std::abs(y);
    // Horner in y over x-polynomial coefficients (and their x-derivatives).
    for (std::size_t b = coeffs_.size(); b-- > 0;) {
        auto [c, dc] = horner(coeffs_[b], x);
        v.fy = v.fy * y + v.f;
        v.f = v.f * y + c;
        v.fx = v.fx * y + dc;
        v.scale = v.scale * ay + horner_scale(coeffs_[b], ax);
    }
    return v;
}

std::vector<cplx> NumericCurve::fiber(cplx x, const RootOptions& options) const {
    auto ys = roots(fiber_polynomial(x), options);
    std::sort(ys.begin(), ys.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return ys;
}

}  // namespace planeperiods
