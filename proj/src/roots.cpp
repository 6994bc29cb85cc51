#include "planeperiods/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "planeperiods/error.hpp"

namespace planeperiods {

std::pair<cplx, cplx> horner(std::span<const cplx> coeffs, cplx z) noexcept {
    cplx p = 0, dp = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

double horner_scale(std::span<const cplx> coeffs, double abs_z) noexcept {
    double s = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * abs_z + std::abs(*it);
    return s;
}

std::vector<cplx> roots(std::span<const cplx> coeffs_in, const RootOptions& options) {
    std::vector<cplx> coeffs(coeffs_in.begin(), coeffs_in.end());
    if (coeffs.size() < 2 || coeffs.back() == cplx{})
        throw InvalidArgument("roots", "polynomial needs degree >= 1 and a nonzero leading coefficient");

    // Exact zero roots are split off; the iteration below uses relative steps.
    std::size_t zeros = 0;
    while (coeffs[zeros] == cplx{}) ++zeros;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));

    const std::size_t n = coeffs.size() - 1;
    std::vector<cplx> z(n);
    if (n > 0) {
        // Start on a circle whose radius is the geometric mean of the root moduli.
        const double radius = std::pow(std::abs(coeffs.front()) / std::abs(coeffs.back()), 1.0 / static_cast<double>(n));
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
            z[k] = std::polar(radius, angle);
        }
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    std::vector<bool> done(n, false);
    std::size_t remaining = n;
    for (int iter = 0; iter < options.max_iterations && remaining > 0; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            auto [p, dp] = horner(coeffs, z[i]);
            const double scale = horner_scale(coeffs, std::abs(z[i]));
            if (std::abs(p) <= 4 * static_cast<double>(n) * eps * scale) {
                done[i] = true;
                --remaining;
                continue;
            }
            const cplx ratio = p / dp;
            cplx sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            const cplx offset = ratio / (1.0 - ratio * sum);
            z[i] -= offset;
            if (std::abs(offset) <= options.convergence_tol * std::abs(z[i])) {
                done[i] = true;
                --remaining;
            }
        }
    }

    double worst = 0;
    for (const cplx& r : z) {
        const double scale = horner_scale(coeffs, std::abs(r));
        worst = std::max(worst, scale > 0 ? std::abs(horner(coeffs, r).first) / scale : 0.0);
    }
    if (remaining > 0 || !(worst <= options.residual_tol)) {
        std::ostringstream msg;
        msg << "Aberth iteration did not converge for degree " << n << " (worst relative residual " << worst << ")";
        throw NumericalError("roots", msg.str());
    }
    z.insert(z.end(), zeros, cplx{});
    return z;
}

}  // namespace planeperiods
