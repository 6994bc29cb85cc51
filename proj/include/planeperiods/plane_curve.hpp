#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planeperiods/exact_poly.hpp"

namespace planeperiods {

enum class Smoothness { Unchecked, Smooth, Singular, Inconclusive };

std::string to_string(Smoothness s);

struct SmoothnessReport {
    Smoothness verdict = Smoothness::Unchecked;
    /// Shear x -> x + t*y under which the certificate was found (0 if none).
    mpq_class shear{0};
    /// Exact singular point when the verdict is Singular.
    std::optional<std::pair<GaussRational, GaussRational>> singular_point;
    std::vector<std::string> diagnostics;
};

/// f(x, y) = 0 with exact Gaussian-rational coefficients and total degree d.
class PlaneCurve {
public:
    /// Throws InvalidArgument if a term exceeds degree d or no term has
    /// degree exactly d.
    PlaneCurve(int d, exact::BiPoly f);

    [[nodiscard]] int degree() const noexcept { return d_; }
    [[nodiscard]] const exact::BiPoly& polynomial() const noexcept { return f_; }
    [[nodiscard]] std::vector<std::pair<GaussRational, Monomial>> terms() const;

    [[nodiscard]] Smoothness smoothness() const noexcept { return report_.verdict; }
    [[nodiscard]] const SmoothnessReport& smoothness_report() const noexcept { return report_; }
    void set_smoothness(SmoothnessReport report) { report_ = std::move(report); }

    /// Same polynomial (the verdict is not compared).
    friend bool operator==(const PlaneCurve& a, const PlaneCurve& b) { return a.d_ == b.d_ && a.f_ == b.f_; }

private:
    int d_;
    exact::BiPoly f_;
    SmoothnessReport report_;
};

/// Text format:
///   degree <d>
///   <re> <im> <a> <b>      (re + im*i) * x^a * y^b, re/im exact rationals
/// Blank lines and lines starting with '#' are ignored. The returned curve
/// is unchecked. Throws FormatError.
PlaneCurve parse_curve(std::istream& in);
PlaneCurve parse_curve(const std::string& text);
PlaneCurve load_curve(const std::string& path);
std::string format_curve(const PlaneCurve& curve);

struct SmoothnessOptions {
    /// Number of sheared coordinate systems tried when the curve is not
    /// generic for the x-projection as given.
    int shear_retries = 5;
    std::uint64_t seed = 1;
};

/// Outcome of the discriminant criterion in the current coordinates.
struct ProjectionCheck {
    bool generic = false;   ///< criterion passed: the curve is smooth
    std::string reason;     ///< why it failed, empty on success
    exact::Poly discriminant;  ///< Res_y(f, f_y); empty if not computed
};

/// Sound test in the given coordinates: y^d coefficient nonzero, the
/// degree-d form squarefree (smooth and transverse at infinity), and
/// Res_y(f, f_y) squarefree of degree d(d-1) (smooth in the affine part).
ProjectionCheck check_projection(const PlaneCurve& curve);

/// Smooth / Singular / Inconclusive, see SmoothnessReport. Singular is only
/// reported with an exact point where f, f_x and f_y all vanish.
SmoothnessReport smoothness_check(const PlaneCurve& curve, const SmoothnessOptions& options = {});

/// Returns the curve with its verdict filled in (computed if unchecked).
PlaneCurve checked(PlaneCurve curve, const SmoothnessOptions& options = {});

/// f(x + t*y, y). A conclusive verdict is carried over (the substitution is
/// a projective automorphism); otherwise the verdict is recomputed in the
/// new coordinates without further shearing.
PlaneCurve shear(const PlaneCurve& curve, const mpq_class& t);

/// Deterministic sequence of small nonzero rationals for attempt = 1, 2, ...
mpq_class shear_parameter(std::uint64_t seed, int attempt);

/// Shears by shear_parameter(seed, 1..retries) until check_projection
/// passes; returns the working curve and the t used (0 when the input is
/// already generic). Throws NeedsShear when the budget is exhausted.
std::pair<PlaneCurve, mpq_class> generic_coordinates(const PlaneCurve& curve, const SmoothnessOptions& options = {});

/// Exact squarefree test with a modular pre-screen.
bool is_squarefree(const exact::Poly& p);

}  // namespace planeperiods
