#include "planeperiods/plane_curve.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "planeperiods/error.hpp"
#include "planeperiods/roots.hpp"

namespace planeperiods {

std::string to_string(Smoothness s) {
    switch (s) {
        case Smoothness::Unchecked: return "unchecked";
        case Smoothness::Smooth: return "smooth";
        case Smoothness::Singular: return "singular";
        case Smoothness::Inconclusive: return "inconclusive";
    }
    return "?";
}

PlaneCurve::PlaneCurve(int d, exact::BiPoly f) : d_(d), f_(std::move(f)) {
    if (d < 1) throw InvalidArgument("curve", "degree must be positive");
    if (f_.total_degree() > d)
        throw InvalidArgument("curve", "a term exceeds the declared degree " + std::to_string(d));
    if (f_.total_degree() < d)
        throw InvalidArgument("curve", "no term of total degree exactly " + std::to_string(d));
}

std::vector<std::pair<GaussRational, Monomial>> PlaneCurve::terms() const {
    std::vector<std::pair<GaussRational, Monomial>> out;
    for (const auto& [m, c] : f_.terms()) out.emplace_back(c, m);
    return out;
}

PlaneCurve parse_curve(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::optional<int> degree;
    exact::BiPoly f;
    auto fail = [&](const std::string& why) -> PlaneCurve {
        throw FormatError("curve", "line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (!degree) {
            int d = 0;
            std::string rest;
            if (first != "degree" || !(ls >> d) || (ls >> rest)) return fail("expected 'degree <d>'");
            degree = d;
            continue;
        }
        std::string im_text;
        int a = -1, b = -1;
        std::string rest;
        if (!(ls >> im_text >> a >> b) || (ls >> rest)) return fail("expected '<re> <im> <a> <b>'");
        if (a < 0 || b < 0) return fail("negative exponent");
        f.add_term({a, b}, GaussRational(parse_rational(first), parse_rational(im_text)));
    }
    if (!degree) fail("missing 'degree' header");
    try {
        return PlaneCurve(*degree, std::move(f));
    } catch (const InvalidArgument& e) {
        throw FormatError("curve", e.what());
    }
}

PlaneCurve parse_curve(const std::string& text) {
    std::istringstream in(text);
    return parse_curve(in);
}

PlaneCurve load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("curve", "cannot open curve file '" + path + "'");
    return parse_curve(in);
}

std::string format_curve(const PlaneCurve& curve) {
    std::string out = "degree " + std::to_string(curve.degree()) + "\n";
    for (auto it = curve.polynomial().terms().rbegin(); it != curve.polynomial().terms().rend(); ++it) {
        out += to_string(it->second.re()) + " " + to_string(it->second.im()) + " " + std::to_string(it->first.xdeg) +
               " " + std::to_string(it->first.ydeg) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------

bool is_squarefree(const exact::Poly& p_in) {
    exact::Poly p = p_in;
    exact::trim(p);
    const int deg = exact::degree(p);
    if (deg <= 1) return deg >= 0;
    if (auto red = exact::reduce(p); red && static_cast<int>(red->size()) - 1 == deg) {
        // Trivial gcd mod p with the degree preserved certifies squarefreeness.
        if (modular::gcd(*red, modular::derivative(*red)).size() == 1) return true;
    }
    return exact::degree(exact::gcd(p, exact::derivative(p))) == 0;
}

ProjectionCheck check_projection(const PlaneCurve& curve) {
    ProjectionCheck out;
    const int d = curve.degree();
    const exact::BiPoly& f = curve.polynomial();
    if (f.coefficient({0, d}).is_zero()) {
        out.reason = "coefficient of y^" + std::to_string(d) + " vanishes";
        return out;
    }
    // Degree-d form as a polynomial in s = x/y; y^d is present so no root at infinity.
    exact::Poly form(static_cast<std::size_t>(d) + 1);
    const exact::BiPoly top = f.homogeneous_part(d);
    for (const auto& [m, c] : top.terms()) form[static_cast<std::size_t>(m.xdeg)] = c;
    exact::trim(form);
    if (exact::degree(form) < d - 1 || !is_squarefree(form)) {
        out.reason = "degree-" + std::to_string(d) + " form has a repeated linear factor (not transverse at infinity)";
        return out;
    }
    const int expected = d * (d - 1);
    out.discriminant = exact::resultant_y(f, f.dy(), expected);
    if (exact::degree(out.discriminant) != expected) {
        out.reason = "Res_y(f, f_y) has degree " + std::to_string(exact::degree(out.discriminant)) + ", expected " +
                     std::to_string(expected);
        return out;
    }
    if (!is_squarefree(out.discriminant)) {
        out.reason = "Res_y(f, f_y) has a repeated root";
        return out;
    }
    out.generic = true;
    return out;
}

namespace {

// Best rational approximation with denominator <= max_den, if within tol.
std::optional<mpq_class> rationalize(double v, double tol, long max_den = 1000000) {
    if (!std::isfinite(v) || std::abs(v) > 1e6) return std::nullopt;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(x);
        if (std::abs(a) > 1e15) break;
        const long ai = static_cast<long>(a);
        const long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (std::abs(v - static_cast<double>(p1) / static_cast<double>(q1)) <= tol) {
            mpq_class r(p1, q1);
            r.canonicalize();
            return r;
        }
        const double frac = x - a;
        if (frac == 0) break;
        x = 1.0 / frac;
    }
    return std::nullopt;
}

std::optional<GaussRational> rationalize(cplx z) {
    const double tol = 1e-9 * (1 + std::abs(z));
    auto re = rationalize(z.real(), tol);
    auto im = rationalize(z.imag(), tol);
    if (!re || !im) return std::nullopt;
    return GaussRational(*re, *im);
}

std::vector<cplx> numeric_roots(const exact::Poly& p) {
    std::vector<cplx> c;
    for (const auto& coef : p) c.push_back(coef.to_complex());
    if (c.size() < 2) return {};
    RootOptions opt;
    opt.residual_tol = 1e-8;
    return roots(c, opt);
}

// Looks for Gaussian-rational points where f, f_x, f_y all vanish, above the
// repeated roots of the discriminant.
std::optional<std::pair<GaussRational, GaussRational>> exhibit_singular_point(const PlaneCurve& curve,
                                                                               const exact::Poly& disc) {
    const exact::BiPoly& f = curve.polynomial();
    const exact::BiPoly fx = f.dx(), fy = f.dy();
    auto vanishes_at = [&](const GaussRational& x0, const GaussRational& y0) {
        return f.evaluate(x0, y0).is_zero() && fx.evaluate(x0, y0).is_zero() && fy.evaluate(x0, y0).is_zero();
    };
    if (vanishes_at(GaussRational{}, GaussRational{})) return std::pair{GaussRational{}, GaussRational{}};
    if (exact::degree(disc) <= 0) return std::nullopt;

    const exact::Poly repeated = exact::squarefree_part(exact::gcd(disc, exact::derivative(disc)));
    if (exact::degree(repeated) <= 0) return std::nullopt;
    std::vector<cplx> xs;
    try {
        xs = numeric_roots(repeated);
    } catch (const NumericalError&) {
        return std::nullopt;
    }
    for (const cplx& xr : xs) {
        auto x0 = rationalize(xr);
        if (!x0) continue;
        const exact::Poly h = exact::gcd(f.at_x(*x0), fy.at_x(*x0));
        if (exact::degree(h) <= 0) continue;
        std::vector<cplx> ys;
        try {
            ys = numeric_roots(exact::squarefree_part(h));
        } catch (const NumericalError&) {
            continue;
        }
        for (const cplx& yr : ys) {
            auto y0 = rationalize(yr);
            if (y0 && vanishes_at(*x0, *y0)) return std::pair{*x0, *y0};
        }
    }
    return std::nullopt;
}

}  // namespace

mpq_class shear_parameter(std::uint64_t seed, int attempt) {
    // mt19937_64 output is specified exactly by the standard, unlike the
    // distributions, so the sequence is reproducible across toolchains.
    std::mt19937_64 gen(seed);
    gen.discard(static_cast<unsigned long long>(2 * (attempt - 1)));
    const long num = static_cast<long>(gen() % 9) + 1;
    const long den = static_cast<long>(gen() % 10) + 2;
    mpq_class t(attempt % 2 == 1 ? num : -num, den);
    t.canonicalize();
    return t;
}

SmoothnessReport smoothness_check(const PlaneCurve& curve, const SmoothnessOptions& options) {
    SmoothnessReport report;
    const ProjectionCheck direct = check_projection(curve);
    if (direct.generic) {
        report.verdict = Smoothness::Smooth;
        report.diagnostics.push_back("discriminant squarefree of degree " +
                                     std::to_string(curve.degree() * (curve.degree() - 1)) +
                                     "; degree-d form has distinct linear factors");
        return report;
    }
    report.diagnostics.push_back("as given: " + direct.reason);

    exact::Poly disc = direct.discriminant;
    if (disc.empty() && curve.polynomial().degree_in_y() >= 1)
        disc = exact::resultant_y(curve.polynomial(), curve.polynomial().dy(), curve.degree() * (curve.degree() - 1));
    if (auto pt = exhibit_singular_point(curve, disc)) {
        report.verdict = Smoothness::Singular;
        report.singular_point = pt;
        report.diagnostics.push_back("f, f_x, f_y vanish at (" + to_string(pt->first) + ", " + to_string(pt->second) +
                                     ")");
        return report;
    }

    // Transversality at infinity is invariant under x -> x + t*y; only the
    // projection-dependent failures are worth a shear.
    const bool shear_can_help = direct.reason.find("infinity") == std::string::npos;
    for (int attempt = 1; shear_can_help && attempt <= options.shear_retries; ++attempt) {
        const mpq_class t = shear_parameter(options.seed, attempt);
        const PlaneCurve moved(curve.degree(), curve.polynomial().sheared(GaussRational(t)));
        const ProjectionCheck check = check_projection(moved);
        if (check.generic) {
            report.verdict = Smoothness::Smooth;
            report.shear = t;
            report.diagnostics.push_back("criterion passes after shear x -> x + (" + to_string(t) + ")*y");
            return report;
        }
        report.diagnostics.push_back("shear t=" + to_string(t) + ": " + check.reason);
    }
    report.verdict = Smoothness::Inconclusive;
    return report;
}

PlaneCurve checked(PlaneCurve curve, const SmoothnessOptions& options) {
    if (curve.smoothness() == Smoothness::Unchecked) curve.set_smoothness(smoothness_check(curve, options));
    return curve;
}

PlaneCurve shear(const PlaneCurve& curve, const mpq_class& t) {
    PlaneCurve out(curve.degree(), curve.polynomial().sheared(GaussRational(t)));
    const Smoothness v = curve.smoothness();
    if (v == Smoothness::Smooth || v == Smoothness::Singular) {
        SmoothnessReport carried = curve.smoothness_report();
        carried.diagnostics.push_back("verdict carried through shear t=" + to_string(t));
        carried.shear = carried.shear - t;
        if (carried.singular_point) {
            // (x, y) on the old curve is (x - t*y, y) on the new one.
            auto& [x0, y0] = *carried.singular_point;
            x0 = x0 - GaussRational(t) * y0;
        }
        out.set_smoothness(std::move(carried));
    } else {
        out.set_smoothness(smoothness_check(out, SmoothnessOptions{0, 1}));
    }
    return out;
}

std::pair<PlaneCurve, mpq_class> generic_coordinates(const PlaneCurve& curve, const SmoothnessOptions& options) {
    const ProjectionCheck direct = check_projection(curve);
    if (direct.generic) return {curve, mpq_class(0)};
    std::string reasons = "as given: " + direct.reason;
    for (int attempt = 1; attempt <= options.shear_retries; ++attempt) {
        const mpq_class t = shear_parameter(options.seed, attempt);
        PlaneCurve moved = shear(curve, t);
        const ProjectionCheck check = check_projection(moved);
        if (check.generic) return {std::move(moved), t};
        reasons += "; t=" + to_string(t) + ": " + check.reason;
    }
    throw NeedsShear("curve", "no generic x-projection within " + std::to_string(options.shear_retries) +
                                  " shears (" + reasons + ")");
}

}  // namespace planeperiods
