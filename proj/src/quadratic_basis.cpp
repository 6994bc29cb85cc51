#include "planeperiods/quadratic_basis.hpp"

#include "planeperiods/error.hpp"

namespace planeperiods {

namespace {

std::size_t target_position(Monomial m) {
    const int deg = m.degree();
    return static_cast<std::size_t>(count_monomials_up_to(deg - 1) + (deg - m.xdeg));
}

void require_smooth(const PlaneCurve& curve, const char* op) {
    if (curve.degree() < 4)
        throw InvalidArgument("quadratic-basis", std::string(op) + ": degree must be >= 4");
    const PlaneCurve c = checked(curve);
    if (c.smoothness() != Smoothness::Smooth)
        throw InvalidArgument("quadratic-basis", std::string(op) + ": curve is " + to_string(c.smoothness()) +
                                                     ", a smooth curve is required");
}

std::vector<GaussRational> as_row(const exact::BiPoly& p, std::size_t width) {
    std::vector<GaussRational> row(width);
    for (const auto& [m, c] : p.terms()) row[target_position(m)] = c;
    return row;
}

std::vector<std::vector<GaussRational>> ideal_rows(const PlaneCurve& curve, std::size_t width,
                                                   std::vector<exact::BiPoly>* slice_out) {
    std::vector<std::vector<GaussRational>> rows;
    for (Monomial m : monomials_up_to(curve.degree() - 6)) {
        exact::BiPoly p = curve.polynomial().times(m);
        rows.push_back(as_row(p, width));
        if (slice_out) slice_out->push_back(std::move(p));
    }
    return rows;
}

std::vector<std::vector<modular::Fp2>> reduce_rows(const std::vector<std::vector<GaussRational>>& rows, bool& ok) {
    std::vector<std::vector<modular::Fp2>> out;
    ok = true;
    for (const auto& r : rows) {
        std::vector<modular::Fp2> v;
        for (const auto& c : r) {
            auto red = modular::reduce(c);
            if (!red) {
                ok = false;
                return {};
            }
            v.push_back(*red);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

QuadSpaceInfo quad_dim(const PlaneCurve& curve) {
    require_smooth(curve, "quad_dim");
    QuadSpaceInfo info;
    info.d = curve.degree();
    info.target_monomials = monomials_up_to(2 * info.d - 6);
    const std::size_t width = info.target_monomials.size();
    const auto rows = ideal_rows(curve, width, &info.ideal_slice);

    bool ok = false;
    const auto reduced = reduce_rows(rows, ok);
    const std::size_t exact_rank = exact::independent_rows(rows).size();
    if (ok && modular::independent_rows(reduced).size() > exact_rank)
        throw Error("quadratic-basis", "modular rank exceeds rational rank (internal error)");
    info.ideal_rank = exact_rank;
    info.dim = width - info.ideal_rank;
    const auto expected = static_cast<std::size_t>(3 * genus(info.d) - 3);
    if (info.dim != expected)
        throw Error("quadratic-basis", "quadratic differentials have dimension " + std::to_string(info.dim) +
                                           ", expected 3g-3 = " + std::to_string(expected));
    return info;
}

BasisIndexSet select_basis_pairs(const PlaneCurve& curve, const ColumnSet& cols) {
    require_smooth(curve, "select_basis_pairs");
    const int d = curve.degree();
    if (cols.degree() != d) throw InvalidArgument("quadratic-basis", "column set was built for another degree");
    if (!cover_check(d, cols).complete())
        throw InvalidArgument("quadratic-basis", "column set " + to_string(cols) + " does not cover");

    const AdjointBasis basis(d);
    const std::size_t width = static_cast<std::size_t>(count_monomials_up_to(2 * d - 6));
    auto rows = ideal_rows(curve, width, nullptr);
    const std::size_t ideal_count = rows.size();

    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (Monomial label : cols.labels()) {
        const std::size_t j = *basis.index_of(label);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            candidates.emplace_back(i, j);
            std::vector<GaussRational> unit(width);
            unit[target_position(basis[i] * label)] = GaussRational(1);
            rows.push_back(std::move(unit));
        }
    }

    BasisIndexSet out;
    out.d = d;
    const auto accepted = exact::independent_rows(rows);
    std::size_t ideal_accepted = 0;
    for (std::size_t r : accepted) {
        if (r < ideal_count)
            ++ideal_accepted;
        else
            out.pairs.push_back(candidates[r - ideal_count]);
    }
    if (ideal_accepted != ideal_count)
        throw Error("quadratic-basis", "ideal slice is rank deficient (zero or degenerate equation)");

    bool ok = false;
    const auto reduced = reduce_rows(rows, ok);
    out.modular_agrees = ok && modular::independent_rows(reduced) == accepted;

    const auto expected = static_cast<std::size_t>(3 * genus(d) - 3);
    if (out.pairs.size() != expected)
        throw Error("quadratic-basis", "found " + std::to_string(out.pairs.size()) +
                                           " independent products, expected 3g-3 = " + std::to_string(expected));
    return out;
}

}  // namespace planeperiods
