#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "planeperiods/error.hpp"
#include "planeperiods/product_cover.hpp"

using namespace planeperiods;

namespace {

// Independent brute force: t is covered when t = c * m with c a column label
// and m an adjoint monomial.
std::set<Monomial> brute_missing(int d, const std::vector<Monomial>& cols) {
    std::set<Monomial> missing;
    for (int total = 0; total <= 2 * d - 6; ++total)
        for (int a = 0; a <= total; ++a) {
            const Monomial t{a, total - a};
            bool hit = false;
            for (Monomial c : cols) {
                const int ma = t.xdeg - c.xdeg, mb = t.ydeg - c.ydeg;
                if (ma >= 0 && mb >= 0 && ma + mb <= d - 3) hit = true;
            }
            if (!hit) missing.insert(t);
        }
    return missing;
}

std::set<Monomial> brute_products(int d) {
    std::set<Monomial> out;
    for (Monomial a : adjoint_basis(d))
        for (Monomial b : adjoint_basis(d)) out.insert(a * b);
    return out;
}

}  // namespace

TEST(Monomial, GenusFormula) {
    EXPECT_EQ(genus(4), 3);
    EXPECT_EQ(genus(5), 6);
    EXPECT_EQ(genus(6), 10);
    EXPECT_EQ(genus(7), 15);
    EXPECT_THROW(genus(2), InvalidArgument);
}

TEST(Monomial, AdjointBasisSizeIsGenus) {
    for (int d = 4; d <= 20; ++d) {
        const AdjointBasis b(d);
        EXPECT_EQ(static_cast<int>(b.size()), genus(d));
        for (Monomial m : b) EXPECT_LE(m.degree(), d - 3);
    }
    EXPECT_THROW(AdjointBasis(3), InvalidArgument);
    EXPECT_EQ(adjoint_monomials(3).size(), 1u);
}

TEST(Monomial, SexticOrderingMatchesPublishedTable) {
    const std::vector<Monomial> expected = parse_monomial_list("1,x,y,x^2,x*y,y^2,x^3,x^2*y,x*y^2,y^3");
    EXPECT_EQ(adjoint_basis(6).monomials(), expected);
}

TEST(Monomial, ParseAndPrintRoundTrip) {
    for (Monomial m : monomials_up_to(6)) EXPECT_EQ(parse_monomial(to_string(m)), m);
    EXPECT_EQ(parse_monomial("y*x*x"), (Monomial{2, 1}));
    EXPECT_EQ(parse_monomial("x^2*y^2"), (Monomial{2, 2}));
    EXPECT_THROW(parse_monomial("z"), FormatError);
    EXPECT_THROW(parse_monomial("x^"), FormatError);
}

TEST(Monomial, IndexOfInBasis) {
    const AdjointBasis b(7);
    for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(monomial_index(b[i], b), i);
    EXPECT_FALSE(monomial_index({5, 0}, b).has_value());
}

TEST(Monomial, CountMatchesEnumeration) {
    for (int k = 0; k < 12; ++k) EXPECT_EQ(static_cast<long long>(monomials_up_to(k).size()), count_monomials_up_to(k));
}

TEST(ProductMatrix, EntriesAreProducts) {
    const ProductMatrix q(6);
    EXPECT_EQ(q.size(), 10u);
    EXPECT_EQ(q.at(3, 4), (Monomial{3, 1}));
    const auto col = q.column({0, 3});
    ASSERT_EQ(col.size(), 10u);
    for (std::size_t i = 0; i < col.size(); ++i) EXPECT_EQ(col[i], q.basis()[i] * (Monomial{0, 3}));
}

TEST(Cover, DistinguishedColumnsCoverUpToNine) {
    for (int d = 7; d <= 9; ++d) {
        const DistinguishedColumns dc = distinguished_columns(d);
        EXPECT_FALSE(dc.fallback);
        EXPECT_EQ(dc.columns.size(), 4u);
        EXPECT_TRUE(dc.note.empty());
        EXPECT_TRUE(cover_check(d, dc.columns).complete()) << d;
        EXPECT_TRUE(brute_missing(d, dc.columns.labels()).empty()) << d;
    }
}

TEST(Cover, DistinguishedColumnsMissCentralBlockFromTen) {
    // x^2 y^2 * m needs deg m <= d-3, so x^a y^b with a, b <= d-4 (outside
    // the corner columns) and a+b >= d+2 is in no column.
    for (int d = 10; d <= 16; ++d) {
        std::set<Monomial> expected;
        for (int a = 0; a <= d - 4; ++a)
            for (int b = 0; b <= d - 4; ++b)
                if (a + b >= d + 2) expected.insert({a, b});
        const DistinguishedColumns dc = distinguished_columns(d);
        EXPECT_EQ(cover_check(d, dc.columns).missing, expected) << d;
        EXPECT_EQ(brute_missing(d, dc.columns.labels()), expected) << d;
        EXPECT_FALSE(dc.note.empty());
    }
}

TEST(Cover, NoFourColumnCoverAtTen) {
    EXPECT_THROW(min_cover_search(10, 4), Error);
    const auto five = min_cover_search(10, 5);
    ASSERT_FALSE(five.empty());
    EXPECT_EQ(five.front().size(), 5u);
    for (const auto& c : five) EXPECT_TRUE(brute_missing(10, c.labels()).empty());
}

TEST(Cover, StragglersLieInTheCornerColumn) {
    // x^r y^(d-2-r) for r in {0, 1} is y^(d-3) times x^r y^(1-r).
    for (int d = 7; d <= 14; ++d) {
        const auto col = ProductMatrix(d).column({0, d - 3});
        for (int r = 0; r <= 1; ++r) EXPECT_NE(std::find(col.begin(), col.end(), Monomial{r, d - 2 - r}), col.end()) << d;
    }
}

TEST(Cover, CornerColumnsShareTheirCorner) {
    for (int d = 5; d <= 12; ++d) {
        const ProductMatrix q(d);
        const Monomial corner{d - 3, d - 3};
        const auto cx = q.column({d - 3, 0}), cy = q.column({0, d - 3});
        EXPECT_NE(std::find(cx.begin(), cx.end(), corner), cx.end());
        EXPECT_NE(std::find(cy.begin(), cy.end(), corner), cy.end());
    }
}

TEST(Cover, AgreesWithBruteForceOnArbitrarySets) {
    for (int d = 5; d <= 9; ++d) {
        const auto basis = adjoint_basis(d).monomials();
        // Every subset of the first few basis monomials plus the corner columns.
        for (unsigned mask = 1; mask < 64; ++mask) {
            std::vector<Monomial> cols;
            for (unsigned k = 0; k < 6; ++k)
                if (mask & (1u << k)) cols.push_back(basis[k]);
            const CoverReport r = cover_check(d, ColumnSet(d, cols));
            EXPECT_EQ(r.missing, brute_missing(d, cols));
            EXPECT_EQ(r.covered.size() + r.missing.size(), static_cast<std::size_t>(count_monomials_up_to(2 * d - 6)));
        }
    }
}

TEST(Cover, SexticMandatoryColumnsMissOnlyXSquaredYSquared) {
    const CoverReport r = cover_check(6, ColumnSet(6, parse_monomial_list("1,x^3,y^3")));
    EXPECT_EQ(r.missing, (std::set<Monomial>{{2, 2}}));
}

TEST(Cover, AddingAColumnNeverUncovers) {
    const int d = 8;
    const auto basis = adjoint_basis(d).monomials();
    std::vector<Monomial> cols{basis[0]};
    auto prev = cover_check(d, ColumnSet(d, cols)).missing;
    for (std::size_t k = 1; k < basis.size(); ++k) {
        cols.push_back(basis[k]);
        const auto now = cover_check(d, ColumnSet(d, cols)).missing;
        for (Monomial m : now) EXPECT_TRUE(prev.count(m));
        prev = now;
    }
}

TEST(Cover, SwapSymmetry) {
    for (int d = 7; d <= 13; ++d) {
        std::vector<Monomial> cols, swapped;
        const DistinguishedColumns dc = distinguished_columns(d);
        for (Monomial m : dc.columns.labels()) {
            cols.push_back(m);
            swapped.push_back(m.swapped());
        }
        std::set<Monomial> mirrored;
        for (Monomial m : cover_check(d, ColumnSet(d, cols)).missing) mirrored.insert(m.swapped());
        EXPECT_EQ(cover_check(d, ColumnSet(d, swapped)).missing, mirrored);
    }
}

TEST(Cover, ColumnSetRejectsBadLabels) {
    EXPECT_THROW(ColumnSet(6, parse_monomial_list("1,x^2*y^2")), InvalidArgument);
    EXPECT_THROW(ColumnSet(6, parse_monomial_list("1,1")), InvalidArgument);
}

TEST(MinCover, QuinticHasUniqueThreeCover) {
    const auto covers = min_cover_search(5, 4);
    ASSERT_EQ(covers.size(), 1u);
    EXPECT_EQ(covers[0].labels(), parse_monomial_list("1,x^2,y^2"));
    EXPECT_TRUE(distinguished_columns(5).fallback);
}

TEST(MinCover, SexticNeedsFourColumns) {
    const auto covers = min_cover_search(6, 4);
    ASSERT_FALSE(covers.empty());
    for (const auto& c : covers) {
        EXPECT_EQ(c.size(), 4u);
        EXPECT_TRUE(brute_missing(6, c.labels()).empty());
    }
    // No 3-subset of the basis covers.
    const auto basis = adjoint_basis(6).monomials();
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            for (std::size_t c = b + 1; c < basis.size(); ++c)
                EXPECT_FALSE(brute_missing(6, {basis[a], basis[b], basis[c]}).empty());
    EXPECT_EQ(covers.front().labels(), distinguished_columns(6).columns.labels());
    EXPECT_THROW(min_cover_search(6, 3), Error);
}

TEST(MinCover, Deterministic) {
    const auto a = min_cover_search(6, 4), b = min_cover_search(6, 4);
    EXPECT_EQ(a, b);
}

TEST(Redundancy, SexticCounts) {
    const RedundancyStats s = redundancy_stats(6, distinguished_columns(6).columns);
    EXPECT_EQ(s.distinct_products, 28u);
    EXPECT_EQ(s.quad_dim, 27u);
    EXPECT_EQ(s.excess, 1);
}

TEST(Redundancy, ExcessFormula) {
    // Over all monomials of degree <= 2d-6 (the full column set), the excess
    // is the number of cofactors m with deg m <= d-6.
    for (int d = 5; d <= 14; ++d) {
        const RedundancyStats s = redundancy_stats(d, ColumnSet(d, adjoint_basis(d).monomials()));
        EXPECT_EQ(s.distinct_products, brute_products(d).size());
        EXPECT_EQ(s.quad_dim, static_cast<std::size_t>(3 * genus(d) - 3));
        EXPECT_EQ(s.excess, static_cast<long long>((d - 4) * (d - 5) / 2)) << d;
    }
}

TEST(Redundancy, SepticDistinguishedSet) {
    const RedundancyStats s = redundancy_stats(7, distinguished_columns(7).columns);
    EXPECT_EQ(s.distinct_products, 45u);
    EXPECT_EQ(s.quad_dim, 42u);
    EXPECT_EQ(s.excess, 3);
}

TEST(Redundancy, RejectsNonCoveringSet) {
    EXPECT_THROW(redundancy_stats(10, distinguished_columns(10).columns), InvalidArgument);
}
