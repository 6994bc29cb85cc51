#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "planeperiods/monomial.hpp"

namespace planeperiods {

/// g x g grid of adjoint-monomial products: entries[i][j] = basis[i] * basis[j].
/// Quadratic differentials are spanned by these products (times (dx/f_y)^2).
class ProductMatrix {
public:
    explicit ProductMatrix(int d);

    [[nodiscard]] int degree() const noexcept { return basis_.degree(); }
    [[nodiscard]] std::size_t size() const noexcept { return basis_.size(); }
    [[nodiscard]] const AdjointBasis& basis() const noexcept { return basis_; }
    [[nodiscard]] Monomial at(std::size_t row, std::size_t col) const { return basis_[row] * basis_[col]; }

    /// Column labelled by `label` (which must be an adjoint monomial).
    [[nodiscard]] std::vector<Monomial> column(Monomial label) const;

private:
    AdjointBasis basis_;
};

ProductMatrix build_product_matrix(int d);

/// Distinct adjoint monomials naming columns of Q (and of the period matrix).
/// Labels are kept in basis order.
class ColumnSet {
public:
    /// Throws InvalidArgument on duplicates or labels of degree > d-3.
    ColumnSet(int d, std::vector<Monomial> labels);

    [[nodiscard]] int degree() const noexcept { return d_; }
    [[nodiscard]] const std::vector<Monomial>& labels() const noexcept { return labels_; }
    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] bool contains(Monomial m) const;
    [[nodiscard]] std::vector<std::size_t> indices() const;

    friend bool operator==(const ColumnSet&, const ColumnSet&) = default;

private:
    int d_;
    std::vector<Monomial> labels_;
};

std::string to_string(const ColumnSet& cols);

struct DistinguishedColumns {
    ColumnSet columns;
    /// True for d in {5, 6}, where x^2*y^2 is not an adjoint monomial and the
    /// set is found by search instead.
    bool fallback = false;
    std::string note;
};

/// {1, x^(d-3), y^(d-3), x^2 y^2} for d >= 7; searched fallback for d = 5, 6.
/// The d >= 7 set only covers for d <= 9; for d >= 10 `note` says so.
DistinguishedColumns distinguished_columns(int d);

struct CoverReport {
    int d = 0;
    std::set<Monomial> covered;
    /// Monomials of degree <= 2d-6 not produced by any column.
    std::set<Monomial> missing;
    std::size_t distinct_count = 0;
    std::size_t duplicate_count = 0;

    [[nodiscard]] bool complete() const noexcept { return missing.empty(); }
};

CoverReport cover_check(int d, const ColumnSet& cols);

/// All column sets of the minimum size (<= max_size) covering every monomial
/// of degree <= 2d-6, in graded order of their label tuples. Throws Error if
/// no such cover exists.
std::vector<ColumnSet> min_cover_search(int d, std::size_t max_size);

struct RedundancyStats {
    std::size_t distinct_products = 0;
    std::size_t quad_dim = 0;
    long long excess = 0;
};

/// Throws InvalidArgument when `cols` does not cover.
RedundancyStats redundancy_stats(int d, const ColumnSet& cols);

}  // namespace planeperiods
