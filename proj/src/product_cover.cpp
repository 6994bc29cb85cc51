#include "planeperiods/product_cover.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "planeperiods/error.hpp"

namespace planeperiods {

namespace {

void require_degree(int d, int min_d, const char* op) {
    if (d < min_d)
        throw InvalidArgument("product-cover", std::string(op) + ": degree must be >= " + std::to_string(min_d) +
                                                   ", got " + std::to_string(d));
}

// Position of a monomial of degree <= 2d-6 in the graded enumeration.
std::size_t target_position(Monomial m) {
    const int deg = m.degree();
    return static_cast<std::size_t>(count_monomials_up_to(deg - 1) + (deg - m.xdeg));
}

}  // namespace

ProductMatrix::ProductMatrix(int d) : basis_((require_degree(d, 4, "build_product_matrix"), d)) {}

std::vector<Monomial> ProductMatrix::column(Monomial label) const {
    auto j = basis_.index_of(label);
    if (!j) throw InvalidArgument("product-cover", "column label " + to_string(label) + " is not an adjoint monomial");
    std::vector<Monomial> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i, *j));
    return out;
}

ProductMatrix build_product_matrix(int d) { return ProductMatrix(d); }

ColumnSet::ColumnSet(int d, std::vector<Monomial> labels) : d_(d), labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw InvalidArgument("product-cover", "column labels must be distinct");
    for (Monomial m : labels_) {
        if (m.xdeg < 0 || m.ydeg < 0 || m.degree() > d - 3)
            throw InvalidArgument("product-cover", "column label " + to_string(m) + " has degree > d-3 = " +
                                                       std::to_string(d - 3));
    }
}

bool ColumnSet::contains(Monomial m) const { return std::binary_search(labels_.begin(), labels_.end(), m); }

std::vector<std::size_t> ColumnSet::indices() const {
    std::vector<std::size_t> out;
    for (Monomial m : labels_) out.push_back(target_position(m));
    return out;
}

std::string to_string(const ColumnSet& cols) {
    std::string out = "{";
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ", ";
        out += to_string(cols.labels()[i]);
    }
    return out + "}";
}

CoverReport cover_check(int d, const ColumnSet& cols) {
    require_degree(d, 4, "cover_check");
    if (cols.degree() != d) throw InvalidArgument("product-cover", "column set was built for another degree");
    const AdjointBasis basis(d);
    CoverReport report;
    report.d = d;
    for (Monomial c : cols.labels()) {
        for (Monomial m : basis) {
            if (!report.covered.insert(c * m).second) ++report.duplicate_count;
        }
    }
    for (Monomial t : monomials_up_to(2 * d - 6))
        if (!report.covered.count(t)) report.missing.insert(t);
    report.distinct_count = report.covered.size();
    return report;
}

std::vector<ColumnSet> min_cover_search(int d, std::size_t max_size) {
    require_degree(d, 4, "min_cover_search");
    const AdjointBasis basis(d);
    const std::size_t g = basis.size();
    if (max_size > g)
        throw InvalidArgument("product-cover", "min_cover_search: max_size exceeds genus " + std::to_string(g));

    const auto targets = static_cast<std::size_t>(count_monomials_up_to(2 * d - 6));
    std::vector<boost::dynamic_bitset<>> coverage(g, boost::dynamic_bitset<>(targets));
    for (std::size_t j = 0; j < g; ++j)
        for (std::size_t i = 0; i < g; ++i) coverage[j].set(target_position(basis[i] * basis[j]));

    std::vector<ColumnSet> winners;
    for (std::size_t k = 1; k <= max_size && winners.empty(); ++k) {
        // Lexicographic k-subsets of basis positions; since the basis is in
        // graded order this is the graded order of label tuples.
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            boost::dynamic_bitset<> acc(targets);
            for (std::size_t j : pick) acc |= coverage[j];
            if (acc.all()) {
                std::vector<Monomial> labels;
                for (std::size_t j : pick) labels.push_back(basis[j]);
                winners.emplace_back(d, std::move(labels));
            }
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == g - k + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    if (winners.empty())
        throw Error("product-cover", "no covering column set of size <= " + std::to_string(max_size) +
                                         " exists for degree " + std::to_string(d));
    return winners;
}

DistinguishedColumns distinguished_columns(int d) {
    require_degree(d, 5, "distinguished_columns");
    const Monomial one{0, 0}, xs{d - 3, 0}, ys{0, d - 3};
    if (d >= 7) {
        ColumnSet cols(d, {one, xs, ys, Monomial{2, 2}});
        std::string note;
        // x^a y^b with a, b <= d-4 and a+b >= d+2 is in none of the columns.
        if (d >= 10)
            note = "degree " + std::to_string(d) + ": " + to_string(cols) + " does not cover (x^" + std::to_string(d - 4) +
                   "*y^" + std::to_string(d - 4) + " is missing); at least 5 columns are needed";
        return {std::move(cols), false, std::move(note)};
    }

    const auto covers = min_cover_search(d, 4);
    for (const ColumnSet& cols : covers) {
        if (cols.contains(one) && cols.contains(xs) && cols.contains(ys)) {
            std::string note = "degree " + std::to_string(d) +
                               ": x^2*y^2 is not an adjoint monomial; using searched cover " + to_string(cols) +
                               " with " + std::to_string(cols.size()) + " columns";
            return {cols, true, std::move(note)};
        }
    }
    throw Error("product-cover", "no minimum cover contains the mandatory columns");
}

RedundancyStats redundancy_stats(int d, const ColumnSet& cols) {
    const CoverReport report = cover_check(d, cols);
    if (!report.complete())
        throw InvalidArgument("product-cover", "redundancy_stats: column set " + to_string(cols) + " does not cover");
    RedundancyStats stats;
    stats.distinct_products = report.distinct_count;
    stats.quad_dim = static_cast<std::size_t>(3 * genus(d) - 3);
    stats.excess = static_cast<long long>(stats.distinct_products) - static_cast<long long>(stats.quad_dim);
    return stats;
}

}  // namespace planeperiods
