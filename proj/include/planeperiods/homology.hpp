#pragma once

#include <vector>

#include "planeperiods/monodromy.hpp"

namespace planeperiods {

using IntMatrix = std::vector<std::vector<long long>>;

/// One passage of a cycle: leave the basepoint on `sheet`, run out to branch
/// point `branch`, wind around it until reaching the sheet of the next step,
/// and return. The last step returns to the first step's sheet.
struct CycleStep {
    int sheet;
    int branch;
    friend bool operator==(const CycleStep&, const CycleStep&) = default;
};

struct CycleWord {
    std::vector<CycleStep> steps;
    friend bool operator==(const CycleWord&, const CycleWord&) = default;
};

/// "(s1,b1)(s2,b2)..." with 1-based sheets and 0-based branch indices.
std::string to_string(const CycleWord& w);

/// Fundamental cycles of the graph whose vertices are the sheets over the
/// basepoint and the ramification points over each branch point (one per
/// cycle of its permutation); sheet s is joined to the ramification point
/// containing it over every branch point. There are 2g + c - 1 of them, c
/// being the number of points at infinity. Throws InvalidArgument when the
/// monodromy is not transitive.
std::vector<CycleWord> raw_cycles(const MonodromyRep& mono);

/// Intersection numbers from the cyclic order of the loops at the basepoint
/// and of the sheets around each ramification point. a.b = +1 when a crosses
/// b from right to left, so (a, b) tangents are counterclockwise.
IntMatrix intersection_pairing(const MonodromyRep& mono, const std::vector<CycleWord>& cycles);

struct SymplecticBasis {
    int genus = 0;
    /// Unimodular, S K S^T = diag(J, 0) with J the standard 2g x 2g form;
    /// rows 0..g-1 are the alphas, g..2g-1 the betas, the rest the kernel.
    IntMatrix S;
};

/// Deterministic integer reduction: pivot on the smallest positive entry of
/// the pairing among unused rows (lowest row, then column, on ties), reduce
/// by integer division until the pivot is 1, then clear. Throws
/// InvalidArgument if K is not skew, NumericalError on a pivot that cannot
/// be brought to 1 (non-unimodular pairing).
SymplecticBasis symplectic_reduce(const IntMatrix& K);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
/// Exact (fraction-free) determinant and rank.
long long determinant(const IntMatrix& a);
int rank(const IntMatrix& a);
/// The standard symplectic form of size 2g.
IntMatrix standard_form(int g);

struct CanonicalHomology {
    std::vector<CycleWord> raw;
    IntMatrix pairing;
    IntMatrix change_of_basis;
    int genus = 0;

    /// Coefficients of alpha_i / beta_i over the raw cycles.
    [[nodiscard]] const std::vector<long long>& alpha(int i) const { return change_of_basis[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::vector<long long>& beta(int i) const {
        return change_of_basis[static_cast<std::size_t>(genus + i)];
    }
};

/// raw_cycles + intersection_pairing + symplectic_reduce, checking that the
/// rank of the pairing is twice the Riemann-Hurwitz genus.
CanonicalHomology canonical_homology(const MonodromyRep& mono);

}  // namespace planeperiods
