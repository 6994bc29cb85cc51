#include "planeperiods/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <limits>

#include "planeperiods/error.hpp"

namespace planeperiods {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw NumericalError("homology", "integer overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw NumericalError("homology", "integer overflow");
    return r;
}

// Graph of sheets (ids 0..n-1) and ramification points (ids n..).
struct SheetGraph {
    int sheets = 0;
    std::vector<std::vector<int>> place_of;  // [branch][sheet] -> vertex id
    std::vector<int> branch_of;              // per place, indexed id - sheets
    std::vector<std::vector<int>> members;   // per place, sheets in cycle order

    explicit SheetGraph(const MonodromyRep& mono) : sheets(mono.sheets()) {
        for (const auto& perm : mono.perms) {
            const int k = static_cast<int>(place_of.size());
            place_of.emplace_back(static_cast<std::size_t>(sheets));
            for (const auto& c : cycles(perm)) {
                const int id = sheets + static_cast<int>(members.size());
                for (int s : c) place_of.back()[static_cast<std::size_t>(s)] = id;
                members.push_back(c);
                branch_of.push_back(k);
            }
        }
    }

    [[nodiscard]] int vertices() const { return sheets + static_cast<int>(members.size()); }
    [[nodiscard]] bool is_sheet(int v) const { return v < sheets; }

    [[nodiscard]] std::vector<int> neighbours(int v) const {
        std::vector<int> out;
        if (is_sheet(v)) {
            for (const auto& row : place_of) out.push_back(row[static_cast<std::size_t>(v)]);
        } else {
            out = members[static_cast<std::size_t>(v - sheets)];
        }
        return out;
    }
};

// Flow of a cycle on edge (sheet, branch), oriented sheet -> ramification point.
std::vector<std::vector<long long>> edge_flow(const CycleWord& w, int sheets, int branches) {
    std::vector<std::vector<long long>> flow(static_cast<std::size_t>(sheets),
                                             std::vector<long long>(static_cast<std::size_t>(branches), 0));
    const std::size_t len = w.steps.size();
    for (std::size_t l = 0; l < len; ++l) {
        const auto& step = w.steps[l];
        const int next = w.steps[(l + 1) % len].sheet;
        flow[static_cast<std::size_t>(step.sheet)][static_cast<std::size_t>(step.branch)] += 1;
        flow[static_cast<std::size_t>(next)][static_cast<std::size_t>(step.branch)] -= 1;
    }
    return flow;
}

std::vector<std::vector<mpz_class>> to_mpz(const IntMatrix& a) {
    std::vector<std::vector<mpz_class>> m;
    for (const auto& row : a) {
        std::vector<mpz_class> r;
        for (long long v : row) r.emplace_back(static_cast<long>(v));
        m.push_back(std::move(r));
    }
    return m;
}

// Fraction-free elimination; returns the rank and, for square input, the determinant.
std::pair<int, mpz_class> bareiss(std::vector<std::vector<mpz_class>> m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    mpz_class prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    mpz_class det = 0;
    if (rows == cols && r == rows) det = rows ? mpz_class(sign * m[rows - 1][cols - 1]) : mpz_class(1);
    if (rows == 0 && cols == 0) det = 1;
    return {static_cast<int>(r), det};
}

}  // namespace

std::string to_string(const CycleWord& w) {
    std::string s;
    for (const auto& step : w.steps) s += "(" + std::to_string(step.sheet + 1) + "," + std::to_string(step.branch) + ")";
    return s;
}

std::vector<CycleWord> raw_cycles(const MonodromyRep& mono) {
    if (mono.sheets() == 0) return {};
    if (!mono.transitive()) throw InvalidArgument("homology", "monodromy is not transitive (reducible curve)");
    const SheetGraph graph(mono);
    const int n = graph.sheets;
    const int branches = static_cast<int>(mono.perms.size());

    std::vector<int> parent(static_cast<std::size_t>(graph.vertices()), -1), depth(parent.size(), -1);
    std::vector<std::vector<bool>> tree(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(branches)));
    std::deque<int> queue{0};
    depth[0] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : graph.neighbours(v)) {
            if (depth[static_cast<std::size_t>(u)] >= 0) continue;
            depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
            parent[static_cast<std::size_t>(u)] = v;
            const int sheet = graph.is_sheet(v) ? v : u;
            const int place = graph.is_sheet(v) ? u : v;
            tree[static_cast<std::size_t>(sheet)][static_cast<std::size_t>(graph.branch_of[static_cast<std::size_t>(place - n)])] = true;
            queue.push_back(u);
        }
    }

    std::vector<CycleWord> out;
    for (int s = 0; s < n; ++s) {
        for (int k = 0; k < branches; ++k) {
            if (tree[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)]) continue;
            // Close the non-tree edge s -- place through the tree.
            int u = s, v = graph.place_of[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
            std::vector<int> up_u{u}, up_v{v};
            while (u != v) {
                if (depth[static_cast<std::size_t>(u)] >= depth[static_cast<std::size_t>(v)]) {
                    u = parent[static_cast<std::size_t>(u)];
                    up_u.push_back(u);
                } else {
                    v = parent[static_cast<std::size_t>(v)];
                    up_v.push_back(v);
                }
            }
            // Closed walk s, place, ..., lca, ..., s; the final s is dropped.
            std::vector<int> walk{s};
            walk.insert(walk.end(), up_v.begin(), up_v.end());
            for (std::size_t i = up_u.size() - 1; i-- > 0;) walk.push_back(up_u[i]);
            walk.pop_back();
            CycleWord w;
            for (std::size_t i = 0; i + 1 < walk.size(); i += 2)
                w.steps.push_back({walk[i], graph.branch_of[static_cast<std::size_t>(walk[i + 1] - n)]});
            out.push_back(std::move(w));
        }
    }
    return out;
}

IntMatrix intersection_pairing(const MonodromyRep& mono, const std::vector<CycleWord>& cycles_in) {
    const int n = mono.sheets();
    const int branches = static_cast<int>(mono.perms.size());
    const SheetGraph graph(mono);
    std::vector<std::vector<std::vector<long long>>> flows;
    for (const auto& w : cycles_in) flows.push_back(edge_flow(w, n, branches));

    const std::size_t count = cycles_in.size();
    IntMatrix K(count, std::vector<long long>(count, 0));
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            const auto& fa = flows[a];
            const auto& fb = flows[b];
            long long total = 0;
            // Sheet vertices: half-edges in counterclockwise order of the loops.
            for (int s = 0; s < n; ++s) {
                long long prefix = 0;
                for (int k = 0; k < branches; ++k) {
                    prefix = checked_add(prefix, fb[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)]);
                    total = checked_add(total, -checked_mul(fa[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)], prefix));
                }
            }
            // Ramification points: sheets s, sigma(s), ... counterclockwise;
            // outgoing flow there is minus the edge flow.
            for (std::size_t p = 0; p < graph.members.size(); ++p) {
                const auto k = static_cast<std::size_t>(graph.branch_of[p]);
                long long prefix = 0;
                for (int s : graph.members[p]) {
                    const long long ga = -fa[static_cast<std::size_t>(s)][k];
                    const long long gb = -fb[static_cast<std::size_t>(s)][k];
                    total = checked_add(total, -checked_mul(ga, prefix));
                    prefix = checked_add(prefix, gb);
                }
            }
            K[a][b] = total;
        }
    }
    return K;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t inner = b.size(), cols = inner ? b[0].size() : 0;
    IntMatrix out(a.size(), std::vector<long long>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
        }
    return out;
}

IntMatrix transpose(const IntMatrix& a) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    IntMatrix out(cols, std::vector<long long>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
    return out;
}

long long determinant(const IntMatrix& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw InvalidArgument("homology", "determinant of a non-square matrix");
    const mpz_class det = bareiss(to_mpz(a)).second;
    if (!det.fits_slong_p()) throw NumericalError("homology", "determinant overflows");
    return det.get_si();
}

int rank(const IntMatrix& a) { return bareiss(to_mpz(a)).first; }

IntMatrix standard_form(int g) {
    const auto n = static_cast<std::size_t>(2 * g);
    IntMatrix J(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < static_cast<std::size_t>(g); ++i) {
        J[i][i + static_cast<std::size_t>(g)] = 1;
        J[i + static_cast<std::size_t>(g)][i] = -1;
    }
    return J;
}

SymplecticBasis symplectic_reduce(const IntMatrix& K) {
    const std::size_t n = K.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (K[i].size() != n) throw InvalidArgument("homology", "pairing matrix is not square");
        for (std::size_t j = 0; j < n; ++j)
            if (K[i][j] != -K[j][i]) throw InvalidArgument("homology", "pairing matrix is not skew-symmetric");
    }

    // Rows of B are the current basis vectors; P = B K B^T is kept in step.
    IntMatrix B(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) B[i][i] = 1;
    IntMatrix P = K;
    // row r <- row r + q * row s, with P updated on both sides.
    auto add_row = [&](std::size_t r, std::size_t s, long long q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) B[r][j] = checked_add(B[r][j], checked_mul(q, B[s][j]));
        for (std::size_t j = 0; j < n; ++j) P[r][j] = checked_add(P[r][j], checked_mul(q, P[s][j]));
        for (std::size_t i = 0; i < n; ++i) P[i][r] = checked_add(P[i][r], checked_mul(q, P[i][s]));
    };
    auto floor_div = [](long long a, long long b) {
        long long q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    };

    std::vector<bool> used(n, false);
    std::vector<std::size_t> alphas, betas;
    for (;;) {
        std::size_t e = n, f = n;
        for (std::size_t r = 0; r < n; ++r) {
            if (used[r]) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (used[c] || P[r][c] <= 0) continue;
                if (e == n || P[r][c] < P[e][f]) {
                    e = r;
                    f = c;
                }
            }
        }
        if (e == n) break;
        const long long v = P[e][f];
        if (v != 1) {
            // Look for a row whose pairing with e or f leaves a smaller remainder.
            bool reduced = false;
            for (std::size_t r = 0; r < n && !reduced; ++r) {
                if (used[r] || r == e || r == f) continue;
                if (P[r][f] % v != 0) {
                    add_row(r, e, -floor_div(P[r][f], v));
                    reduced = true;
                } else if (P[r][e] % v != 0) {
                    add_row(r, f, floor_div(P[r][e], v));
                    reduced = true;
                }
            }
            if (reduced) continue;
            throw NumericalError("homology", "pivot " + std::to_string(v) +
                                                 " divides every pairing: the form is not unimodular");
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (used[r] || r == e || r == f) continue;
            const long long to_f = P[r][f], to_e = P[r][e];
            add_row(r, e, -to_f);
            add_row(r, f, to_e);
        }
        used[e] = used[f] = true;
        alphas.push_back(e);
        betas.push_back(f);
    }

    SymplecticBasis out;
    out.genus = static_cast<int>(alphas.size());
    for (std::size_t i : alphas) out.S.push_back(B[i]);
    for (std::size_t i : betas) out.S.push_back(B[i]);
    for (std::size_t r = 0; r < n; ++r)
        if (!used[r]) {
            for (std::size_t c = 0; c < n; ++c)
                if (P[r][c] != 0) throw NumericalError("homology", "reduction left a nonzero pairing (internal error)");
            out.S.push_back(B[r]);
        }
    if (n > 0) {
        const long long det = determinant(out.S);
        if (det != 1 && det != -1) throw NumericalError("homology", "change of basis is not unimodular (internal error)");
    }
    return out;
}

CanonicalHomology canonical_homology(const MonodromyRep& mono) {
    CanonicalHomology out;
    out.raw = raw_cycles(mono);
    out.pairing = intersection_pairing(mono, out.raw);
    const int expected = mono.genus();
    const int r = rank(out.pairing);
    if (r != 2 * expected)
        throw NumericalError("homology", "intersection pairing has rank " + std::to_string(r) + ", expected 2g = " +
                                             std::to_string(2 * expected));
    auto basis = symplectic_reduce(out.pairing);
    out.genus = basis.genus;
    out.change_of_basis = std::move(basis.S);
    return out;
}

}  // namespace planeperiods
