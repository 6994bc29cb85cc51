#include "planeperiods/exact_poly.hpp"

#include <algorithm>

#include "planeperiods/error.hpp"

namespace planeperiods::exact {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) {
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k)
        if (!p[static_cast<std::size_t>(k)].is_zero()) return k;
    return -1;
}

Poly derivative(const Poly& p) {
    Poly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(GaussRational(static_cast<long>(k)) * p[k]);
    trim(out);
    return out;
}

GaussRational evaluate(const Poly& p, const GaussRational& x) {
    GaussRational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

// a <- a mod b, b nonzero and trimmed.
void reduce_mod(Poly& a, const Poly& b) {
    const GaussRational inv = b.back().inverse();
    trim(a);
    while (a.size() >= b.size()) {
        const GaussRational factor = a.back() * inv;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k + 1 < b.size(); ++k) a[shift + k] -= factor * b[k];
        a.pop_back();
        trim(a);
    }
}

void make_monic(Poly& p) {
    if (p.empty()) return;
    const GaussRational inv = p.back().inverse();
    for (auto& c : p) c *= inv;
}

}  // namespace

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        reduce_mod(a, b);
        make_monic(a);  // keeps coefficient growth in check
        std::swap(a, b);
    }
    make_monic(a);
    return a;
}

Poly divide_exact(const Poly& a_in, const Poly& b_in) {
    Poly a = a_in, b = b_in;
    trim(a);
    trim(b);
    if (b.empty()) throw InvalidArgument("exact", "division by the zero polynomial");
    if (a.size() < b.size()) {
        if (a.empty()) return {};
        throw Error("exact", "divide_exact: divisor does not divide");
    }
    Poly q(a.size() - b.size() + 1);
    const GaussRational inv = b.back().inverse();
    while (a.size() >= b.size()) {
        const GaussRational factor = a.back() * inv;
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t k = 0; k + 1 < b.size(); ++k) a[shift + k] -= factor * b[k];
        a.pop_back();
        trim(a);
    }
    if (!a.empty()) throw Error("exact", "divide_exact: divisor does not divide");
    trim(q);
    return q;
}

Poly squarefree_part(const Poly& a) {
    Poly g = gcd(a, derivative(a));
    if (degree(g) <= 0) {
        Poly out = a;
        trim(out);
        return out;
    }
    return divide_exact(a, g);
}

std::optional<modular::Poly> reduce(const Poly& p) {
    modular::Poly out;
    out.reserve(p.size());
    for (const auto& c : p) {
        auto r = modular::reduce(c);
        if (!r) return std::nullopt;
        out.push_back(*r);
    }
    modular::trim(out);
    return out;
}

// ---------------------------------------------------------------------------

BiPoly::BiPoly(std::map<Monomial, GaussRational> terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

int BiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
    return deg;
}

int BiPoly::degree_in_y() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.ydeg);
    return deg;
}

GaussRational BiPoly::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRational{} : it->second;
}

Poly BiPoly::y_coefficient(int k) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        if (m.ydeg != k) continue;
        if (out.size() <= static_cast<std::size_t>(m.xdeg)) out.resize(static_cast<std::size_t>(m.xdeg) + 1);
        out[static_cast<std::size_t>(m.xdeg)] += c;
    }
    trim(out);
    return out;
}

Poly BiPoly::at_x(const GaussRational& x0) const {
    const int ny = degree_in_y();
    Poly out(static_cast<std::size_t>(std::max(ny + 1, 0)));
    for (int k = 0; k <= ny; ++k) out[static_cast<std::size_t>(k)] = exact::evaluate(y_coefficient(k), x0);
    trim(out);
    return out;
}

GaussRational BiPoly::evaluate(const GaussRational& x, const GaussRational& y) const {
    return exact::evaluate(at_x(x), y);
}

BiPoly BiPoly::dx() const {
    std::map<Monomial, GaussRational> out;
    for (const auto& [m, c] : terms_)
        if (m.xdeg > 0) out[{m.xdeg - 1, m.ydeg}] += GaussRational(static_cast<long>(m.xdeg)) * c;
    return BiPoly(std::move(out));
}

BiPoly BiPoly::dy() const {
    std::map<Monomial, GaussRational> out;
    for (const auto& [m, c] : terms_)
        if (m.ydeg > 0) out[{m.xdeg, m.ydeg - 1}] += GaussRational(static_cast<long>(m.ydeg)) * c;
    return BiPoly(std::move(out));
}

BiPoly BiPoly::homogeneous_part(int deg) const {
    std::map<Monomial, GaussRational> out;
    for (const auto& [m, c] : terms_)
        if (m.degree() == deg) out.emplace(m, c);
    return BiPoly(std::move(out));
}

BiPoly BiPoly::times(Monomial m) const {
    std::map<Monomial, GaussRational> out;
    for (const auto& [t, c] : terms_) out.emplace(t * m, c);
    return BiPoly(std::move(out));
}

void BiPoly::add_term(Monomial m, const GaussRational& c) {
    auto& slot = terms_[m];
    slot += c;
    if (slot.is_zero()) terms_.erase(m);
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

BiPoly BiPoly::sheared(const GaussRational& t) const {
    // (x + t y)^a y^b expanded binomially.
    BiPoly out;
    for (const auto& [m, c] : terms_) {
        mpz_class binom = 1;
        GaussRational tpow(1);
        for (int k = 0; k <= m.xdeg; ++k) {
            // term C(a,k) x^(a-k) (t y)^k y^b
            out.add_term({m.xdeg - k, m.ydeg + k}, c * tpow * GaussRational(mpq_class(binom)));
            binom = binom * (m.xdeg - k) / (k + 1);
            tpow *= t;
        }
    }
    return out;
}

std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // Highest degree first reads naturally.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += to_string(it->second);
        if (it->first != Monomial{}) out += "*" + to_string(it->first);
    }
    return out;
}

GaussRational determinant(std::vector<std::vector<GaussRational>> m) {
    const std::size_t n = m.size();
    GaussRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return GaussRational{};
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const GaussRational inv = m[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const GaussRational f = m[r][col] * inv;
            for (std::size_t k = col + 1; k < n; ++k)
                if (!m[col][k].is_zero()) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

GaussRational sylvester_resultant(const Poly& a, int m, const Poly& b, int n) {
    const auto size = static_cast<std::size_t>(m + n);
    if (size == 0) return GaussRational(1);
    std::vector<std::vector<GaussRational>> s(size, std::vector<GaussRational>(size));
    auto coeff = [](const Poly& p, int k) {
        return k >= 0 && static_cast<std::size_t>(k) < p.size() ? p[static_cast<std::size_t>(k)] : GaussRational{};
    };
    // Rows hold coefficients from the leading term down.
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = coeff(a, m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = coeff(b, n - k);
    return determinant(std::move(s));
}

Poly resultant_y(const BiPoly& f, const BiPoly& g, int degree_bound) {
    const int m = f.degree_in_y(), n = g.degree_in_y();
    if (m < 0 || n < 0) throw InvalidArgument("exact", "resultant of a zero polynomial");
    const auto points = static_cast<std::size_t>(degree_bound + 1);

    std::vector<GaussRational> xs, values;
    xs.reserve(points);
    values.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        // Points symmetric around zero keep the interpolation numbers small.
        const long v = (i % 2 == 0) ? static_cast<long>(i / 2) : -static_cast<long>(i / 2 + 1);
        xs.emplace_back(v);
        Poly fa = f.at_x(xs.back()), ga = g.at_x(xs.back());
        values.push_back(sylvester_resultant(fa, m, ga, n));
    }

    // Newton divided differences, then expand to the monomial basis.
    std::vector<GaussRational> coef = values;
    for (std::size_t level = 1; level < points; ++level)
        for (std::size_t i = points - 1; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);

    Poly result{coef[points - 1]};
    for (std::size_t i = points - 1; i-- > 0;) {
        // result <- result * (x - xs[i]) + coef[i]
        Poly next(result.size() + 1);
        for (std::size_t k = 0; k < result.size(); ++k) {
            next[k + 1] += result[k];
            next[k] -= result[k] * xs[i];
        }
        next[0] += coef[i];
        result = std::move(next);
    }
    trim(result);
    return result;
}

std::vector<std::size_t> independent_rows(const std::vector<std::vector<GaussRational>>& rows) {
    std::vector<std::pair<std::size_t, std::vector<GaussRational>>> echelon;
    std::vector<std::size_t> accepted;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<GaussRational> v = rows[r];
        for (const auto& [pivot, row] : echelon) {
            if (v[pivot].is_zero()) continue;
            const GaussRational f = v[pivot];
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!row[k].is_zero()) v[k] -= f * row[k];
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
        if (pivot == v.size()) continue;
        const GaussRational inv = v[pivot].inverse();
        for (auto& c : v) c *= inv;
        echelon.emplace_back(pivot, std::move(v));
        accepted.push_back(r);
    }
    return accepted;
}

}  // namespace planeperiods::exact
