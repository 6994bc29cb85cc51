#include "planeperiods/modular.hpp"

namespace planeperiods::modular {

Fp Fp::pow(std::uint64_t e) const noexcept {
    Fp base = *this, acc(1);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

namespace {

std::optional<Fp> reduce_q(const mpq_class& q) {
    const mpz_class p(static_cast<unsigned long>(kPrime));
    mpz_class n = q.get_num() % p;
    if (n < 0) n += p;
    mpz_class d = q.get_den() % p;
    if (d == 0) return std::nullopt;
    return Fp(n.get_ui()) * Fp(d.get_ui()).inverse();
}

}  // namespace

std::optional<Fp2> reduce(const GaussRational& z) {
    auto a = reduce_q(z.re());
    auto b = reduce_q(z.im());
    if (!a || !b) return std::nullopt;
    return Fp2{*a, *b};
}

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly derivative(const Poly& p) {
    Poly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(Fp2{Fp(k), Fp(0)} * p[k]);
    trim(out);
    return out;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        const Fp2 inv = b.back().inverse();
        while (a.size() >= b.size()) {
            const Fp2 factor = a.back() * inv;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = a[shift + k] - factor * b[k];
            a.pop_back();
            trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const Fp2 inv = a.back().inverse();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

std::vector<std::size_t> independent_rows(const std::vector<std::vector<Fp2>>& rows) {
    // Echelon basis stored as (pivot column, normalized row).
    std::vector<std::pair<std::size_t, std::vector<Fp2>>> echelon;
    std::vector<std::size_t> accepted;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<Fp2> v = rows[r];
        for (const auto& [pivot, row] : echelon) {
            if (v[pivot].is_zero()) continue;
            const Fp2 f = v[pivot];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = v[k] - f * row[k];
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
        if (pivot == v.size()) continue;
        const Fp2 inv = v[pivot].inverse();
        for (auto& c : v) c = c * inv;
        echelon.emplace_back(pivot, std::move(v));
        accepted.push_back(r);
    }
    return accepted;
}

}  // namespace planeperiods::modular
