#include "planeperiods/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "planeperiods/error.hpp"

namespace planeperiods {

std::string to_string(Monomial m) {
    auto factor = [](char var, int power) {
        std::string s(1, var);
        if (power > 1) s += "^" + std::to_string(power);
        return s;
    };
    if (m.xdeg == 0 && m.ydeg == 0) return "1";
    std::string out;
    if (m.xdeg > 0) out = factor('x', m.xdeg);
    if (m.ydeg > 0) {
        if (!out.empty()) out += "*";
        out += factor('y', m.ydeg);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Monomial parse_monomial(std::string_view text) {
    const std::string_view original = text;
    text = trim(text);
    auto fail = [&](const char* why) -> Monomial {
        throw FormatError("monomial", "cannot parse monomial '" + std::string(original) + "': " + why);
    };
    if (text.empty()) return fail("empty");
    if (text == "1") return {};

    Monomial m;
    while (true) {
        std::size_t star = text.find('*');
        std::string_view factor = trim(text.substr(0, star));
        if (factor.empty()) return fail("empty factor");
        char var = factor.front();
        if (var != 'x' && var != 'y') return fail("unknown variable");
        int power = 1;
        factor.remove_prefix(1);
        factor = trim(factor);
        if (!factor.empty()) {
            if (factor.front() != '^') return fail("expected '^'");
            factor.remove_prefix(1);
            factor = trim(factor);
            auto [ptr, ec] = std::from_chars(factor.data(), factor.data() + factor.size(), power);
            if (ec != std::errc{} || ptr != factor.data() + factor.size() || power < 0)
                return fail("bad exponent");
        }
        (var == 'x' ? m.xdeg : m.ydeg) += power;
        if (star == std::string_view::npos) break;
        text.remove_prefix(star + 1);
    }
    return m;
}

std::vector<Monomial> parse_monomial_list(std::string_view text) {
    std::vector<Monomial> out;
    while (true) {
        std::size_t comma = text.find(',');
        out.push_back(parse_monomial(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<Monomial> monomials_up_to(int max_degree) {
    std::vector<Monomial> out;
    if (max_degree < 0) return out;
    out.reserve(static_cast<std::size_t>(count_monomials_up_to(max_degree)));
    for (int deg = 0; deg <= max_degree; ++deg)
        for (int a = deg; a >= 0; --a) out.push_back({a, deg - a});
    return out;
}

int genus(int d) {
    if (d < 3) throw InvalidArgument("monomial", "genus: degree must be >= 3, got " + std::to_string(d));
    return (d - 1) * (d - 2) / 2;
}

AdjointBasis::AdjointBasis(int d) : d_(d) {
    if (d < 4) throw InvalidArgument("monomial", "adjoint basis needs degree >= 4, got " + std::to_string(d));
    monomials_ = monomials_up_to(d - 3);
}

std::optional<std::size_t> AdjointBasis::index_of(Monomial m) const noexcept {
    if (m.xdeg < 0 || m.ydeg < 0 || m.degree() > d_ - 3) return std::nullopt;
    // Position in graded order: all monomials of smaller degree, then the
    // offset within the degree (x-power descending).
    const int deg = m.degree();
    return static_cast<std::size_t>(count_monomials_up_to(deg - 1) + (deg - m.xdeg));
}

AdjointBasis adjoint_basis(int d) { return AdjointBasis(d); }

AdjointBasis adjoint_monomials(int d) {
    if (d == 3) return AdjointBasis(3, monomials_up_to(0));
    return AdjointBasis(d);
}

std::optional<std::size_t> monomial_index(Monomial m, const AdjointBasis& basis) {
    return basis.index_of(m);
}

}  // namespace planeperiods
