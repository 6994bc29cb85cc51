#include "planeperiods/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace planeperiods {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

cplx point(const Piece& p, double t) {
    return std::visit(overloaded{[t](const Segment& s) { return s.from + t * (s.to - s.from); },
                                 [t](const Arc& a) { return a.center + std::polar(a.radius, a.start_angle + t * a.sweep); }},
                      p);
}

cplx tangent(const Piece& p, double t) {
    return std::visit(overloaded{[](const Segment& s) { return s.to - s.from; },
                                 [t](const Arc& a) {
                                     return cplx(0, a.sweep) * std::polar(a.radius, a.start_angle + t * a.sweep);
                                 }},
                      p);
}

double length(const Piece& p) {
    return std::visit(overloaded{[](const Segment& s) { return std::abs(s.to - s.from); },
                                 [](const Arc& a) { return a.radius * std::abs(a.sweep); }},
                      p);
}

Piece reversed(const Piece& p) {
    return std::visit(overloaded{[](const Segment& s) -> Piece { return Segment{s.to, s.from}; },
                                 [](const Arc& a) -> Piece {
                                     return Arc{a.center, a.radius, a.start_angle + a.sweep, -a.sweep};
                                 }},
                      p);
}

Piece sub_piece(const Piece& p, double t0, double t1) {
    return std::visit(overloaded{[&](const Segment& s) -> Piece { return Segment{point(s, t0), point(s, t1)}; },
                                 [&](const Arc& a) -> Piece {
                                     return Arc{a.center, a.radius, a.start_angle + t0 * a.sweep, (t1 - t0) * a.sweep};
                                 }},
                      p);
}

double distance(const Piece& p, cplx q) {
    return std::visit(
        overloaded{[q](const Segment& s) {
                       const cplx d = s.to - s.from;
                       const double len2 = std::norm(d);
                       double t = len2 > 0 ? ((q - s.from) * std::conj(d)).real() / len2 : 0.0;
                       t = std::clamp(t, 0.0, 1.0);
                       return std::abs(s.from + t * d - q);
                   },
                   [q](const Arc& a) {
                       const cplx rel = q - a.center;
                       const double r = std::abs(rel);
                       double best = std::min(std::abs(point(Arc(a), 0) - q), std::abs(point(Arc(a), 1) - q));
                       if (r == 0) return a.radius;
                       // Is the direction of q within the swept angular range?
                       const double lo = std::min(a.start_angle, a.start_angle + a.sweep);
                       const double span = std::abs(a.sweep);
                       if (span >= 2 * std::numbers::pi) return std::abs(r - a.radius);
                       double offset = std::arg(rel) - lo;
                       offset = std::fmod(offset, 2 * std::numbers::pi);
                       if (offset < 0) offset += 2 * std::numbers::pi;
                       if (offset <= span) best = std::min(best, std::abs(r - a.radius));
                       return best;
                   }},
        p);
}

double Path::length() const {
    double total = 0;
    for (const auto& p : pieces_) total += planeperiods::length(p);
    return total;
}

Path Path::reversed() const {
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) out.push_back(planeperiods::reversed(*it));
    return Path(std::move(out));
}

double Path::clearance(std::span<const cplx> points) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& piece : pieces_)
        for (const cplx& q : points) best = std::min(best, distance(piece, q));
    return best;
}

}  // namespace planeperiods
