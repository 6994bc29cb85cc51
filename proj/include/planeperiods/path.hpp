#pragma once

#include <span>
#include <variant>
#include <vector>

#include "planeperiods/roots.hpp"

namespace planeperiods {

struct Segment {
    cplx from, to;
};

/// center + radius * exp(i*(start_angle + t*sweep)), t in [0, 1]; positive
/// sweep is counterclockwise.
struct Arc {
    cplx center;
    double radius;
    double start_angle;
    double sweep;
};

using Piece = std::variant<Segment, Arc>;

cplx point(const Piece& p, double t);
cplx tangent(const Piece& p, double t);  // d/dt
double length(const Piece& p);
Piece reversed(const Piece& p);
/// The part of p for parameters in [t0, t1].
Piece sub_piece(const Piece& p, double t0, double t1);
/// Smallest distance from the piece to q.
double distance(const Piece& p, cplx q);

/// Polyline of segments and arcs in the x-plane.
class Path {
public:
    Path() = default;
    explicit Path(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

    [[nodiscard]] const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    [[nodiscard]] bool empty() const noexcept { return pieces_.empty(); }
    [[nodiscard]] cplx start() const { return point(pieces_.front(), 0); }
    [[nodiscard]] cplx end() const { return point(pieces_.back(), 1); }
    [[nodiscard]] double length() const;
    [[nodiscard]] Path reversed() const;
    /// Minimum distance to any of the points.
    [[nodiscard]] double clearance(std::span<const cplx> points) const;

    void append(Piece p) { pieces_.push_back(p); }
    friend Path operator+(Path a, const Path& b) {
        a.pieces_.insert(a.pieces_.end(), b.pieces_.begin(), b.pieces_.end());
        return a;
    }

private:
    std::vector<Piece> pieces_;
};

}  // namespace planeperiods
