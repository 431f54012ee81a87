// Exact geometric primitives: points, half-spaces, discs, instances.
#pragma once

#include <variant>
#include <vector>

#include "rangehit/rational.hpp"

namespace rangehit {

struct Point {
    std::vector<Rational> coords;

    Point() = default;
    explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const Point&, const Point&) = default;
};

// Closed half-space {x : <normal, x> >= offset}.
struct HalfSpace {
    std::vector<Rational> normal;
    Rational offset;

    HalfSpace(std::vector<Rational> n, Rational off);

    int dim() const { return static_cast<int>(normal.size()); }

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

// Closed disc in the plane, kept as center + squared radius so membership
// stays rational.
struct Disc {
    Point center;
    Rational radius_sq;

    Disc(Point c, Rational r_sq);

    int dim() const { return 2; }

    friend bool operator==(const Disc&, const Disc&) = default;
};

using Range = std::variant<HalfSpace, Disc>;

int range_dim(const Range& r);

struct GeometricInstance {
    int dim = 0;
    std::vector<Point> points;
    std::vector<Range> ranges;

    GeometricInstance() = default;
    GeometricInstance(int d, std::vector<Point> pts, std::vector<Range> rs);

    friend bool operator==(const GeometricInstance&, const GeometricInstance&) = default;
};

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Exact Sum (a_i - b_i)^2. Throws on dimension mismatch.
Rational squared_distance(const Point& a, const Point& b);

// Exact closed-set membership. Throws on dimension mismatch.
bool contains(const Range& range, const Point& point);

// True iff no four of the six 3-d points are coplanar (all 15 quadruple
// determinants nonzero). Throws unless given exactly six points in R^3.
bool general_position_3d(const std::vector<Point>& points);

}  // namespace rangehit
