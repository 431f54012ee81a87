#include "rangehit/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace rangehit {

HalfSpace::HalfSpace(std::vector<Rational> n, Rational off) : normal(std::move(n)), offset(std::move(off)) {
    if (normal.empty()) throw std::invalid_argument("half-space needs a nonempty normal");
    if (std::all_of(normal.begin(), normal.end(), [](const Rational& c) { return c == 0; }))
        throw std::invalid_argument("half-space normal must be nonzero");
}

Disc::Disc(Point c, Rational r_sq) : center(std::move(c)), radius_sq(std::move(r_sq)) {
    if (center.dim() != 2) throw std::invalid_argument("disc center must be 2-dimensional");
    if (radius_sq < 0) throw std::invalid_argument("disc radius_sq must be nonnegative");
}

int range_dim(const Range& r) {
    return std::visit([](const auto& x) { return x.dim(); }, r);
}

GeometricInstance::GeometricInstance(int d, std::vector<Point> pts, std::vector<Range> rs)
    : dim(d), points(std::move(pts)), ranges(std::move(rs)) {
    if (dim <= 0) throw std::invalid_argument("instance dimension must be positive");
    for (const Point& p : points)
        if (p.dim() != dim) throw std::invalid_argument("point dimension does not match instance");
    for (const Range& r : ranges) {
        if (std::holds_alternative<Disc>(r) && dim != 2)
            throw std::invalid_argument("discs are only defined in R^2");
        if (range_dim(r) != dim) throw std::invalid_argument("range dimension does not match instance");
    }
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Rational squared_distance(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("squared_distance: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        Rational d = a.coords[i] - b.coords[i];
        acc += d * d;
    }
    return acc;
}

bool contains(const Range& range, const Point& point) {
    if (range_dim(range) != point.dim()) throw std::invalid_argument("contains: dimension mismatch");
    if (const auto* hs = std::get_if<HalfSpace>(&range)) return dot(hs->normal, point.coords) >= hs->offset;
    const Disc& d = std::get<Disc>(range);
    return squared_distance(d.center, point) <= d.radius_sq;
}

namespace {

Rational det3(const Rational m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Volume determinant of the tetrahedron (a,b,c,d); zero iff coplanar.
Rational coplanarity_det(const Point& a, const Point& b, const Point& c, const Point& d) {
    Rational m[3][3];
    const Point* rows[3] = {&b, &c, &d};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = rows[i]->coords[j] - a.coords[j];
    return det3(m);
}

}  // namespace

bool general_position_3d(const std::vector<Point>& points) {
    if (points.size() != 6) throw std::invalid_argument("general_position_3d: exactly six points required");
    for (const Point& p : points)
        if (p.dim() != 3) throw std::invalid_argument("general_position_3d: points must be 3-dimensional");
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                for (int d = c + 1; d < 6; ++d)
                    if (coplanarity_det(points[a], points[b], points[c], points[d]) == 0) return false;
    return true;
}

}  // namespace rangehit
