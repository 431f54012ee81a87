#include <doctest.h>

#include "rangehit/geom.hpp"
#include "support.hpp"

using namespace rangehit;

namespace {

Point pt(std::vector<Rational> c) { return Point(std::move(c)); }

Point p3(int x, int y, int z) { return pt({Rational(x), Rational(y), Rational(z)}); }

}  // namespace

TEST_CASE("half-space construction validates the normal") {
    CHECK_THROWS_AS(HalfSpace({}, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(HalfSpace({Rational(0), Rational(0)}, Rational(1)), std::invalid_argument);
    const HalfSpace h({Rational(1), Rational(0)}, Rational(2));
    CHECK(h.dim() == 2);
}

TEST_CASE("disc construction validates center and radius") {
    CHECK_THROWS_AS(Disc(p3(0, 0, 0), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(Disc(pt({Rational(0), Rational(0)}), Rational(-1)), std::invalid_argument);
    const Disc d(pt({Rational(0), Rational(0)}), Rational(0));  // a single point is fine
    CHECK(d.dim() == 2);
}

TEST_CASE("instance construction cross-checks dimensions") {
    CHECK_THROWS_AS(GeometricInstance(0, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(GeometricInstance(2, {p3(0, 0, 0)}, {}), std::invalid_argument);
    CHECK_THROWS_AS(
        GeometricInstance(2, {pt({Rational(0), Rational(0)})},
                          {Range(HalfSpace({Rational(1), Rational(0), Rational(0)}, Rational(0)))}),
        std::invalid_argument);
    // Discs live in the plane only.
    const std::string msg = support::thrown_message([] {
        GeometricInstance(3, {p3(0, 0, 0)}, {Range(Disc(pt({Rational(0), Rational(0)}), Rational(1)))});
    });
    CHECK(msg.find("R^2") != std::string::npos);
    const GeometricInstance ok(2, {pt({Rational(1), Rational(2)})},
                               {Range(Disc(pt({Rational(0), Rational(0)}), Rational(9)))});
    CHECK(ok.dim == 2);
}

TEST_CASE("dot and squared_distance are exact and strict about dimensions") {
    CHECK(dot({Rational(1), Rational(2)}, {Rational(3), Rational(4)}) == 11);
    CHECK_THROWS_AS(dot({Rational(1)}, {Rational(1), Rational(2)}), std::invalid_argument);
    CHECK(squared_distance(pt({Rational(0), Rational(0)}), pt({Rational(3), Rational(4)})) == 25);
    CHECK(squared_distance(pt({make_rational(1, 3)}), pt({make_rational(2, 3)})) == make_rational(1, 9));
    CHECK_THROWS_AS(squared_distance(p3(0, 0, 0), pt({Rational(0)})), std::invalid_argument);
}

TEST_CASE("containment is closed-set exact") {
    const Range hs = HalfSpace({Rational(1), Rational(0)}, Rational(1));
    CHECK(contains(hs, pt({Rational(2), Rational(5)})));
    CHECK(contains(hs, pt({Rational(1), Rational(-3)})));  // boundary counts
    CHECK(!contains(hs, pt({make_rational(999999, 1000000), Rational(0)})));

    const Range disc = Disc(pt({Rational(0), Rational(0)}), Rational(1));
    CHECK(contains(disc, pt({Rational(1), Rational(0)})));  // boundary counts
    CHECK(contains(disc, pt({make_rational(1, 2), make_rational(1, 2)})));
    CHECK(!contains(disc, pt({Rational(1), make_rational(1, 1000000)})));

    CHECK_THROWS_AS(contains(hs, p3(0, 0, 0)), std::invalid_argument);
}

TEST_CASE("general position requires six 3-d points") {
    CHECK_THROWS_AS(general_position_3d({p3(0, 0, 0)}), std::invalid_argument);
    std::vector<Point> five(5, p3(0, 0, 0));
    CHECK_THROWS_AS(general_position_3d(five), std::invalid_argument);
    std::vector<Point> wrong_dim(6, pt({Rational(0), Rational(0)}));
    CHECK_THROWS_AS(general_position_3d(wrong_dim), std::invalid_argument);
}

TEST_CASE("general position detects coplanar quadruples") {
    // Two axis-aligned clusters with parallel internal offsets: u2 - u1 and
    // w2 - w1 both equal (1,0,0), so u1,u2,w1,w2 are coplanar.
    const std::vector<Point> parallel{p3(0, 0, 0),       p3(1, 0, 0),       p3(0, 1, 0),
                                      p3(100, 100, 100), p3(101, 100, 100), p3(100, 101, 100)};
    CHECK(!general_position_3d(parallel));

    // Four points sharing the z = 0 plane.
    const std::vector<Point> flat{p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0),
                                  p3(1, 1, 0), p3(0, 0, 1), p3(1, 1, 1)};
    CHECK(!general_position_3d(flat));

    const std::vector<Point> good{p3(0, 0, 0),        p3(3, 1, 0),        p3(1, 0, 2),
                                  p3(100, 97, 103),   p3(105, 99, 101),   p3(102, 107, 100)};
    CHECK(general_position_3d(good));
}
