#include "nonobtuse/geometry.hpp"

#include <doctest.h>

#include <random>

using namespace nonobtuse;

namespace {

Point pt(long long x, long long y)
{
    return Point(Rational(x), Rational(y));
}

Point pt(long long xn, long long xd, long long yn, long long yd)
{
    return Point(Rational(xn, xd), Rational(yn, yd));
}

// small random rationals, deterministic
struct RandomRationalGen {
    std::mt19937_64 rng;
    explicit RandomRationalGen(uint64_t seed) : rng(seed) {}
    Rational coord(int span = 20, int maxDen = 12)
    {
        std::uniform_int_distribution<int> num(-span, span);
        std::uniform_int_distribution<int> den(1, maxDen);
        return Rational(num(rng), den(rng));
    }
    Point point() { return Point(coord(), coord()); }
};

} // namespace

TEST_CASE("orientation on the canonical examples")
{
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orientation::CounterClockwise);
    CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == Orientation::Collinear);
    CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == Orientation::Clockwise);
}

TEST_CASE("orientation is antisymmetric under argument swaps")
{
    RandomRationalGen gen(7);
    for(int i = 0; i < 200; ++i)
    {
        const Point a = gen.point(), b = gen.point(), c = gen.point();
        const auto o = orientation(a, b, c);
        const auto flip = [](Orientation x) {
            return static_cast<Orientation>(-static_cast<int>(x));
        };
        CHECK(orientation(b, a, c) == flip(o));
        CHECK(orientation(a, c, b) == flip(o));
        CHECK(orientation(c, b, a) == flip(o));
    }
}

TEST_CASE("inCircle against the circle through (0,0),(2,0),(0,2)")
{
    const Point p = pt(0, 0), q = pt(2, 0), r = pt(0, 2);
    CHECK(inCircle(p, q, r, pt(1, 1)) == CirclePosition::Inside);
    CHECK(inCircle(p, q, r, pt(2, 2)) == CirclePosition::On);
    CHECK(inCircle(p, q, r, pt(5, 5)) == CirclePosition::Outside);
    CHECK_THROWS_AS(inCircle(pt(0, 0), pt(1, 1), pt(2, 2), pt(0, 1)), GeometryError);
}

TEST_CASE("inCircle agrees with the explicit circumcenter computation")
{
    RandomRationalGen gen(11);
    int done = 0;
    while(done < 1000)
    {
        const Point a = gen.point(), b = gen.point(), c = gen.point();
        if(orientation(a, b, c) == Orientation::Collinear)
            continue;
        const Point s = gen.point();
        // circumcenter by solving the two perpendicular-bisector equations
        const Rational a2 = a.x * a.x + a.y * a.y;
        const Rational b2 = b.x * b.x + b.y * b.y;
        const Rational c2 = c.x * c.x + c.y * c.y;
        const Rational d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
        const Point center((a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
                           (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d);
        const Rational r2 = distanceSquared(center, a);
        const Rational q2 = distanceSquared(center, s);
        const CirclePosition expected = q2 < r2    ? CirclePosition::Inside
                                        : q2 == r2 ? CirclePosition::On
                                                   : CirclePosition::Outside;
        CHECK(inCircle(a, b, c, s) == expected);
        ++done;
    }
}

TEST_CASE("angleClassAt examples")
{
    CHECK(angleClassAt(pt(0, 0), pt(1, 1), pt(4, 0)) == AngleClass::Obtuse);
    CHECK(angleClassAt(pt(1, 0), pt(0, 0), pt(0, 1)) == AngleClass::Right);
    CHECK(angleClassAt(pt(2, 0), pt(0, 0), pt(1, 2)) == AngleClass::Acute);
    CHECK_THROWS_AS(angleClassAt(pt(1, 1), pt(1, 1), pt(2, 2)), GeometryError);
}

TEST_CASE("obtuseVertexIndex examples")
{
    CHECK(obtuseVertexIndex(pt(0, 0), pt(4, 0), pt(1, 1)) == 2);
    CHECK_FALSE(obtuseVertexIndex(pt(0, 0), pt(1, 0), pt(0, 1)).has_value());
    CHECK_FALSE(obtuseVertexIndex(pt(0, 0), pt(2, 0), pt(1, 2)).has_value());
    CHECK_THROWS_AS(obtuseVertexIndex(pt(0, 0), pt(1, 1), pt(2, 2)), GeometryError);
}

TEST_CASE("at most one obtuse vertex on random triangles")
{
    RandomRationalGen gen(13);
    int done = 0;
    while(done < 500)
    {
        const Point a = gen.point(), b = gen.point(), c = gen.point();
        if(orientation(a, b, c) == Orientation::Collinear)
            continue;
        int obtuse = 0;
        if(angleClassAt(b, a, c) == AngleClass::Obtuse)
            ++obtuse;
        if(angleClassAt(a, b, c) == AngleClass::Obtuse)
            ++obtuse;
        if(angleClassAt(a, c, b) == AngleClass::Obtuse)
            ++obtuse;
        CHECK(obtuse <= 1);
        ++done;
    }
}

TEST_CASE("segmentsProperlyIntersect examples")
{
    CHECK(segmentsProperlyIntersect(Segment{pt(0, 0), pt(2, 2)}, Segment{pt(0, 2), pt(2, 0)}));
    CHECK_FALSE(segmentsProperlyIntersect(Segment{pt(0, 0), pt(1, 0)}, Segment{pt(2, 0), pt(3, 0)}));
    // endpoint touch only (T junction) is not proper
    CHECK_FALSE(segmentsProperlyIntersect(Segment{pt(0, 0), pt(2, 0)}, Segment{pt(1, 0), pt(1, 1)}));
    // collinear overlap of positive length is proper
    CHECK(segmentsProperlyIntersect(Segment{pt(0, 0), pt(2, 0)}, Segment{pt(1, 0), pt(3, 0)}));
    // shared endpoint only
    CHECK_FALSE(segmentsProperlyIntersect(Segment{pt(0, 0), pt(1, 0)}, Segment{pt(1, 0), pt(1, 1)}));
}

TEST_CASE("pointInPolygon on a square")
{
    const std::vector<Point> square{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
    CHECK(pointInPolygon(pt(1, 1), square) == RegionPosition::Inside);
    CHECK(pointInPolygon(pt(3, 1), square) == RegionPosition::Outside);
    CHECK(pointInPolygon(pt(1, 0), square) == RegionPosition::Boundary);
    CHECK(pointInPolygon(pt(0, 0), square) == RegionPosition::Boundary);
    CHECK(pointInPolygon(pt(1, 2), square) == RegionPosition::Boundary);
    CHECK(pointInPolygon(pt(-1, 0), square) == RegionPosition::Outside);
}

TEST_CASE("rationalize recovers simple coordinates")
{
    const auto always = [](const Point&) { return true; };
    const auto r1 = rationalize(0.5, 0.5, always);
    REQUIRE(r1.has_value());
    CHECK(r1->x == Rational(1, 2));
    CHECK(r1->y == Rational(1, 2));

    const auto r2 = rationalize(1.0 / 3.0, 0.0, always);
    REQUIRE(r2.has_value());
    CHECK(r2->x == Rational(1, 3));
    CHECK(r2->y == 0);
}

TEST_CASE("rationalize respects the feasibility predicate")
{
    // require a point strictly inside a small disk around (1/3, 2/7)
    const Point target(Rational(1, 3), Rational(2, 7));
    const Rational radius2(1, 1000000);
    const auto feasible = [&](const Point& p) { return distanceSquared(p, target) < radius2; };
    const auto r = rationalize(toDouble(target.x), toDouble(target.y), feasible);
    REQUIRE(r.has_value());
    CHECK(feasible(*r));

    const auto never = [](const Point&) { return false; };
    CHECK_FALSE(rationalize(0.25, 0.75, never).has_value());
}

TEST_CASE("rational serialization")
{
    CHECK(rationalToString(Rational(1, 2)) == "1/2");
    CHECK(rationalToString(Rational(3)) == "3");
    CHECK(rationalToString(Rational(-6, 4)) == "-3/2");
    CHECK(rationalFromString("123/456") == Rational(41, 152));
    CHECK(rationalFromString("-7") == Rational(-7));
    CHECK(rationalToString(rationalFromString("123/456")) == "41/152");
    CHECK_THROWS_AS(rationalFromString("1/0"), GeometryError);
    CHECK_THROWS_AS(rationalFromString("abc"), GeometryError);
    CHECK_THROWS_AS(rationalFromString(""), GeometryError);
}
