#include "nonobtuse/primitives.hpp"

#include "support/testgen.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace nonobtuse;

namespace {

Point pt(long long x, long long y)
{
    return Point(Rational(x), Rational(y));
}

// strict variant used as the independent grid-scan oracle
bool strictlyFeasibleCenter(const SimplePolygon& poly, const Point& x)
{
    const size_t m = poly.vertices.size();
    for(size_t i = 0; i < m; ++i)
    {
        const Point& p = poly.vertices[i];
        const Point& q = poly.vertices[(i + 1) % m];
        if(orientation(p, q, x) != Orientation::CounterClockwise)
            return false;
        if(sign(dot(p, x, q)) <= 0)
            return false;
        if(sign(dot(q, x, p)) <= 0)
            return false;
        const Point mid((p.x + q.x) / 2, (p.y + q.y) / 2);
        if(distanceSquared(x, mid) <= distanceSquared(p, q) / 4)
            return false;
    }
    return true;
}

bool gridScanFindsStrictPoint(const SimplePolygon& poly, int n = 200)
{
    Rational minX = poly.vertices[0].x, maxX = poly.vertices[0].x;
    Rational minY = poly.vertices[0].y, maxY = poly.vertices[0].y;
    for(const Point& p : poly.vertices)
    {
        minX = std::min(minX, p.x);
        maxX = std::max(maxX, p.x);
        minY = std::min(minY, p.y);
        maxY = std::max(maxY, p.y);
    }
    const Rational sx = (maxX - minX) / n;
    const Rational sy = (maxY - minY) / n;
    if(sx == 0 || sy == 0)
        return false;
    for(int i = 0; i <= n; ++i)
        for(int j = 0; j <= n; ++j)
            if(strictlyFeasibleCenter(poly, Point(minX + i * sx, minY + j * sy)))
                return true;
    return false;
}

void checkNonObtuseFan(const SimplePolygon& poly, const Point& center)
{
    const size_t m = poly.vertices.size();
    for(size_t i = 0; i < m; ++i)
    {
        const Point& p = poly.vertices[i];
        const Point& q = poly.vertices[(i + 1) % m];
        CHECK(orientation(p, q, center) == Orientation::CounterClockwise);
        CHECK(angleClassAt(center, p, q) != AngleClass::Obtuse);
        CHECK(angleClassAt(center, q, p) != AngleClass::Obtuse);
        CHECK(angleClassAt(p, center, q) != AngleClass::Obtuse);
    }
}

SimplePolygon instancePolygon(const Instance& inst)
{
    SimplePolygon poly;
    poly.vertices = inst.boundaryPolygon();
    return poly;
}

double nearestVertexDistance(const Cdt& cdt, double x, double y)
{
    double best = 1e300;
    for(int v = 0; v < cdt.allocatedVertexCount(); ++v)
        if(cdt.vertexAlive(v))
            best = std::min(best,
                            std::hypot(x - xAsDouble(cdt.point(v)), y - yAsDouble(cdt.point(v))));
    return best;
}

} // namespace

TEST_CASE("altitudeDrop on the worked examples")
{
    CHECK(altitudeDrop(pt(0, 0), pt(4, 0), pt(1, 1)) == pt(1, 0));
    CHECK(altitudeDrop(pt(0, 0), pt(5, 0), pt(1, 1)) == pt(1, 0));
    const Point foot = altitudeDrop(pt(0, 0), pt(1, 0), Point(Rational(9, 10), Rational(1, 10)));
    CHECK(foot == Point(Rational(9, 10), Rational(0)));
    CHECK_THROWS_AS(altitudeDrop(pt(0, 0), pt(1, 0), pt(0, 1)), GeometryError);
}

TEST_CASE("altitudeDrop splits 1000 random obtuse triangles into exact right triangles")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 9);
    int done = 0;
    while(done < 1000)
    {
        const Point a(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        const Point b(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        const Point c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        if(a == b || b == c || a == c)
            continue;
        if(orientation(a, b, c) == Orientation::Collinear)
            continue;
        const auto obtuse = obtuseVertexIndex(a, b, c);
        if(!obtuse)
            continue;
        const Point* pts[3] = {&a, &b, &c};
        const Point& apex = *pts[static_cast<size_t>(*obtuse)];
        const Point& u = *pts[static_cast<size_t>((*obtuse + 1) % 3)];
        const Point& w = *pts[static_cast<size_t>((*obtuse + 2) % 3)];
        const Point foot = altitudeDrop(a, b, c);
        // foot strictly inside the longest side
        CHECK(orientation(u, w, foot) == Orientation::Collinear);
        CHECK(sign(dot(foot, u, w)) < 0);
        // both sub-triangles are exactly right at the foot
        CHECK(angleClassAt(apex, foot, u) == AngleClass::Right);
        CHECK(angleClassAt(apex, foot, w) == AngleClass::Right);
        ++done;
    }
}

TEST_CASE("polygonCenter: unit square has the unique center (1/2, 1/2)")
{
    SimplePolygon square{{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}};
    const auto center = polygonCenter(square);
    REQUIRE(center.has_value());
    CHECK(center->x == Rational(1, 2));
    CHECK(center->y == Rational(1, 2));
    checkNonObtuseFan(square, *center);
}

TEST_CASE("polygonCenter: obtuse triangle has no center")
{
    SimplePolygon tri{{pt(0, 0), pt(4, 0), pt(1, 1)}};
    CHECK_FALSE(polygonCenter(tri).has_value());
}

TEST_CASE("polygonCenter: symmetric hexagon")
{
    SimplePolygon hex{{pt(2, 0), pt(1, 2), pt(-1, 2), pt(-2, 0), pt(-1, -2), pt(1, -2)}};
    const auto center = polygonCenter(hex);
    REQUIRE(center.has_value());
    CHECK(polygonCenterFeasible(hex, *center));
    checkNonObtuseFan(hex, *center);
}

TEST_CASE("polygonCenter soundness and desk-scale completeness vs grid oracle")
{
    int found = 0;
    for(uint64_t seed = 1; seed <= 24; ++seed)
    {
        for(const int nv : {3, 4, 5, 6, 7})
        {
            const Instance inst =
                testgen::randomStarPolygon(seed * 31 + static_cast<uint64_t>(nv), nv, 60);
            const SimplePolygon poly = instancePolygon(inst);
            const auto center = polygonCenter(poly);
            if(center)
            {
                ++found;
                CHECK(polygonCenterFeasible(poly, *center));
                checkNonObtuseFan(poly, *center);
            }
            else
            {
                // completeness at the grid-scan resolution
                CHECK_FALSE(gridScanFindsStrictPoint(poly));
            }
        }
    }
    CHECK(found > 0); // the sample contains solvable polygons
}

TEST_CASE("visibilityVoronoi on the square: one degenerate edge")
{
    const Cdt cdt = Cdt::build(testgen::unitSquare());
    const BoundedVoronoi vor = visibilityVoronoi(cdt);
    REQUIRE(vor.edges.size() == 1);
    const auto& e = vor.edges[0];
    // both triangles are right: circumcenters coincide at the square center
    CHECK(std::abs(e.x1 - e.x2) < 1e-12);
    CHECK(std::abs(e.y1 - e.y2) < 1e-12);
    CHECK(std::abs(e.x1 - 0.5) < 1e-12);
    CHECK(std::abs(e.y1 - 0.5) < 1e-12);
    CHECK_FALSE(e.pieces.empty());
}

TEST_CASE("visibilityVoronoi: constrained diagonal and lone triangle give no edges")
{
    CHECK(visibilityVoronoi(Cdt::build(testgen::squareWithDiagonal())).edges.empty());
    CHECK(visibilityVoronoi(Cdt::build(testgen::obtuseTriangle())).edges.empty());
}

TEST_CASE("visibilityVoronoi: sampled points are equidistant and see both sites")
{
    const Cdt cdt = Cdt::build(testgen::randomPointSet(5, 12, 50));
    const BoundedVoronoi vor = visibilityVoronoi(cdt);
    REQUIRE_FALSE(vor.edges.empty());
    for(const auto& e : vor.edges)
    {
        const double dx = e.x2 - e.x1, dy = e.y2 - e.y1;
        for(const auto& [lo, hi] : e.pieces)
        {
            for(int k = 1; k <= 5; ++k)
            {
                const double s = lo + (hi - lo) * k / 6.0;
                const double x = e.x1 + s * dx, y = e.y1 + s * dy;
                const double d1 = std::hypot(x - xAsDouble(cdt.point(e.site1)),
                                             y - yAsDouble(cdt.point(e.site1)));
                const double d2 = std::hypot(x - xAsDouble(cdt.point(e.site2)),
                                             y - yAsDouble(cdt.point(e.site2)));
                CHECK(std::abs(d1 - d2) <= 1e-9 * (d1 + d2 + 1.0));
                // visibility, checked exactly on the rationalized sample
                const Point sample(rationalFromDouble(x), rationalFromDouble(y));
                CHECK(cdt.visible(sample, cdt.point(e.site1)));
                CHECK(cdt.visible(sample, cdt.point(e.site2)));
            }
        }
    }
}

TEST_CASE("clippedCircumcircleContains")
{
    const Cdt plain = Cdt::build(testgen::unitSquare());
    for(const int t : plain.aliveTriangles())
    {
        // without constraints in the disk it equals the plain incircle test
        const Point q(Rational(1, 3), Rational(1, 3));
        const CirclePosition pos =
            inCircle(plain.triPoint(t, 0), plain.triPoint(t, 1), plain.triPoint(t, 2), q);
        CHECK(plain.clippedCircumcircleContains(t, q) == (pos == CirclePosition::Inside));
        CHECK(plain.clippedCircumcircleContains(t, plain.centroid(t)));
    }

    // a constrained chord separates the query from the triangle
    const Cdt split = Cdt::build(testgen::squareWithDiagonal());
    for(const int t : split.aliveTriangles())
    {
        const Point c = split.centroid(t);
        const Point mirror(c.y, c.x); // reflect across the diagonal y = x
        const CirclePosition pos =
            inCircle(split.triPoint(t, 0), split.triPoint(t, 1), split.triPoint(t, 2), mirror);
        REQUIRE(pos == CirclePosition::Inside); // the two triangles are cocircular
        CHECK_FALSE(split.clippedCircumcircleContains(t, mirror));
    }
}

TEST_CASE("voronoiInsertionPoint: symmetric configuration stays on the axis")
{
    const Instance inst =
        testgen::makeInstance("axis", {{0, 0}, {4, 0}, {2, 1}, {2, -6}}, {0, 3, 1, 2});
    Cdt cdt = Cdt::build(inst);
    int target = -1;
    for(const int t : cdt.obtuseTriangles())
    {
        const auto [i, j] = longestSideCorners(cdt, t);
        if(!cdt.isConstrained(cdt.tri(t).v[static_cast<size_t>(i)],
                              cdt.tri(t).v[static_cast<size_t>(j)]))
            target = t;
    }
    REQUIRE(target != -1);
    const auto v = voronoiInsertionPoint(cdt, target);
    REQUIRE(v.has_value());
    CHECK(cdt.clippedCircumcircleContains(target, *v));
    CHECK(std::abs(toDouble(v->x) - 2.0) < 1e-6);

    // inserting it removes the obtuse triangle it was generated for
    const TriRecord before = cdt.tri(target);
    cdt.insertPoint(*v);
    cdt.checkIntegrity();
    bool stillThere = false;
    for(const int t : cdt.aliveTriangles())
    {
        const TriRecord& tr = cdt.tri(t);
        const std::set<int> vs{tr.v[0], tr.v[1], tr.v[2]};
        stillThere |= vs == std::set<int>{before.v[0], before.v[1], before.v[2]};
    }
    CHECK_FALSE(stillThere);
}

TEST_CASE("voronoiInsertionPoint error paths")
{
    const Cdt rightTris = Cdt::build(testgen::unitSquare());
    for(const int t : rightTris.aliveTriangles())
        CHECK_THROWS_AS((void)voronoiInsertionPoint(rightTris, t), CdtError);
    const Cdt tri = Cdt::build(testgen::obtuseTriangle());
    // longest side constrained
    CHECK_THROWS_AS((void)voronoiInsertionPoint(tri, tri.obtuseTriangles()[0]), CdtError);
}

TEST_CASE("voronoiInsertionPoint matches a dense scan oracle on 5-point instances")
{
    int exercised = 0;
    for(const uint64_t seed : {17ULL, 23ULL, 29ULL, 31ULL, 57ULL})
    {
        const Instance inst = testgen::randomPointSet(seed, 5, 30);
        const Cdt cdt = Cdt::build(inst);
        const BoundedVoronoi vor = visibilityVoronoi(cdt);
        for(const int t : cdt.obtuseTriangles())
        {
            const auto [ci, cj] = longestSideCorners(cdt, t);
            if(cdt.isConstrained(cdt.tri(t).v[static_cast<size_t>(ci)],
                                 cdt.tri(t).v[static_cast<size_t>(cj)]))
                continue;
            const auto v = voronoiInsertionPoint(cdt, t, vor);
            if(!v)
                continue;
            ++exercised;
            CHECK(cdt.clippedCircumcircleContains(t, *v));

            // oracle: dense scan over every Voronoi edge parameterization,
            // membership checked exactly per sample
            double oracleBest = -1;
            double slack = 0;
            for(const auto& e : vor.edges)
            {
                const double dx = e.x2 - e.x1, dy = e.y2 - e.y1;
                slack = std::max(slack, std::hypot(dx, dy) / 200.0);
                for(int k = 0; k <= 200; ++k)
                {
                    const double s = k / 200.0;
                    const double x = e.x1 + s * dx, y = e.y1 + s * dy;
                    const Point sample(rationalFromDouble(x), rationalFromDouble(y));
                    if(!cdt.clippedCircumcircleContains(t, sample))
                        continue;
                    oracleBest = std::max(oracleBest, nearestVertexDistance(cdt, x, y));
                }
            }
            if(oracleBest < 0)
                continue;
            const double implF = nearestVertexDistance(cdt, toDouble(v->x), toDouble(v->y));
            CHECK(oracleBest - implF <= slack + 0.05 * oracleBest + 1e-9);
        }
    }
    CHECK(exercised > 0);
}

TEST_CASE("circleArrangementCells: single obtuse triangle")
{
    const Cdt cdt = Cdt::build(testgen::obtuseTriangle());
    const auto cells = circleArrangementCells(cdt);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].conflictSet == cdt.obtuseTriangles());
    CHECK(cells[0].polygonIds.size() == 3);
    CHECK(conflictSetOf(cdt, cells[0].samplePoint) == cells[0].conflictSet);
}

TEST_CASE("circleArrangementCells: two overlapping obtuse disks give three cells")
{
    const Instance inst =
        testgen::makeInstance("two-obtuse", {{0, 0}, {3, 0}, {4, 1}, {1, 1}}, {0, 1, 2, 3});
    const Cdt cdt = Cdt::build(inst);
    REQUIRE(cdt.aliveTriangleCount() == 2);
    REQUIRE(cdt.obtuseTriangles().size() == 2);
    const auto cells = circleArrangementCells(cdt);
    REQUIRE(cells.size() == 3);
    const auto all = cdt.aliveTriangles();
    CHECK(cells[0].conflictSet == std::vector<int>{all[0]});
    CHECK(cells[1].conflictSet == std::vector<int>{all[0], all[1]});
    CHECK(cells[2].conflictSet == std::vector<int>{all[1]});
    for(const auto& cell : cells)
        CHECK(conflictSetOf(cdt, cell.samplePoint) == cell.conflictSet);
}

TEST_CASE("circleArrangementCells: empty without obtuse triangles")
{
    CHECK(circleArrangementCells(Cdt::build(testgen::unitSquare())).empty());
    CHECK(circleArrangementCells(Cdt::build(testgen::squareWithDiagonal())).empty());
}
