#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace nonobtuse {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational 2D point. All combinatorial decisions in the project are
/// made through the exact predicates below; floating point only appears in
/// numeric candidate searches whose results are re-verified exactly.
struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // lexicographic, for ordered containers
    bool operator<(const Point& o) const
    {
        if(x != o.x)
            return x < o.x;
        return y < o.y;
    }
};

struct Segment {
    Point a;
    Point b;
};

enum class Orientation : int {
    Clockwise = -1,
    Collinear = 0,
    CounterClockwise = 1,
};

enum class CirclePosition : int {
    Outside = -1,
    On = 0,
    Inside = 1,
};

enum class AngleClass : int {
    Obtuse = -1,
    Right = 0,
    Acute = 1,
};

enum class RegionPosition : int {
    Outside = -1,
    Boundary = 0,
    Inside = 1,
};

int sign(const Rational& v);

// (a-o) x (b-o)
Rational cross(const Point& o, const Point& a, const Point& b);
// (a-o) . (b-o), i.e. the angle test at o
Rational dot(const Point& o, const Point& a, const Point& b);
Rational distanceSquared(const Point& a, const Point& b);

Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Position of s relative to the circle through p, q, r. Throws on collinear
/// p, q, r.
CirclePosition inCircle(const Point& p, const Point& q, const Point& r, const Point& s);

/// Classification of the angle at b in the corner a-b-c. Throws if a or c
/// coincides with b.
AngleClass angleClassAt(const Point& a, const Point& b, const Point& c);

/// Index (0..2) of the obtuse vertex of triangle (p0,p1,p2), or nullopt for a
/// non-obtuse triangle. Throws on collinear input. At most one vertex can be
/// obtuse.
std::optional<int> obtuseVertexIndex(const Point& p0, const Point& p1, const Point& p2);

/// True iff the open segments share at least one point: a proper crossing or
/// a collinear overlap of positive length. Touching at endpoints only is not
/// proper.
bool segmentsProperlyIntersect(const Segment& s1, const Segment& s2);

/// Given collinear a, b, p: p lies on the closed segment [a,b].
bool collinearOnSegment(const Point& a, const Point& b, const Point& p);

/// Exact point-vs-simple-polygon test (vertices in order, either winding).
RegionPosition pointInPolygon(const Point& p, std::span<const Point> polygon);

/// Twice the signed area of a polygon (positive when counterclockwise).
Rational polygonSignedArea2(std::span<const Point> polygon);

struct RationalizeOptions {
    /// Per-coordinate absolute nearness bound. <= 0 picks a default scaled by
    /// the coordinate magnitude.
    double tolerance = 0.0;
    /// Cap on exact feasibility evaluations.
    int maxAttempts = 400;
};

/// Search for an exact rational point near (x, y) that satisfies `feasible`,
/// trying denominators in increasing size: continued-fraction convergents of
/// each coordinate first, then power-of-two grids with small perturbations,
/// finally the exact binary expansion of the doubles themselves. Returns
/// nothing once the attempt budget is spent.
std::optional<Point> rationalize(double x,
                                 double y,
                                 const std::function<bool(const Point&)>& feasible,
                                 const RationalizeOptions& options = {});

// --- serialization -------------------------------------------------------

/// "num/den", or just "num" when the denominator is 1.
std::string rationalToString(const Rational& v);
/// Parses the format above; throws GeometryError on malformed input or a
/// zero denominator. The result is canonical.
Rational rationalFromString(const std::string& text);
/// Exact conversion (doubles are dyadic rationals). Throws on NaN/inf.
Rational rationalFromDouble(double v);
double toDouble(const Rational& v);

inline double xAsDouble(const Point& p) { return toDouble(p.x); }
inline double yAsDouble(const Point& p) { return toDouble(p.y); }

} // namespace nonobtuse
