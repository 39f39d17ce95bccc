#include "nonobtuse/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace nonobtuse {

int sign(const Rational& v)
{
    if(v > 0)
        return 1;
    if(v < 0)
        return -1;
    return 0;
}

Rational cross(const Point& o, const Point& a, const Point& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational dot(const Point& o, const Point& a, const Point& b)
{
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

Rational distanceSquared(const Point& a, const Point& b)
{
    const Rational dx = a.x - b.x;
    const Rational dy = a.y - b.y;
    return dx * dx + dy * dy;
}

Orientation orientation(const Point& p, const Point& q, const Point& r)
{
    switch(sign(cross(p, q, r)))
    {
    case 1:
        return Orientation::CounterClockwise;
    case -1:
        return Orientation::Clockwise;
    default:
        return Orientation::Collinear;
    }
}

CirclePosition inCircle(const Point& p, const Point& q, const Point& r, const Point& s)
{
    const int orient = sign(cross(p, q, r));
    if(orient == 0)
        throw GeometryError("inCircle: defining points are collinear");

    const Rational ax = p.x - s.x, ay = p.y - s.y;
    const Rational bx = q.x - s.x, by = q.y - s.y;
    const Rational cx = r.x - s.x, cy = r.y - s.y;
    const Rational a2 = ax * ax + ay * ay;
    const Rational b2 = bx * bx + by * by;
    const Rational c2 = cx * cx + cy * cy;
    const Rational det =
        ax * (by * c2 - cy * b2) - ay * (bx * c2 - cx * b2) + a2 * (bx * cy - cx * by);

    switch(sign(det) * orient)
    {
    case 1:
        return CirclePosition::Inside;
    case -1:
        return CirclePosition::Outside;
    default:
        return CirclePosition::On;
    }
}

AngleClass angleClassAt(const Point& a, const Point& b, const Point& c)
{
    if(a == b || c == b)
        throw GeometryError("angleClassAt: coincident points");
    switch(sign(dot(b, a, c)))
    {
    case 1:
        return AngleClass::Acute;
    case -1:
        return AngleClass::Obtuse;
    default:
        return AngleClass::Right;
    }
}

std::optional<int> obtuseVertexIndex(const Point& p0, const Point& p1, const Point& p2)
{
    if(orientation(p0, p1, p2) == Orientation::Collinear)
        throw GeometryError("obtuseVertexIndex: degenerate triangle");
    if(angleClassAt(p1, p0, p2) == AngleClass::Obtuse)
        return 0;
    if(angleClassAt(p0, p1, p2) == AngleClass::Obtuse)
        return 1;
    if(angleClassAt(p0, p2, p1) == AngleClass::Obtuse)
        return 2;
    return std::nullopt;
}

bool collinearOnSegment(const Point& a, const Point& b, const Point& p)
{
    return sign(dot(p, a, b)) <= 0;
}

bool segmentsProperlyIntersect(const Segment& s1, const Segment& s2)
{
    const int o1 = sign(cross(s1.a, s1.b, s2.a));
    const int o2 = sign(cross(s1.a, s1.b, s2.b));
    const int o3 = sign(cross(s2.a, s2.b, s1.a));
    const int o4 = sign(cross(s2.a, s2.b, s1.b));

    if(o1 * o2 < 0 && o3 * o4 < 0)
        return true;

    // all four collinear: positive-length overlap of the open intervals
    if(o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0)
    {
        const Point lo1 = std::min(s1.a, s1.b), hi1 = std::max(s1.a, s1.b);
        const Point lo2 = std::min(s2.a, s2.b), hi2 = std::max(s2.a, s2.b);
        return std::max(lo1, lo2) < std::min(hi1, hi2);
    }
    return false;
}

RegionPosition pointInPolygon(const Point& p, std::span<const Point> polygon)
{
    const size_t n = polygon.size();
    int crossings = 0;
    for(size_t i = 0; i < n; ++i)
    {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        if(orientation(a, b, p) == Orientation::Collinear && collinearOnSegment(a, b, p))
            return RegionPosition::Boundary;
        const bool aBelow = a.y <= p.y;
        const bool bBelow = b.y <= p.y;
        if(aBelow == bBelow)
            continue;
        // edge straddles the horizontal through p; count crossings strictly
        // to the right of p
        const int o = sign(cross(a, b, p));
        if(!aBelow) // downward edge
        {
            if(o > 0)
                ++crossings;
        }
        else // upward edge
        {
            if(o < 0)
                ++crossings;
        }
    }
    return (crossings % 2 == 1) ? RegionPosition::Inside : RegionPosition::Outside;
}

Rational polygonSignedArea2(std::span<const Point> polygon)
{
    Rational area = 0;
    const size_t n = polygon.size();
    for(size_t i = 0; i < n; ++i)
    {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        area += a.x * b.y - b.x * a.y;
    }
    return area;
}

// --- rationalize ----------------------------------------------------------

namespace {

// best rational approximations of v (continued-fraction convergents),
// cheapest denominators first
std::vector<Rational> convergents(const Rational& v, int maxTerms)
{
    std::vector<Rational> out;
    BigInt h0 = 1, h1;
    BigInt k0 = 0, k1 = 1;
    BigInt num = numerator(v), den = denominator(v);
    BigInt a = num / den;
    if(num < 0 && a * den != num)
        --a; // exact floor
    h1 = a;
    Rational rest = v - Rational(a);
    out.emplace_back(Rational(h1));
    for(int i = 1; i < maxTerms; ++i)
    {
        if(rest == 0)
            break;
        rest = Rational(1) / rest;
        num = numerator(rest);
        den = denominator(rest);
        a = num / den;
        if(num < 0 && a * den != num)
            --a;
        rest -= Rational(a);
        const BigInt h2 = a * h1 + h0;
        const BigInt k2 = a * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        out.emplace_back(Rational(h1, k1));
        if(k1 > BigInt(1) << 60)
            break;
    }
    return out;
}

Rational roundToDenominator(const Rational& v, const BigInt& den)
{
    // round(v * den) / den, ties away from zero
    const Rational scaled = v * Rational(den);
    BigInt n = numerator(scaled) / denominator(scaled);
    const Rational frac = scaled - Rational(n);
    if(frac >= Rational(1, 2))
        ++n;
    else if(frac < Rational(-1, 2))
        --n;
    return Rational(n, den);
}

} // namespace

std::optional<Point> rationalize(double x,
                                 double y,
                                 const std::function<bool(const Point&)>& feasible,
                                 const RationalizeOptions& options)
{
    if(!std::isfinite(x) || !std::isfinite(y))
        return std::nullopt;

    const Rational ex = rationalFromDouble(x);
    const Rational ey = rationalFromDouble(y);
    double tol = options.tolerance;
    if(tol <= 0.0)
        tol = 1e-7 * (1.0 + std::max(std::abs(x), std::abs(y)));
    const Rational rtol = rationalFromDouble(tol);

    int attempts = 0;
    std::set<Point> tried;
    const auto tryPoint = [&](const Rational& cx, const Rational& cy) -> bool {
        if(attempts >= options.maxAttempts)
            return false;
        Point p(cx, cy);
        if(!tried.insert(p).second)
            return false;
        ++attempts;
        return feasible(p);
    };
    const auto near = [&](const Rational& c, const Rational& target) {
        const Rational d = c - target;
        return d <= rtol && d >= -rtol;
    };

    // continued-fraction convergents, paired by denominator size
    const auto cx = convergents(ex, 40);
    const auto cy = convergents(ey, 40);
    Rational lastX, lastY;
    bool havePair = false;
    for(BigInt cap = 1; cap <= (BigInt(1) << 56); cap <<= 2)
    {
        const Rational* bx = nullptr;
        for(const auto& c : cx)
            if(denominator(c) <= cap)
                bx = &c;
        const Rational* by = nullptr;
        for(const auto& c : cy)
            if(denominator(c) <= cap)
                by = &c;
        if(bx == nullptr || by == nullptr)
            continue;
        if(havePair && *bx == lastX && *by == lastY)
            continue;
        lastX = *bx;
        lastY = *by;
        havePair = true;
        if(near(*bx, ex) && near(*by, ey))
        {
            if(tryPoint(*bx, *by))
                return Point(lastX, lastY);
            if(attempts >= options.maxAttempts)
                return std::nullopt;
        }
    }

    // power-of-two grids with a small perturbation spiral
    static constexpr int offsets[9][2] = {
        {0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for(int level = 0; level <= 48; ++level)
    {
        const BigInt den = BigInt(1) << level;
        const Rational step(1, den);
        const Rational gx = roundToDenominator(ex, den);
        const Rational gy = roundToDenominator(ey, den);
        for(const auto& off : offsets)
        {
            const Rational px = gx + Rational(off[0]) * step;
            const Rational py = gy + Rational(off[1]) * step;
            if(!near(px, ex) || !near(py, ey))
                continue;
            if(tryPoint(px, py))
                return Point(px, py);
            if(attempts >= options.maxAttempts)
                return std::nullopt;
        }
    }

    // exact binary expansion of the input as a last resort
    if(tryPoint(ex, ey))
        return Point(ex, ey);
    return std::nullopt;
}

// --- serialization --------------------------------------------------------

std::string rationalToString(const Rational& v)
{
    if(denominator(v) == 1)
        return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

namespace {

BigInt parseBigInt(const std::string& text)
{
    if(text.empty())
        throw GeometryError("rationalFromString: empty integer");
    size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if(i == text.size())
        throw GeometryError("rationalFromString: sign without digits");
    for(; i < text.size(); ++i)
        if(text[i] < '0' || text[i] > '9')
            throw GeometryError("rationalFromString: invalid digit in '" + text + "'");
    return BigInt(text);
}

} // namespace

Rational rationalFromString(const std::string& text)
{
    const size_t slash = text.find('/');
    if(slash == std::string::npos)
        return Rational(parseBigInt(text));
    const BigInt num = parseBigInt(text.substr(0, slash));
    const BigInt den = parseBigInt(text.substr(slash + 1));
    if(den == 0)
        throw GeometryError("rationalFromString: zero denominator in '" + text + "'");
    return Rational(num, den); // canonicalizes, moves sign to the numerator
}

Rational rationalFromDouble(double v)
{
    if(!std::isfinite(v))
        throw GeometryError("rationalFromDouble: non-finite value");
    return Rational(v);
}

double toDouble(const Rational& v)
{
    return v.convert_to<double>();
}

} // namespace nonobtuse
