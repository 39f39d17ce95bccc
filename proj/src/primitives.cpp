#include "nonobtuse/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

namespace nonobtuse {

namespace {

struct Vec2 {
    double x = 0, y = 0;
};

Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator*(double s, const Vec2& a) { return {s * a.x, s * a.y}; }
double dotd(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double crossd(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double norm(const Vec2& a) { return std::sqrt(dotd(a, a)); }

Vec2 toVec(const Point& p) { return {toDouble(p.x), toDouble(p.y)}; }

struct CircumData {
    double cx = 0, cy = 0, r2 = -1;
};

// exact circumcircle, rounded to doubles at the very end
CircumData circumData(const Point& a, const Point& b, const Point& c)
{
    const Rational a2 = a.x * a.x + a.y * a.y;
    const Rational b2 = b.x * b.x + b.y * b.y;
    const Rational c2 = c.x * c.x + c.y * c.y;
    const Rational d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    const Rational ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    const Rational uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    const Rational dx = ux - a.x, dy = uy - a.y;
    CircumData out;
    out.cx = toDouble(ux);
    out.cy = toDouble(uy);
    out.r2 = toDouble(dx * dx + dy * dy);
    return out;
}

std::vector<CircumData> allCircumData(const Cdt& cdt)
{
    std::vector<CircumData> data(static_cast<size_t>(cdt.triangleSlotCount()));
    for(const int t : cdt.aliveTriangles())
        data[static_cast<size_t>(t)] =
            circumData(cdt.triPoint(t, 0), cdt.triPoint(t, 1), cdt.triPoint(t, 2));
    return data;
}

std::vector<int> conflictSetWithData(const Cdt& cdt, const Point& q, const std::vector<CircumData>& data)
{
    const double qx = toDouble(q.x), qy = toDouble(q.y);
    std::vector<int> out;
    for(const int t : cdt.aliveTriangles())
    {
        const CircumData& c = data[static_cast<size_t>(t)];
        const double dx = qx - c.cx, dy = qy - c.cy;
        const double d2 = dx * dx + dy * dy;
        if(d2 > c.r2 + 1e-7 * (c.r2 + d2) + 1e-12)
            continue;
        if(cdt.clippedCircumcircleContains(t, q))
            out.push_back(t);
    }
    return out;
}

} // namespace

// --- altitudeDrop -------------------------------------------------------------

Point altitudeDrop(const Point& p0, const Point& p1, const Point& p2)
{
    const auto obtuse = obtuseVertexIndex(p0, p1, p2);
    if(!obtuse)
        throw GeometryError("altitudeDrop: triangle is not obtuse");
    const Point* pts[3] = {&p0, &p1, &p2};
    const Point& apex = *pts[static_cast<size_t>(*obtuse)];
    const Point& a = *pts[static_cast<size_t>((*obtuse + 1) % 3)];
    const Point& b = *pts[static_cast<size_t>((*obtuse + 2) % 3)];
    const Rational t = dot(a, apex, b) / distanceSquared(a, b);
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
}

Point altitudeDrop(const Cdt& cdt, int t)
{
    return altitudeDrop(cdt.triPoint(t, 0), cdt.triPoint(t, 1), cdt.triPoint(t, 2));
}

std::pair<int, int> longestSideCorners(const Cdt& cdt, int t)
{
    const TriRecord& tr = cdt.tri(t);
    if(tr.obtuseAt >= 0)
    {
        const int i = tr.obtuseAt;
        return {(i + 1) % 3, (i + 2) % 3};
    }
    int best = 0;
    Rational bestLen = distanceSquared(cdt.triPoint(t, 0), cdt.triPoint(t, 1));
    for(int i = 1; i < 3; ++i)
    {
        const Rational len = distanceSquared(cdt.triPoint(t, i), cdt.triPoint(t, (i + 1) % 3));
        if(len > bestLen)
        {
            bestLen = len;
            best = i;
        }
    }
    return {best, (best + 1) % 3};
}

// --- polygonCenter --------------------------------------------------------------

bool polygonCenterFeasible(const SimplePolygon& poly, const Point& x)
{
    const size_t m = poly.vertices.size();
    for(size_t i = 0; i < m; ++i)
    {
        const Point& p = poly.vertices[i];
        const Point& q = poly.vertices[(i + 1) % m];
        if(orientation(p, q, x) != Orientation::CounterClockwise)
            return false; // kernel, strict: fan triangles stay non-degenerate
        if(sign(dot(p, x, q)) < 0)
            return false; // right angle at p is allowed
        if(sign(dot(q, x, p)) < 0)
            return false;
        const Point mid((p.x + q.x) / 2, (p.y + q.y) / 2);
        if(distanceSquared(x, mid) < distanceSquared(p, q) / 4)
            return false; // strictly inside the diametral disk: obtuse at x
    }
    return true;
}

namespace {

struct CenterScorer {
    struct EdgeData {
        Vec2 p, q, mid, dir;
        double len = 0, r = 0;
    };
    std::vector<EdgeData> edges;
    double diag = 0;
    Vec2 lo{1e300, 1e300}, hi{-1e300, -1e300};

    explicit CenterScorer(const SimplePolygon& poly)
    {
        const size_t m = poly.vertices.size();
        edges.reserve(m);
        for(size_t i = 0; i < m; ++i)
        {
            EdgeData e;
            e.p = toVec(poly.vertices[i]);
            e.q = toVec(poly.vertices[(i + 1) % m]);
            e.dir = e.q - e.p;
            e.len = norm(e.dir);
            e.mid = 0.5 * (e.p + e.q);
            e.r = 0.5 * e.len;
            edges.push_back(e);
            lo.x = std::min(lo.x, e.p.x);
            lo.y = std::min(lo.y, e.p.y);
            hi.x = std::max(hi.x, e.p.x);
            hi.y = std::max(hi.y, e.p.y);
        }
        diag = norm(hi - lo);
        if(diag <= 0)
            diag = 1;
    }

    // min slack over all constraints, in units of length
    double score(const Vec2& x) const
    {
        double s = 1e300;
        for(const EdgeData& e : edges)
        {
            if(e.len <= 0)
                return -1e300;
            s = std::min(s, crossd(e.dir, x - e.p) / e.len); // kernel
            s = std::min(s, dotd(x - e.p, e.dir) / e.len);   // slab at p
            s = std::min(s, -dotd(x - e.q, e.dir) / e.len);  // slab at q
            s = std::min(s, norm(x - e.mid) - e.r);          // diametral disk
        }
        return s;
    }
};

void addLineLine(std::vector<Vec2>& out, const Vec2& o1, const Vec2& t1, const Vec2& o2, const Vec2& t2)
{
    const double den = crossd(t1, t2);
    if(std::abs(den) < 1e-14 * (norm(t1) * norm(t2) + 1e-300))
        return;
    const double s = crossd(o2 - o1, t2) / den;
    out.push_back(o1 + s * t1);
}

void addLineCircle(std::vector<Vec2>& out, const Vec2& o, const Vec2& t, const Vec2& c, double r)
{
    const double tt = dotd(t, t);
    if(tt < 1e-300)
        return;
    const double s0 = dotd(c - o, t) / tt;
    const Vec2 foot = o + s0 * t;
    const double h2 = r * r - dotd(foot - c, foot - c);
    if(h2 < 0)
        return;
    const double ds = std::sqrt(h2 / tt);
    out.push_back(o + (s0 + ds) * t);
    out.push_back(o + (s0 - ds) * t);
}

void addCircleCircle(std::vector<Vec2>& out, const Vec2& c1, double r1, const Vec2& c2, double r2)
{
    const Vec2 d = c2 - c1;
    const double dd = norm(d);
    if(dd < 1e-14 * (r1 + r2 + 1e-300))
        return;
    const double a = (dd * dd + r1 * r1 - r2 * r2) / (2 * dd);
    const double h2 = r1 * r1 - a * a;
    if(h2 < 0)
        return;
    const double h = std::sqrt(h2);
    const Vec2 base = c1 + (a / dd) * d;
    const Vec2 perp{-d.y / dd, d.x / dd};
    out.push_back(base + h * perp);
    out.push_back(base + (-h) * perp);
}

Vec2 patternRefine(const CenterScorer& scorer, Vec2 x)
{
    double step = scorer.diag / 16;
    double best = scorer.score(x);
    const double minStep = scorer.diag * 1e-12;
    int iterations = 0;
    while(step > minStep && ++iterations < 400)
    {
        static constexpr double dirs[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                              {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
        bool moved = false;
        for(const auto& d : dirs)
        {
            const Vec2 cand{x.x + step * d[0], x.y + step * d[1]};
            const double s = scorer.score(cand);
            if(s > best)
            {
                best = s;
                x = cand;
                moved = true;
                break;
            }
        }
        if(!moved)
            step *= 0.5;
    }
    return x;
}

} // namespace

std::optional<Point> polygonCenter(const SimplePolygon& poly, const PolygonCenterOptions& options)
{
    const size_t m = poly.vertices.size();
    if(m < 3)
        return std::nullopt;
    const CenterScorer scorer(poly);

    // candidate pool: pairwise intersections of the constraint curves (the
    // corners of the feasible region live there), a coarse grid, the centroid
    std::vector<Vec2> cands;
    {
        struct Line {
            Vec2 o, t;
        };
        struct Circle {
            Vec2 c;
            double r;
        };
        std::vector<Line> lines;
        std::vector<Circle> circles;
        for(const auto& e : scorer.edges)
        {
            lines.push_back({e.p, e.dir});               // kernel line
            lines.push_back({e.p, {-e.dir.y, e.dir.x}}); // slab boundary at p
            lines.push_back({e.q, {-e.dir.y, e.dir.x}}); // slab boundary at q
            circles.push_back({e.mid, e.r});
        }
        for(size_t i = 0; i < lines.size(); ++i)
            for(size_t j = i + 1; j < lines.size(); ++j)
                addLineLine(cands, lines[i].o, lines[i].t, lines[j].o, lines[j].t);
        for(const auto& l : lines)
            for(const auto& c : circles)
                addLineCircle(cands, l.o, l.t, c.c, c.r);
        for(size_t i = 0; i < circles.size(); ++i)
            for(size_t j = i + 1; j < circles.size(); ++j)
                addCircleCircle(cands, circles[i].c, circles[i].r, circles[j].c, circles[j].r);

        Vec2 centroid{0, 0};
        for(const auto& e : scorer.edges)
            centroid = centroid + e.p;
        cands.push_back((1.0 / static_cast<double>(m)) * centroid);
        const int g = options.coarseGrid;
        for(int i = 0; i <= g; ++i)
            for(int j = 0; j <= g; ++j)
                cands.push_back({scorer.lo.x + (scorer.hi.x - scorer.lo.x) * i / g,
                                 scorer.lo.y + (scorer.hi.y - scorer.lo.y) * j / g});
    }

    std::vector<std::pair<double, Vec2>> scored;
    scored.reserve(cands.size());
    for(const Vec2& c : cands)
        if(std::isfinite(c.x) && std::isfinite(c.y))
            scored.push_back({scorer.score(c), c});
    if(scored.empty())
        return std::nullopt;
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    Vec2 best = scored.front().second;
    double bestScore = scored.front().first;
    const int refineCount = std::min<int>(options.refineCandidates, static_cast<int>(scored.size()));
    for(int i = 0; i < refineCount; ++i)
    {
        const Vec2 refined = patternRefine(scorer, scored[static_cast<size_t>(i)].second);
        const double s = scorer.score(refined);
        if(s > bestScore)
        {
            bestScore = s;
            best = refined;
        }
    }

    const auto feasible = [&](const Point& p) { return polygonCenterFeasible(poly, p); };
    const double epsBig = 1e-7 * (scorer.diag + 1.0);

    if(bestScore > 0)
    {
        RationalizeOptions ropt;
        ropt.tolerance = std::max(bestScore * 0.45, scorer.diag * 1e-13);
        if(const auto r = rationalize(best.x, best.y, feasible, ropt))
            return r;
    }
    if(bestScore <= -epsBig)
        return std::nullopt; // a nonempty region has corners scoring ~0

    // boundary-tight or uncertain: retry near the numeric optimum, then scan
    // the fine grid exactly (descending numeric slack)
    {
        RationalizeOptions ropt;
        ropt.tolerance = std::max(scorer.diag * 1e-7, 1e-12);
        if(const auto r = rationalize(best.x, best.y, feasible, ropt))
            return r;
    }

    Rational minX = poly.vertices[0].x, maxX = poly.vertices[0].x;
    Rational minY = poly.vertices[0].y, maxY = poly.vertices[0].y;
    for(const Point& p : poly.vertices)
    {
        minX = std::min(minX, p.x);
        maxX = std::max(maxX, p.x);
        minY = std::min(minY, p.y);
        maxY = std::max(maxY, p.y);
    }
    const int n = options.fineGrid;
    const Rational stepX = (maxX - minX) / n;
    const Rational stepY = (maxY - minY) / n;
    if(stepX == 0 || stepY == 0)
        return std::nullopt;
    struct GridCand {
        double score;
        int i, j;
    };
    std::vector<GridCand> grid;
    for(int i = 0; i <= n; ++i)
        for(int j = 0; j <= n; ++j)
        {
            const Vec2 x{scorer.lo.x + (scorer.hi.x - scorer.lo.x) * i / n,
                         scorer.lo.y + (scorer.hi.y - scorer.lo.y) * j / n};
            const double s = scorer.score(x);
            if(s > -epsBig)
                grid.push_back({s, i, j});
        }
    std::stable_sort(grid.begin(), grid.end(), [](const GridCand& a, const GridCand& b) {
        if(a.score != b.score)
            return a.score > b.score;
        if(a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    });
    for(const GridCand& g : grid)
    {
        const Point p(minX + g.i * stepX, minY + g.j * stepY);
        if(polygonCenterFeasible(poly, p))
            return p;
    }
    return std::nullopt;
}

// --- visibilityVoronoi ------------------------------------------------------------

namespace {

// numeric segment crossing, clipping scaffolding only
bool crossesNumeric(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d)
{
    const double eps = 1e-12 * (norm(b - a) + norm(d - c) + 1.0);
    const double o1 = crossd(b - a, c - a);
    const double o2 = crossd(b - a, d - a);
    const double o3 = crossd(d - c, a - c);
    const double o4 = crossd(d - c, b - c);
    return ((o1 > eps && o2 < -eps) || (o1 < -eps && o2 > eps)) &&
           ((o3 > eps && o4 < -eps) || (o3 < -eps && o4 > eps));
}

} // namespace

BoundedVoronoi visibilityVoronoi(const Cdt& cdt)
{
    BoundedVoronoi out;
    const auto data = allCircumData(cdt);

    std::vector<std::pair<Vec2, Vec2>> constraintSegs;
    for(const auto& [e, origin] : cdt.constrainedEdges())
    {
        (void)origin;
        constraintSegs.emplace_back(toVec(cdt.point(e.first)), toVec(cdt.point(e.second)));
    }
    const auto sees = [&](const Vec2& from, const Vec2& to) {
        for(const auto& [a, b] : constraintSegs)
            if(crossesNumeric(from, to, a, b))
                return false;
        return true;
    };

    for(const int t : cdt.aliveTriangles())
    {
        const TriRecord& tr = cdt.tri(t);
        for(int i = 0; i < 3; ++i)
        {
            const int nb = tr.n[static_cast<size_t>(i)];
            if(nb == -1 || nb < t)
                continue; // each shared edge once
            const int u = tr.v[static_cast<size_t>((i + 1) % 3)];
            const int w = tr.v[static_cast<size_t>((i + 2) % 3)];
            if(cdt.isConstrained(u, w))
                continue;
            BoundedVoronoi::Edge edge;
            edge.site1 = u;
            edge.site2 = w;
            edge.tri1 = t;
            edge.tri2 = nb;
            const CircumData& c1 = data[static_cast<size_t>(t)];
            const CircumData& c2 = data[static_cast<size_t>(nb)];
            edge.x1 = c1.cx;
            edge.y1 = c1.cy;
            edge.x2 = c2.cx;
            edge.y2 = c2.cy;

            const Vec2 a{c1.cx, c1.cy}, b{c2.cx, c2.cy};
            const Vec2 s1 = toVec(cdt.point(u)), s2 = toVec(cdt.point(w));
            std::vector<double> cuts{0.0, 1.0};
            const Vec2 dir = b - a;
            const double len2 = dotd(dir, dir);
            if(len2 > 1e-30)
            {
                for(const auto& [ca, cb] : constraintSegs)
                {
                    const Vec2 sd = cb - ca;
                    const double den = crossd(dir, sd);
                    if(std::abs(den) < 1e-14 * (std::sqrt(len2) * norm(sd) + 1e-300))
                        continue;
                    const double s = crossd(ca - a, sd) / den;
                    const double q = crossd(ca - a, dir) / den;
                    if(s > 0 && s < 1 && q > 0 && q < 1)
                        cuts.push_back(s);
                }
            }
            std::sort(cuts.begin(), cuts.end());
            for(size_t k = 0; k + 1 < cuts.size(); ++k)
            {
                const double lo = cuts[k], hi = cuts[k + 1];
                if(hi - lo < 1e-12 && len2 > 1e-30)
                    continue;
                const Vec2 mid = a + (0.5 * (lo + hi)) * dir;
                if(sees(mid, s1) && sees(mid, s2))
                    edge.pieces.emplace_back(lo, hi);
            }
            out.edges.push_back(edge);
        }
    }
    return out;
}

// --- voronoiInsertionPoint -----------------------------------------------------------

std::optional<Point> voronoiInsertionPoint(const Cdt& cdt, int t, const BoundedVoronoi& voronoi)
{
    const TriRecord& tr = cdt.tri(t);
    if(tr.obtuseAt < 0)
        throw CdtError("voronoiInsertionPoint: triangle is not obtuse");
    {
        const auto [i, j] = longestSideCorners(cdt, t);
        if(cdt.isConstrained(tr.v[static_cast<size_t>(i)], tr.v[static_cast<size_t>(j)]))
            throw CdtError("voronoiInsertionPoint: longest side is constrained");
    }

    std::map<EdgeKey, const BoundedVoronoi::Edge*> byDual;
    for(const auto& e : voronoi.edges)
        byDual[edgeKey(e.site1, e.site2)] = &e;

    const CircumData ct = circumData(cdt.triPoint(t, 0), cdt.triPoint(t, 1), cdt.triPoint(t, 2));
    const Vec2 center{ct.cx, ct.cy};

    double bestF = -1;
    Vec2 bestPt{0, 0};
    std::set<int> visited{t};
    std::deque<int> queue{t};
    int steps = 0;
    while(!queue.empty() && ++steps < 64)
    {
        const int cur = queue.front();
        queue.pop_front();
        const TriRecord& cr = cdt.tri(cur);
        for(int i = 0; i < 3; ++i)
        {
            const int nb = cr.n[static_cast<size_t>(i)];
            if(nb == -1)
                continue;
            const int u = cr.v[static_cast<size_t>((i + 1) % 3)];
            const int w = cr.v[static_cast<size_t>((i + 2) % 3)];
            if(cdt.isConstrained(u, w))
                continue;
            const auto it = byDual.find(edgeKey(u, w));
            if(it == byDual.end())
                continue;
            const BoundedVoronoi::Edge& e = *it->second;
            const Vec2 a{e.x1, e.y1}, b{e.x2, e.y2};
            const Vec2 dir = b - a;
            const Vec2 s1 = toVec(cdt.point(e.site1)), s2 = toVec(cdt.point(e.site2));

            // parameter range of the edge inside t's circumcircle
            double lo = 0.0, hi = 1.0;
            bool insideAny = true;
            const double A = dotd(dir, dir);
            const double B = 2 * dotd(dir, a - center);
            const double C = dotd(a - center, a - center) - ct.r2;
            if(A > 1e-30)
            {
                const double disc = B * B - 4 * A * C;
                if(disc < 0)
                    insideAny = false;
                else
                {
                    const double sq = std::sqrt(disc);
                    lo = std::max(lo, (-B - sq) / (2 * A));
                    hi = std::min(hi, (-B + sq) / (2 * A));
                    if(lo > hi)
                        insideAny = false;
                }
            }
            else if(C > 0)
            {
                insideAny = false;
            }

            bool touchesCircle = false;
            if(insideAny)
            {
                for(const auto& [pl, ph] : e.pieces)
                {
                    const double il = std::max(lo, pl);
                    const double ih = std::min(hi, ph);
                    if(il > ih)
                        continue;
                    touchesCircle = true;
                    for(const double s : {il, 0.5 * (il + ih), ih})
                    {
                        const Vec2 x = a + s * dir;
                        const double f = std::min(norm(x - s1), norm(x - s2));
                        if(f > bestF)
                        {
                            bestF = f;
                            bestPt = x;
                        }
                    }
                }
            }

            // local search: follow the diagram while it stays in range
            const CircumData nbData =
                circumData(cdt.triPoint(nb, 0), cdt.triPoint(nb, 1), cdt.triPoint(nb, 2));
            const Vec2 nbCenter{nbData.cx, nbData.cy};
            const bool centerInside = dotd(nbCenter - center, nbCenter - center) <= ct.r2;
            if((touchesCircle || centerInside) && visited.insert(nb).second)
                queue.push_back(nb);
        }
    }
    if(bestF < 0)
        return std::nullopt;

    // nudge strictly inward, then certify exactly
    const Vec2 target = toVec(cdt.centroid(t));
    const Vec2 nudged = bestPt + 0.002 * (target - bestPt);
    const std::vector<Point> boundary = cdt.instance().boundaryPolygon();
    const auto feasible = [&](const Point& p) {
        if(cdt.findVertex(p))
            return false;
        if(pointInPolygon(p, boundary) == RegionPosition::Outside)
            return false;
        return cdt.clippedCircumcircleContains(t, p);
    };
    RationalizeOptions ropt;
    ropt.tolerance = std::max(1e-9, 0.01 * norm(target - bestPt));
    return rationalize(nudged.x, nudged.y, feasible, ropt);
}

std::optional<Point> voronoiInsertionPoint(const Cdt& cdt, int t)
{
    return voronoiInsertionPoint(cdt, t, visibilityVoronoi(cdt));
}

// --- circle arrangement ---------------------------------------------------------------

std::vector<int> conflictSetOf(const Cdt& cdt, const Point& q)
{
    return conflictSetWithData(cdt, q, allCircumData(cdt));
}

std::optional<std::vector<int>> trianglesUnionCycle(const Cdt& cdt,
                                                    const std::vector<int>& tris,
                                                    const std::vector<int>& interior)
{
    std::set<std::pair<int, int>> directed;
    for(const int t : tris)
    {
        const TriRecord& tr = cdt.tri(t);
        for(int i = 0; i < 3; ++i)
            directed.insert(
                {tr.v[static_cast<size_t>((i + 1) % 3)], tr.v[static_cast<size_t>((i + 2) % 3)]});
    }
    std::map<int, int> next;
    size_t boundaryCount = 0;
    std::set<int> verts;
    for(const auto& [u, w] : directed)
    {
        verts.insert(u);
        verts.insert(w);
        if(directed.count({w, u}))
            continue; // internal edge
        ++boundaryCount;
        if(!next.emplace(u, w).second)
            return std::nullopt; // pinched union
    }
    if(next.empty())
        return std::nullopt;
    for(const int v : interior)
    {
        if(next.count(v) != 0)
            return std::nullopt; // expected interior vertex sits on the boundary
        verts.erase(v);
    }
    std::vector<int> cycle;
    const int start = next.begin()->first;
    int cur = start;
    do
    {
        const auto it = next.find(cur);
        if(it == next.end())
            return std::nullopt;
        cycle.push_back(cur);
        cur = it->second;
        if(cycle.size() > boundaryCount)
            return std::nullopt;
    } while(cur != start);
    if(cycle.size() != boundaryCount || cycle.size() != verts.size())
        return std::nullopt;
    return cycle;
}

std::vector<ArrangementCell> circleArrangementCells(const Cdt& cdt)
{
    std::vector<ArrangementCell> out;
    const auto obtuse = cdt.obtuseTriangles();
    if(obtuse.empty())
        return out;
    const auto data = allCircumData(cdt);
    const auto alive = cdt.aliveTriangles();

    std::vector<Point> samples;
    std::set<Point> seen;
    const auto addSample = [&](const Point& p) {
        if(seen.insert(p).second)
            samples.push_back(p);
    };
    const auto addNumericSample = [&](double x, double y) {
        if(std::isfinite(x) && std::isfinite(y))
            addSample(Point(rationalFromDouble(x), rationalFromDouble(y)));
    };

    for(const int t : obtuse)
    {
        addSample(cdt.centroid(t));
        addNumericSample(data[static_cast<size_t>(t)].cx, data[static_cast<size_t>(t)].cy);
    }
    for(const int t : obtuse)
    {
        const CircumData& ca = data[static_cast<size_t>(t)];
        const double ra = std::sqrt(std::max(0.0, ca.r2));
        for(const int u : alive)
        {
            if(u == t)
                continue;
            const CircumData& cb = data[static_cast<size_t>(u)];
            const double rb = std::sqrt(std::max(0.0, cb.r2));
            const double dx = cb.cx - ca.cx, dy = cb.cy - ca.cy;
            const double d = std::sqrt(dx * dx + dy * dy);
            if(d >= ra + rb || d <= std::abs(ra - rb) || d < 1e-14 * (ra + rb + 1))
                continue;
            std::vector<Vec2> pts;
            addCircleCircle(pts, {ca.cx, ca.cy}, ra, {cb.cx, cb.cy}, rb);
            if(pts.size() != 2)
                continue;
            const Vec2 mid = 0.5 * (pts[0] + pts[1]);
            addNumericSample(mid.x, mid.y);
            addNumericSample(mid.x + 0.9 * (pts[0].x - mid.x), mid.y + 0.9 * (pts[0].y - mid.y));
            addNumericSample(mid.x + 0.9 * (pts[1].x - mid.x), mid.y + 0.9 * (pts[1].y - mid.y));
            addNumericSample(0.5 * (ca.cx + cb.cx), 0.5 * (ca.cy + cb.cy));
        }
    }

    std::map<std::vector<int>, Point> cells;
    for(const Point& s : samples)
    {
        auto conflict = conflictSetWithData(cdt, s, data);
        if(conflict.empty())
            continue;
        bool hasObtuse = false;
        for(const int t : conflict)
            hasObtuse |= cdt.tri(t).obtuseAt >= 0;
        if(!hasObtuse)
            continue;
        cells.emplace(std::move(conflict), s); // first sample wins
    }

    for(const auto& [conflict, sample] : cells)
    {
        const auto cycle = trianglesUnionCycle(cdt, conflict);
        if(!cycle)
            continue;
        ArrangementCell cell;
        cell.conflictSet = conflict;
        cell.samplePoint = sample;
        cell.polygonIds = *cycle;
        for(const int v : *cycle)
            cell.polygon.vertices.push_back(cdt.point(v));
        out.push_back(std::move(cell));
    }
    return out;
}

} // namespace nonobtuse
