#pragma once

// deterministic instance generators and brute-force validation oracles shared
// by the unit and acceptance suites

#include "nonobtuse/cdt.hpp"
#include "nonobtuse/instance.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace testgen {

using namespace nonobtuse;

inline Instance makeInstance(std::string uid,
                             std::vector<std::pair<long long, long long>> coords,
                             std::vector<int> boundary,
                             std::vector<std::array<int, 2>> constraints = {})
{
    Instance inst;
    inst.uid = std::move(uid);
    for(const auto& [x, y] : coords)
        inst.points.emplace_back(Rational(x), Rational(y));
    inst.regionBoundary = std::move(boundary);
    inst.constraints = std::move(constraints);
    return inst;
}

inline Instance unitSquare()
{
    return makeInstance("unit-square", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {0, 1, 2, 3});
}

inline Instance squareWithDiagonal()
{
    return makeInstance("square-diagonal", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {0, 1, 2, 3},
                        {{{0, 2}}});
}

inline Instance obtuseTriangle()
{
    return makeInstance("obtuse-triangle", {{0, 0}, {4, 0}, {1, 1}}, {0, 1, 2});
}

/// Star-shaped simple polygon with integer coordinates.
inline Instance randomStarPolygon(uint64_t seed, int nVerts, long long radius = 100)
{
    for(uint64_t attempt = 0;; ++attempt)
    {
        std::mt19937_64 rng(seed * 7919 + attempt);
        std::uniform_real_distribution<double> angleJitter(0.05, 0.95);
        std::uniform_real_distribution<double> radial(0.35, 1.0);
        std::vector<std::pair<long long, long long>> coords;
        for(int i = 0; i < nVerts; ++i)
        {
            const double angle =
                2.0 * 3.14159265358979 * (static_cast<double>(i) + angleJitter(rng)) / nVerts;
            const double r = static_cast<double>(radius) * radial(rng);
            coords.emplace_back(std::llround(r * std::cos(angle)), std::llround(r * std::sin(angle)));
        }
        std::vector<int> boundary(static_cast<size_t>(nVerts));
        for(int i = 0; i < nVerts; ++i)
            boundary[static_cast<size_t>(i)] = i;
        Instance inst = makeInstance("star-" + std::to_string(seed) + "-" + std::to_string(nVerts),
                                     coords, boundary);
        try
        {
            inst.validate();
            return inst;
        }
        catch(const InstanceError&)
        {
            continue; // duplicate rounded vertex or degeneracy; reroll
        }
    }
}

/// Random integer points; the convex hull becomes the region boundary.
inline Instance randomPointSet(uint64_t seed, int nPoints, long long span = 100)
{
    for(uint64_t attempt = 0;; ++attempt)
    {
        std::mt19937_64 rng(seed * 6271 + attempt);
        std::uniform_int_distribution<long long> c(0, span);
        std::vector<Point> pts;
        while(static_cast<int>(pts.size()) < nPoints)
        {
            Point p(Rational(c(rng)), Rational(c(rng)));
            if(std::find(pts.begin(), pts.end(), p) == pts.end())
                pts.push_back(p);
        }
        // monotone-chain convex hull over point indices (strict turns)
        std::vector<int> idx(static_cast<size_t>(nPoints));
        for(int i = 0; i < nPoints; ++i)
            idx[static_cast<size_t>(i)] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return pts[static_cast<size_t>(a)] < pts[static_cast<size_t>(b)];
        });
        const auto buildChain = [&](bool lower) {
            std::vector<int> chain;
            for(size_t k = 0; k < idx.size(); ++k)
            {
                const int i = idx[lower ? k : idx.size() - 1 - k];
                while(chain.size() >= 2)
                {
                    const Point& a = pts[static_cast<size_t>(chain[chain.size() - 2])];
                    const Point& b = pts[static_cast<size_t>(chain.back())];
                    if(orientation(a, b, pts[static_cast<size_t>(i)]) ==
                       Orientation::CounterClockwise)
                        break;
                    chain.pop_back();
                }
                chain.push_back(i);
            }
            return chain;
        };
        auto lower = buildChain(true);
        auto upper = buildChain(false);
        lower.pop_back();
        upper.pop_back();
        std::vector<int> hull = lower;
        hull.insert(hull.end(), upper.begin(), upper.end());
        if(hull.size() < 3)
            continue;

        Instance inst;
        inst.uid = "point-set-" + std::to_string(seed) + "-" + std::to_string(nPoints);
        inst.points = pts;
        inst.regionBoundary = hull;
        try
        {
            inst.validate();
            return inst;
        }
        catch(const InstanceError&)
        {
            continue;
        }
    }
}

/// A square region with interior points (and optionally a few interior
/// constraint edges between them).
inline Instance squareWithInterior(uint64_t seed, int interiorPoints, bool withConstraints, long long side = 64)
{
    for(uint64_t attempt = 0;; ++attempt)
    {
        std::mt19937_64 rng(seed * 4099 + attempt);
        std::uniform_int_distribution<long long> c(1, side - 1);
        std::vector<std::pair<long long, long long>> coords{
            {0, 0}, {side, 0}, {side, side}, {0, side}};
        for(int i = 0; i < interiorPoints; ++i)
            coords.emplace_back(c(rng), c(rng));
        Instance inst = makeInstance("square-" + std::to_string(seed) + "-" +
                                         std::to_string(interiorPoints),
                                     coords, {0, 1, 2, 3});
        if(withConstraints && interiorPoints >= 2)
        {
            // chain a few interior points; validate() rejects bad luck
            const int k = std::min(3, interiorPoints - 1);
            for(int i = 0; i < k; ++i)
                inst.constraints.push_back({4 + i, 4 + i + 1});
        }
        try
        {
            inst.validate();
            return inst;
        }
        catch(const InstanceError&)
        {
            continue;
        }
    }
}

/// The 20-instance desk suite: synthetic squares, random star polygons
/// (<= 30 vertices), random point sets (<= 20 points).
inline std::vector<Instance> deskSuite()
{
    std::vector<Instance> suite;
    suite.push_back(unitSquare());
    suite.push_back(squareWithDiagonal());
    suite.push_back(obtuseTriangle());
    suite.push_back(squareWithInterior(21, 4, false));
    suite.push_back(squareWithInterior(22, 8, true));
    suite.push_back(squareWithInterior(23, 12, true));
    for(const int n : {6, 9, 12, 16, 22, 30})
        suite.push_back(randomStarPolygon(100 + static_cast<uint64_t>(n), n));
    for(const int n : {8, 10, 12, 14, 16, 18, 20})
        suite.push_back(randomPointSet(200 + static_cast<uint64_t>(n), n));
    suite.push_back(randomStarPolygon(777, 18, 1000));
    return suite;
}

/// Uniformly random strictly interior rational point of some triangle.
inline Point randomInteriorPoint(const Cdt& cdt, std::mt19937_64& rng)
{
    const auto tris = cdt.aliveTriangles();
    std::uniform_int_distribution<size_t> pick(0, tris.size() - 1);
    const int t = tris[pick(rng)];
    std::uniform_int_distribution<int> bary(1, 8);
    const Rational u(bary(rng)), v(bary(rng)), w(bary(rng));
    const Rational s = u + v + w;
    const Point& a = cdt.triPoint(t, 0);
    const Point& b = cdt.triPoint(t, 1);
    const Point& c = cdt.triPoint(t, 2);
    return Point((u * a.x + v * b.x + w * c.x) / s, (u * a.y + v * b.y + w * c.y) / s);
}

/// Brute-force constrained-Delaunay validation: no triangle's clipped
/// circumcircle strictly contains another vertex. Returns a description of
/// the first violation, or nothing.
inline std::optional<std::string> clippedDelaunayViolation(const Cdt& cdt)
{
    for(const int t : cdt.aliveTriangles())
    {
        for(int v = 0; v < cdt.allocatedVertexCount(); ++v)
        {
            if(!cdt.vertexAlive(v))
                continue;
            const TriRecord& tr = cdt.tri(t);
            if(tr.v[0] == v || tr.v[1] == v || tr.v[2] == v)
                continue;
            if(cdt.clippedCircumcircleContains(t, cdt.point(v)))
                return "vertex " + std::to_string(v) + " conflicts with triangle " +
                       std::to_string(t);
        }
    }
    return std::nullopt;
}

} // namespace testgen
