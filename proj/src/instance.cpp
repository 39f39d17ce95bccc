#include "nonobtuse/instance.hpp"

#include <algorithm>
#include <set>

namespace nonobtuse {

std::vector<Point> Instance::boundaryPolygon() const
{
    std::vector<Point> poly;
    poly.reserve(regionBoundary.size());
    for(const int i : regionBoundary)
        poly.push_back(points[static_cast<size_t>(i)]);
    return poly;
}

void Instance::validate()
{
    const int n = static_cast<int>(points.size());
    if(n < 3)
        throw InstanceError("instance '" + uid + "': fewer than 3 points");

    {
        std::set<Point> seen;
        for(const Point& p : points)
            if(!seen.insert(p).second)
                throw InstanceError("instance '" + uid + "': duplicate point");
    }

    if(regionBoundary.size() < 3)
        throw InstanceError("instance '" + uid + "': region_boundary needs >= 3 vertices");
    {
        std::set<int> seen;
        for(const int i : regionBoundary)
        {
            if(i < 0 || i >= n)
                throw InstanceError("instance '" + uid + "': region_boundary index out of range");
            if(!seen.insert(i).second)
                throw InstanceError("instance '" + uid + "': region_boundary repeats a vertex");
        }
    }

    auto poly = boundaryPolygon();
    const Rational area2 = polygonSignedArea2(poly);
    if(area2 == 0)
        throw InstanceError("instance '" + uid + "': degenerate region boundary");
    if(area2 < 0)
    {
        std::reverse(regionBoundary.begin(), regionBoundary.end());
        poly = boundaryPolygon();
    }

    const size_t b = poly.size();
    for(size_t i = 0; i < b; ++i)
    {
        if(poly[i] == poly[(i + 1) % b])
            throw InstanceError("instance '" + uid + "': zero-length boundary edge");
        for(size_t j = i + 1; j < b; ++j)
        {
            const Segment si{poly[i], poly[(i + 1) % b]};
            const Segment sj{poly[j], poly[(j + 1) % b]};
            if(segmentsProperlyIntersect(si, sj))
                throw InstanceError("instance '" + uid + "': non-simple region boundary");
        }
    }

    for(const auto& c : constraints)
    {
        if(c[0] < 0 || c[0] >= n || c[1] < 0 || c[1] >= n)
            throw InstanceError("instance '" + uid + "': constraint index out of range");
        if(c[0] == c[1])
            throw InstanceError("instance '" + uid + "': degenerate constraint");
    }

    // constraints pairwise non-crossing, non-crossing with the boundary, and
    // inside or on the region
    std::vector<Segment> segs;
    segs.reserve(constraints.size());
    for(const auto& c : constraints)
        segs.push_back(Segment{points[static_cast<size_t>(c[0])], points[static_cast<size_t>(c[1])]});
    for(size_t i = 0; i < segs.size(); ++i)
    {
        for(size_t j = i + 1; j < segs.size(); ++j)
            if(segmentsProperlyIntersect(segs[i], segs[j]))
                throw InstanceError("instance '" + uid + "': crossing constraints");
        for(size_t j = 0; j < b; ++j)
            if(segmentsProperlyIntersect(segs[i], Segment{poly[j], poly[(j + 1) % b]}))
                throw InstanceError("instance '" + uid + "': constraint crosses region boundary");
        const Point mid((segs[i].a.x + segs[i].b.x) / 2, (segs[i].a.y + segs[i].b.y) / 2);
        if(pointInPolygon(mid, poly) == RegionPosition::Outside)
            throw InstanceError("instance '" + uid + "': constraint outside region");
    }

    for(const Point& p : points)
        if(pointInPolygon(p, poly) == RegionPosition::Outside)
            throw InstanceError("instance '" + uid + "': point outside region");
}

} // namespace nonobtuse
