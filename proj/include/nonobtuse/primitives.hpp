#pragma once

#include "nonobtuse/cdt.hpp"

#include <optional>
#include <vector>

namespace nonobtuse {

struct SimplePolygon {
    std::vector<Point> vertices; // counterclockwise, simple
};

/// Orthogonal projection of the obtuse vertex onto the (longest) opposite
/// side; splits the triangle into two right triangles. Exact. Throws on a
/// non-obtuse triangle.
Point altitudeDrop(const Point& p0, const Point& p1, const Point& p2);
Point altitudeDrop(const Cdt& cdt, int t);

/// The exact closed feasibility predicate behind polygonCenter: x strictly in
/// the polygon's kernel, inside every edge slab, and on or outside every
/// diametral disk. A feasible x fans the polygon into non-obtuse triangles.
bool polygonCenterFeasible(const SimplePolygon& poly, const Point& x);

struct PolygonCenterOptions {
    int coarseGrid = 12;
    int fineGrid = 200;  // matches the completeness resolution
    int refineCandidates = 4;
};

/// A rational point whose fan triangulates the polygon without obtuse
/// angles, or nothing when the feasible region is empty (or no rational
/// witness was found). Numeric candidate search + exact re-verification.
std::optional<Point> polygonCenter(const SimplePolygon& poly, const PolygonCenterOptions& options = {});

/// Visibility-constrained (bounded) Voronoi diagram of the CDT: one edge per
/// non-constrained triangulation edge, spanning the two adjacent
/// circumcenters, clipped to the parameter intervals whose points see both
/// defining sites. Coordinates are numeric; exactness is restored by
/// rationalizing any point that enters the CDT.
struct BoundedVoronoi {
    struct Edge {
        int site1, site2; // the dual cdt edge
        int tri1, tri2;
        double x1, y1, x2, y2; // circumcenters of tri1/tri2
        std::vector<std::pair<double, double>> pieces; // visible sub-intervals of [0,1]
    };
    std::vector<Edge> edges;
};

BoundedVoronoi visibilityVoronoi(const Cdt& cdt);

/// The insertion point of the paper's Voronoi-based action: a rational point
/// strictly inside the clipped circumcircle of obtuse triangle t, on (a
/// rationalized perturbation of) a bounded-Voronoi edge, locally maximizing
/// the distance to the edge's defining sites. Local search seeded at t's dual
/// vertex. Throws if t is not obtuse or its longest side is constrained.
std::optional<Point> voronoiInsertionPoint(const Cdt& cdt, int t, const BoundedVoronoi& voronoi);
std::optional<Point> voronoiInsertionPoint(const Cdt& cdt, int t);

/// A cell of the clipped-circumcircle arrangement, identified by its conflict
/// set. polygon is the union of the conflict triangles (the retriangulation
/// region of any point in the cell).
struct ArrangementCell {
    std::vector<int> conflictSet; // sorted triangle ids
    Point samplePoint;
    std::vector<int> polygonIds; // boundary vertex ids, counterclockwise
    SimplePolygon polygon;
};

/// Cells discovered by sampling circle intersections, circumcenters, and
/// centroids near obtuse triangles; exact conflict sets; duplicates merged;
/// cells without an obtuse triangle dropped. Deterministic.
std::vector<ArrangementCell> circleArrangementCells(const Cdt& cdt);

/// Exact conflict set of q against the whole triangulation (numeric circle
/// prefilter + exact membership). Sorted.
std::vector<int> conflictSetOf(const Cdt& cdt, const Point& q);

/// Boundary cycle (counterclockwise vertex ids) of the union of a set of
/// triangles; nothing if the union is not a simple disk. Vertices listed in
/// `interior` are expected strictly inside the union (e.g. the endpoints of a
/// merged Steiner pair) rather than on the cycle.
std::optional<std::vector<int>> trianglesUnionCycle(const Cdt& cdt,
                                                    const std::vector<int>& tris,
                                                    const std::vector<int>& interior = {});

/// Longest side of a triangle as a local corner index pair, exact. For an
/// obtuse triangle this is the side opposite the obtuse corner.
std::pair<int, int> longestSideCorners(const Cdt& cdt, int t);

} // namespace nonobtuse
