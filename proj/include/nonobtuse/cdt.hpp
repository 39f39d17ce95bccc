#pragma once

#include "nonobtuse/geometry.hpp"
#include "nonobtuse/instance.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace nonobtuse {

struct CdtError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class VertexOrigin : uint8_t {
    Input,
    Steiner,
};

/// One face. Vertices are counterclockwise; n[i] is the neighbor across the
/// edge opposite v[i] (-1 outside the region). obtuseAt caches the exact
/// classification: -1 when non-obtuse, else the local index of the obtuse
/// corner.
struct TriRecord {
    std::array<int, 3> v{-1, -1, -1};
    std::array<int, 3> n{-1, -1, -1};
    int8_t obtuseAt = -1;
    bool alive = false;
};

struct LocateResult {
    enum class Kind { Vertex, Edge, Face } kind = Kind::Face;
    int tri = -1;
    int vertex = -1;          // Kind::Vertex
    int edgeA = -1, edgeB = -1; // Kind::Edge
};

using EdgeKey = std::pair<int, int>;

inline EdgeKey edgeKey(int a, int b)
{
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

/// Constrained Delaunay triangulation of an Instance, restricted to the
/// region interior. Maintains Steiner bookkeeping and constrained-edge
/// lineage so constraint splits can be re-merged on removal. Value type:
/// candidate evaluation branches by copying.
class Cdt {
public:
    /// Triangulates the instance: all input points, boundary and constraint
    /// edges forced and marked constrained, triangles outside the region
    /// discarded. Throws CdtError/InstanceError on invalid input.
    static Cdt build(Instance instance);

    // observers -------------------------------------------------------------
    const Instance& instance() const { return *m_instance; }
    int allocatedVertexCount() const { return static_cast<int>(m_points.size()); }
    bool vertexAlive(int v) const { return m_vertexAlive[static_cast<size_t>(v)] != 0; }
    const Point& point(int v) const { return m_points[static_cast<size_t>(v)]; }
    VertexOrigin origin(int v) const { return m_origin[static_cast<size_t>(v)]; }
    int steinerCount() const { return m_steinerCount; }
    int aliveVertexCount() const { return m_aliveVertexCount; }
    int aliveTriangleCount() const { return m_aliveTriCount; }
    int triangleSlotCount() const { return static_cast<int>(m_tris.size()); }
    bool triangleAlive(int t) const { return m_tris[static_cast<size_t>(t)].alive; }
    const TriRecord& tri(int t) const { return m_tris[static_cast<size_t>(t)]; }
    const Point& triPoint(int t, int corner) const
    {
        return m_points[static_cast<size_t>(m_tris[static_cast<size_t>(t)].v[static_cast<size_t>(corner)])];
    }
    Point centroid(int t) const;
    std::vector<int> aliveTriangles() const;
    std::vector<int> obtuseTriangles() const;
    int obtuseTriangleCount() const;
    bool isConstrained(int a, int b) const { return m_constrained.count(edgeKey(a, b)) != 0; }
    const std::map<EdgeKey, int>& constrainedEdges() const { return m_constrained; }
    /// Undirected edges of the triangulation, sorted.
    std::vector<EdgeKey> allEdges() const;
    std::optional<int> findVertex(const Point& p) const;
    /// Triangles incident to v, counterclockwise.
    std::vector<int> starTriangles(int v) const;
    /// Link of v, counterclockwise. Closed cycle for an interior vertex; for
    /// a vertex on the region boundary the first and last entries are its
    /// boundary neighbors.
    std::vector<int> linkCycle(int v) const;
    bool onRegionBoundary(int v) const;
    LocateResult locate(const Point& p) const;
    /// The visibility-clipped conflict set of p: triangles whose clipped
    /// circumcircle strictly contains p, discovered from its location.
    /// Sorted ids.
    std::vector<int> conflictCavity(const Point& p) const;
    /// q strictly inside t's circumcircle and the segment q -> centroid(t)
    /// crosses no constrained edge.
    bool clippedCircumcircleContains(int t, const Point& q) const;
    /// No constrained edge properly crossed between a and b.
    bool visible(const Point& a, const Point& b) const;

    // mutations ---------------------------------------------------------------
    /// Inserts p as a Steiner vertex. p must lie inside the region or in the
    /// interior of a constrained edge; constrained edges are split with
    /// lineage. Returns the vertex id. Throws on duplicates or points
    /// outside.
    int insertPoint(const Point& p);
    /// Removes Steiner vertex v and retriangulates the hole. A constraint
    /// split point with two collinear constrained neighbors re-merges its
    /// parent edge; any other constraint incidence is an error, as is an
    /// input vertex.
    void removePoint(int v);

    // test support ------------------------------------------------------------
    /// Structural validation (orientation, adjacency, constraint coverage,
    /// Euler formula). Throws CdtError on violation.
    void checkIntegrity() const;
    /// Order-independent hash of the triangle set (vertex triples).
    uint64_t topologyHash() const;

private:
    Cdt() = default;

    int addVertex(const Point& p, VertexOrigin origin);
    int newTriangle(int a, int b, int c);
    void killTriangle(int t);
    static int localIndex(const TriRecord& t, int v);
    int neighborAcross(int t, int a, int b) const;
    void setNeighborAcross(int t, int a, int b, int nb);
    void addConstrained(int a, int b, int originId);
    void removeConstrained(int a, int b);
    void rebuildConstraintCache();

    LocateResult locateFrom(const Point& p, int startTri) const;
    struct Cavity {
        std::vector<int> tris;              // sorted
        std::vector<int> cycleFrom;         // boundary cycle vertices, CCW
        std::vector<int> cycleOuter;        // outer triangle per cycle edge
        int gapIndex = -1;                  // cycle edge collinear with p, if any
        bool valid = false;
    };
    std::vector<int> conflictTris(const LocateResult& loc, const Point& p) const;
    Cavity buildCavity(const LocateResult& loc, const Point& p) const;
    int insertByCavity(int v, const LocateResult& loc, const Cavity& cavity);
    int insertByFlips(int v, const LocateResult& loc);
    void legalizeAround(int v, std::vector<std::pair<int, int>>& stack);
    void insertCore(int v, const LocateResult& loc);

    /// Triangulates the simple polygon given by cycle (CCW vertex ids) with
    /// new triangles: ear clipping followed by Delaunay flips. outer maps
    /// boundary EdgeKeys to surviving outside triangles and is extended with
    /// the new triangles' boundary adjacency as they are created.
    void triangulateHole(const std::vector<int>& cycle, std::map<EdgeKey, int>& outer);

    // build stages
    void initSuperTriangle(const std::vector<Point>& pts);
    bool edgeExists(int a, int b) const;
    void forceEdge(int a, int b, int originId);
    void carveOutside();
    void compact();

    std::shared_ptr<const Instance> m_instance;
    std::vector<Point> m_points;
    std::vector<VertexOrigin> m_origin;
    std::vector<char> m_vertexAlive;
    std::vector<int> m_vertexTri; // one incident alive triangle per vertex
    std::vector<TriRecord> m_tris;
    std::vector<int> m_freeTris;
    std::map<Point, int> m_pointIndex;
    std::map<EdgeKey, int> m_constrained; // edge -> origin id
    struct ConstraintSeg {
        int a, b;
        double minX, minY, maxX, maxY;
    };
    std::vector<ConstraintSeg> m_constraintCache;
    int m_steinerCount = 0;
    int m_aliveTriCount = 0;
    int m_aliveVertexCount = 0;
    int m_locateHint = 0;
    int m_superBase = -1; // during build only
};

} // namespace nonobtuse
