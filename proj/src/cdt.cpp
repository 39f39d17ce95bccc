#include "nonobtuse/cdt.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace nonobtuse {

namespace {

bool strictlyBetween(const Point& a, const Point& b, const Point& p)
{
    return sign(dot(p, a, b)) < 0;
}

bool insideClosedTriangle(const Point& a, const Point& b, const Point& c, const Point& q)
{
    // a,b,c counterclockwise
    return orientation(a, b, q) != Orientation::Clockwise &&
           orientation(b, c, q) != Orientation::Clockwise &&
           orientation(c, a, q) != Orientation::Clockwise;
}

} // namespace

// --- small structural helpers ----------------------------------------------

int Cdt::localIndex(const TriRecord& t, int v)
{
    for(int i = 0; i < 3; ++i)
        if(t.v[static_cast<size_t>(i)] == v)
            return i;
    throw CdtError("localIndex: vertex not in triangle");
}

int Cdt::neighborAcross(int t, int a, int b) const
{
    const TriRecord& tr = m_tris[static_cast<size_t>(t)];
    for(int i = 0; i < 3; ++i)
    {
        const int u = tr.v[static_cast<size_t>((i + 1) % 3)];
        const int w = tr.v[static_cast<size_t>((i + 2) % 3)];
        if((u == a && w == b) || (u == b && w == a))
            return tr.n[static_cast<size_t>(i)];
    }
    throw CdtError("neighborAcross: edge not in triangle");
}

void Cdt::setNeighborAcross(int t, int a, int b, int nb)
{
    TriRecord& tr = m_tris[static_cast<size_t>(t)];
    for(int i = 0; i < 3; ++i)
    {
        const int u = tr.v[static_cast<size_t>((i + 1) % 3)];
        const int w = tr.v[static_cast<size_t>((i + 2) % 3)];
        if((u == a && w == b) || (u == b && w == a))
        {
            tr.n[static_cast<size_t>(i)] = nb;
            return;
        }
    }
    throw CdtError("setNeighborAcross: edge not in triangle");
}

int Cdt::addVertex(const Point& p, VertexOrigin origin)
{
    const int id = static_cast<int>(m_points.size());
    m_points.push_back(p);
    m_origin.push_back(origin);
    m_vertexAlive.push_back(1);
    m_vertexTri.push_back(-1);
    m_pointIndex.emplace(p, id);
    ++m_aliveVertexCount;
    if(origin == VertexOrigin::Steiner)
        ++m_steinerCount;
    return id;
}

int Cdt::newTriangle(int a, int b, int c)
{
    const Point& pa = m_points[static_cast<size_t>(a)];
    const Point& pb = m_points[static_cast<size_t>(b)];
    const Point& pc = m_points[static_cast<size_t>(c)];
    if(orientation(pa, pb, pc) != Orientation::CounterClockwise)
        throw CdtError("newTriangle: not counterclockwise");

    int id;
    if(!m_freeTris.empty())
    {
        id = m_freeTris.back();
        m_freeTris.pop_back();
    }
    else
    {
        id = static_cast<int>(m_tris.size());
        m_tris.emplace_back();
    }
    TriRecord& t = m_tris[static_cast<size_t>(id)];
    t.v = {a, b, c};
    t.n = {-1, -1, -1};
    t.alive = true;
    const auto obtuse = obtuseVertexIndex(pa, pb, pc);
    t.obtuseAt = obtuse ? static_cast<int8_t>(*obtuse) : int8_t{-1};
    ++m_aliveTriCount;
    m_vertexTri[static_cast<size_t>(a)] = id;
    m_vertexTri[static_cast<size_t>(b)] = id;
    m_vertexTri[static_cast<size_t>(c)] = id;
    return id;
}

void Cdt::killTriangle(int t)
{
    TriRecord& tr = m_tris[static_cast<size_t>(t)];
    if(!tr.alive)
        throw CdtError("killTriangle: already dead");
    for(int i = 0; i < 3; ++i)
    {
        const int nb = tr.n[static_cast<size_t>(i)];
        if(nb != -1 && m_tris[static_cast<size_t>(nb)].alive)
        {
            TriRecord& nr = m_tris[static_cast<size_t>(nb)];
            for(int j = 0; j < 3; ++j)
                if(nr.n[static_cast<size_t>(j)] == t)
                    nr.n[static_cast<size_t>(j)] = -1;
        }
    }
    tr.alive = false;
    --m_aliveTriCount;
    m_freeTris.push_back(t);
}

void Cdt::addConstrained(int a, int b, int originId)
{
    m_constrained[edgeKey(a, b)] = originId;
    rebuildConstraintCache();
}

void Cdt::removeConstrained(int a, int b)
{
    m_constrained.erase(edgeKey(a, b));
    rebuildConstraintCache();
}

void Cdt::rebuildConstraintCache()
{
    m_constraintCache.clear();
    m_constraintCache.reserve(m_constrained.size());
    for(const auto& [key, origin] : m_constrained)
    {
        (void)origin;
        const Point& pa = m_points[static_cast<size_t>(key.first)];
        const Point& pb = m_points[static_cast<size_t>(key.second)];
        const double ax = toDouble(pa.x), ay = toDouble(pa.y);
        const double bx = toDouble(pb.x), by = toDouble(pb.y);
        const double margin =
            1e-6 * (1.0 + std::max({std::abs(ax), std::abs(ay), std::abs(bx), std::abs(by)}));
        m_constraintCache.push_back(ConstraintSeg{key.first, key.second,
                                                  std::min(ax, bx) - margin, std::min(ay, by) - margin,
                                                  std::max(ax, bx) + margin, std::max(ay, by) + margin});
    }
}

// --- observers --------------------------------------------------------------

Point Cdt::centroid(int t) const
{
    const TriRecord& tr = m_tris[static_cast<size_t>(t)];
    const Point& a = m_points[static_cast<size_t>(tr.v[0])];
    const Point& b = m_points[static_cast<size_t>(tr.v[1])];
    const Point& c = m_points[static_cast<size_t>(tr.v[2])];
    return Point((a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3);
}

std::vector<int> Cdt::aliveTriangles() const
{
    std::vector<int> out;
    out.reserve(static_cast<size_t>(m_aliveTriCount));
    for(int t = 0; t < static_cast<int>(m_tris.size()); ++t)
        if(m_tris[static_cast<size_t>(t)].alive)
            out.push_back(t);
    return out;
}

std::vector<int> Cdt::obtuseTriangles() const
{
    std::vector<int> out;
    for(int t = 0; t < static_cast<int>(m_tris.size()); ++t)
        if(m_tris[static_cast<size_t>(t)].alive && m_tris[static_cast<size_t>(t)].obtuseAt >= 0)
            out.push_back(t);
    return out;
}

int Cdt::obtuseTriangleCount() const
{
    int count = 0;
    for(const TriRecord& t : m_tris)
        if(t.alive && t.obtuseAt >= 0)
            ++count;
    return count;
}

std::vector<EdgeKey> Cdt::allEdges() const
{
    std::set<EdgeKey> edges;
    for(const TriRecord& t : m_tris)
    {
        if(!t.alive)
            continue;
        edges.insert(edgeKey(t.v[0], t.v[1]));
        edges.insert(edgeKey(t.v[1], t.v[2]));
        edges.insert(edgeKey(t.v[2], t.v[0]));
    }
    return std::vector<EdgeKey>(edges.begin(), edges.end());
}

std::optional<int> Cdt::findVertex(const Point& p) const
{
    const auto it = m_pointIndex.find(p);
    if(it == m_pointIndex.end())
        return std::nullopt;
    return it->second;
}

std::vector<int> Cdt::starTriangles(int v) const
{
    const int start = m_vertexTri[static_cast<size_t>(v)];
    if(start == -1 || !m_tris[static_cast<size_t>(start)].alive)
        throw CdtError("starTriangles: vertex has no incident triangle");

    std::vector<int> ccw;
    int t = start;
    // rotate counterclockwise: in (v, a, b) the next triangle shares (v, b)
    while(true)
    {
        ccw.push_back(t);
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        const int i = localIndex(tr, v);
        const int next = tr.n[static_cast<size_t>((i + 1) % 3)]; // across edge (v, v[i+2])
        if(next == -1)
            break;
        if(next == start)
            return ccw; // closed fan
        t = next;
        if(ccw.size() > m_tris.size())
            throw CdtError("starTriangles: corrupted adjacency");
    }
    // hit the boundary: collect the clockwise side and stitch
    std::vector<int> cw;
    t = start;
    while(true)
    {
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        const int i = localIndex(tr, v);
        const int prev = tr.n[static_cast<size_t>((i + 2) % 3)]; // across edge (v, v[i+1])
        if(prev == -1)
            break;
        t = prev;
        cw.push_back(t);
        if(cw.size() > m_tris.size())
            throw CdtError("starTriangles: corrupted adjacency");
    }
    std::reverse(cw.begin(), cw.end());
    cw.insert(cw.end(), ccw.begin(), ccw.end());
    return cw;
}

std::vector<int> Cdt::linkCycle(int v) const
{
    const std::vector<int> star = starTriangles(v);
    std::vector<int> link;
    link.reserve(star.size() + 1);
    for(const int t : star)
    {
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        const int i = localIndex(tr, v);
        link.push_back(tr.v[static_cast<size_t>((i + 1) % 3)]);
    }
    // open chain: append the trailing vertex of the last triangle
    const TriRecord& last = m_tris[static_cast<size_t>(star.back())];
    const int i = localIndex(last, v);
    const int tail = last.v[static_cast<size_t>((i + 2) % 3)];
    if(tail != link.front())
        link.push_back(tail);
    return link;
}

bool Cdt::onRegionBoundary(int v) const
{
    const std::vector<int> star = starTriangles(v);
    const TriRecord& last = m_tris[static_cast<size_t>(star.back())];
    const int i = localIndex(last, v);
    return last.n[static_cast<size_t>((i + 1) % 3)] == -1; // open fan
}

LocateResult Cdt::locate(const Point& p) const
{
    int start = m_locateHint;
    if(start < 0 || start >= static_cast<int>(m_tris.size()) ||
       !m_tris[static_cast<size_t>(start)].alive)
    {
        start = -1;
        for(int t = 0; t < static_cast<int>(m_tris.size()); ++t)
            if(m_tris[static_cast<size_t>(t)].alive)
            {
                start = t;
                break;
            }
        if(start == -1)
            throw CdtError("locate: empty triangulation");
    }
    return locateFrom(p, start);
}

LocateResult Cdt::locateFrom(const Point& p, int startTri) const
{
    const auto classify = [&](int t) -> std::optional<LocateResult> {
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        int signs[3];
        for(int i = 0; i < 3; ++i)
        {
            const Point& a = m_points[static_cast<size_t>(tr.v[static_cast<size_t>(i)])];
            const Point& b = m_points[static_cast<size_t>(tr.v[static_cast<size_t>((i + 1) % 3)])];
            signs[i] = sign(cross(a, b, p));
            if(signs[i] < 0)
                return std::nullopt;
        }
        LocateResult res;
        res.tri = t;
        const int zeros = (signs[0] == 0) + (signs[1] == 0) + (signs[2] == 0);
        if(zeros == 0)
        {
            res.kind = LocateResult::Kind::Face;
        }
        else if(zeros == 1)
        {
            res.kind = LocateResult::Kind::Edge;
            for(int i = 0; i < 3; ++i)
                if(signs[i] == 0)
                {
                    res.edgeA = tr.v[static_cast<size_t>(i)];
                    res.edgeB = tr.v[static_cast<size_t>((i + 1) % 3)];
                }
        }
        else
        {
            res.kind = LocateResult::Kind::Vertex;
            for(int i = 0; i < 3; ++i)
                if(signs[i] != 0)
                    res.vertex = tr.v[static_cast<size_t>((i + 2) % 3)];
        }
        return res;
    };

    int t = startTri;
    int prev = -1;
    const int maxSteps = 4 * m_aliveTriCount + 16;
    for(int step = 0; step < maxSteps; ++step)
    {
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        int moveTo = -1;
        bool outsideHere = false;
        for(int i = 0; i < 3; ++i)
        {
            const Point& a = m_points[static_cast<size_t>(tr.v[static_cast<size_t>(i)])];
            const Point& b = m_points[static_cast<size_t>(tr.v[static_cast<size_t>((i + 1) % 3)])];
            if(sign(cross(a, b, p)) < 0)
            {
                const int nb = tr.n[static_cast<size_t>((i + 2) % 3)];
                if(nb == -1)
                {
                    outsideHere = true;
                    continue;
                }
                if(nb == prev && moveTo != -1)
                    continue;
                moveTo = nb;
                if(nb != prev)
                    break;
            }
        }
        if(moveTo == -1)
        {
            if(outsideHere)
                throw CdtError("locate: point outside the triangulated region");
            const auto res = classify(t);
            if(res)
                return *res;
            throw CdtError("locate: inconsistent walk");
        }
        prev = t;
        t = moveTo;
    }
    // walk did not settle; deterministic exhaustive fallback
    for(int id = 0; id < static_cast<int>(m_tris.size()); ++id)
    {
        if(!m_tris[static_cast<size_t>(id)].alive)
            continue;
        const auto res = classify(id);
        if(res)
            return *res;
    }
    throw CdtError("locate: point outside the triangulated region");
}

bool Cdt::visible(const Point& a, const Point& b) const
{
    if(a == b)
        return true;
    const double ax = toDouble(a.x), ay = toDouble(a.y);
    const double bx = toDouble(b.x), by = toDouble(b.y);
    const double minX = std::min(ax, bx), maxX = std::max(ax, bx);
    const double minY = std::min(ay, by), maxY = std::max(ay, by);
    const Segment seg{a, b};
    for(const ConstraintSeg& c : m_constraintCache)
    {
        if(c.maxX < minX || c.minX > maxX || c.maxY < minY || c.minY > maxY)
            continue;
        const Segment cs{m_points[static_cast<size_t>(c.a)], m_points[static_cast<size_t>(c.b)]};
        if(segmentsProperlyIntersect(seg, cs))
            return false;
    }
    return true;
}

bool Cdt::clippedCircumcircleContains(int t, const Point& q) const
{
    const TriRecord& tr = m_tris[static_cast<size_t>(t)];
    const Point& a = m_points[static_cast<size_t>(tr.v[0])];
    const Point& b = m_points[static_cast<size_t>(tr.v[1])];
    const Point& c = m_points[static_cast<size_t>(tr.v[2])];
    if(inCircle(a, b, c, q) != CirclePosition::Inside)
        return false;
    return visible(q, centroid(t));
}

std::vector<int> Cdt::conflictTris(const LocateResult& loc, const Point& p) const
{
    std::vector<int> seeds;
    if(loc.kind == LocateResult::Kind::Face)
    {
        seeds.push_back(loc.tri);
    }
    else
    {
        seeds.push_back(loc.tri);
        const int other = neighborAcross(loc.tri, loc.edgeA, loc.edgeB);
        if(other != -1)
            seeds.push_back(other);
    }

    std::vector<char> inCavity(m_tris.size(), 0);
    std::vector<int> cavity;
    std::deque<int> queue;
    for(const int s : seeds)
    {
        if(!inCavity[static_cast<size_t>(s)])
        {
            inCavity[static_cast<size_t>(s)] = 1;
            cavity.push_back(s);
            queue.push_back(s);
        }
    }
    while(!queue.empty())
    {
        const int t = queue.front();
        queue.pop_front();
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        for(int i = 0; i < 3; ++i)
        {
            const int nb = tr.n[static_cast<size_t>(i)];
            if(nb == -1 || inCavity[static_cast<size_t>(nb)])
                continue;
            const int u = tr.v[static_cast<size_t>((i + 1) % 3)];
            const int w = tr.v[static_cast<size_t>((i + 2) % 3)];
            if(isConstrained(u, w))
                continue;
            const TriRecord& nr = m_tris[static_cast<size_t>(nb)];
            const Point& a = m_points[static_cast<size_t>(nr.v[0])];
            const Point& b = m_points[static_cast<size_t>(nr.v[1])];
            const Point& c = m_points[static_cast<size_t>(nr.v[2])];
            if(inCircle(a, b, c, p) != CirclePosition::Inside)
                continue;
            if(!visible(p, centroid(nb)))
                continue;
            inCavity[static_cast<size_t>(nb)] = 1;
            cavity.push_back(nb);
            queue.push_back(nb);
        }
    }
    std::sort(cavity.begin(), cavity.end());
    return cavity;
}

std::vector<int> Cdt::conflictCavity(const Point& p) const
{
    const LocateResult loc = locate(p);
    if(loc.kind == LocateResult::Kind::Vertex)
        throw CdtError("conflictCavity: point is an existing vertex");
    return conflictTris(loc, p);
}

Cdt::Cavity Cdt::buildCavity(const LocateResult& loc, const Point& p) const
{
    Cavity cav;
    cav.tris = conflictTris(loc, p);

    std::vector<char> inCavity(m_tris.size(), 0);
    for(const int t : cav.tris)
        inCavity[static_cast<size_t>(t)] = 1;

    // boundary edges, directed counterclockwise around the cavity
    struct BoundaryEdge {
        int to;
        int outer;
    };
    std::map<int, BoundaryEdge> bySource;
    std::set<int> cavityVerts;
    size_t boundaryCount = 0;
    for(const int t : cav.tris)
    {
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        for(int i = 0; i < 3; ++i)
        {
            cavityVerts.insert(tr.v[static_cast<size_t>(i)]);
            const int nb = tr.n[static_cast<size_t>(i)];
            if(nb != -1 && inCavity[static_cast<size_t>(nb)])
                continue;
            const int u = tr.v[static_cast<size_t>((i + 1) % 3)];
            const int w = tr.v[static_cast<size_t>((i + 2) % 3)];
            ++boundaryCount;
            if(!bySource.emplace(u, BoundaryEdge{w, nb}).second)
                return cav; // pinched cavity
        }
    }
    if(bySource.empty())
        return cav;

    // single closed cycle covering all boundary edges and all cavity vertices
    const int startV = bySource.begin()->first;
    int cur = startV;
    do
    {
        const auto it = bySource.find(cur);
        if(it == bySource.end())
            return cav;
        cav.cycleFrom.push_back(cur);
        cav.cycleOuter.push_back(it->second.outer);
        cur = it->second.to;
        if(cav.cycleFrom.size() > boundaryCount)
            return cav;
    } while(cur != startV);
    if(cav.cycleFrom.size() != boundaryCount || cav.cycleFrom.size() != cavityVerts.size())
    {
        cav.cycleFrom.clear();
        cav.cycleOuter.clear();
        return cav; // multiple cycles or interior vertex
    }

    // fan orientations: every cycle edge must see p to its left; the single
    // allowed exception is the located constrained boundary edge containing p
    const size_t m = cav.cycleFrom.size();
    for(size_t j = 0; j < m; ++j)
    {
        const int u = cav.cycleFrom[j];
        const int w = cav.cycleFrom[(j + 1) % m];
        const Orientation o =
            orientation(m_points[static_cast<size_t>(u)], m_points[static_cast<size_t>(w)], p);
        if(o == Orientation::CounterClockwise)
            continue;
        if(o == Orientation::Clockwise)
        {
            cav.cycleFrom.clear();
            cav.cycleOuter.clear();
            return cav;
        }
        const bool isLocatedEdge = loc.kind == LocateResult::Kind::Edge &&
                                   edgeKey(u, w) == edgeKey(loc.edgeA, loc.edgeB);
        if(cav.gapIndex != -1 || !isLocatedEdge || cav.cycleOuter[j] != -1)
        {
            cav.cycleFrom.clear();
            cav.cycleOuter.clear();
            return cav;
        }
        cav.gapIndex = static_cast<int>(j);
    }
    cav.valid = true;
    return cav;
}

// --- insertion ---------------------------------------------------------------

int Cdt::insertByCavity(int v, const LocateResult& loc, const Cavity& cav)
{
    const bool splitConstrained =
        loc.kind == LocateResult::Kind::Edge && isConstrained(loc.edgeA, loc.edgeB);
    int splitOrigin = -1;
    if(splitConstrained)
        splitOrigin = m_constrained.at(edgeKey(loc.edgeA, loc.edgeB));

    for(const int t : cav.tris)
        killTriangle(t);

    const size_t m = cav.cycleFrom.size();
    std::vector<int> fan(m, -1);
    for(size_t j = 0; j < m; ++j)
    {
        if(static_cast<int>(j) == cav.gapIndex)
            continue;
        fan[j] = newTriangle(cav.cycleFrom[j], cav.cycleFrom[(j + 1) % m], v);
    }
    for(size_t j = 0; j < m; ++j)
    {
        if(fan[j] == -1)
            continue;
        TriRecord& t = m_tris[static_cast<size_t>(fan[j])];
        t.n[2] = cav.cycleOuter[j];
        if(cav.cycleOuter[j] != -1)
            setNeighborAcross(cav.cycleOuter[j], cav.cycleFrom[j], cav.cycleFrom[(j + 1) % m], fan[j]);
        t.n[0] = fan[(j + 1) % m];
        t.n[1] = fan[(j + m - 1) % m];
    }
    if(splitConstrained)
    {
        removeConstrained(loc.edgeA, loc.edgeB);
        addConstrained(loc.edgeA, v, splitOrigin);
        addConstrained(v, loc.edgeB, splitOrigin);
    }
    for(size_t j = 0; j < m; ++j)
        if(fan[j] != -1)
            m_locateHint = fan[j];
    return v;
}

int Cdt::insertByFlips(int v, const LocateResult& loc)
{
    std::vector<std::pair<int, int>> stack; // (triangle containing v, unused)

    if(loc.kind == LocateResult::Kind::Face)
    {
        const TriRecord old = m_tris[static_cast<size_t>(loc.tri)];
        killTriangle(loc.tri);
        const int a = old.v[0], b = old.v[1], c = old.v[2];
        const int tab = newTriangle(a, b, v);
        const int tbc = newTriangle(b, c, v);
        const int tca = newTriangle(c, a, v);
        // outer neighbors: old.n[i] is across the edge opposite old.v[i]
        const auto hook = [&](int t, int x, int y, int outer) {
            m_tris[static_cast<size_t>(t)].n[2] = outer;
            if(outer != -1)
                setNeighborAcross(outer, x, y, t);
        };
        hook(tab, a, b, old.n[2]);
        hook(tbc, b, c, old.n[0]);
        hook(tca, c, a, old.n[1]);
        m_tris[static_cast<size_t>(tab)].n[0] = tbc;
        m_tris[static_cast<size_t>(tab)].n[1] = tca;
        m_tris[static_cast<size_t>(tbc)].n[0] = tca;
        m_tris[static_cast<size_t>(tbc)].n[1] = tab;
        m_tris[static_cast<size_t>(tca)].n[0] = tab;
        m_tris[static_cast<size_t>(tca)].n[1] = tbc;
        stack = {{tab, 0}, {tbc, 0}, {tca, 0}};
        m_locateHint = tab;
    }
    else
    {
        const int a = loc.edgeA;
        const int b = loc.edgeB;
        const bool splitConstrained = isConstrained(a, b);
        int splitOrigin = -1;
        if(splitConstrained)
            splitOrigin = m_constrained.at(edgeKey(a, b));

        const int t1 = loc.tri;
        const int t2 = neighborAcross(t1, a, b);
        // t1 side: (a, b, c) in counterclockwise cyclic order
        const TriRecord old1 = m_tris[static_cast<size_t>(t1)];
        const int ia = localIndex(old1, a);
        int c;
        bool abForward; // true when t1 traverses a -> b
        if(old1.v[static_cast<size_t>((ia + 1) % 3)] == b)
        {
            c = old1.v[static_cast<size_t>((ia + 2) % 3)];
            abForward = true;
        }
        else
        {
            c = old1.v[static_cast<size_t>((ia + 1) % 3)];
            abForward = false;
        }
        (void)abForward;
        // normalize: work with directed edge (s, t) such that t1 = (s, t, c)
        const int s = (old1.v[static_cast<size_t>((ia + 1) % 3)] == b) ? a : b;
        const int tt = (s == a) ? b : a;
        const int outer_sc = neighborAcross(t1, tt, c);   // across (t, c)
        const int outer_ct = neighborAcross(t1, c, s);    // across (c, s)
        killTriangle(t1);
        const int n1 = newTriangle(s, v, c);
        const int n2 = newTriangle(v, tt, c);
        m_tris[static_cast<size_t>(n1)].n[0] = n2; // across (v, c)
        m_tris[static_cast<size_t>(n2)].n[1] = n1; // across (c, v)
        const auto hookEdge = [&](int t, int x, int y, int outer) {
            setNeighborAcross(t, x, y, outer);
            if(outer != -1)
                setNeighborAcross(outer, x, y, t);
        };
        hookEdge(n1, c, s, outer_ct);
        hookEdge(n2, tt, c, outer_sc);
        stack.push_back({n1, 0});
        stack.push_back({n2, 0});
        if(t2 != -1)
        {
            const TriRecord old2 = m_tris[static_cast<size_t>(t2)];
            // t2 = (t, s, d)
            const int it = localIndex(old2, tt);
            int d;
            if(old2.v[static_cast<size_t>((it + 1) % 3)] == s)
                d = old2.v[static_cast<size_t>((it + 2) % 3)];
            else
                d = old2.v[static_cast<size_t>((it + 1) % 3)];
            const int outer_sd = neighborAcross(t2, s, d);
            const int outer_dt = neighborAcross(t2, d, tt);
            killTriangle(t2);
            const int n3 = newTriangle(tt, v, d);
            const int n4 = newTriangle(v, s, d);
            m_tris[static_cast<size_t>(n3)].n[0] = n4; // across (v, d)
            m_tris[static_cast<size_t>(n4)].n[1] = n3;
            hookEdge(n3, d, tt, outer_dt);
            hookEdge(n4, s, d, outer_sd);
            // across the split edge halves
            hookEdge(n1, s, v, n4);
            hookEdge(n2, v, tt, n3);
            stack.push_back({n3, 0});
            stack.push_back({n4, 0});
            m_locateHint = n3;
        }
        else
        {
            setNeighborAcross(n1, s, v, -1);
            setNeighborAcross(n2, v, tt, -1);
            m_locateHint = n1;
        }
        if(splitConstrained)
        {
            removeConstrained(a, b);
            addConstrained(a, v, splitOrigin);
            addConstrained(v, b, splitOrigin);
        }
    }

    legalizeAround(v, stack);
    return v;
}

void Cdt::legalizeAround(int v, std::vector<std::pair<int, int>>& stack)
{
    int guard = 0;
    const int guardMax = 64 * static_cast<int>(m_tris.size()) + 1024;
    while(!stack.empty())
    {
        if(++guard > guardMax)
            throw CdtError("legalizeAround: flip loop failed to settle");
        const int t = stack.back().first;
        stack.pop_back();
        if(!m_tris[static_cast<size_t>(t)].alive)
            continue;
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        bool hasV = false;
        for(int i = 0; i < 3; ++i)
            hasV |= tr.v[static_cast<size_t>(i)] == v;
        if(!hasV)
            continue;
        const int iv = localIndex(tr, v);
        const int u = tr.v[static_cast<size_t>((iv + 1) % 3)];
        const int w = tr.v[static_cast<size_t>((iv + 2) % 3)];
        const int nb = tr.n[static_cast<size_t>(iv)];
        if(nb == -1 || isConstrained(u, w))
            continue;
        const TriRecord& nr = m_tris[static_cast<size_t>(nb)];
        int z = -1;
        for(int i = 0; i < 3; ++i)
        {
            const int cand = nr.v[static_cast<size_t>(i)];
            if(cand != u && cand != w)
                z = cand;
        }
        const Point& pu = m_points[static_cast<size_t>(u)];
        const Point& pw = m_points[static_cast<size_t>(w)];
        const Point& pv = m_points[static_cast<size_t>(v)];
        const Point& pz = m_points[static_cast<size_t>(z)];
        if(inCircle(pv, pu, pw, pz) != CirclePosition::Inside)
            continue;
        // flip (u, w) -> (v, z)
        const int outer_uz = neighborAcross(nb, u, z);
        const int outer_zw = neighborAcross(nb, z, w);
        const int outer_vu = neighborAcross(t, v, u);
        const int outer_wv = neighborAcross(t, w, v);
        killTriangle(t);
        killTriangle(nb);
        const int ta = newTriangle(v, u, z);
        const int tb = newTriangle(v, z, w);
        const auto hookEdge = [&](int tri, int x, int y, int outer) {
            setNeighborAcross(tri, x, y, outer);
            if(outer != -1)
                setNeighborAcross(outer, x, y, tri);
        };
        hookEdge(ta, v, u, outer_vu);
        hookEdge(ta, u, z, outer_uz);
        hookEdge(ta, z, v, tb);
        hookEdge(tb, v, z, ta);
        hookEdge(tb, z, w, outer_zw);
        hookEdge(tb, w, v, outer_wv);
        m_locateHint = ta;
        stack.push_back({ta, 0});
        stack.push_back({tb, 0});
    }
}

void Cdt::insertCore(int v, const LocateResult& loc)
{
    const Point p = m_points[static_cast<size_t>(v)];
    const Cavity cav = buildCavity(loc, p);
    if(cav.valid)
        insertByCavity(v, loc, cav);
    else
        insertByFlips(v, loc);
}

int Cdt::insertPoint(const Point& p)
{
    if(m_pointIndex.count(p) != 0)
        throw CdtError("insertPoint: duplicate vertex");
    const LocateResult loc = locate(p); // throws when p is outside the region
    if(loc.kind == LocateResult::Kind::Vertex)
        throw CdtError("insertPoint: duplicate vertex");
    const int v = addVertex(p, VertexOrigin::Steiner);
    insertCore(v, loc);
    return v;
}

// --- removal ------------------------------------------------------------------

void Cdt::removePoint(int v)
{
    if(v < 0 || v >= static_cast<int>(m_points.size()) || !m_vertexAlive[static_cast<size_t>(v)])
        throw CdtError("removePoint: no such vertex");
    if(m_origin[static_cast<size_t>(v)] == VertexOrigin::Input)
        throw CdtError("removePoint: cannot remove an input vertex");

    const std::vector<int> star = starTriangles(v);
    const std::vector<int> link = linkCycle(v);
    const bool open = link.size() == star.size() + 1;

    // constraint incidence
    std::vector<int> constrainedNeighbors;
    for(const int u : link)
        if(isConstrained(v, u))
            constrainedNeighbors.push_back(u);
    // for an open star the closing pair may repeat; dedupe
    std::sort(constrainedNeighbors.begin(), constrainedNeighbors.end());
    constrainedNeighbors.erase(std::unique(constrainedNeighbors.begin(), constrainedNeighbors.end()),
                               constrainedNeighbors.end());

    bool mergeMode = false;
    int mergeA = -1, mergeB = -1, mergeOrigin = -1;
    if(!constrainedNeighbors.empty())
    {
        if(constrainedNeighbors.size() != 2)
            throw CdtError("removePoint: vertex pinned by constraints");
        mergeA = constrainedNeighbors[0];
        mergeB = constrainedNeighbors[1];
        const int originA = m_constrained.at(edgeKey(v, mergeA));
        const int originB = m_constrained.at(edgeKey(v, mergeB));
        if(originA != originB ||
           orientation(m_points[static_cast<size_t>(mergeA)], m_points[static_cast<size_t>(v)],
                       m_points[static_cast<size_t>(mergeB)]) != Orientation::Collinear)
            throw CdtError("removePoint: vertex pinned by constraints");
        mergeMode = true;
        mergeOrigin = originA;
    }
    if(open && !mergeMode)
        throw CdtError("removePoint: boundary vertex without mergeable constraints");

    // hole cycle (counterclockwise). For an open star the closing edge is the
    // merged boundary edge.
    const std::vector<int>& cycle = link;

    // outer adjacency of the hole boundary, captured before carving
    std::map<EdgeKey, int> outer;
    for(const int t : star)
    {
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        const int i = localIndex(tr, v);
        const int u = tr.v[static_cast<size_t>((i + 1) % 3)];
        const int w = tr.v[static_cast<size_t>((i + 2) % 3)];
        outer[edgeKey(u, w)] = tr.n[static_cast<size_t>(i)];
    }
    if(open)
        outer[edgeKey(cycle.front(), cycle.back())] = -1; // region exterior

    for(const int t : star)
        killTriangle(t);

    if(mergeMode)
    {
        removeConstrained(v, mergeA);
        removeConstrained(v, mergeB);
        addConstrained(mergeA, mergeB, mergeOrigin);
    }

    if(mergeMode && !open)
    {
        // interior constraint chord: split the hole cycle at the two merge
        // endpoints and triangulate each side
        const auto posA = std::find(cycle.begin(), cycle.end(), mergeA) - cycle.begin();
        const auto posB = std::find(cycle.begin(), cycle.end(), mergeB) - cycle.begin();
        const size_t ia = static_cast<size_t>(posA), ib = static_cast<size_t>(posB);
        std::vector<int> first, second;
        for(size_t k = ia;; k = (k + 1) % cycle.size())
        {
            first.push_back(cycle[k]);
            if(k == ib)
                break;
        }
        for(size_t k = ib;; k = (k + 1) % cycle.size())
        {
            second.push_back(cycle[k]);
            if(k == ia)
                break;
        }
        triangulateHole(first, outer);
        triangulateHole(second, outer);
    }
    else
    {
        triangulateHole(cycle, outer);
    }

    m_pointIndex.erase(m_points[static_cast<size_t>(v)]);
    m_vertexAlive[static_cast<size_t>(v)] = 0;
    m_vertexTri[static_cast<size_t>(v)] = -1;
    --m_aliveVertexCount;
    --m_steinerCount;
}

// --- hole triangulation ---------------------------------------------------------

void Cdt::triangulateHole(const std::vector<int>& cycle, std::map<EdgeKey, int>& outer)
{
    const size_t k = cycle.size();
    if(k < 3)
        throw CdtError("triangulateHole: degenerate hole");

    const auto pt = [&](int id) -> const Point& { return m_points[static_cast<size_t>(id)]; };

    // ear clipping
    std::vector<int> poly = cycle;
    std::vector<std::array<int, 3>> tris;
    while(poly.size() > 3)
    {
        bool clipped = false;
        for(size_t i = 0; i < poly.size(); ++i)
        {
            const size_t n = poly.size();
            const int prev = poly[(i + n - 1) % n];
            const int cur = poly[i];
            const int next = poly[(i + 1) % n];
            if(orientation(pt(prev), pt(cur), pt(next)) != Orientation::CounterClockwise)
                continue;
            bool blocked = false;
            for(size_t j = 0; j < n && !blocked; ++j)
            {
                const int other = poly[j];
                if(other == prev || other == cur || other == next)
                    continue;
                blocked = insideClosedTriangle(pt(prev), pt(cur), pt(next), pt(other));
            }
            if(blocked)
                continue;
            tris.push_back({prev, cur, next});
            poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
            break;
        }
        if(!clipped)
            throw CdtError("triangulateHole: no ear found (non-simple hole?)");
    }
    tris.push_back({poly[0], poly[1], poly[2]});

    // boundary edges of the hole (flips must not cross them)
    std::set<EdgeKey> boundary;
    for(size_t i = 0; i < k; ++i)
        boundary.insert(edgeKey(cycle[i], cycle[(i + 1) % k]));

    // Delaunay flips on internal diagonals
    const auto edgeUsers = [&](const EdgeKey& e) {
        std::vector<size_t> users;
        for(size_t i = 0; i < tris.size(); ++i)
            for(int j = 0; j < 3; ++j)
                if(edgeKey(tris[i][static_cast<size_t>(j)], tris[i][static_cast<size_t>((j + 1) % 3)]) == e)
                    users.push_back(i);
        return users;
    };
    bool changed = true;
    int guard = 0;
    while(changed)
    {
        if(++guard > 64 * static_cast<int>(k) * static_cast<int>(k) + 256)
            throw CdtError("triangulateHole: flip loop failed to settle");
        changed = false;
        std::set<EdgeKey> internal;
        for(const auto& t : tris)
            for(int j = 0; j < 3; ++j)
            {
                const EdgeKey e = edgeKey(t[static_cast<size_t>(j)], t[static_cast<size_t>((j + 1) % 3)]);
                if(boundary.count(e) == 0)
                    internal.insert(e);
            }
        for(const EdgeKey& e : internal)
        {
            const auto users = edgeUsers(e);
            if(users.size() != 2)
                continue;
            const auto& t1 = tris[users[0]];
            const auto& t2 = tris[users[1]];
            int x = -1, y = -1;
            for(const int vid : t1)
                if(vid != e.first && vid != e.second)
                    x = vid;
            for(const int vid : t2)
                if(vid != e.first && vid != e.second)
                    y = vid;
            if(x == y || x == -1 || y == -1)
                continue;
            if(!segmentsProperlyIntersect(Segment{pt(e.first), pt(e.second)}, Segment{pt(x), pt(y)}))
                continue;
            if(inCircle(pt(e.first), pt(e.second), pt(x), pt(y)) != CirclePosition::Inside)
                continue;
            // flip: (e1,e2,x),(e2,e1,y) -> (x,y diagonal)
            const int u = e.first, w = e.second;
            std::array<int, 3> na{}, nb{};
            if(orientation(pt(x), pt(u), pt(y)) == Orientation::CounterClockwise)
            {
                na = {x, u, y};
                nb = {y, w, x};
            }
            else
            {
                na = {x, y, u};
                nb = {y, x, w};
            }
            tris[users[0]] = na;
            tris[users[1]] = nb;
            changed = true;
            break;
        }
    }

    // materialize
    std::vector<int> made;
    made.reserve(tris.size());
    std::map<EdgeKey, std::vector<int>> edgeTris;
    for(const auto& t : tris)
    {
        const int id = newTriangle(t[0], t[1], t[2]);
        made.push_back(id);
        for(int j = 0; j < 3; ++j)
            edgeTris[edgeKey(t[static_cast<size_t>(j)], t[static_cast<size_t>((j + 1) % 3)])].push_back(id);
    }
    for(const auto& [e, users] : edgeTris)
    {
        if(users.size() == 2)
        {
            setNeighborAcross(users[0], e.first, e.second, users[1]);
            setNeighborAcross(users[1], e.first, e.second, users[0]);
            continue;
        }
        const int t = users[0];
        const auto it = outer.find(e);
        if(it == outer.end())
        {
            // shared chord with a polygon triangulated by a later call
            setNeighborAcross(t, e.first, e.second, -1);
            outer[e] = t;
        }
        else if(it->second == -1)
        {
            setNeighborAcross(t, e.first, e.second, -1);
        }
        else
        {
            setNeighborAcross(t, e.first, e.second, it->second);
            setNeighborAcross(it->second, e.first, e.second, t);
        }
    }
    m_locateHint = made.front();
}

// --- construction ----------------------------------------------------------

void Cdt::initSuperTriangle(const std::vector<Point>& pts)
{
    Rational minX = pts[0].x, maxX = pts[0].x, minY = pts[0].y, maxY = pts[0].y;
    for(const Point& p : pts)
    {
        minX = std::min(minX, p.x);
        maxX = std::max(maxX, p.x);
        minY = std::min(minY, p.y);
        maxY = std::max(maxY, p.y);
    }
    const Rational cx = (minX + maxX) / 2;
    const Rational cy = (minY + maxY) / 2;
    Rational d = std::max(maxX - minX, maxY - minY);
    if(d < 1)
        d = 1;
    m_superBase = static_cast<int>(m_points.size());
    const int s0 = addVertex(Point(cx - 16 * d, cy - 9 * d), VertexOrigin::Input);
    const int s1 = addVertex(Point(cx + 16 * d, cy - 9 * d), VertexOrigin::Input);
    const int s2 = addVertex(Point(cx, cy + 16 * d), VertexOrigin::Input);
    newTriangle(s0, s1, s2);
    m_locateHint = 0;
}

bool Cdt::edgeExists(int a, int b) const
{
    for(const int u : linkCycle(a))
        if(u == b)
            return true;
    return false;
}

void Cdt::forceEdge(int a, int b, int originId)
{
    if(a == b)
        throw CdtError("forceEdge: degenerate edge");
    if(edgeExists(a, b))
    {
        addConstrained(a, b, originId);
        return;
    }

    const Point& pa = m_points[static_cast<size_t>(a)];
    const Point& pb = m_points[static_cast<size_t>(b)];

    // find the star triangle of a whose far edge the segment enters, or a
    // collinear vertex to split at
    int entry = -1;
    int leftV = -1, rightV = -1;
    for(const int t : starTriangles(a))
    {
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        const int i = localIndex(tr, a);
        const int x = tr.v[static_cast<size_t>((i + 1) % 3)];
        const int y = tr.v[static_cast<size_t>((i + 2) % 3)];
        const Point& px = m_points[static_cast<size_t>(x)];
        const Point& py = m_points[static_cast<size_t>(y)];
        if(orientation(pa, pb, px) == Orientation::Collinear && strictlyBetween(pa, pb, px))
        {
            forceEdge(a, x, originId);
            forceEdge(x, b, originId);
            return;
        }
        if(orientation(pa, pb, py) == Orientation::Collinear && strictlyBetween(pa, pb, py))
        {
            forceEdge(a, y, originId);
            forceEdge(y, b, originId);
            return;
        }
        if(sign(cross(pa, px, pb)) > 0 && sign(cross(pa, pb, py)) > 0)
        {
            entry = t;
            rightV = x;
            leftV = y;
            break;
        }
    }
    if(entry == -1)
        throw CdtError("forceEdge: no entry triangle (corrupt triangulation?)");

    std::vector<int> pipe{entry};
    std::vector<int> leftChain{leftV};
    std::vector<int> rightChain{rightV};
    int u = leftV, w = rightV; // crossed edge, left/right of a->b
    int endVertex = -1;
    int guard = 0;
    while(true)
    {
        if(++guard > static_cast<int>(m_tris.size()) + 8)
            throw CdtError("forceEdge: runaway pipe walk");
        if(isConstrained(u, w))
            throw CdtError("forceEdge: crosses a constrained edge");
        const int t = neighborAcross(pipe.back(), u, w);
        if(t == -1)
            throw CdtError("forceEdge: walked out of the triangulation");
        pipe.push_back(t);
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        int z = -1;
        for(int i = 0; i < 3; ++i)
            if(tr.v[static_cast<size_t>(i)] != u && tr.v[static_cast<size_t>(i)] != w)
                z = tr.v[static_cast<size_t>(i)];
        if(z == b)
        {
            endVertex = b;
            break;
        }
        const Point& pz = m_points[static_cast<size_t>(z)];
        const Orientation o = orientation(pa, pb, pz);
        if(o == Orientation::Collinear)
        {
            endVertex = z; // split at a vertex lying on the segment
            break;
        }
        if(o == Orientation::CounterClockwise)
        {
            leftChain.push_back(z);
            u = z;
        }
        else
        {
            rightChain.push_back(z);
            w = z;
        }
    }

    // outer adjacency of the pipe region
    std::vector<char> inPipe(m_tris.size(), 0);
    for(const int t : pipe)
        inPipe[static_cast<size_t>(t)] = 1;
    std::map<EdgeKey, int> outer;
    for(const int t : pipe)
    {
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        for(int i = 0; i < 3; ++i)
        {
            const int nb = tr.n[static_cast<size_t>(i)];
            if(nb != -1 && inPipe[static_cast<size_t>(nb)])
                continue;
            outer[edgeKey(tr.v[static_cast<size_t>((i + 1) % 3)],
                          tr.v[static_cast<size_t>((i + 2) % 3)])] = nb;
        }
    }
    for(const int t : pipe)
        killTriangle(t);

    // counterclockwise pseudo-polygons on either side of (a, endVertex)
    std::vector<int> upper{a, endVertex};
    for(auto it = leftChain.rbegin(); it != leftChain.rend(); ++it)
        upper.push_back(*it);
    std::vector<int> lower{a};
    for(const int r : rightChain)
        lower.push_back(r);
    lower.push_back(endVertex);
    triangulateHole(upper, outer);
    triangulateHole(lower, outer);
    addConstrained(a, endVertex, originId);

    if(endVertex != b)
        forceEdge(endVertex, b, originId);
}

void Cdt::carveOutside()
{
    const int boundaryCount = static_cast<int>(m_instance->regionBoundary.size());
    const auto blocking = [&](int u, int w) {
        const auto it = m_constrained.find(edgeKey(u, w));
        return it != m_constrained.end() && it->second < boundaryCount;
    };

    std::vector<char> outside(m_tris.size(), 0);
    std::deque<int> queue;
    for(int t = 0; t < static_cast<int>(m_tris.size()); ++t)
    {
        if(!m_tris[static_cast<size_t>(t)].alive)
            continue;
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        for(int i = 0; i < 3; ++i)
            if(tr.v[static_cast<size_t>(i)] >= m_superBase)
            {
                if(!outside[static_cast<size_t>(t)])
                {
                    outside[static_cast<size_t>(t)] = 1;
                    queue.push_back(t);
                }
            }
    }
    while(!queue.empty())
    {
        const int t = queue.front();
        queue.pop_front();
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        for(int i = 0; i < 3; ++i)
        {
            const int nb = tr.n[static_cast<size_t>(i)];
            if(nb == -1 || outside[static_cast<size_t>(nb)])
                continue;
            const int u = tr.v[static_cast<size_t>((i + 1) % 3)];
            const int w = tr.v[static_cast<size_t>((i + 2) % 3)];
            if(blocking(u, w))
                continue;
            outside[static_cast<size_t>(nb)] = 1;
            queue.push_back(nb);
        }
    }
    for(int t = 0; t < static_cast<int>(m_tris.size()); ++t)
        if(m_tris[static_cast<size_t>(t)].alive && outside[static_cast<size_t>(t)])
            killTriangle(t);
}

void Cdt::compact()
{
    // drop the super vertices (the last three; nothing references them now)
    for(int v = m_superBase; v < m_superBase + 3; ++v)
        m_pointIndex.erase(m_points[static_cast<size_t>(v)]);
    m_points.resize(static_cast<size_t>(m_superBase));
    m_origin.resize(static_cast<size_t>(m_superBase));
    m_vertexAlive.resize(static_cast<size_t>(m_superBase));
    m_vertexTri.resize(static_cast<size_t>(m_superBase));
    m_aliveVertexCount -= 3;
    m_superBase = -1;

    std::vector<int> remap(m_tris.size(), -1);
    std::vector<TriRecord> dense;
    dense.reserve(static_cast<size_t>(m_aliveTriCount));
    for(int t = 0; t < static_cast<int>(m_tris.size()); ++t)
    {
        if(!m_tris[static_cast<size_t>(t)].alive)
            continue;
        remap[static_cast<size_t>(t)] = static_cast<int>(dense.size());
        dense.push_back(m_tris[static_cast<size_t>(t)]);
    }
    for(TriRecord& t : dense)
        for(int i = 0; i < 3; ++i)
            if(t.n[static_cast<size_t>(i)] != -1)
                t.n[static_cast<size_t>(i)] = remap[static_cast<size_t>(t.n[static_cast<size_t>(i)])];
    m_tris = std::move(dense);
    m_freeTris.clear();
    std::fill(m_vertexTri.begin(), m_vertexTri.end(), -1);
    for(int t = 0; t < static_cast<int>(m_tris.size()); ++t)
        for(int i = 0; i < 3; ++i)
            m_vertexTri[static_cast<size_t>(m_tris[static_cast<size_t>(t)].v[static_cast<size_t>(i)])] = t;
    m_locateHint = 0;
}

Cdt Cdt::build(Instance instance)
{
    instance.validate();
    Cdt c;
    c.m_instance = std::make_shared<const Instance>(std::move(instance));
    const Instance& inst = *c.m_instance;
    const int n = static_cast<int>(inst.points.size());

    c.m_points.reserve(static_cast<size_t>(n) + 3);
    for(const Point& p : inst.points)
        c.addVertex(p, VertexOrigin::Input);
    c.initSuperTriangle(inst.points);

    for(int v = 0; v < n; ++v)
    {
        const LocateResult loc = c.locate(c.m_points[static_cast<size_t>(v)]);
        if(loc.kind == LocateResult::Kind::Vertex)
            throw CdtError("build: duplicate point");
        c.insertCore(v, loc);
    }

    const int b = static_cast<int>(inst.regionBoundary.size());
    for(int j = 0; j < b; ++j)
        c.forceEdge(inst.regionBoundary[static_cast<size_t>(j)],
                    inst.regionBoundary[static_cast<size_t>((j + 1) % b)], j);
    for(size_t j = 0; j < inst.constraints.size(); ++j)
        c.forceEdge(inst.constraints[j][0], inst.constraints[j][1], b + static_cast<int>(j));

    c.carveOutside();
    c.compact();
    c.m_steinerCount = 0;
    return c;
}

// --- validation and hashing ---------------------------------------------------

void Cdt::checkIntegrity() const
{
    int aliveTris = 0;
    std::set<EdgeKey> edges;
    int boundaryEdges = 0;
    for(int t = 0; t < static_cast<int>(m_tris.size()); ++t)
    {
        const TriRecord& tr = m_tris[static_cast<size_t>(t)];
        if(!tr.alive)
            continue;
        ++aliveTris;
        const Point& p0 = m_points[static_cast<size_t>(tr.v[0])];
        const Point& p1 = m_points[static_cast<size_t>(tr.v[1])];
        const Point& p2 = m_points[static_cast<size_t>(tr.v[2])];
        if(orientation(p0, p1, p2) != Orientation::CounterClockwise)
            throw CdtError("integrity: triangle not counterclockwise");
        const auto obtuse = obtuseVertexIndex(p0, p1, p2);
        const int8_t expect = obtuse ? static_cast<int8_t>(*obtuse) : int8_t{-1};
        if(tr.obtuseAt != expect)
            throw CdtError("integrity: stale obtuse cache");
        for(int i = 0; i < 3; ++i)
        {
            if(!m_vertexAlive[static_cast<size_t>(tr.v[static_cast<size_t>(i)])])
                throw CdtError("integrity: triangle references dead vertex");
            const int u = tr.v[static_cast<size_t>((i + 1) % 3)];
            const int w = tr.v[static_cast<size_t>((i + 2) % 3)];
            edges.insert(edgeKey(u, w));
            const int nb = tr.n[static_cast<size_t>(i)];
            if(nb == -1)
            {
                ++boundaryEdges;
                if(!isConstrained(u, w))
                    throw CdtError("integrity: open edge not constrained");
                continue;
            }
            const TriRecord& nr = m_tris[static_cast<size_t>(nb)];
            if(!nr.alive)
                throw CdtError("integrity: neighbor is dead");
            if(neighborAcross(nb, u, w) != t)
                throw CdtError("integrity: neighbor link not reciprocal");
        }
    }
    if(aliveTris != m_aliveTriCount)
        throw CdtError("integrity: alive triangle count mismatch");

    // every constrained edge is an edge of the triangulation
    for(const auto& [e, origin] : m_constrained)
    {
        (void)origin;
        if(edges.count(e) == 0)
            throw CdtError("integrity: constrained edge missing from the triangulation");
    }

    // every alive vertex is used, with a valid incident-triangle pointer
    int aliveVerts = 0;
    int steiner = 0;
    for(int v = 0; v < static_cast<int>(m_points.size()); ++v)
    {
        if(!m_vertexAlive[static_cast<size_t>(v)])
            continue;
        ++aliveVerts;
        if(m_origin[static_cast<size_t>(v)] == VertexOrigin::Steiner)
            ++steiner;
        const int t = m_vertexTri[static_cast<size_t>(v)];
        if(t == -1 || !m_tris[static_cast<size_t>(t)].alive)
            throw CdtError("integrity: vertex without incident triangle");
        bool found = false;
        for(int i = 0; i < 3; ++i)
            found |= m_tris[static_cast<size_t>(t)].v[static_cast<size_t>(i)] == v;
        if(!found)
            throw CdtError("integrity: vertex-triangle pointer mismatch");
        const auto it = m_pointIndex.find(m_points[static_cast<size_t>(v)]);
        if(it == m_pointIndex.end() || it->second != v)
            throw CdtError("integrity: point index mismatch");
    }
    if(aliveVerts != m_aliveVertexCount)
        throw CdtError("integrity: alive vertex count mismatch");
    if(steiner != m_steinerCount)
        throw CdtError("integrity: steiner count mismatch");

    // Euler's formula for a triangulated topological disk: V - E + F = 1
    if(m_aliveVertexCount - static_cast<int>(edges.size()) + aliveTris != 1)
        throw CdtError("integrity: Euler formula violated");
}

uint64_t Cdt::topologyHash() const
{
    uint64_t h = 0;
    for(const TriRecord& t : m_tris)
    {
        if(!t.alive)
            continue;
        // canonical rotation: smallest vertex first, cyclic order kept
        int i = 0;
        if(t.v[1] < t.v[i])
            i = 1;
        if(t.v[2] < t.v[i])
            i = 2;
        uint64_t x = 0xcbf29ce484222325ULL;
        for(int k = 0; k < 3; ++k)
        {
            x ^= static_cast<uint64_t>(t.v[static_cast<size_t>((i + k) % 3)]);
            x *= 0x100000001b3ULL;
        }
        h += x;
    }
    return h;
}

} // namespace nonobtuse

