#pragma once

#include "nonobtuse/geometry.hpp"

#include <array>
#include <string>
#include <vector>

namespace nonobtuse {

struct InstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A PSLG to be triangulated: input points, the region boundary polygon
/// (indices into points, counterclockwise), and extra constraint edges that
/// must appear in the triangulation.
struct Instance {
    std::string uid;
    std::vector<Point> points;
    std::vector<int> regionBoundary;
    std::vector<std::array<int, 2>> constraints;

    /// Boundary vertex coordinates in order.
    std::vector<Point> boundaryPolygon() const;

    /// Throws InstanceError on out-of-range indices, duplicate points, a
    /// non-simple boundary, crossing constraints, or constraints/points
    /// outside the region. Reverses a clockwise boundary in place.
    void validate();
};

} // namespace nonobtuse
