#pragma once

#include "nonobtuse/primitives.hpp"

#include <vector>

namespace nonobtuse {

enum class ActionKind {
    InsertAltitude,
    InsertVoronoi,
    InsertCellCenter,
    Relocate,
    DeleteMerge,
};

const char* actionKindName(ActionKind kind);

/// One candidate local change: insert a Steiner point, relocate one, or
/// replace two adjacent ones by a single point.
struct Action {
    ActionKind kind = ActionKind::InsertAltitude;
    Point newPoint;
    std::vector<int> removedVertices; // empty / {v} / {v, w}
    int targetTriangle = -1;          // insertion kinds
    std::vector<int> cellConflict;    // InsertCellCenter: the cell's conflict set
    uint64_t stamp = 0;               // checksum of the incident sub-complex
};

struct ActionGenConfig {
    /// Generate a deletion action only when one of the two Steiner endpoints
    /// touches an obtuse triangle.
    bool gateDeleteMerge = true;
};

/// The candidate action set of the triangulation: altitude insertions for
/// obtuse triangles with constrained longest sides, Voronoi insertions
/// otherwise, cell-center insertions for arrangement cells, relocations of
/// obtuse-incident Steiner points, and deletions merging Steiner pairs.
/// Deterministic order.
std::vector<Action> generateActions(const Cdt& cdt, const ActionGenConfig& config = {});

/// Applies the action to a copy and restores the CDT invariants. Throws
/// CdtError when the action is stale (its sub-complex changed since
/// generation).
Cdt applyAction(const Cdt& cdt, const Action& action);

} // namespace nonobtuse
