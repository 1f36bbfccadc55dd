#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "onepl/graph.hpp"
#include "onepl/reports.hpp"

namespace onepl {

// Crossing record j: edges e1 and e2 cross at planarized vertex n + j.
struct Crossing {
    int e1 = -1;
    int e2 = -1;
    bool operator==(const Crossing&) const = default;
};

// Unvalidated drawing data, as parsed from a .1pl file or assembled by a
// generator.
struct DrawingData {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Crossing> crossings;
    // One counterclockwise neighbor list per planarized vertex 0..n+c-1.
    std::vector<std::vector<int>> rotation;
};

struct FaceWalk {
    std::vector<int> vertices;  // closed walk; one entry per edge-segment
    bool crossed = false;
    int degree() const { return static_cast<int>(vertices.size()); }
};

struct FaceCensus {
    std::vector<FaceWalk> faces;
    std::int64_t f3 = 0;  // 3-faces, crossed or not
    std::int64_t f4 = 0;
    std::int64_t t3 = 0;  // uncrossed 3-faces
    int max_degree = 0;
    std::int64_t segment_sum = 0;  // sum of face degrees
    int count() const { return static_cast<int>(faces.size()); }
};

// A validated 1-planar drawing: planarized rotation system over the base
// graph plus one degree-4 dummy vertex per crossing. Rotations are stored
// canonically (smallest neighbor first). Immutable once built.
struct OnePlaneDrawing {
    SimpleGraph base;
    std::vector<Crossing> crossings;
    std::vector<std::vector<int>> rotation;
    std::vector<int> crossing_of_edge;  // edge id -> crossing index, or -1

    int real_count() const { return base.n; }
    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int planar_count() const { return base.n + crossing_count(); }
    // Each crossed edge contributes two segments.
    int segment_count() const { return base.edge_count() + 2 * crossing_count(); }
    bool edge_crossed(int e) const { return crossing_of_edge[e] >= 0; }
    int edge_id(int u, int v) const;  // -1 if absent

    bool operator==(const OnePlaneDrawing& o) const {
        return base == o.base && crossings == o.crossings && rotation == o.rotation;
    }
};

// Checks every structural invariant of the format: simple base graph, each
// edge crossed at most once, crossing pairs non-adjacent, rotations matching
// the planarized segments, degree-4 alternating crossing vertices, connected
// planarization, and the sphere Euler relation.
OnePlaneDrawing validate_drawing(const DrawingData& raw);

FaceCensus trace_faces(const OnePlaneDrawing& d);

// Face tracing over a bare rotation system. `real_n` marks where dummy
// crossing ids start; faces visiting an id >= real_n are crossed.
// face_of_dart maps key (from * V + to) to a face index.
struct TracedFaces {
    FaceCensus census;
    std::unordered_map<std::int64_t, int> face_of_dart;
};
TracedFaces trace_rotation_faces(const std::vector<std::vector<int>>& rotation, int real_n);

// The plane spanning subgraph of uncrossed edges with its induced embedding.
struct SkeletonMap {
    SimpleGraph graph;
    std::vector<std::vector<int>> rotation;
    FaceCensus faces;
    std::int64_t f3 = 0;
    std::int64_t f4 = 0;
    bool connected = true;
    bool euler_checked = true;  // false: disconnected skeleton, Euler skipped
    bool faces_3_or_4 = false;
};

SkeletonMap skeleton(const OnePlaneDrawing& d);

// Builds a SkeletonMap directly from a crossing-free rotation system
// (generator outputs). Verifies rotation consistency and, when connected,
// the Euler relation.
SkeletonMap make_plane_map(const SimpleGraph& g, std::vector<std::vector<int>> rotation);

// A plane map is a drawing with no crossings. Fails on disconnected maps.
OnePlaneDrawing drawing_from_plane_map(const SkeletonMap& s);

// True iff every face has degree 3 (in edge-segments).
bool is_triangulated(const OnePlaneDrawing& d);

// |E(G)| = 4n - 8 - t3/2 on triangulated drawings.
IdentityReport biedl_check(const OnePlaneDrawing& d);

}  // namespace onepl
