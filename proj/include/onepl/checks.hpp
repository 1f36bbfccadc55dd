#pragma once

#include <array>
#include <vector>

#include "onepl/drawing.hpp"
#include "onepl/reports.hpp"

namespace onepl {

struct KiteRecord {
    int crossing = -1;                  // crossing index
    std::array<int, 4> endpoints{};     // v, w, x, y with vw crossing xy
    std::vector<std::pair<int, int>> missing_edges;
    std::vector<std::pair<int, int>> crossed_side_edges;
    bool corner_faces_ok = true;        // strict mode: all four corner faces triangular
    bool kite = false;
};

struct RichnessReport {
    std::vector<KiteRecord> per_crossing;
    bool rich = false;
    bool strict = false;
};

// A drawing is rich when every crossing pair forms a kite: the four
// endpoints induce a K4 and the four side edges are uncrossed. Strict mode
// additionally requires the four faces at the crossing vertex to be 3-faces.
RichnessReport check_rich(const OnePlaneDrawing& d, bool strict = false);

struct CycleSideReport {
    std::vector<int> cycle;          // canonical: min vertex first, min neighbor next
    std::vector<int> side_a;         // real vertices off the cycle, sorted
    std::vector<int> side_b;
    bool conflict = false;           // both sides nonempty
};

// Two-colors the faces of the planarization across the closed curve drawn by
// the cycle's edge-segments, then assigns each off-curve real vertex the
// color of its incident faces. The cycle's edges may be crossed by external
// edges (the curve passes through those crossing vertices) but must not
// cross each other.
CycleSideReport cycle_sides(const OnePlaneDrawing& d, const std::vector<int>& cycle);

// All triangles of the base graph whose edges pairwise do not cross each
// other and which have real vertices on both sides. Triangles violating the
// pairwise condition are skipped.
std::vector<CycleSideReport> find_conflict_triangles(const OnePlaneDrawing& d);

enum class K4Kind { Tetrahedral, Pyramidal };

struct K4Class {
    std::array<int, 4> clique{};
    int internal_crossings = 0;
    K4Kind kind = K4Kind::Tetrahedral;
};

// Counts crossings with both edges inside the clique: 0 is tetrahedral,
// 1 pyramidal; 2+ is impossible on valid drawings and reported as an error.
K4Class classify_k4_drawing(const OnePlaneDrawing& d, const std::array<int, 4>& clique);

// Hypothesis-aware audit of the structural lemmas on one instance:
// no conflict triangle (7-connected), no K5 (6-connected), every K4
// pyramidal (7-connected), and a 4-connected skeleton (7-connected rich).
std::vector<IdentityReport> lemma_audit(const OnePlaneDrawing& d);

}  // namespace onepl
