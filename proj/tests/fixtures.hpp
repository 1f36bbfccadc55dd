#pragma once

// Shared instance constructions for the test suites. Rotations here were
// worked out from explicit planar layouts; validate_drawing re-checks every
// invariant on construction.

#include <vector>

#include "onepl/checks.hpp"
#include "onepl/drawing.hpp"
#include "onepl/generators.hpp"
#include "onepl/graph.hpp"
#include "onepl/theorems.hpp"

namespace fixtures {

using namespace onepl;

// Triangle 0,1,2 with 3 in the middle.
inline OnePlaneDrawing k4_tetrahedral() {
    DrawingData d;
    d.n = 4;
    d.edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    d.rotation = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
    return validate_drawing(d);
}

// Square 0-1-3-2 with crossing diagonals (0,3) and (1,2).
inline OnePlaneDrawing k4_pyramidal() {
    DrawingData d;
    d.n = 4;
    d.edges = {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 3}, {1, 2}};
    d.crossings = {{4, 5}};
    d.rotation = {{1, 4, 2}, {3, 4, 0}, {3, 0, 4}, {2, 4, 1}, {3, 2, 0, 1}};
    return validate_drawing(d);
}

// K4 tetrahedral plus an apex 4 joined to 0 and 1, placed in the face that
// avoids vertex 3. The triangle (0,1,2) then has 3 and 4 on opposite sides.
inline OnePlaneDrawing k4_plus_apex() {
    DrawingData d;
    d.n = 5;
    d.edges = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}};
    d.rotation = {{1, 3, 2, 4}, {2, 3, 0, 4}, {0, 3, 1}, {0, 1, 2}, {0, 1}};
    return validate_drawing(d);
}

inline OnePlaneDrawing k5_drawing() { return kite_augment(gen_wheel(4)); }

inline OnePlaneDrawing k6_prism_drawing() { return kite_augment(gen_prism()); }

inline OnePlaneDrawing kite_cube() { return kite_augment(gen_cube()); }

// Square with crossing diagonals but side edge (1,3) missing: not rich.
inline OnePlaneDrawing broken_kite() {
    DrawingData d;
    d.n = 4;
    d.edges = {{0, 1}, {3, 2}, {2, 0}, {0, 3}, {1, 2}};
    d.crossings = {{3, 4}};
    d.rotation = {{1, 4, 2}, {4, 0}, {3, 0, 4}, {2, 4}, {3, 2, 0, 1}};
    return validate_drawing(d);
}

// Two disjoint triangles {0,1,2} and {3,4,5} joined only by the crossing
// pair (0,3) x (1,4): the planarization is connected but the skeleton
// splits into two components.
inline OnePlaneDrawing split_skeleton() {
    DrawingData d;
    d.n = 6;
    d.edges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}};
    d.crossings = {{6, 7}};
    d.rotation = {{2, 1, 6}, {6, 0, 2}, {0, 1},      {5, 4, 6},
                  {6, 3, 5}, {4, 3},    {4, 0, 1, 3}};
    return validate_drawing(d);
}

// Pyramidal K4 plus a vertex 4 inside the crossed corner face at (0,1):
// every kite side edge still exists uncrossed, but one corner face of the
// crossing (vertex 5) is no longer a triangle.
inline OnePlaneDrawing kite_with_fat_corner() {
    DrawingData d;
    d.n = 5;
    d.edges = {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 3}, {1, 2}, {0, 4}, {1, 4}};
    d.crossings = {{4, 5}};
    // pyramidal rotations with 4 spliced into the face (1,0,x=5)
    d.rotation = {{1, 4, 5, 2}, {3, 5, 4, 0}, {3, 0, 5}, {2, 5, 1}, {1, 0}, {3, 2, 0, 1}};
    return validate_drawing(d);
}

inline SkeletonMap icosahedron_map() {
    std::vector<std::vector<int>> faces;
    auto u = [](int i) { return 1 + ((i % 5) + 5) % 5; };
    auto w = [](int i) { return 6 + ((i % 5) + 5) % 5; };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, u(i), u(i + 1)});
        faces.push_back({u(i + 1), u(i), w(i + 1)});
        faces.push_back({w(i + 1), u(i), w(i)});
        faces.push_back({11, w(i + 1), w(i)});
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(0, u(i));
        edges.emplace_back(std::min(u(i), u(i + 1)), std::max(u(i), u(i + 1)));
        edges.emplace_back(std::min(u(i), w(i)), std::max(u(i), w(i)));
        edges.emplace_back(std::min(u(i), w(i + 1)), std::max(u(i), w(i + 1)));
        edges.emplace_back(std::min(w(i), w(i + 1)), std::max(w(i), w(i + 1)));
        edges.emplace_back(w(i), 11);
    }
    return make_plane_map(build_graph(12, edges), rotation_from_faces(12, faces));
}

inline SkeletonMap octahedron_map() {
    std::vector<std::vector<int>> faces;
    auto e = [](int i) { return 1 + ((i % 4) + 4) % 4; };
    for (int i = 0; i < 4; ++i) {
        faces.push_back({0, e(i), e(i + 1)});
        faces.push_back({5, e(i + 1), e(i)});
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i) {
        edges.emplace_back(0, e(i));
        edges.emplace_back(std::min(e(i), e(i + 1)), std::max(e(i), e(i + 1)));
        edges.emplace_back(e(i), 5);
    }
    return make_plane_map(build_graph(6, edges), rotation_from_faces(6, faces));
}

// Cocktail-party graph K_{4x2} built directly: K8 minus the four antipodal
// pairs of the cube labeling (v, v xor 7).
inline SimpleGraph cocktail_party_4x2() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            if ((u ^ v) != 7) edges.emplace_back(u, v);
    return build_graph(8, edges);
}

inline SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

inline SimpleGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return build_graph(n, edges);
}

inline SimpleGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

inline SimpleGraph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return build_graph(leaves + 1, edges);
}

inline SimpleGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return build_graph(a + b, edges);
}

inline SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    auto threshold = static_cast<std::uint64_t>(p * 18446744073709551615ULL);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next() <= threshold) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

// Corpus of drawings small enough for the exhaustive conflict oracle.
inline std::vector<OnePlaneDrawing> small_drawing_corpus() {
    std::vector<OnePlaneDrawing> corpus;
    corpus.push_back(k4_tetrahedral());
    corpus.push_back(k4_pyramidal());
    corpus.push_back(k4_plus_apex());
    corpus.push_back(k5_drawing());
    corpus.push_back(k6_prism_drawing());
    corpus.push_back(kite_cube());
    corpus.push_back(broken_kite());
    corpus.push_back(split_skeleton());
    corpus.push_back(kite_with_fat_corner());
    for (int n : {6, 9, 12}) corpus.push_back(gen_apollonian(n, 11 * n + 1));
    return corpus;
}

// Instances whose assumed maximal-1-planarity cannot produce phantom 4-face
// terms: kite augmentations (every skeleton 4-face hosts its crossing pair)
// and triangulations (no 4-faces at all).
inline std::vector<OnePlaneDrawing> maximality_sound_corpus() {
    std::vector<OnePlaneDrawing> corpus;
    corpus.push_back(k4_tetrahedral());
    corpus.push_back(k4_pyramidal());
    corpus.push_back(k4_plus_apex());
    corpus.push_back(k5_drawing());
    corpus.push_back(k6_prism_drawing());
    corpus.push_back(kite_cube());
    corpus.push_back(broken_kite());
    corpus.push_back(kite_with_fat_corner());
    corpus.push_back(drawing_from_plane_map(icosahedron_map()));
    corpus.push_back(drawing_from_plane_map(octahedron_map()));
    for (int k : {0, 1, 2}) corpus.push_back(kite_augment(gen_octagonal_cylinder(k)));
    for (int n : {6, 9, 12, 20, 35, 50}) corpus.push_back(gen_apollonian(n, 11 * n + 1));
    return corpus;
}

// Everything the generators produce at desk scale, for audit/validity sweeps.
inline std::vector<OnePlaneDrawing> full_drawing_corpus() {
    auto corpus = small_drawing_corpus();
    corpus.push_back(drawing_from_plane_map(gen_cube()));
    corpus.push_back(drawing_from_plane_map(gen_prism()));
    corpus.push_back(drawing_from_plane_map(gen_wheel(4)));
    corpus.push_back(drawing_from_plane_map(gen_wheel(7)));
    corpus.push_back(drawing_from_plane_map(icosahedron_map()));
    corpus.push_back(drawing_from_plane_map(octahedron_map()));
    for (int k : {0, 1}) {
        corpus.push_back(drawing_from_plane_map(gen_octagonal_cylinder(k)));
        corpus.push_back(kite_augment(gen_octagonal_cylinder(k)));
    }
    for (int n : {20, 35, 50}) corpus.push_back(gen_apollonian(n, 7 * n + 3));
    return corpus;
}

}  // namespace fixtures
