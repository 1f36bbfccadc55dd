#pragma once

#include <cstdint>
#include <vector>

#include "onepl/drawing.hpp"

namespace onepl {

// Deterministic PRNG for reproducible instance corpora; the stream depends
// only on the seed, never on the platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Stacked triangulation: starting from a triangle, repeatedly insert a vertex
// into a seeded-uniform face of the current triangulation. Crossing-free,
// 3n - 6 edges.
OnePlaneDrawing gen_apollonian(int n, std::uint64_t seed);

// Hub joined to an r-cycle: r triangles plus one r-face.
SkeletonMap gen_wheel(int r);

// Triangular prism: two triangles plus three quads.
SkeletonMap gen_prism();

// Cube Q3 with binary-coded vertex ids: six quads.
SkeletonMap gen_cube();

// 3 + k concentric octagons joined by spokes; each end ring capped by four
// chords leaving a central quad. n = 8(3+k), f3 = 8, f4 = n - 6.
SkeletonMap gen_octagonal_cylinder(int k);

// Inserts both diagonals of every 4-face as a crossing pair. The input must
// be simple, connected, with faces of degree 3 or 4 only, and no diagonal may
// already exist or repeat across faces. The output is rich and its skeleton
// is the input map.
OnePlaneDrawing kite_augment(const SkeletonMap& s);

// Rotation system of a sphere triangulation given by coherently oriented
// triangle faces (fixture construction helper).
std::vector<std::vector<int>> rotation_from_faces(int n,
                                                  const std::vector<std::vector<int>>& faces);

}  // namespace onepl
