#include "onepl/generators.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace onepl {

namespace {

void insert_after(std::vector<int>& rot, int anchor, int value) {
    auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(it + 1, value);
}

}  // namespace

OnePlaneDrawing gen_apollonian(int n, std::uint64_t seed) {
    if (n < 3) throw Error("apollonian order must be >= 3");
    SplitMix64 rng(seed);

    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::vector<int>> rot{{1, 2}, {2, 0}, {0, 1}};
    // oriented face walks of the current triangulation
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {1, 0, 2}};

    for (int v = 3; v < n; ++v) {
        auto idx = static_cast<size_t>(rng.below(faces.size()));
        auto [a, b, c] = faces[idx];
        edges.emplace_back(std::min(a, v), std::max(a, v));
        edges.emplace_back(std::min(b, v), std::max(b, v));
        edges.emplace_back(std::min(c, v), std::max(c, v));
        insert_after(rot[a], c, v);
        insert_after(rot[b], a, v);
        insert_after(rot[c], b, v);
        rot.push_back({a, c, b});
        faces[idx] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }

    DrawingData raw;
    raw.n = n;
    raw.edges = std::move(edges);
    raw.rotation = std::move(rot);
    return validate_drawing(raw);
}

SkeletonMap gen_wheel(int r) {
    if (r < 3) throw Error("wheel rim must have >= 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= r; ++i) edges.emplace_back(0, i);
    for (int i = 1; i <= r; ++i) edges.emplace_back(std::min(i, i % r + 1), std::max(i, i % r + 1));

    std::vector<std::vector<int>> rot(r + 1);
    for (int i = 1; i <= r; ++i) rot[0].push_back(i);
    for (int i = 1; i <= r; ++i) {
        int next = i % r + 1, prev = (i + r - 2) % r + 1;
        rot[i] = {next, 0, prev};
    }
    return make_plane_map(build_graph(r + 1, edges), std::move(rot));
}

namespace {

// Two concentric rings of size r joined by spokes; inner[p] and outer[p]
// share a spoke.
SkeletonMap ring_pair(const std::vector<int>& inner, const std::vector<int>& outer) {
    int r = static_cast<int>(inner.size());
    int n = 2 * r;
    std::vector<std::pair<int, int>> edges;
    auto add = [&](int u, int v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
    for (int p = 0; p < r; ++p) add(inner[p], inner[(p + 1) % r]);
    for (int p = 0; p < r; ++p) add(outer[p], outer[(p + 1) % r]);
    for (int p = 0; p < r; ++p) add(inner[p], outer[p]);

    std::vector<std::vector<int>> rot(n);
    for (int p = 0; p < r; ++p) {
        int nx = (p + 1) % r, pv = (p + r - 1) % r;
        rot[inner[p]] = {outer[p], inner[nx], inner[pv]};
        rot[outer[p]] = {outer[nx], inner[p], outer[pv]};
    }
    return make_plane_map(build_graph(n, edges), std::move(rot));
}

}  // namespace

SkeletonMap gen_prism() { return ring_pair({0, 1, 2}, {3, 4, 5}); }

SkeletonMap gen_cube() { return ring_pair({0, 1, 3, 2}, {4, 5, 7, 6}); }

SkeletonMap gen_octagonal_cylinder(int k) {
    if (k < 0) throw Error("octagonal cylinder layers must be >= 0");
    int rings = 3 + k;
    int L = rings - 1;
    int n = 8 * rings;
    auto id = [](int i, int j) { return 8 * i + ((j % 8) + 8) % 8; };

    std::vector<std::pair<int, int>> edges;
    auto add = [&](int u, int v) { edges.emplace_back(std::min(u, v), std::max(u, v)); };
    for (int i = 0; i < rings; ++i)
        for (int j = 0; j < 8; ++j) add(id(i, j), id(i, j + 1));
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < 8; ++j) add(id(i, j), id(i + 1, j));
    for (int j : {1, 3, 5, 7}) add(id(0, j), id(0, j + 2));
    for (int j : {1, 3, 5, 7}) add(id(L, j), id(L, j + 2));

    std::vector<std::vector<int>> rot(n);
    for (int j = 0; j < 8; ++j) {
        if (j % 2 == 0) {
            rot[id(0, j)] = {id(1, j), id(0, j + 1), id(0, j - 1)};
            rot[id(L, j)] = {id(L, j + 1), id(L - 1, j), id(L, j - 1)};
        } else {
            rot[id(0, j)] = {id(1, j), id(0, j + 1), id(0, j + 2), id(0, j - 2), id(0, j - 1)};
            rot[id(L, j)] = {id(L, j + 2), id(L, j + 1), id(L - 1, j), id(L, j - 1),
                             id(L, j - 2)};
        }
    }
    for (int i = 1; i < L; ++i)
        for (int j = 0; j < 8; ++j)
            rot[id(i, j)] = {id(i + 1, j), id(i, j + 1), id(i - 1, j), id(i, j - 1)};

    return make_plane_map(build_graph(n, edges), std::move(rot));
}

OnePlaneDrawing kite_augment(const SkeletonMap& s) {
    if (!s.connected) throw Error("kite augmentation needs a connected map");
    const auto& g = s.graph;

    DrawingData raw;
    raw.n = g.n;
    raw.edges = g.edges;
    raw.rotation = s.rotation;

    std::set<std::pair<int, int>> added;
    int next_crossing = 0;
    for (const auto& face : s.faces.faces) {
        int deg = face.degree();
        if (deg != 3 && deg != 4)
            throw Error("face of degree " + std::to_string(deg) +
                        " cannot be kite-augmented");
        if (deg == 3) continue;
        int a = face.vertices[0], b = face.vertices[1], c = face.vertices[2],
            d = face.vertices[3];
        {
            std::set<int> uniq{a, b, c, d};
            if (uniq.size() != 4) throw Error("4-face walk repeats a vertex");
        }
        for (auto [u, v] : {std::pair{a, c}, std::pair{b, d}}) {
            auto key = std::minmax(u, v);
            if (g.has_edge(u, v))
                throw Error("diagonal (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ") already an edge");
            if (!added.insert(key).second)
                throw Error("diagonal (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ") duplicated across two 4-faces");
        }

        int e1 = static_cast<int>(raw.edges.size());
        raw.edges.emplace_back(std::min(a, c), std::max(a, c));
        raw.edges.emplace_back(std::min(b, d), std::max(b, d));
        raw.crossings.push_back({e1, e1 + 1});

        int x = g.n + next_crossing++;
        insert_after(raw.rotation[a], d, x);
        insert_after(raw.rotation[b], a, x);
        insert_after(raw.rotation[c], b, x);
        insert_after(raw.rotation[d], c, x);
        raw.rotation.push_back({a, d, c, b});
    }
    return validate_drawing(raw);
}

std::vector<std::vector<int>> rotation_from_faces(int n,
                                                  const std::vector<std::vector<int>>& faces) {
    std::vector<std::map<int, int>> succ(n);
    for (const auto& f : faces) {
        if (f.size() != 3) throw Error("rotation_from_faces expects triangles");
        auto [a, b, c] = std::array{f[0], f[1], f[2]};
        // face darts (a->b),(b->c),(c->a): at b the successor of a is c
        if (!succ[b].emplace(a, c).second || !succ[c].emplace(b, a).second ||
            !succ[a].emplace(c, b).second)
            throw Error("faces are not coherently oriented");
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) continue;
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            rot[v].push_back(cur);
            cur = succ[v].at(cur);
        } while (cur != start && rot[v].size() <= succ[v].size());
        if (rot[v].size() != succ[v].size() || cur != start)
            throw Error("faces do not define a single rotation at vertex " + std::to_string(v));
    }
    return rot;
}

}  // namespace onepl
