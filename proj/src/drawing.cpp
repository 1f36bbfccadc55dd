#include "onepl/drawing.hpp"

#include <algorithm>
#include <queue>

namespace onepl {

namespace {

// Rotate each cyclic list so the smallest neighbor id comes first.
void canonicalize(std::vector<std::vector<int>>& rotation) {
    for (auto& r : rotation) {
        if (r.empty()) continue;
        auto it = std::min_element(r.begin(), r.end());
        std::rotate(r.begin(), it, r.end());
    }
}

}  // namespace

int OnePlaneDrawing::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int e = 0; e < base.edge_count(); ++e)
        if (base.edges[e] == std::make_pair(u, v)) return e;
    return -1;
}

TracedFaces trace_rotation_faces(const std::vector<std::vector<int>>& rotation, int real_n) {
    TracedFaces out;
    int V = static_cast<int>(rotation.size());

    // position of neighbor u in rotation[v]
    std::vector<std::unordered_map<int, int>> pos(V);
    std::int64_t dart_total = 0;
    for (int v = 0; v < V; ++v) {
        for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i)
            pos[v][rotation[v][i]] = i;
        dart_total += static_cast<std::int64_t>(rotation[v].size());
    }

    if (dart_total == 0) {
        // An edgeless map still bounds one face per (single-vertex) sphere.
        if (V == 1) {
            out.census.faces.push_back(FaceWalk{});
        }
        return out;
    }

    auto dart_key = [V](int from, int to) {
        return static_cast<std::int64_t>(from) * V + to;
    };

    std::vector<std::vector<bool>> used(V);
    for (int v = 0; v < V; ++v) used[v].assign(rotation[v].size(), false);

    for (int v = 0; v < V; ++v) {
        for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) {
            if (used[v][i]) continue;
            FaceWalk walk;
            int face_idx = static_cast<int>(out.census.faces.size());
            int cu = v, ci = i;
            do {
                used[cu][ci] = true;
                int cv = rotation[cu][ci];
                walk.vertices.push_back(cu);
                if (cu >= real_n || cv >= real_n) walk.crossed = true;
                out.face_of_dart[dart_key(cu, cv)] = face_idx;
                // next dart: successor of the reversed segment at cv
                int back = pos[cv].at(cu);
                int ni = (back + 1) % static_cast<int>(rotation[cv].size());
                cu = cv;
                ci = ni;
            } while (!(cu == v && ci == i));
            out.census.faces.push_back(std::move(walk));
        }
    }

    auto& c = out.census;
    for (const auto& f : c.faces) {
        int deg = f.degree();
        c.segment_sum += deg;
        c.max_degree = std::max(c.max_degree, deg);
        if (deg == 3) {
            ++c.f3;
            if (!f.crossed) ++c.t3;
        } else if (deg == 4) {
            ++c.f4;
        }
    }
    return out;
}

OnePlaneDrawing validate_drawing(const DrawingData& raw) {
    OnePlaneDrawing d;
    d.base = build_graph(raw.n, raw.edges);
    d.crossings = raw.crossings;

    int n = raw.n;
    int m = d.base.edge_count();
    int c = static_cast<int>(d.crossings.size());
    int V = n + c;

    d.crossing_of_edge.assign(m, -1);
    for (int j = 0; j < c; ++j) {
        auto [e1, e2] = d.crossings[j];
        if (e1 < 0 || e1 >= m || e2 < 0 || e2 >= m)
            throw Error("crossing " + std::to_string(j) + " references invalid edge id");
        if (e1 == e2)
            throw Error("crossing " + std::to_string(j) + " crosses edge " + std::to_string(e1) +
                        " with itself");
        for (int e : {e1, e2}) {
            if (d.crossing_of_edge[e] >= 0)
                throw Error("edge " + std::to_string(e) + " crossed twice");
            d.crossing_of_edge[e] = j;
        }
        auto [a, b] = d.base.edges[e1];
        auto [x, y] = d.base.edges[e2];
        if (a == x || a == y || b == x || b == y)
            throw Error("crossing " + std::to_string(j) + ": adjacent edges " +
                        std::to_string(e1) + " and " + std::to_string(e2) + " cross");
    }

    if (static_cast<int>(raw.rotation.size()) != V)
        throw Error("rotation table has " + std::to_string(raw.rotation.size()) +
                    " lists, expected " + std::to_string(V));

    // Expected planarized neighbors per vertex.
    std::vector<std::vector<int>> expected(V);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = d.base.edges[e];
        int j = d.crossing_of_edge[e];
        if (j < 0) {
            expected[u].push_back(v);
            expected[v].push_back(u);
        } else {
            expected[u].push_back(n + j);
            expected[v].push_back(n + j);
            expected[n + j].push_back(u);
            expected[n + j].push_back(v);
        }
    }

    d.rotation = raw.rotation;
    for (int v = 0; v < V; ++v) {
        for (int w : d.rotation[v])
            if (w < 0 || w >= V)
                throw Error("rotation of vertex " + std::to_string(v) +
                            " references invalid id " + std::to_string(w));
        if (v >= n && d.rotation[v].size() != 4)
            throw Error("crossing vertex " + std::to_string(v) + " has degree " +
                        std::to_string(d.rotation[v].size()) + ", expected 4");
        auto got = d.rotation[v];
        auto want = expected[v];
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (std::adjacent_find(got.begin(), got.end()) != got.end())
            throw Error("rotation of vertex " + std::to_string(v) + " repeats a neighbor");
        if (got != want)
            throw Error("asymmetric rotation at vertex " + std::to_string(v) +
                        ": list does not match incident segments");
    }

    // Alternation at crossing vertices: opposite rotation entries must be the
    // two endpoints of the same crossed edge.
    for (int j = 0; j < c; ++j) {
        const auto& r = d.rotation[n + j];
        auto [a, b] = d.base.edges[d.crossings[j].e1];
        auto first = std::minmax(r[0], r[2]);
        auto second = std::minmax(r[1], r[3]);
        auto e1ends = std::minmax(a, b);
        if (first != e1ends && second != e1ends)
            throw Error("crossing " + std::to_string(n + j) + " not alternating");
    }

    // Connected planarization.
    {
        std::vector<bool> seen(V, false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        int visited = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : d.rotation[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++visited;
                    q.push(w);
                }
        }
        if (visited != V) {
            int missing = 0;
            while (seen[missing]) ++missing;
            throw Error("disconnected planarization (vertex " + std::to_string(missing) +
                        " unreachable)");
        }
    }

    // Sphere check.
    auto traced = trace_rotation_faces(d.rotation, n);
    std::int64_t E = m + 2 * static_cast<std::int64_t>(c);
    std::int64_t F = traced.census.count();
    if (V - E + F != 2)
        throw Error("Euler check failed: V - E + F = " + std::to_string(V - E + F) +
                    ", expected 2 (V=" + std::to_string(V) + " E=" + std::to_string(E) +
                    " F=" + std::to_string(F) + ")");

    canonicalize(d.rotation);
    return d;
}

FaceCensus trace_faces(const OnePlaneDrawing& d) {
    return trace_rotation_faces(d.rotation, d.real_count()).census;
}

SkeletonMap skeleton(const OnePlaneDrawing& d) {
    int n = d.real_count();
    std::vector<std::pair<int, int>> kept;
    for (int e = 0; e < d.base.edge_count(); ++e)
        if (!d.edge_crossed(e)) kept.push_back(d.base.edges[e]);

    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v)
        for (int w : d.rotation[v])
            if (w < n) rot[v].push_back(w);

    return make_plane_map(build_graph(n, kept), std::move(rot));
}

SkeletonMap make_plane_map(const SimpleGraph& g, std::vector<std::vector<int>> rotation) {
    if (static_cast<int>(rotation.size()) != g.n)
        throw Error("plane map rotation table size mismatch");
    for (int v = 0; v < g.n; ++v) {
        auto got = rotation[v];
        std::sort(got.begin(), got.end());
        if (std::adjacent_find(got.begin(), got.end()) != got.end())
            throw Error("rotation of vertex " + std::to_string(v) + " repeats a neighbor");
        if (got != g.adj[v])
            throw Error("asymmetric rotation at vertex " + std::to_string(v) +
                        ": list does not match incident edges");
    }

    SkeletonMap s;
    s.graph = g;
    canonicalize(rotation);
    s.rotation = std::move(rotation);
    s.connected = is_connected(g);
    auto traced = trace_rotation_faces(s.rotation, g.n);
    s.faces = std::move(traced.census);
    s.f3 = s.faces.f3;
    s.f4 = s.faces.f4;
    s.faces_3_or_4 = true;
    for (const auto& f : s.faces.faces)
        if (f.degree() != 3 && f.degree() != 4) s.faces_3_or_4 = false;
    if (s.connected) {
        std::int64_t euler = g.n - static_cast<std::int64_t>(g.edge_count()) + s.faces.count();
        if (euler != 2)
            throw Error("plane map fails Euler relation: V - E + F = " + std::to_string(euler));
        s.euler_checked = true;
    } else {
        s.euler_checked = false;  // Euler check skipped: disconnected
    }
    return s;
}

OnePlaneDrawing drawing_from_plane_map(const SkeletonMap& s) {
    if (!s.connected) throw Error("disconnected plane map cannot be emitted as a drawing");
    DrawingData raw;
    raw.n = s.graph.n;
    raw.edges = s.graph.edges;
    raw.rotation = s.rotation;
    return validate_drawing(raw);
}

bool is_triangulated(const OnePlaneDrawing& d) {
    auto census = trace_faces(d);
    for (const auto& f : census.faces)
        if (f.degree() != 3) return false;
    return !census.faces.empty();
}

IdentityReport biedl_check(const OnePlaneDrawing& d) {
    auto census = trace_faces(d);
    bool triangulated = !census.faces.empty();
    for (const auto& f : census.faces)
        if (f.degree() != 3) triangulated = false;

    std::int64_t n = d.real_count();
    std::int64_t m = d.base.edge_count();
    std::int64_t t3 = census.t3;
    if (triangulated && t3 % 2 != 0)
        throw Error("internal inconsistency: triangulated drawing with odd t3");

    std::vector<Hypothesis> hyps{
        {"triangulated", triangulated ? HypStatus::Met : HypStatus::Unmet}};
    // compare in doubled units so an odd t3 under an unmet hypothesis cannot
    // round
    bool holds = 2 * m == 8 * n - 16 - t3;
    return make_identity("biedl_edge_count", m, (8 * n - 16 - t3) / 2, holds, std::move(hyps));
}

}  // namespace onepl
