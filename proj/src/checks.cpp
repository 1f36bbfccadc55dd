#include "onepl/checks.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace onepl {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

RichnessReport check_rich(const OnePlaneDrawing& d, bool strict) {
    RichnessReport report;
    report.strict = strict;
    report.rich = true;

    TracedFaces traced;
    if (strict) traced = trace_rotation_faces(d.rotation, d.real_count());
    int V = d.planar_count();

    for (int j = 0; j < d.crossing_count(); ++j) {
        KiteRecord rec;
        rec.crossing = j;
        auto [v, w] = d.base.edges[d.crossings[j].e1];
        auto [x, y] = d.base.edges[d.crossings[j].e2];
        rec.endpoints = {v, w, x, y};

        const std::pair<int, int> sides[4] = {{v, x}, {x, w}, {w, y}, {y, v}};
        for (auto [a, b] : sides) {
            if (!d.base.has_edge(a, b)) {
                rec.missing_edges.emplace_back(std::minmax(a, b));
            } else if (d.edge_crossed(d.edge_id(a, b))) {
                rec.crossed_side_edges.emplace_back(std::minmax(a, b));
            }
        }

        if (strict) {
            int xv = d.real_count() + j;
            const auto& rot = d.rotation[xv];
            for (int i = 0; i < 4; ++i) {
                // corner face between segments xv-rot[i] and xv-rot[i+1]
                auto it = traced.face_of_dart.find(
                    static_cast<std::int64_t>(rot[i]) * V + xv);
                int face = it->second;
                if (traced.census.faces[face].degree() != 3) rec.corner_faces_ok = false;
            }
        }

        rec.kite = rec.missing_edges.empty() && rec.crossed_side_edges.empty() &&
                   (!strict || rec.corner_faces_ok);
        if (!rec.kite) report.rich = false;
        report.per_crossing.push_back(std::move(rec));
    }
    return report;
}

CycleSideReport cycle_sides(const OnePlaneDrawing& d, const std::vector<int>& cycle) {
    int k = static_cast<int>(cycle.size());
    int n = d.real_count();
    if (k < 3) throw Error("not a cycle: fewer than 3 vertices");
    {
        std::set<int> uniq(cycle.begin(), cycle.end());
        if (static_cast<int>(uniq.size()) != k) throw Error("not a cycle: repeated vertex");
    }
    for (int v : cycle)
        if (v < 0 || v >= n) throw Error("not a cycle: vertex " + std::to_string(v) + " out of range");

    std::vector<int> cycle_edges(k);
    for (int i = 0; i < k; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % k];
        int e = d.edge_id(u, v);
        if (e < 0) throw Error("not a cycle: missing edge " + pair_str(u, v));
        cycle_edges[i] = e;
    }
    {
        std::set<int> on_cycle(cycle_edges.begin(), cycle_edges.end());
        for (const auto& cr : d.crossings)
            if (on_cycle.count(cr.e1) && on_cycle.count(cr.e2))
                throw Error("cycle edges cross each other (edges " + std::to_string(cr.e1) +
                            " and " + std::to_string(cr.e2) + ")");
    }

    // Segments of the closed curve, and the planarized vertices lying on it.
    int V = d.planar_count();
    std::set<std::pair<int, int>> curve;
    std::vector<bool> on_curve(V, false);
    for (int v : cycle) on_curve[v] = true;
    for (int e : cycle_edges) {
        auto [u, v] = d.base.edges[e];
        int j = d.crossing_of_edge[e];
        if (j < 0) {
            curve.insert(std::minmax(u, v));
        } else {
            int xv = n + j;
            on_curve[xv] = true;
            curve.insert(std::minmax(u, xv));
            curve.insert(std::minmax(xv, v));
        }
    }

    // Two-color faces: same color across ordinary segments, opposite across
    // curve segments. The curve is a simple closed curve on the sphere, so
    // the coloring is consistent.
    auto traced = trace_rotation_faces(d.rotation, n);
    int F = traced.census.count();
    std::vector<int> color(F, -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        const auto& walk = traced.census.faces[f].vertices;
        int deg = static_cast<int>(walk.size());
        for (int i = 0; i < deg; ++i) {
            int a = walk[i], b = walk[(i + 1) % deg];
            int twin = traced.face_of_dart.at(static_cast<std::int64_t>(b) * V + a);
            int want = curve.count(std::minmax(a, b)) ? 1 - color[f] : color[f];
            if (color[twin] == -1) {
                color[twin] = want;
                q.push(twin);
            } else if (color[twin] != want) {
                throw Error("internal inconsistency: face two-coloring failed");
            }
        }
    }

    // Each off-curve vertex sees faces of a single color.
    std::vector<int> vertex_color(V, -1);
    for (int v = 0; v < V; ++v) {
        if (on_curve[v] || d.rotation[v].empty()) continue;
        vertex_color[v] =
            color[traced.face_of_dart.at(static_cast<std::int64_t>(v) * V + d.rotation[v][0])];
    }

    CycleSideReport report;
    std::vector<int> s0, s1;
    for (int v = 0; v < n; ++v) {
        if (vertex_color[v] == 0) s0.push_back(v);
        if (vertex_color[v] == 1) s1.push_back(v);
    }
    // Canonical labels: the side holding the smallest off-cycle vertex is A.
    bool swap_sides = false;
    if (s0.empty() && !s1.empty()) swap_sides = true;
    if (!s0.empty() && !s1.empty() && s1.front() < s0.front()) swap_sides = true;
    report.side_a = swap_sides ? s1 : s0;
    report.side_b = swap_sides ? s0 : s1;
    report.conflict = !report.side_a.empty() && !report.side_b.empty();

    // Canonical cycle: start at the minimum, walk toward its smaller neighbor.
    auto start = std::min_element(cycle.begin(), cycle.end());
    std::vector<int> canon;
    canon.reserve(k);
    int si = static_cast<int>(start - cycle.begin());
    int nxt = cycle[(si + 1) % k], prv = cycle[(si + k - 1) % k];
    int dir = (nxt < prv) ? 1 : -1;
    for (int i = 0; i < k; ++i) canon.push_back(cycle[((si + dir * i) % k + k) % k]);
    report.cycle = std::move(canon);
    return report;
}

std::vector<CycleSideReport> find_conflict_triangles(const OnePlaneDrawing& d) {
    std::vector<CycleSideReport> out;
    const auto& g = d.base;
    for (int a = 0; a < g.n; ++a) {
        for (int b : g.adj[a]) {
            if (b <= a) continue;
            for (int c : g.adj[b]) {
                if (c <= b || !g.has_edge(a, c)) continue;
                int eab = d.edge_id(a, b), ebc = d.edge_id(b, c), eac = d.edge_id(a, c);
                bool edges_cross = false;
                for (const auto& cr : d.crossings) {
                    auto in_tri = [&](int e) { return e == eab || e == ebc || e == eac; };
                    if (in_tri(cr.e1) && in_tri(cr.e2)) edges_cross = true;
                }
                if (edges_cross) continue;  // outside the conflict-cycle definition
                auto report = cycle_sides(d, {a, b, c});
                if (report.conflict) out.push_back(std::move(report));
            }
        }
    }
    return out;
}

K4Class classify_k4_drawing(const OnePlaneDrawing& d, const std::array<int, 4>& clique) {
    std::set<int> verts(clique.begin(), clique.end());
    if (verts.size() != 4) throw Error("not a K4: repeated vertex");
    for (int v : clique)
        if (v < 0 || v >= d.real_count())
            throw Error("not a K4: vertex " + std::to_string(v) + " out of range");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!d.base.has_edge(clique[i], clique[j]))
                throw Error("not a K4: missing edge " + pair_str(clique[i], clique[j]));

    K4Class result;
    result.clique = clique;
    std::sort(result.clique.begin(), result.clique.end());
    auto inside = [&](int e) {
        auto [u, v] = d.base.edges[e];
        return verts.count(u) && verts.count(v);
    };
    for (const auto& cr : d.crossings)
        if (inside(cr.e1) && inside(cr.e2)) ++result.internal_crossings;
    if (result.internal_crossings >= 2)
        throw Error("invalid drawing data: K4 with " +
                    std::to_string(result.internal_crossings) + " internal crossings");
    result.kind = result.internal_crossings == 0 ? K4Kind::Tetrahedral : K4Kind::Pyramidal;
    return result;
}

std::vector<IdentityReport> lemma_audit(const OnePlaneDrawing& d) {
    std::vector<IdentityReport> out;
    int kappa = vertex_connectivity(d.base).kappa;
    auto kappa_hyp = [&](int need) {
        return Hypothesis{"kappa>=" + std::to_string(need),
                          kappa >= need ? HypStatus::Met : HypStatus::Unmet};
    };

    {
        auto conflicts = find_conflict_triangles(d);
        std::int64_t lhs = static_cast<std::int64_t>(conflicts.size());
        out.push_back(make_identity("no_conflict_triangle", lhs, 0, lhs == 0, {kappa_hyp(7)}));
    }
    {
        std::int64_t k5 = count_cliques(d.base, 5);
        out.push_back(make_identity("no_k5", k5, 0, k5 == 0, {kappa_hyp(6)}));
    }
    {
        std::int64_t tetrahedral = 0;
        for (const auto& clique : list_cliques(d.base, 4)) {
            std::array<int, 4> q{clique[0], clique[1], clique[2], clique[3]};
            if (classify_k4_drawing(d, q).kind == K4Kind::Tetrahedral) ++tetrahedral;
        }
        out.push_back(make_identity("k4_all_pyramidal", tetrahedral, 0, tetrahedral == 0,
                                    {kappa_hyp(7)}));
    }
    {
        bool rich = check_rich(d).rich;
        auto sk = skeleton(d);
        int sk_kappa = sk.graph.n >= 1 ? vertex_connectivity(sk.graph).kappa : 0;
        std::vector<Hypothesis> hyps{
            kappa_hyp(7),
            {"rich", rich ? HypStatus::Met : HypStatus::Unmet},
            {"maximal_1_planar", HypStatus::Assumed}};
        out.push_back(make_identity("skeleton_kappa_ge_4", sk_kappa, 4, sk_kappa >= 4,
                                    std::move(hyps)));
    }
    return out;
}

}  // namespace onepl
