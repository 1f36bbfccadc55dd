#include "onepl/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

namespace onepl {

int SimpleGraph::min_degree() const {
    if (n == 0) return 0;
    int d = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
    return d;
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool SimpleGraph::is_complete() const {
    return static_cast<std::int64_t>(edges.size()) * 2 == static_cast<std::int64_t>(n) * (n - 1);
}

SimpleGraph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw Error("vertex count must be nonnegative");
    SimpleGraph g;
    g.n = n;
    g.adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        if (u == v)
            throw Error("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("endpoint out of range in edge (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second)
            throw Error("duplicate edge (" + std::to_string(e.first) + "," +
                        std::to_string(e.second) + ")");
        g.edges.emplace_back(e.first, e.second);
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

namespace {

// Smallest-last (degeneracy) order; ties broken by smallest id.
std::vector<int> degeneracy_order(const SimpleGraph& g) {
    int n = g.n;
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        order.push_back(best);
        for (int w : g.adj[best])
            if (!removed[w]) --deg[w];
    }
    return order;
}

// Counts every clique exactly once as an increasing sequence in degeneracy
// order. max_size < 0 means unbounded; the result always has a trailing zero
// level.
std::vector<std::int64_t> clique_counts_all(const SimpleGraph& g, int max_size) {
    int n = g.n;
    int cap = (max_size < 0) ? n + 1 : max_size;
    std::vector<std::int64_t> counts(static_cast<size_t>(cap) + 2, 0);

    std::vector<int> pos(n);
    auto order = degeneracy_order(g);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<std::vector<bool>> mat(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges) mat[u][v] = mat[v][u] = true;

    // cand: candidates sorted by position, all later than the current prefix.
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    std::sort(root.begin(), root.end(), [&](int a, int b) { return pos[a] < pos[b]; });

    struct Rec {
        std::vector<std::int64_t>& counts;
        const std::vector<std::vector<bool>>& mat;
        int cap;
        void run(const std::vector<int>& cand, int size) {
            ++counts[size];
            if (size == cap) return;
            for (size_t i = 0; i < cand.size(); ++i) {
                int u = cand[i];
                std::vector<int> next;
                for (size_t j = i + 1; j < cand.size(); ++j)
                    if (mat[u][cand[j]]) next.push_back(cand[j]);
                run(next, size + 1);
            }
        }
    } rec{counts, mat, cap};
    rec.run(root, 0);
    return counts;
}

}  // namespace

std::int64_t count_cliques(const SimpleGraph& g, int t) {
    if (t < 0) throw Error("clique size must be nonnegative");
    if (t == 0) return 1;
    if (t > g.n) return 0;
    return clique_counts_all(g, t)[t];
}

CliqueCensus clique_census(const SimpleGraph& g, int t_max) {
    if (t_max < 2) throw Error("census t_max must be >= 2");
    auto all = clique_counts_all(g, -1);
    CliqueCensus c;
    c.total = std::accumulate(all.begin(), all.end(), std::int64_t{0});
    int first_zero = 1;
    while (first_zero < static_cast<int>(all.size()) && all[first_zero] != 0) ++first_zero;
    int last = std::max(t_max, first_zero);
    c.counts.assign(all.begin(), all.begin() + std::min<size_t>(all.size(), last + 1));
    c.counts.resize(static_cast<size_t>(last) + 1, 0);
    return c;
}

std::vector<std::vector<int>> list_cliques(const SimpleGraph& g, int t) {
    if (t < 0) throw Error("clique size must be nonnegative");
    std::vector<std::vector<int>> out;
    if (t == 0) {
        out.push_back({});
        return out;
    }
    if (t > g.n) return out;

    std::vector<int> pos(g.n);
    auto order = degeneracy_order(g);
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    std::vector<int> root(g.n);
    std::iota(root.begin(), root.end(), 0);
    std::sort(root.begin(), root.end(), [&](int a, int b) { return pos[a] < pos[b]; });

    std::vector<int> cur;
    auto step = [&](auto&& self, const std::vector<int>& cand) -> void {
        if (static_cast<int>(cur.size()) == t) {
            auto clique = cur;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
            return;
        }
        for (size_t i = 0; i < cand.size(); ++i) {
            int u = cand[i];
            std::vector<int> next;
            for (size_t j = i + 1; j < cand.size(); ++j)
                if (g.has_edge(u, cand[j])) next.push_back(cand[j]);
            cur.push_back(u);
            self(self, next);
            cur.pop_back();
        }
    };
    step(step, root);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const SimpleGraph& g) {
    if (g.n <= 1) return true;
    std::vector<bool> seen(g.n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int visited = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                q.push(w);
            }
    }
    return visited == g.n;
}

int component_count_without(const SimpleGraph& g, const std::vector<int>& removed) {
    std::vector<bool> gone(g.n, false);
    for (int v : removed) gone[v] = true;
    std::vector<bool> seen(g.n, false);
    int comps = 0;
    for (int s = 0; s < g.n; ++s) {
        if (gone[s] || seen[s]) continue;
        ++comps;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v])
                if (!gone[w] && !seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
    }
    return comps;
}

namespace {

// Unit-capacity max flow on the vertex-split digraph: node 2v is "v in",
// 2v+1 is "v out". Max flow from s_out to t_in equals the number of
// internally disjoint s-t paths (Menger).
struct SplitFlow {
    int nodes;
    std::vector<std::vector<int>> out;  // arc indices per node
    std::vector<int> to, cap;

    explicit SplitFlow(int node_count) : nodes(node_count), out(node_count) {}

    void add_arc(int a, int b, int c) {
        out[a].push_back(static_cast<int>(to.size()));
        to.push_back(b);
        cap.push_back(c);
        out[b].push_back(static_cast<int>(to.size()));
        to.push_back(a);
        cap.push_back(0);
    }

    bool bfs_path(int s, int t, std::vector<int>& via) {
        std::fill(via.begin(), via.end(), -1);
        std::queue<int> q;
        q.push(s);
        via[s] = -2;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : out[v]) {
                if (cap[a] > 0 && via[to[a]] == -1) {
                    via[to[a]] = a;
                    if (to[a] == t) return true;
                    q.push(to[a]);
                }
            }
        }
        return false;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        std::vector<int> via(nodes);
        while (bfs_path(s, t, via)) {
            for (int v = t; v != s;) {
                int a = via[v];
                --cap[a];
                ++cap[a ^ 1];
                v = to[a ^ 1];
            }
            ++flow;
        }
        return flow;
    }

    std::vector<bool> residual_reachable(int s) {
        std::vector<bool> seen(nodes, false);
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int a : out[v])
                if (cap[a] > 0 && !seen[to[a]]) {
                    seen[to[a]] = true;
                    q.push(to[a]);
                }
        }
        return seen;
    }
};

int min_vertex_cut(const SimpleGraph& g, int s, int t, std::vector<int>* cut_out) {
    SplitFlow net(2 * g.n);
    for (int v = 0; v < g.n; ++v)
        net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? g.n : 1);
    for (auto [u, v] : g.edges) {
        net.add_arc(2 * u + 1, 2 * v, g.n);
        net.add_arc(2 * v + 1, 2 * u, g.n);
    }
    int flow = net.max_flow(2 * s + 1, 2 * t);
    if (cut_out) {
        auto reach = net.residual_reachable(2 * s + 1);
        cut_out->clear();
        for (int v = 0; v < g.n; ++v)
            if (v != s && v != t && reach[2 * v] && !reach[2 * v + 1]) cut_out->push_back(v);
    }
    return flow;
}

}  // namespace

ConnectivityReport vertex_connectivity(const SimpleGraph& g) {
    if (g.n < 1) throw Error("connectivity needs at least one vertex");
    ConnectivityReport r;
    if (g.is_complete()) {
        r.kappa = g.n - 1;
        return r;
    }
    if (!is_connected(g)) {
        r.kappa = 0;
        r.witness = std::vector<int>{};
        return r;
    }

    int v0 = 0;
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;

    int best = std::numeric_limits<int>::max();
    std::vector<int> best_cut, cut;
    auto consider = [&](int s, int t) {
        int f = min_vertex_cut(g, s, t, &cut);
        if (f < best) {
            best = f;
            best_cut = cut;
        }
    };
    for (int w = 0; w < g.n; ++w)
        if (w != v0 && !g.has_edge(v0, w)) consider(v0, w);
    const auto& nb = g.adj[v0];
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) consider(nb[i], nb[j]);

    r.kappa = best;
    std::sort(best_cut.begin(), best_cut.end());
    r.witness = std::move(best_cut);
    return r;
}

SeparatorCensus enumerate_3_separators(const SimpleGraph& g) {
    if (g.n < 4) throw Error("too small for 3-separators");
    SeparatorCensus census;
    std::vector<int> removed(3);
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c) {
                removed = {a, b, c};
                if (component_count_without(g, removed) >= 2)
                    census.separators.push_back({a, b, c});
            }
    census.s3 = static_cast<std::int64_t>(census.separators.size());
    return census;
}

}  // namespace onepl
