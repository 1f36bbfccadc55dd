#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace onepl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected simple graph on vertices 0..n-1. Edge pairs are normalized to
// (min,max) but keep their insertion order, so edge ids are stable; adjacency
// lists are sorted.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int min_degree() const;
    bool has_edge(int u, int v) const;
    bool is_complete() const;

    bool operator==(const SimpleGraph&) const = default;
};

SimpleGraph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

struct CliqueCensus {
    std::vector<std::int64_t> counts;  // counts[t] = number of t-cliques
    std::int64_t total = 0;            // cliques of every size, empty set included
};

// Number of t-vertex subsets inducing a complete subgraph; t = 0 counts the
// empty clique.
std::int64_t count_cliques(const SimpleGraph& g, int t);

// Counts for t = 0..t_max, extended upward until a zero level is reached so
// that `total` always covers every clique.
CliqueCensus clique_census(const SimpleGraph& g, int t_max = 6);

// All t-cliques as sorted vertex lists, each exactly once.
std::vector<std::vector<int>> list_cliques(const SimpleGraph& g, int t);

struct ConnectivityReport {
    int kappa = 0;
    // A minimum vertex cut; absent exactly when the graph is complete.
    std::optional<std::vector<int>> witness;
};

// kappa via maximum internally vertex-disjoint path counts (vertex-split
// flow) over one fixed min-degree vertex against its non-neighbors plus its
// non-adjacent neighbor pairs.
ConnectivityReport vertex_connectivity(const SimpleGraph& g);

struct SeparatorCensus {
    std::vector<std::array<int, 3>> separators;
    std::int64_t s3 = 0;
};

// Exhaustive scan of all vertex triples whose removal leaves >= 2 components.
SeparatorCensus enumerate_3_separators(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

// Connected components of g minus a removed vertex set.
int component_count_without(const SimpleGraph& g, const std::vector<int>& removed);

}  // namespace onepl
