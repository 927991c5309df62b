#pragma once

#include "gnc/vertex_set.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gnc {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
/// Row v of the adjacency matrix is the bitset N(v).
class Graph {
public:
    Graph() = default;
    /// Edgeless graph of order n.
    explicit Graph(int n);

    /// Throws DomainError on loops, duplicate edges or endpoints outside 0..n-1.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int edge_count() const;
    VertexSet vertices() const { return VertexSet::first_n(n_); }
    VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
    std::uint64_t row(int v) const { return rows_[v]; }
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    int degree(int v) const { return neighbors(v).size(); }
    /// 0 for the empty graph.
    int min_degree() const;
    int max_degree() const;
    /// Edges (u, v) with u < v, ordered by v then u.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const;

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::array<std::uint64_t, max_order> rows_{};
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    int order() const { return g_.n_; }
    bool has_edge(int u, int v) const { return g_.adjacent(u, v); }
    int degree(int v) const { return g_.degree(v); }

    /// Adds uv; loops and out-of-range endpoints throw DomainError, repeats are ignored.
    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& remove_edge(int u, int v);
    /// Makes the members pairwise adjacent.
    GraphBuilder& add_clique(VertexSet members);
    /// Joins every member of a to every member of b (a, b disjoint).
    GraphBuilder& join(VertexSet a, VertexSet b);

    Graph build() const { return g_; }

private:
    void check_vertex(int v) const;

    Graph g_;
};

struct Component {
    VertexSet vertices;
    int size = 0;
    /// Minimum degree measured inside the remaining graph.
    int min_degree = 0;
};

struct ComponentSummary {
    /// Ordered by smallest member.
    std::vector<Component> components;
    int count() const { return static_cast<int>(components.size()); }
};

/// Connected components of G - removed. Throws DomainError if removed is not a subset of V(G).
ComponentSummary components_after_removal(const Graph& g, VertexSet removed);

/// Connected component of G[within] containing start.
VertexSet component_of(const Graph& g, VertexSet within, int start);
/// Number of connected components of G[within].
int count_components(const Graph& g, VertexSet within);
/// True iff G[within] has at least two components.
bool is_disconnected_within(const Graph& g, VertexSet within);
/// Minimum degree of G[within]; 0 when within is empty.
int min_degree_within(const Graph& g, VertexSet within);

/// The order-0 and order-1 graphs count as connected.
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_tree(const Graph& g);

struct ClassicalConnectivity {
    /// Absent iff the graph is complete.
    std::optional<int> value;
    /// A minimum disconnecting set, first in lexicographic order.
    VertexSet certificate;
    /// Set when the input was already disconnected; value is then 0.
    bool disconnected_input = false;
};

/// kappa(G) by increasing-size subset search.
ClassicalConnectivity kappa_classical(const Graph& g);

/// lambda(G), exact, via unit-capacity max flow from vertex 0 to every other vertex.
/// Disconnected input gives 0. Throws DomainError for n < 2.
int lambda_classical(const Graph& g);

/// V(H) = V(G) with identical labels and E(H) a subset of E(G).
bool is_spanning_subgraph(const Graph& h, const Graph& g);

/// Calls fn(subset) for every size-k subset of candidates, in lexicographic
/// order of sorted member lists, until fn returns true. Returns whether fn did.
template <class Fn>
bool for_each_subset_of_size(VertexSet candidates, int k, Fn&& fn)
{
    std::vector<int> pool = candidates.to_vector();
    const int m = static_cast<int>(pool.size());
    if (k < 0 || k > m) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        VertexSet s;
        for (int i : idx) s.insert(pool[i]);
        if (fn(s)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace gnc
