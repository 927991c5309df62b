#pragma once

#include "gnc/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gnc {

/// Largest order for which adjacency keys fit one 64-bit word.
inline constexpr int max_key_order = 11;
/// Largest order enumerate_graphs accepts; supply a graph6 corpus beyond it.
inline constexpr int max_enumeration_order = 8;

/// Upper-triangle adjacency bits in graph6 order, pair (0,1) most significant.
/// Lexicographic order on bit strings equals integer order on keys.
std::uint64_t adjacency_key(const Graph& g);
Graph graph_from_key(int n, std::uint64_t key);

/// Minimum adjacency key over all n! relabelings, by branch and bound on the
/// key prefix. Equal keys iff isomorphic. Throws DomainError for
/// n > max_key_order.
std::uint64_t canonical_key(const Graph& g);
Graph canonical_graph(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

struct EnumerationOptions {
    bool connected_only = false;
    int edge_min = 0;
    /// Negative means no upper bound.
    int edge_max = -1;
    /// One canonical representative per isomorphism class.
    bool dedupe_iso = false;
};

/// Streams every graph on n vertices passing the filters. Labeled mode
/// visits edge masks in increasing key order; iso mode visits canonical
/// representatives ordered by (edge count, canonical key). Throws
/// RefusedError for n > max_enumeration_order.
void for_each_graph(int n, const EnumerationOptions& options, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& options);

/// All isomorphism classes on n vertices, ordered by (edge count, canonical
/// key). Built by adding one vertex to every class on n - 1 vertices in every
/// possible way; cached per n and safe to call concurrently.
const std::vector<Graph>& graph_classes(int n);

/// Number of labeled graphs on n vertices.
std::uint64_t labeled_graph_count(int n);
/// Number of connected labeled graphs on n vertices, by the complement
/// recurrence c(n) = 2^C(n,2) - sum_k C(n-1,k-1) c(k) 2^C(n-k,2).
std::uint64_t connected_labeled_count(int n);

/// Decodes a Pruefer sequence of length n - 2 over 0..n-1.
Graph tree_from_prufer(int n, const std::vector<int>& sequence);
/// Center-rooted AHU encoding; equal strings iff the trees are isomorphic.
std::string tree_canonical_string(const Graph& tree);
/// One tree per isomorphism class on n vertices, from every Pruefer sequence,
/// ordered by canonical string. Cached per n.
std::vector<Graph> enumerate_trees(int n);

} // namespace gnc
