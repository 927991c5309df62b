#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// shares code with the library's search paths beyond the Graph type.

#include "gnc/graph.hpp"
#include "gnc/solver.hpp"

#include <cstdint>
#include <optional>

namespace gnc::oracle {

/// Largest order the subset oracles accept.
inline constexpr int max_oracle_order = 20;

/// kappa^g by scanning all 2^n vertex subsets, ignoring the g range.
/// Disconnected input gives DisconnectedInput, complete input CompleteGraph,
/// no cut at all NoValidCut. Throws RefusedError for n > max_oracle_order.
GncResult kappa_gnc(const Graph& g, int good);

/// kappa_g (g-extra) by the same scan.
ExtraResult kappa_extra(const Graph& g, int extra);

/// Smallest good cut over all subsets of any graph; the empty set counts.
std::optional<int> smallest_cut_any(const Graph& g, int good);

/// Minimum adjacency key over all n! relabelings (n <= 8).
std::uint64_t canonical_key_all_permutations(const Graph& g);

/// Explicit isomorphism search by backtracking over vertex maps.
bool isomorphic(const Graph& a, const Graph& b);

/// Number of automorphisms, by the same backtracking.
std::uint64_t automorphism_count(const Graph& g);

} // namespace gnc::oracle
