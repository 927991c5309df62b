#include "gnc/solver.hpp"

#include "gnc/errors.hpp"
#include "gnc/parallel.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <string>

namespace gnc {

std::string_view to_string(NotExistReason reason)
{
    switch (reason) {
    case NotExistReason::GOutOfRange: return "GOutOfRange";
    case NotExistReason::NoValidCut: return "NoValidCut";
    case NotExistReason::CompleteGraph: return "CompleteGraph";
    case NotExistReason::DisconnectedInput: return "DisconnectedInput";
    }
    return "Unknown";
}

namespace {

void check_args(const Graph& g, VertexSet s, int good)
{
    if (!s.is_subset_of(g.vertices())) throw DomainError("vertex set is not a subset of V(G)");
    if (good < 0) throw DomainError("g must be non-negative, got " + std::to_string(good));
}

void check_good(int good)
{
    if (good < 0) throw DomainError("g must be non-negative, got " + std::to_string(good));
}

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
constexpr std::uint64_t below(int v) { return bit(v) - 1; }

bool remainder_is_good(const Graph& g, std::uint64_t rest, int good)
{
    for (int v : VertexSet(rest))
        if (std::popcount(g.row(v) & rest) < good) return false;
    return true;
}

bool components_at_least(const Graph& g, VertexSet rest, int min_order)
{
    int count = 0;
    while (!rest.empty()) {
        VertexSet c = component_of(g, rest, rest.front());
        if (c.size() < min_order) return false;
        rest -= c;
        ++count;
    }
    return count >= 2;
}

// Depth-first enumeration of the size-k subsets of V(G) in lexicographic
// order. With pruning on, a vertex passed over becomes permanently outside
// the cut; once such a vertex has fewer than `good` neighbours left outside
// the chosen set, no extension can repair it.
template <class Leaf>
struct SubsetSearch {
    const Graph& g;
    std::uint64_t all;
    int n;
    int good;
    bool prune;
    int k;
    const Leaf& leaf;

    bool descend(std::uint64_t chosen, int count, int pos, VertexSet& out) const
    {
        if (count == k) {
            if (!leaf(chosen)) return false;
            out = VertexSet(chosen);
            return true;
        }
        const std::uint64_t outside = all & ~chosen;
        for (int i = pos; i <= n - (k - count); ++i) {
            if (prune && i > pos && std::popcount(g.row(i - 1) & outside) < good) break;
            const std::uint64_t next = chosen | bit(i);
            if (prune && !passed_over_still_good(next, i)) continue;
            if (descend(next, count + 1, i + 1, out)) return true;
        }
        return false;
    }

    bool passed_over_still_good(std::uint64_t chosen, int newest) const
    {
        const std::uint64_t passed = below(newest) & ~chosen;
        const std::uint64_t outside = all & ~chosen;
        for (int d : VertexSet(g.row(newest) & passed))
            if (std::popcount(g.row(d) & outside) < good) return false;
        return true;
    }

    // Subsets whose smallest member is `first`.
    std::optional<VertexSet> shard(int first) const
    {
        const std::uint64_t chosen = bit(first);
        if (prune) {
            const std::uint64_t outside = all & ~chosen;
            for (int d : VertexSet(below(first)))
                if (std::popcount(g.row(d) & outside) < good) return std::nullopt;
        }
        VertexSet out;
        if (descend(chosen, 1, first + 1, out)) return out;
        return std::nullopt;
    }
};

template <class Leaf>
std::optional<VertexSet> first_subset_of_size(const Graph& g, int good, bool prune, int k, const Leaf& leaf,
                                              int threads)
{
    const int n = g.order();
    if (k == 0) {
        if (leaf(std::uint64_t{0})) return VertexSet{};
        return std::nullopt;
    }
    if (k > n) return std::nullopt;
    const SubsetSearch<Leaf> search{g, g.vertices().bits(), n, good, prune, k, leaf};
    const int shards = n - k + 1;
    if (threads <= 1) {
        for (int first = 0; first < shards; ++first)
            if (auto hit = search.shard(first)) return hit;
        return std::nullopt;
    }
    // Smallest shard index with a hit is the lexicographically first subset.
    std::vector<std::optional<VertexSet>> hits(shards);
    std::atomic<int> best{shards};
    parallel_for(static_cast<std::size_t>(shards), threads, [&](std::size_t i) {
        const int first = static_cast<int>(i);
        if (first > best.load()) return;
        if (auto hit = search.shard(first)) {
            hits[i] = hit;
            int cur = best.load();
            while (first < cur && !best.compare_exchange_weak(cur, first)) {
            }
        }
    });
    if (best.load() < shards) return hits[best.load()];
    return std::nullopt;
}

auto gnc_leaf(const Graph& g, int good)
{
    const std::uint64_t all = g.vertices().bits();
    return [&g, all, good](std::uint64_t chosen) {
        const std::uint64_t rest = all & ~chosen;
        return rest != 0 && remainder_is_good(g, rest, good) && is_disconnected_within(g, VertexSet(rest));
    };
}

} // namespace

bool is_gnc_faulty_set(const Graph& g, VertexSet faulty, int good)
{
    check_args(g, faulty, good);
    return remainder_is_good(g, (g.vertices() - faulty).bits(), good);
}

bool is_gnc_cut(const Graph& g, VertexSet faulty, int good)
{
    return is_gnc_faulty_set(g, faulty, good) && is_disconnected_within(g, g.vertices() - faulty);
}

bool is_extra_cut(const Graph& g, VertexSet cut, int extra)
{
    check_args(g, cut, extra);
    return components_at_least(g, g.vertices() - cut, extra + 1);
}

GRange g_range(const Graph& g)
{
    const int n = g.order();
    // floor division; n - 3 may be negative
    const int half = (n - 3 >= 0) ? (n - 3) / 2 : -((3 - n + 1) / 2);
    return {0, std::min(g.max_degree(), half)};
}

GncResult kappa_gnc(const Graph& g, int good, const SolveOptions& options)
{
    check_good(good);
    if (!is_connected(g)) return GncResult::NotExist{NotExistReason::DisconnectedInput};
    if (is_complete(g)) return GncResult::NotExist{NotExistReason::CompleteGraph};
    if (!g_range(g).admits(good)) return GncResult::NotExist{NotExistReason::GOutOfRange};

    const auto leaf = gnc_leaf(g, good);
    const int limit = g.order() - 2 * good - 2;
    for (int k = 1; k <= limit; ++k) {
        if (auto cut = first_subset_of_size(g, good, true, k, leaf, options.threads))
            return GncResult::Exists{k, *cut};
    }
    return GncResult::NotExist{NotExistReason::NoValidCut};
}

std::optional<VertexSet> smallest_gnc_cut(const Graph& g, int good, int size_limit, const SolveOptions& options)
{
    check_good(good);
    const auto leaf = gnc_leaf(g, good);
    // Two components of order >= g + 1 must survive.
    const int limit = std::min(size_limit, g.order() - 2 * good - 2);
    for (int k = 0; k <= limit; ++k) {
        if (auto cut = first_subset_of_size(g, good, true, k, leaf, options.threads)) return cut;
    }
    return std::nullopt;
}

ExtraResult kappa_extra(const Graph& g, int extra, const SolveOptions& options)
{
    check_good(extra);
    if (!is_connected(g)) return ExtraResult::NotExist{NotExistReason::DisconnectedInput};
    if (is_complete(g)) return ExtraResult::NotExist{NotExistReason::CompleteGraph};
    const int limit = g.order() - 2 * extra - 2;
    if (limit < 1) return ExtraResult::NotExist{NotExistReason::GOutOfRange};

    const std::uint64_t all = g.vertices().bits();
    auto leaf = [&g, all, extra](std::uint64_t chosen) {
        return components_at_least(g, VertexSet(all & ~chosen), extra + 1);
    };
    for (int k = 1; k <= limit; ++k) {
        if (auto cut = first_subset_of_size(g, extra, false, k, leaf, options.threads))
            return ExtraResult::Exists{k, *cut};
    }
    return ExtraResult::NotExist{NotExistReason::NoValidCut};
}

EdgeExtraResult lambda_extra(const Graph& g, int extra)
{
    check_good(extra);
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > lambda_extra_edge_budget)
        throw RefusedError("lambda_g brute force needs e(G) <= " + std::to_string(lambda_extra_edge_budget) +
                           ", got " + std::to_string(m) + "; use a smaller graph");
    if (!is_connected(g)) return EdgeExtraResult::NotExist{NotExistReason::DisconnectedInput};
    const int n = g.order();
    if (n < 2 * (extra + 1)) return EdgeExtraResult::NotExist{NotExistReason::GOutOfRange};

    std::array<std::uint64_t, max_order> base{};
    for (int v = 0; v < n; ++v) base[v] = g.row(v);
    const std::uint64_t all = g.vertices().bits();

    // True iff deleting the chosen edges leaves >= 2 components, each of order > g.
    auto splits = [&](const std::vector<int>& idx) {
        auto rows = base;
        for (int i : idx) {
            auto [u, v] = edges[i];
            rows[u] &= ~bit(v);
            rows[v] &= ~bit(u);
        }
        std::uint64_t rest = all;
        int count = 0;
        while (rest) {
            std::uint64_t seen = rest & -rest;
            std::uint64_t frontier = seen;
            while (frontier) {
                std::uint64_t next = 0;
                for (int v : VertexSet(frontier)) next |= rows[v];
                next &= ~seen;
                seen |= next;
                frontier = next;
            }
            if (std::popcount(seen) <= extra) return false;
            rest &= ~seen;
            ++count;
        }
        return count >= 2;
    };

    for (int k = 1; k <= m; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            if (splits(idx)) {
                std::vector<Edge> cert;
                for (int i : idx) cert.push_back(edges[i]);
                return EdgeExtraResult::Exists{k, cert};
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return EdgeExtraResult::NotExist{NotExistReason::NoValidCut};
}

} // namespace gnc
