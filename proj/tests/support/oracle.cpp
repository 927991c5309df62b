#include "oracle.hpp"

#include "gnc/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

namespace gnc::oracle {

namespace {

using AdjList = std::vector<std::vector<int>>;

AdjList adjacency_lists(const Graph& g)
{
    AdjList adj(g.order());
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

// Components of the graph on the vertices not in `removed`, via iterative DFS.
// Returns the component id per vertex (-1 for removed) and the count.
int label_components(const AdjList& adj, std::uint64_t removed, std::vector<int>& label)
{
    const int n = static_cast<int>(adj.size());
    label.assign(n, -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if ((removed >> s) & 1U || label[s] >= 0) continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if ((removed >> w) & 1U || label[w] >= 0) continue;
                label[w] = count;
                stack.push_back(w);
            }
        }
        ++count;
    }
    return count;
}

bool everyone_keeps(const AdjList& adj, std::uint64_t removed, int good)
{
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
        if ((removed >> v) & 1U) continue;
        int kept = 0;
        for (int w : adj[v])
            if (!((removed >> w) & 1U)) ++kept;
        if (kept < good) return false;
    }
    return true;
}

bool all_components_large(const std::vector<int>& label, int count, int min_size)
{
    std::vector<int> size(count, 0);
    for (int l : label)
        if (l >= 0) ++size[l];
    return std::all_of(size.begin(), size.end(), [&](int s) { return s >= min_size; });
}

VertexSet to_set(std::uint64_t mask) { return VertexSet(mask); }

void guard(const Graph& g)
{
    if (g.order() > max_oracle_order) throw RefusedError("oracle refuses n > 20");
}

bool connected(const AdjList& adj)
{
    std::vector<int> label;
    return label_components(adj, 0, label) <= 1;
}

bool complete(const Graph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }

template <class Accept>
std::optional<std::uint64_t> best_mask(int n, Accept&& accept)
{
    std::optional<std::uint64_t> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (best && std::popcount(mask) >= std::popcount(*best)) continue;
        if (accept(mask)) best = mask;
    }
    return best;
}

} // namespace

GncResult kappa_gnc(const Graph& g, int good)
{
    guard(g);
    const auto adj = adjacency_lists(g);
    if (!connected(adj)) return GncResult::NotExist{NotExistReason::DisconnectedInput};
    if (complete(g)) return GncResult::NotExist{NotExistReason::CompleteGraph};
    std::vector<int> label;
    const auto best = best_mask(g.order(), [&](std::uint64_t mask) {
        return label_components(adj, mask, label) >= 2 && everyone_keeps(adj, mask, good);
    });
    if (!best) return GncResult::NotExist{NotExistReason::NoValidCut};
    return GncResult::Exists{std::popcount(*best), to_set(*best)};
}

ExtraResult kappa_extra(const Graph& g, int extra)
{
    guard(g);
    const auto adj = adjacency_lists(g);
    if (!connected(adj)) return ExtraResult::NotExist{NotExistReason::DisconnectedInput};
    if (complete(g)) return ExtraResult::NotExist{NotExistReason::CompleteGraph};
    std::vector<int> label;
    const auto best = best_mask(g.order(), [&](std::uint64_t mask) {
        const int count = label_components(adj, mask, label);
        return count >= 2 && all_components_large(label, count, extra + 1);
    });
    if (!best) return ExtraResult::NotExist{NotExistReason::NoValidCut};
    return ExtraResult::Exists{std::popcount(*best), to_set(*best)};
}

std::optional<int> smallest_cut_any(const Graph& g, int good)
{
    guard(g);
    const auto adj = adjacency_lists(g);
    std::vector<int> label;
    const auto best = best_mask(g.order(), [&](std::uint64_t mask) {
        return label_components(adj, mask, label) >= 2 && everyone_keeps(adj, mask, good);
    });
    if (!best) return std::nullopt;
    return std::popcount(*best);
}

std::uint64_t canonical_key_all_permutations(const Graph& g)
{
    const int n = g.order();
    if (n > 8) throw RefusedError("permutation canonical form refuses n > 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t key = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n <= 1 ? 0 : best;
}

namespace {

// Counts vertex maps a -> b preserving adjacency, stopping at `limit`.
std::uint64_t count_isomorphisms(const Graph& a, const Graph& b, std::uint64_t limit)
{
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return 0;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::uint64_t found = 0;
    auto extend = [&](auto&& self, int v) -> void {
        if (found >= limit) return;
        if (v == n) {
            ++found;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], w);
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
        }
    };
    extend(extend, 0);
    return found;
}

} // namespace

bool isomorphic(const Graph& a, const Graph& b) { return count_isomorphisms(a, b, 1) > 0; }

std::uint64_t automorphism_count(const Graph& g) { return count_isomorphisms(g, g, ~std::uint64_t{0}); }

} // namespace gnc::oracle
