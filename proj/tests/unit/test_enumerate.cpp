#include "gnc/enumerate.hpp"
#include "gnc/errors.hpp"
#include "gnc/families.hpp"

#include "support/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace gnc;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return b.build();
}

} // namespace

TEST_CASE("enumeration examples")
{
    CHECK(enumerate_graphs(4, {.connected_only = true, .dedupe_iso = true}).size() == 6);
    CHECK(enumerate_graphs(3, {}).size() == 8);
    CHECK(enumerate_graphs(1, {}).size() == 1);
    CHECK(enumerate_graphs(0, {}).size() == 1);
    CHECK_THROWS_AS(enumerate_graphs(9, {}), RefusedError);
}

TEST_CASE("labeled counts")
{
    for (int n = 1; n <= 5; ++n) {
        CHECK(enumerate_graphs(n, {}).size() == labeled_graph_count(n));
        CHECK(enumerate_graphs(n, {.connected_only = true}).size() == connected_labeled_count(n));
    }
    CHECK(labeled_graph_count(8) == (std::uint64_t{1} << 28));
    // The recurrence against a direct count over all 2^15 masks at n = 6.
    std::uint64_t connected = 0;
    for (std::uint64_t key = 0; key < (std::uint64_t{1} << 15); ++key) connected += is_connected(graph_from_key(6, key));
    CHECK(connected == connected_labeled_count(6));
}

TEST_CASE("edge filters and ordering")
{
    const auto mid = enumerate_graphs(5, {.edge_min = 3, .edge_max = 4});
    for (const Graph& g : mid) {
        CHECK(g.edge_count() >= 3);
        CHECK(g.edge_count() <= 4);
    }
    CHECK(mid.size() == 120 + 210);
    const auto labeled = enumerate_graphs(4, {});
    for (std::size_t i = 1; i < labeled.size(); ++i) CHECK(adjacency_key(labeled[i - 1]) < adjacency_key(labeled[i]));
}

TEST_CASE("isomorphism class counts")
{
    const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156, 1044};
    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(graph_classes(n).size() == all[n - 1]);
        CHECK(enumerate_graphs(n, {.connected_only = true, .dedupe_iso = true}).size() == connected[n - 1]);
    }
}

TEST_CASE("iso classes cover every labeled graph exactly once (orbit counting)")
{
    // Sum over classes of n!/|Aut| equals 2^C(n,2).
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        std::uint64_t total = 0;
        for (const Graph& g : graph_classes(n)) total += factorial / oracle::automorphism_count(g);
        CHECK(total == labeled_graph_count(n));
    }
}

TEST_CASE("canonical key equals the all-permutations minimum")
{
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, {}))
            if (n <= 5 || adjacency_key(g) % 7 == 0) CHECK(canonical_key(g) == oracle::canonical_key_all_permutations(g));
    for (const Graph& g : graph_classes(7)) CHECK(canonical_key(g) == oracle::canonical_key_all_permutations(g));
    for (int n = 8; n <= 8; ++n)
        for (std::size_t i = 0; i < graph_classes(n).size(); i += 37) {
            const Graph& g = graph_classes(n)[i];
            CHECK(canonical_key(g) == oracle::canonical_key_all_permutations(g));
        }
    for (const Graph& g : {cycle(8), wheel(8), complete_bipartite(4, 4), tn_star(8, 4, {2, 2})})
        CHECK(canonical_key(g) == oracle::canonical_key_all_permutations(g));
}

TEST_CASE("equal canonical keys iff an explicit isomorphism exists")
{
    std::mt19937 rng(5);
    for (int n = 2; n <= 6; ++n) {
        const auto& classes = graph_classes(n);
        for (int trial = 0; trial < 200; ++trial) {
            const Graph& a = classes[rng() % classes.size()];
            const Graph& b = classes[rng() % classes.size()];
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            const Graph shuffled = relabel(b, perm);
            const bool same_key = canonical_key(a) == canonical_key(shuffled);
            CHECK(same_key == oracle::isomorphic(a, shuffled));
            CHECK(same_key == are_isomorphic(a, shuffled));
            CHECK(canonical_graph(shuffled) == canonical_graph(b));
        }
    }
    CHECK_THROWS_AS(canonical_key(path(12)), DomainError);
}

TEST_CASE("keys round trip")
{
    for (const Graph& g : enumerate_graphs(4, {})) CHECK(graph_from_key(4, adjacency_key(g)) == g);
    // Pair (0,1) is the most significant bit.
    CHECK(adjacency_key(path(2)) == 1);
    CHECK(adjacency_key(Graph::from_edges(3, {{0, 1}})) == 4);
    CHECK(adjacency_key(Graph::from_edges(3, {{1, 2}})) == 1);
}

TEST_CASE("trees")
{
    const std::vector<std::size_t> counts = {1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        const auto trees = enumerate_trees(n);
        CHECK(trees.size() == counts[n - 1]);
        std::set<std::uint64_t> keys;
        for (const Graph& t : trees) {
            CHECK(is_tree(t));
            keys.insert(canonical_key(t));
        }
        CHECK(keys.size() == trees.size());
    }
    CHECK(tree_from_prufer(5, {4, 4, 4}) == Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    CHECK(tree_from_prufer(4, {1, 2}) == Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(tree_canonical_string(path(6)) == tree_canonical_string(tree_from_prufer(6, {5, 1, 2, 3})));
    CHECK(tree_canonical_string(path(6)) != tree_canonical_string(star(6)));
}
