#include "gnc/enumerate.hpp"

#include "gnc/errors.hpp"
#include "gnc/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace gnc {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void check_key_order(int n)
{
    if (n > max_key_order)
        throw DomainError("adjacency keys support n <= " + std::to_string(max_key_order) + ", got " +
                          std::to_string(n));
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_(pair_count(n_))
    {
        // Twins (equal neighbourhoods apart from each other) are interchangeable
        // by an automorphism that fixes everything else, so only the first
        // unused member of a twin class is ever tried at a position.
        for (int v = 0; v < n_; ++v) {
            twin_before_[v] = 0;
            for (int u = 0; u < v; ++u) {
                const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
                if ((g.row(u) & ~pair) == (g.row(v) & ~pair)) twin_before_[v] |= std::uint64_t{1} << u;
            }
        }
    }

    std::uint64_t run()
    {
        place(0, 0, 0, false);
        return best_;
    }

private:
    void place(int pos, std::uint64_t used, std::uint64_t prefix, bool strictly_better)
    {
        if (pos == n_) {
            if (!have_best_ || prefix < best_) {
                best_ = prefix;
                have_best_ = true;
            }
            return;
        }
        const int length = pos * (pos + 1) / 2;
        for (int v = 0; v < n_; ++v) {
            if ((used >> v) & 1U || (twin_before_[v] & ~used) != 0) continue;
            std::uint64_t next = prefix;
            for (int i = 0; i < pos; ++i) next = (next << 1) | (g_.adjacent(perm_[i], v) ? 1U : 0U);
            bool better = strictly_better;
            if (have_best_ && !strictly_better) {
                const std::uint64_t best_prefix = best_ >> (total_ - length);
                if (next > best_prefix) continue;
                better = next < best_prefix;
            }
            perm_[pos] = v;
            place(pos + 1, used | (std::uint64_t{1} << v), next, better);
        }
    }

    const Graph& g_;
    int n_;
    int total_;
    std::array<std::uint64_t, max_key_order> twin_before_{};
    std::array<int, max_key_order> perm_{};
    std::uint64_t best_ = 0;
    bool have_best_ = false;
};

} // namespace

std::uint64_t adjacency_key(const Graph& g)
{
    check_key_order(g.order());
    std::uint64_t key = 0;
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u) key = (key << 1) | (g.adjacent(u, v) ? 1U : 0U);
    return key;
}

Graph graph_from_key(int n, std::uint64_t key)
{
    check_key_order(n);
    GraphBuilder b(n);
    int p = pair_count(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((key >> --p) & 1U) b.add_edge(u, v);
    return b.build();
}

std::uint64_t canonical_key(const Graph& g)
{
    check_key_order(g.order());
    if (g.order() <= 1) return 0;
    return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph& g) { return graph_from_key(g.order(), canonical_key(g)); }

bool are_isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b);
}

std::uint64_t labeled_graph_count(int n)
{
    check_key_order(n);
    return std::uint64_t{1} << pair_count(n);
}

std::uint64_t connected_labeled_count(int n)
{
    check_key_order(n);
    std::vector<std::uint64_t> c(n + 1, 0);
    auto binom = [](int a, int b) {
        std::uint64_t r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    for (int m = 1; m <= n; ++m) {
        std::uint64_t total = labeled_graph_count(m);
        for (int k = 1; k < m; ++k) total -= binom(m - 1, k - 1) * c[k] * labeled_graph_count(m - k);
        c[m] = total;
    }
    return n == 0 ? 1 : c[n];
}

const std::vector<Graph>& graph_classes(int n)
{
    if (n < 0 || n > max_enumeration_order)
        throw RefusedError("isomorphism-class enumeration supports n <= " + std::to_string(max_enumeration_order));
    static std::array<std::vector<Graph>, max_enumeration_order + 1> cache;
    static std::array<std::once_flag, max_enumeration_order + 1> once;
    std::call_once(once[n], [n] {
        std::vector<Graph> out;
        if (n <= 1) {
            out.push_back(Graph(n));
        } else {
            std::unordered_set<std::uint64_t> seen;
            for (const Graph& smaller : graph_classes(n - 1)) {
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                    GraphBuilder b(n);
                    for (auto [u, v] : smaller.edges()) b.add_edge(u, v);
                    for (int u : VertexSet(mask)) b.add_edge(u, n - 1);
                    seen.insert(canonical_key(b.build()));
                }
            }
            std::vector<std::uint64_t> keys(seen.begin(), seen.end());
            for (std::uint64_t key : keys) out.push_back(graph_from_key(n, key));
            std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
                if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
                return adjacency_key(a) < adjacency_key(b);
            });
        }
        cache[n] = std::move(out);
    });
    return cache[n];
}

void for_each_graph(int n, const EnumerationOptions& options, const std::function<void(const Graph&)>& visit)
{
    if (n < 0 || n > max_enumeration_order)
        throw RefusedError("full enumeration supports n <= " + std::to_string(max_enumeration_order) +
                           "; pass an external graph6 corpus for larger orders");
    auto keep = [&](const Graph& g) {
        const int e = g.edge_count();
        if (e < options.edge_min) return false;
        if (options.edge_max >= 0 && e > options.edge_max) return false;
        return !options.connected_only || is_connected(g);
    };
    if (options.dedupe_iso) {
        for (const Graph& g : graph_classes(n))
            if (keep(g)) visit(g);
        return;
    }
    const std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t key = 0; key < count; ++key) {
        const int e = std::popcount(key);
        if (e < options.edge_min || (options.edge_max >= 0 && e > options.edge_max)) continue;
        const Graph g = graph_from_key(n, key);
        if (!options.connected_only || is_connected(g)) visit(g);
    }
}

std::vector<Graph> enumerate_graphs(int n, const EnumerationOptions& options)
{
    std::vector<Graph> out;
    for_each_graph(n, options, [&](const Graph& g) { out.push_back(g); });
    return out;
}

Graph tree_from_prufer(int n, const std::vector<int>& sequence)
{
    if (n < 2 || static_cast<int>(sequence.size()) != n - 2)
        throw DomainError("Pruefer sequence for n vertices must have length n - 2");
    std::vector<int> degree(n, 1);
    for (int x : sequence) {
        if (x < 0 || x >= n) throw DomainError("Pruefer symbol out of range");
        ++degree[x];
    }
    GraphBuilder b(n);
    for (int x : sequence) {
        int leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        b.add_edge(leaf, x);
        --degree[leaf];
        --degree[x];
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[v] != 1) continue;
        if (u < 0) {
            u = v;
        } else {
            b.add_edge(u, v);
            break;
        }
    }
    return b.build();
}

namespace {

std::string rooted_encoding(const Graph& t, int v, int parent)
{
    std::vector<std::string> children;
    for (int w : t.neighbors(v))
        if (w != parent) children.push_back(rooted_encoding(t, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ")";
    return out;
}

} // namespace

std::string tree_canonical_string(const Graph& tree)
{
    if (!is_tree(tree)) throw DomainError("tree_canonical_string needs a tree");
    const int n = tree.order();
    // Peel leaves until one or two centers remain.
    std::vector<int> degree(n);
    VertexSet alive = tree.vertices();
    for (int v = 0; v < n; ++v) degree[v] = tree.degree(v);
    while (alive.size() > 2) {
        VertexSet leaves;
        for (int v : alive)
            if (degree[v] <= 1) leaves.insert(v);
        for (int v : leaves)
            for (int w : tree.neighbors(v) & alive) --degree[w];
        alive -= leaves;
    }
    std::string best;
    for (int c : alive) {
        std::string enc = rooted_encoding(tree, c, -1);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

std::vector<Graph> enumerate_trees(int n)
{
    if (n < 1) throw DomainError("trees need n >= 1");
    if (n > max_order) throw DomainError("tree order exceeds " + std::to_string(max_order));
    if (n == 1) return {Graph(1)};
    if (n == 2) return {path(2)};
    static std::mutex cache_mutex;
    static std::map<int, std::vector<Graph>> cache;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::map<std::string, Graph> classes;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        Graph t = tree_from_prufer(n, seq);
        classes.try_emplace(tree_canonical_string(t), std::move(t));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    std::vector<Graph> out;
    for (auto& [key, t] : classes) out.push_back(std::move(t));
    std::lock_guard lock(cache_mutex);
    cache.emplace(n, out);
    return out;
}

} // namespace gnc
