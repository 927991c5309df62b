#include "gnc/graph.hpp"

#include "gnc/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace gnc {

bool lex_less(VertexSet a, VertexSet b)
{
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (*ia != *ib) return *ia < *ib;
    return ia == a.end() && ib != b.end();
}

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > max_order)
        throw DomainError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_order));
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges) {
        if (u >= 0 && v >= 0 && u < n && v < n && u != v && b.has_edge(u, v))
            throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        b.add_edge(u, v);
    }
    return b.build();
}

int Graph::edge_count() const
{
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
}

int Graph::min_degree() const
{
    if (n_ == 0) return 0;
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const
{
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const
{
    if (n_ != other.n_) return false;
    return std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::check_vertex(int v) const
{
    if (v < 0 || v >= g_.n_)
        throw DomainError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(g_.n_ - 1));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    g_.rows_[u] |= std::uint64_t{1} << v;
    g_.rows_[v] |= std::uint64_t{1} << u;
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    g_.rows_[u] &= ~(std::uint64_t{1} << v);
    g_.rows_[v] &= ~(std::uint64_t{1} << u);
    return *this;
}

GraphBuilder& GraphBuilder::add_clique(VertexSet members)
{
    for (int u : members)
        for (int v : members)
            if (u < v) add_edge(u, v);
    return *this;
}

GraphBuilder& GraphBuilder::join(VertexSet a, VertexSet b)
{
    for (int u : a)
        for (int v : b) add_edge(u, v);
    return *this;
}

VertexSet component_of(const Graph& g, VertexSet within, int start)
{
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    const std::uint64_t allowed = within.bits();
    while (frontier) {
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) next |= g.row(v);
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return VertexSet(seen);
}

int count_components(const Graph& g, VertexSet within)
{
    int count = 0;
    while (!within.empty()) {
        within -= component_of(g, within, within.front());
        ++count;
    }
    return count;
}

bool is_disconnected_within(const Graph& g, VertexSet within)
{
    if (within.empty()) return false;
    return component_of(g, within, within.front()) != within;
}

int min_degree_within(const Graph& g, VertexSet within)
{
    if (within.empty()) return 0;
    int best = max_order;
    for (int v : within) best = std::min(best, (g.neighbors(v) & within).size());
    return best;
}

ComponentSummary components_after_removal(const Graph& g, VertexSet removed)
{
    if (!removed.is_subset_of(g.vertices()))
        throw DomainError("removed set is not a subset of V(G)");
    ComponentSummary out;
    VertexSet rest = g.vertices() - removed;
    const VertexSet remaining = rest;
    while (!rest.empty()) {
        VertexSet c = component_of(g, remaining, rest.front());
        out.components.push_back({c, c.size(), min_degree_within(g, c)});
        rest -= c;
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() <= 1 || !is_disconnected_within(g, g.vertices());
}

bool is_complete(const Graph& g)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != g.order() - 1) return false;
    return true;
}

bool is_tree(const Graph& g)
{
    return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

ClassicalConnectivity kappa_classical(const Graph& g)
{
    ClassicalConnectivity out;
    const int n = g.order();
    if (!is_connected(g)) {
        out.value = 0;
        out.disconnected_input = true;
        return out;
    }
    if (is_complete(g)) return out;
    for (int k = 1; k <= n - 2; ++k) {
        const bool found = for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
            if (!is_disconnected_within(g, g.vertices() - s)) return false;
            out.value = k;
            out.certificate = s;
            return true;
        });
        if (found) return out;
    }
    // A connected non-complete graph always has a disconnecting set of size <= n-2.
    throw std::logic_error("kappa_classical: no disconnecting set found");
}

namespace {

int max_flow_unit(const Graph& g, int source, int sink)
{
    const int n = g.order();
    std::vector<std::vector<int>> residual(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) {
        residual[u][v] = 1;
        residual[v][u] = 1;
    }
    int flow = 0;
    std::vector<int> parent(n);
    for (;;) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[source] = source;
        std::deque<int> queue{source};
        while (!queue.empty() && parent[sink] < 0) {
            int u = queue.front();
            queue.pop_front();
            for (int v = 0; v < n; ++v) {
                if (parent[v] < 0 && residual[u][v] > 0) {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if (parent[sink] < 0) return flow;
        for (int v = sink; v != source; v = parent[v]) {
            --residual[parent[v]][v];
            ++residual[v][parent[v]];
        }
        ++flow;
    }
}

} // namespace

int lambda_classical(const Graph& g)
{
    if (g.order() < 2) throw DomainError("edge connectivity needs at least 2 vertices");
    if (!is_connected(g)) return 0;
    int best = g.max_degree();
    for (int t = 1; t < g.order(); ++t) best = std::min(best, max_flow_unit(g, 0, t));
    return best;
}

bool is_spanning_subgraph(const Graph& h, const Graph& g)
{
    if (h.order() != g.order()) return false;
    for (int v = 0; v < h.order(); ++v)
        if ((h.row(v) & ~g.row(v)) != 0) return false;
    return true;
}

} // namespace gnc
