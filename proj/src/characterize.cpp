#include "gnc/characterize.hpp"

#include "gnc/errors.hpp"

#include <algorithm>

namespace gnc {

namespace {

std::vector<int> cut_vertices(const Graph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (is_disconnected_within(g, g.vertices() - VertexSet{v})) out.push_back(v);
    return out;
}

bool all_components_good(const ComponentSummary& s, int good)
{
    return std::all_of(s.components.begin(), s.components.end(),
                       [good](const Component& c) { return c.min_degree >= good; });
}

bool good_two_cut(const Graph& g, VertexSet pair, int good)
{
    const auto s = components_after_removal(g, pair);
    return s.count() >= 2 && all_components_good(s, good);
}

std::optional<VertexSet> one_deficient_pair(const Graph& g, int v, int good)
{
    const VertexSet rest = g.vertices() - VertexSet{v};
    VertexSet deficient;
    for (int x : rest)
        if ((g.neighbors(x) & rest).size() <= good - 1) deficient.insert(x);
    if (deficient.size() != 1) return std::nullopt;
    const int u = deficient.front();
    if (component_of(g, rest, u).size() < 2) return std::nullopt;
    for (int y : g.neighbors(u) & rest)
        if ((g.neighbors(y) & rest).size() < good + 1) return std::nullopt;
    return VertexSet{v, u};
}

std::optional<VertexSet> isolated_split_pair(const Graph& g, int v, int good)
{
    const auto s = components_after_removal(g, VertexSet{v});
    if (s.count() < 3) return std::nullopt;
    int singletons = 0;
    int isolated = -1;
    for (const auto& c : s.components) {
        if (c.size == 1) {
            ++singletons;
            isolated = c.vertices.front();
        } else if (c.min_degree < good) {
            return std::nullopt;
        }
    }
    if (singletons != 1) return std::nullopt;
    return VertexSet{v, isolated};
}

} // namespace

std::optional<int> has_kappa1(const Graph& g, int good)
{
    if (!is_connected(g)) return std::nullopt;
    for (int v = 0; v < g.order(); ++v) {
        const auto s = components_after_removal(g, VertexSet{v});
        if (s.count() >= 2 && all_components_good(s, good)) return v;
    }
    return std::nullopt;
}

std::string_view to_string(Kappa2Branch branch)
{
    switch (branch) {
    case Kappa2Branch::TwoConnected: return "TwoConnected";
    case Kappa2Branch::CutVertexOneDeficient: return "CutVertexOneDeficient";
    case Kappa2Branch::CutVertexIsolated: return "CutVertexIsolated";
    case Kappa2Branch::NonCutPair: return "NonCutPair";
    }
    return "?";
}

std::optional<Kappa2Witness> has_kappa2(const Graph& g, int good)
{
    if (!is_connected(g) || is_complete(g)) return std::nullopt;
    const auto kappa = kappa_classical(g);

    if (kappa.value == 2) {
        std::optional<Kappa2Witness> out;
        for_each_subset_of_size(g.vertices(), 2, [&](VertexSet pair) {
            if (!good_two_cut(g, pair, good)) return false;
            out = Kappa2Witness{Kappa2Branch::TwoConnected, pair};
            return true;
        });
        return out;
    }
    if (kappa.value != 1 || good < 1) return std::nullopt;

    const auto cuts = cut_vertices(g);
    for (int v : cuts)
        if (all_components_good(components_after_removal(g, VertexSet{v}), good)) return std::nullopt;

    for (int v : cuts)
        if (auto pair = one_deficient_pair(g, v, good)) return Kappa2Witness{Kappa2Branch::CutVertexOneDeficient, *pair};
    for (int v : cuts)
        if (auto pair = isolated_split_pair(g, v, good)) return Kappa2Witness{Kappa2Branch::CutVertexIsolated, *pair};

    VertexSet non_cut = g.vertices();
    for (int v : cuts) non_cut.erase(v);
    std::optional<Kappa2Witness> out;
    for_each_subset_of_size(non_cut, 2, [&](VertexSet pair) {
        if (!good_two_cut(g, pair, good)) return false;
        out = Kappa2Witness{Kappa2Branch::NonCutPair, pair};
        return true;
    });
    return out;
}

std::optional<TnStarShape> recognize_tn_star(const Graph& t)
{
    if (!is_tree(t)) throw DomainError("recognize_tn_star needs a tree");
    const int n = t.order();
    for (int c = 0; c < n; ++c) {
        TnStarShape shape;
        shape.center = c;
        int leaves = 0;
        bool ok = true;
        for (int w : t.neighbors(c)) {
            if (t.degree(w) == 1) {
                ++leaves;
                continue;
            }
            // w must be a star center: every other neighbour is a leaf.
            for (int x : t.neighbors(w) - VertexSet{c}) {
                if (t.degree(x) != 1) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
            shape.parts.push_back(t.degree(w));
        }
        if (!ok || shape.parts.size() < 2) continue;
        std::sort(shape.parts.begin(), shape.parts.end());
        for (int a : shape.parts) shape.t += a;
        if (1 + leaves + shape.t != n) continue;
        return shape;
    }
    return std::nullopt;
}

bool tn_star_window(int n, int t) { return t >= 4 && 2 * t <= n + 2; }

TreePrediction tree_kappa_predict(const Graph& t, int good)
{
    if (!is_tree(t)) throw DomainError("tree_kappa_predict needs a tree");
    if (good < 0) throw DomainError("g must be non-negative");
    const int n = t.order();
    if (good == 0) return {n >= 3 ? std::optional<int>(1) : std::nullopt, PredictionSource::Theorem};
    // Every subtree has a vertex of degree <= 1.
    if (good >= 2) return {std::nullopt, PredictionSource::Theorem};
    if (auto shape = recognize_tn_star(t); shape && tn_star_window(n, shape->t))
        return {n - shape->t, PredictionSource::Theorem};
    return {kappa_gnc(t, 1).value_if_exists(), PredictionSource::Solver};
}

} // namespace gnc
