#include "gnc/families.hpp"

#include "gnc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <string>

namespace gnc {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw ParameterError(what);
}

VertexSet block(int first, int size)
{
    VertexSet s;
    for (int i = 0; i < size; ++i) s.insert(first + i);
    return s;
}

void add_star(GraphBuilder& b, int center, int leaves)
{
    for (int i = 1; i <= leaves; ++i) b.add_edge(center, center + i);
}

std::string str(int v) { return std::to_string(v); }

} // namespace

Graph path(int n)
{
    require(n >= 1, "path needs n >= 1");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
    return b.build();
}

Graph cycle(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
    b.add_edge(n - 1, 0);
    return b.build();
}

Graph star(int n)
{
    require(n >= 1, "star needs n >= 1");
    GraphBuilder b(n);
    add_star(b, 0, n - 1);
    return b.build();
}

Graph wheel(int n)
{
    require(n >= 4, "wheel needs n >= 4");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) {
        b.add_edge(0, v);
        b.add_edge(v, v == n - 1 ? 1 : v + 1);
    }
    return b.build();
}

Graph complete(int n)
{
    require(n >= 0 && n <= max_order, "complete graph order out of range");
    GraphBuilder b(n);
    b.add_clique(VertexSet::first_n(n));
    return b.build();
}

Graph complete_bipartite(int a, int b)
{
    return complete_multipartite({a, b});
}

Graph complete_multipartite(const std::vector<int>& parts)
{
    require(!parts.empty(), "complete multipartite graph needs at least one part");
    for (int p : parts) require(p >= 1, "every part needs at least one vertex");
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    require(n <= max_order, "total order exceeds " + str(max_order));
    GraphBuilder b(n);
    std::vector<VertexSet> blocks;
    int first = 0;
    for (int p : parts) {
        blocks.push_back(block(first, p));
        first += p;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) b.join(blocks[i], blocks[j]);
    return b.build();
}

Graph tn_star(int n, int t, const std::vector<int>& parts)
{
    require(parts.size() >= 2, "T_n* needs r >= 2 star parts");
    for (int a : parts) require(a >= 2, "T_n* needs a_i >= 2 for every part");
    require(std::accumulate(parts.begin(), parts.end(), 0) == t, "T_n* needs sum of a_i == t");
    require(t >= 4, "T_n* needs t >= 4");
    require(2 * t <= n + 2, "T_n* needs t <= (n+2)/2");
    require(n <= max_order, "order exceeds " + str(max_order));

    GraphBuilder b(n);
    const int leaves = n - t - 1;
    add_star(b, 0, leaves);
    int next = leaves + 1;
    for (int a : parts) {
        b.add_edge(0, next);
        add_star(b, next, a - 1);
        next += a;
    }
    return b.build();
}

Graph tn_prime(int n, int k, int a, int b)
{
    require(k >= 1, "T_n' needs k >= 1");
    require(a >= 2, "T_n' needs a >= 2");
    require(b >= 2, "T_n' needs b >= 2");
    require(k + a + b == n, "T_n' needs k + a + b == n");
    require(n <= max_order, "order exceeds " + str(max_order));

    GraphBuilder gb(n);
    add_star(gb, 0, k - 1);
    add_star(gb, k, a - 1);
    add_star(gb, k + a, b - 1);
    gb.add_edge(0, k);
    gb.add_edge(0, k + a);
    return gb.build();
}

void add_regular_circulant(GraphBuilder& b, int first, int order, int degree)
{
    require(degree >= 0, "regular degree must be non-negative");
    require(order >= degree + 1, "no " + str(degree) + "-regular graph on " + str(order) + " vertices (order < g+1)");
    require(order * degree % 2 == 0,
            "no " + str(degree) + "-regular graph on " + str(order) + " vertices (order*g is odd)");
    for (int i = 0; i < order; ++i) {
        for (int d = 1; d <= degree / 2; ++d) b.add_edge(first + i, first + (i + d) % order);
        if (degree % 2 == 1) b.add_edge(first + i, first + (i + order / 2) % order);
    }
}

namespace {

void check_fkn_window(int n, int k, int g)
{
    require(k >= 1, "k >= 1 required");
    require(g >= 2, "g >= 2 required");
    require(2 * g <= n - k - 2, "g <= floor((n-k-2)/2) required");
    require(n <= max_order, "order exceeds " + str(max_order));
}

// Adds edges inside [first, first + order) so that vertex `first` gains two
// degrees and every other vertex one. Pairs are tried smallest first; the
// search backtracks when a greedy choice strands a vertex.
bool augment_near_regular(GraphBuilder& b, int first, int order)
{
    std::vector<int> need(order, 1);
    need[0] = 2;
    std::function<bool()> solve = [&]() -> bool {
        int x = 0;
        while (x < order && need[x] == 0) ++x;
        if (x == order) return true;
        for (int y = x + 1; y < order; ++y) {
            if (need[y] == 0 || b.has_edge(first + x, first + y)) continue;
            b.add_edge(first + x, first + y);
            --need[x];
            --need[y];
            if (solve()) return true;
            ++need[x];
            ++need[y];
            b.remove_edge(first + x, first + y);
        }
        return false;
    };
    return solve();
}

} // namespace

Graph fkn(int n, int k, int g, int f1_order)
{
    check_fkn_window(n, k, g);
    require((n - k) * g % 2 == 0, "F^k_n needs (n-k)*g even");
    const int f2_order = n - k - f1_order;
    require(f1_order >= g + 1 && f2_order >= g + 1, "both regular blocks need order >= g+1");

    GraphBuilder b(n);
    add_star(b, 0, k - 1);
    add_regular_circulant(b, k, f1_order, g);
    add_regular_circulant(b, k + f1_order, f2_order, g);
    b.add_edge(0, k);
    b.add_edge(0, k + f1_order);
    return b.build();
}

Graph hkn(int n, int k, int g, int a, int b)
{
    check_fkn_window(n, k, g);
    require((n - k) * g % 2 == 1, "H^k_n needs (n-k)*g odd");
    require(a % 2 == 0, "H^k_n needs a even");
    require(b % 2 == 1, "H^k_n needs b odd");
    require(a >= g + 1 && b >= g + 1, "H^k_n needs a, b >= g+1");
    require(a + b == n - k, "H^k_n needs a + b == n - k");

    GraphBuilder gb(n);
    add_star(gb, 0, k - 1);
    add_regular_circulant(gb, k, a, g);
    const int h2 = k + a;
    add_regular_circulant(gb, h2, b, g - 1);
    if (!augment_near_regular(gb, h2, b))
        throw ConstructionError("could not realise degree sequence (g+1, g, ..., g) on " + str(b) + " vertices");
    for (int i = 0; i < b; ++i) {
        const int want = i == 0 ? g + 1 : g;
        if (gb.degree(h2 + i) != want)
            throw ConstructionError("H2 block vertex " + str(i) + " has wrong degree after augmentation");
    }
    gb.add_edge(0, k);
    gb.add_edge(0, h2);
    return gb.build();
}

Graph gkn(int n, int k, int g)
{
    require(k >= 2, "G^k_n needs k >= 2");
    require(g >= 1, "G^k_n needs g >= 1");
    require(2 * g <= n - k - 2, "G^k_n needs g <= floor((n-k-2)/2)");
    require(n <= max_order, "order exceeds " + str(max_order));

    const int outer = n - k - g;
    const VertexSet big = block(0, outer);
    const VertexSet middle = block(outer, k - 1);
    const VertexSet small = block(outer + k - 1, g + 1);
    GraphBuilder b(n);
    b.add_clique(big).add_clique(middle).add_clique(small);
    b.join(big, middle).join(small, middle);
    return b.build();
}

Graph h_example(int which, int n, int g)
{
    require(which >= 1 && which <= 4, "example index must be 1..4");
    require(g >= 0, "g >= 0 required");
    require(n >= 2 * g + 4, "H examples need n >= 2g+4");
    require(n <= max_order, "order exceeds " + str(max_order));

    GraphBuilder b(n);
    const VertexSet small = block(0, g + 1);
    if (which == 4) {
        b.add_clique(small).add_clique(block(g + 1, n - g - 1));
        b.add_edge(0, g + 1).add_edge(0, g + 2);
        return b.build();
    }
    const VertexSet big = block(g + 1, n - g - 3);
    const int u = n - 2;
    const int v = n - 1;
    b.add_clique(small).add_clique(big);
    switch (which) {
    case 1:
        b.join(VertexSet{u, v}, small | big);
        break;
    case 2:
        b.add_edge(u, v).add_edge(v, 0).add_edge(u, g + 1);
        break;
    case 3:
        b.add_edge(u, v).add_edge(v, g + 1).add_edge(v, 0);
        break;
    }
    return b.build();
}

RemarkPair remark_pair(int g)
{
    require(g >= 1, "remark pair needs g >= 1");
    const int size = g + 1;
    const int n = 3 + 4 * size;
    require(n <= max_order, "order exceeds " + str(max_order));
    const int u = 0, v = 1, w = 2;
    const VertexSet x1 = block(3, size), x2 = block(3 + size, size);
    const VertexSet y1 = block(3 + 2 * size, size), y2 = block(3 + 3 * size, size);

    GraphBuilder gb(n);
    gb.add_clique(x1).add_clique(x2).add_clique(y1).add_clique(y2);
    gb.join(VertexSet{u}, x1 | x2 | y1 | y2);
    gb.join(VertexSet{v, w}, y1 | y2);
    gb.add_edge(u, v).add_edge(u, w);

    GraphBuilder hb(n);
    hb.add_clique(x1).add_clique(x2).add_clique(y1).add_clique(y2);
    hb.remove_edge(x1.front(), x1.front() + 1).remove_edge(x2.front(), x2.front() + 1);
    hb.join(VertexSet{u}, x1 | x2 | y2);
    hb.join(VertexSet{v, w}, y1 | y2);
    return {gb.build(), hb.build()};
}

namespace {

struct FamilyName {
    Family family;
    std::string_view tag;
    std::string_view alias;
};

constexpr FamilyName family_names[] = {
    {Family::Path, "Path", "path"},
    {Family::Cycle, "Cycle", "cycle"},
    {Family::Star, "Star", "star"},
    {Family::Wheel, "Wheel", "wheel"},
    {Family::Complete, "Complete", "complete"},
    {Family::CompleteBipartite, "CompleteBipartite", "complete-bipartite"},
    {Family::CompleteMultipartite, "CompleteMultipartite", "complete-multipartite"},
    {Family::TnStar, "TnStar", "tn-star"},
    {Family::TnPrime, "TnPrime", "tn-prime"},
    {Family::FknRegularPair, "FknRegularPair", "fkn"},
    {Family::HknNearRegular, "HknNearRegular", "hkn"},
    {Family::GknCliqueChain, "GknCliqueChain", "gkn"},
    {Family::H1, "H1", "h1"},
    {Family::H2, "H2", "h2"},
    {Family::H3, "H3", "h3"},
    {Family::H4, "H4", "h4"},
    {Family::RemarkPair, "RemarkPair", "remark-pair"},
};

bool iequals(std::string_view a, std::string_view b)
{
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

GeneratedGraph single(Graph graph, std::vector<Expectation> expected = {}, std::optional<int> kappa = {})
{
    return {"G", std::move(graph), std::move(expected), kappa};
}

} // namespace

std::string_view to_string(Family family)
{
    for (const auto& f : family_names)
        if (f.family == family) return f.tag;
    return "Unknown";
}

std::optional<Family> family_from_string(std::string_view name)
{
    for (const auto& f : family_names)
        if (iequals(name, f.tag) || iequals(name, f.alias)) return f.family;
    return std::nullopt;
}

std::vector<GeneratedGraph> generate(const FamilySpec& s)
{
    switch (s.family) {
    case Family::Path: {
        std::vector<Expectation> ex;
        if (s.n >= 3) ex.push_back({0, 1, VertexSet{(s.n + 1) / 2 - 1}});
        if (s.n >= 5) ex.push_back({1, 1, VertexSet{(s.n + 1) / 2 - 1}});
        return {single(path(s.n), ex, s.n >= 3 ? std::optional<int>(1) : std::nullopt)};
    }
    case Family::Cycle: return {single(cycle(s.n))};
    case Family::Star: return {single(star(s.n))};
    case Family::Wheel: {
        const Graph w = wheel(s.n);
        std::vector<Expectation> ex;
        if (s.n >= 7) {
            const VertexSet hint{0, 1, (s.n + 1) / 2};
            ex = {{0, 3, hint}, {1, 3, hint}};
        }
        return {single(w, ex, s.n >= 7 ? std::optional<int>(3) : std::nullopt)};
    }
    case Family::Complete: return {single(complete(s.n))};
    case Family::CompleteBipartite: {
        const int small = std::min(s.a, s.b);
        std::vector<Expectation> ex;
        if (small >= 2) {
            const VertexSet hint = s.a <= s.b ? block(0, s.a) : block(s.a, s.b);
            ex = {{0, small, hint}, {1, std::nullopt, {}}, {2, std::nullopt, {}}};
        }
        return {single(complete_bipartite(s.a, s.b), ex)};
    }
    case Family::CompleteMultipartite: {
        std::vector<Expectation> ex;
        const Graph g = complete_multipartite(s.parts);
        if (s.parts.size() >= 3 && *std::max_element(s.parts.begin(), s.parts.end()) >= 2) {
            // Keep the largest part; remove everything else.
            const auto largest = std::max_element(s.parts.begin(), s.parts.end()) - s.parts.begin();
            VertexSet hint;
            int first = 0;
            for (std::size_t i = 0; i < s.parts.size(); ++i) {
                if (static_cast<long>(i) != largest) hint |= block(first, s.parts[i]);
                first += s.parts[i];
            }
            ex = {{0, g.order() - s.parts[largest], hint}, {1, std::nullopt, {}}};
        }
        return {single(g, ex)};
    }
    case Family::TnStar: {
        const Graph t = tn_star(s.n, s.t, s.parts);
        return {single(t, {{1, s.n - s.t, block(0, s.n - s.t)}}, 1)};
    }
    case Family::TnPrime: return {single(tn_prime(s.n, s.k, s.a, s.b), {{1, s.k, block(0, s.k)}}, 1)};
    case Family::FknRegularPair: return {single(fkn(s.n, s.k, s.g, s.f1_order), {{s.g, s.k, block(0, s.k)}})};
    case Family::HknNearRegular: return {single(hkn(s.n, s.k, s.g, s.a, s.b), {{s.g, s.k, block(0, s.k)}})};
    case Family::GknCliqueChain:
        return {single(gkn(s.n, s.k, s.g), {{s.g, s.k - 1, block(s.n - s.k - s.g, s.k - 1)}}, s.k - 1)};
    case Family::H1:
        return {single(h_example(1, s.n, s.g), {{s.g, 2, VertexSet{s.n - 2, s.n - 1}}}, 2)};
    case Family::H2:
        return {single(h_example(2, s.n, s.g), {{s.g, 2, VertexSet{s.n - 2, s.n - 1}}}, 1)};
    case Family::H3:
        return {single(h_example(3, s.n, s.g), {{s.g, 2, VertexSet{s.n - 2, s.n - 1}}}, 1)};
    case Family::H4:
        return {single(h_example(4, s.n, s.g), {{s.g, 2, VertexSet{s.g + 1, s.g + 2}}}, 1)};
    case Family::RemarkPair: {
        auto pair = remark_pair(s.g);
        return {
            {"G", pair.g, {{s.g, 1, VertexSet{0}}}, std::nullopt},
            {"H", pair.h, {{s.g, 2, VertexSet{1, 2}}}, std::nullopt},
        };
    }
    }
    throw ParameterError("unknown family");
}

} // namespace gnc
