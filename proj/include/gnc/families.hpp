#pragma once

#include "gnc/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gnc {

// Standard families. Labelings:
//   path(n)        0-1-...-(n-1)
//   cycle(n)       path plus (n-1)-0
//   star(n)        K_{1,n-1}, center 0
//   wheel(n)       center 0, rim cycle 1..n-1
//   complete_bipartite(a, b)       parts 0..a-1 and a..a+b-1
//   complete_multipartite(parts)   contiguous blocks in the given order
Graph path(int n);
Graph cycle(int n);
Graph star(int n);
Graph wheel(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);

/// Tree T_n*: star K_{1,n-t-1} with center v = 0 and leaves 1..n-t-1, then for
/// each part a_i a star K_{1,a_i-1} (center first, leaves after) whose center
/// is joined to v. Requires r >= 2, a_i >= 2, sum a_i = t, 4 <= t <= (n+2)/2.
Graph tn_star(int n, int t, const std::vector<int>& parts);

/// Tree T_n': stars K_{1,k-1}, K_{1,a-1}, K_{1,b-1} with centers x = 0,
/// u = k, v = k + a (each center followed by its leaves) plus edges xu, xv.
/// Requires k >= 1, a >= 2, b >= 2, k + a + b = n.
Graph tn_prime(int n, int k, int a, int b);

/// F^k_n: star K_{1,k-1} (center 0, leaves 1..k-1), then two g-regular
/// circulant blocks F1 (order f1_order) and F2 (order n - k - f1_order);
/// the center is joined to the first vertex of each block.
Graph fkn(int n, int k, int g, int f1_order);

/// H^k_n: as fkn but with a g-regular block H1 of even order a and a block H2
/// of odd order b whose first vertex has degree g + 1 and the rest degree g.
Graph hkn(int n, int k, int g, int a, int b);

/// G^k_n: cliques K_{n-k-g} (first), K_{k-1} (middle), K_{g+1} (last), the
/// middle clique completely joined to both others.
Graph gkn(int n, int k, int g);

/// Examples H1..H4 built from K_{g+1} on 0..g and a second clique right after.
///   H1, H2, H3: second clique K_{n-g-3}, then u = n-2, v = n-1.
///     H1: u and v joined to every clique vertex.
///     H2: edges uv, v-0, u-(g+1).
///     H3: edges uv, v-(g+1), v-0.
///   H4: second clique K_{n-g-1}; edges 0-(g+1), 0-(g+2).
/// Requires n >= 2g + 4.
Graph h_example(int which, int n, int g);

struct RemarkPair {
    Graph g;
    Graph h;
};

/// The spanning pair (G, H) with kappa^g(G) = 1 < kappa^g(H) = 2.
/// Labels: u = 0, v = 1, w = 2, then blocks X1, X2, Y1, Y2 of g + 1 vertices.
/// In H, X1 and X2 lose the edge between their first two vertices.
RemarkPair remark_pair(int g);

/// Degree-regular circulant on `order` vertices: offsets +-1..+-(degree/2),
/// plus the antipodal offset when degree is odd.
void add_regular_circulant(GraphBuilder& b, int first, int order, int degree);

enum class Family {
    Path,
    Cycle,
    Star,
    Wheel,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    TnStar,
    TnPrime,
    FknRegularPair,
    HknNearRegular,
    GknCliqueChain,
    H1,
    H2,
    H3,
    H4,
    RemarkPair,
};

std::string_view to_string(Family family);
/// Accepts the tag names above case-insensitively, plus kebab-case aliases
/// such as "tn-star", "fkn", "remark-pair".
std::optional<Family> family_from_string(std::string_view name);

struct FamilySpec {
    Family family = Family::Path;
    int n = 0;
    int t = 0;
    int k = 0;
    int g = 0;
    int a = 0;
    int b = 0;
    int f1_order = 0;
    std::vector<int> parts = {};
};

/// A value the construction is asserted to have.
struct Expectation {
    int g = 0;
    /// nullopt: kappa^g is asserted not to exist.
    std::optional<int> kappa_g;
    VertexSet certificate_hint;
};

struct GeneratedGraph {
    std::string label;
    Graph graph;
    std::vector<Expectation> expected;
    /// Classical connectivity where the construction asserts it.
    std::optional<int> kappa_expected;
};

/// Builds the graph(s) of a family with the asserted values as a sidecar.
/// RemarkPair yields two graphs (G, H); every other family one.
std::vector<GeneratedGraph> generate(const FamilySpec& spec);

} // namespace gnc
