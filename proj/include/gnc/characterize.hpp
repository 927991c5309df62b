#pragma once

#include "gnc/graph.hpp"
#include "gnc/solver.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace gnc {

/// A cut vertex v such that every component of G - v has minimum degree >= g;
/// such a vertex exists exactly when kappa^g(G) = 1.
std::optional<int> has_kappa1(const Graph& g, int good);

enum class Kappa2Branch {
    /// kappa(G) = 2 and some 2-cut leaves all components with min degree >= g.
    TwoConnected,
    /// kappa(G) = 1, g >= 1, every cut vertex leaves a deficient component, and a
    /// cut vertex v has a single deficient vertex u in G - v whose neighbours have
    /// degree >= g + 1 there.
    CutVertexOneDeficient,
    /// kappa(G) = 1 and a cut vertex v splits G into >= 3 components, exactly one
    /// an isolated vertex and the rest of min degree >= g.
    CutVertexIsolated,
    /// kappa(G) = 1 and two non-cut vertices x, y form a cut with every
    /// component of min degree >= g.
    NonCutPair,
};

std::string_view to_string(Kappa2Branch branch);

struct Kappa2Witness {
    Kappa2Branch branch;
    /// The two vertices whose removal is the 2-cut.
    VertexSet pair;
};

/// First branch of the kappa^g = 2 characterisation that G satisfies.
///
/// In the one-deficient branch all degrees are measured inside G - v, and the
/// component holding u must contain another vertex so that removing u keeps
/// G - v - u disconnected.
std::optional<Kappa2Witness> has_kappa2(const Graph& g, int good);

/// Parameters of T_n* recognised up to isomorphism.
struct TnStarShape {
    int center = -1;
    /// sum of part sizes
    int t = 0;
    /// a_i, sorted ascending
    std::vector<int> parts;
};

/// Recognises a tree shaped as T_n*: a center adjacent to leaves and to r >= 2
/// centers of stars with at least one leaf each, nothing else. Throws
/// DomainError if T is not a tree.
std::optional<TnStarShape> recognize_tn_star(const Graph& t);

/// True iff 4 <= t <= (n + 2) / 2.
bool tn_star_window(int n, int t);

enum class PredictionSource { Theorem, Solver };

struct TreePrediction {
    /// nullopt: kappa^g does not exist.
    std::optional<int> value;
    PredictionSource source = PredictionSource::Theorem;
};

/// kappa^g of a tree from the tree characterisation: g = 0 gives 1 (n >= 3),
/// g >= 2 gives no value, g = 1 gives n - t for a recognised T_n* inside the
/// window and defers to the solver otherwise. Throws DomainError on non-trees.
TreePrediction tree_kappa_predict(const Graph& t, int good);

} // namespace gnc
