#pragma once

#include "gnc/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

namespace gnc {

enum class NotExistReason { GOutOfRange, NoValidCut, CompleteGraph, DisconnectedInput };

std::string_view to_string(NotExistReason reason);

/// Either a minimum cut with its certificate, or the reason none exists.
template <class Certificate>
class CutOutcome {
public:
    struct Exists {
        int value;
        Certificate certificate;
    };
    struct NotExist {
        NotExistReason reason;
    };

    CutOutcome(Exists e) : state_(std::move(e)) {}
    CutOutcome(NotExist n) : state_(n) {}

    bool exists() const { return std::holds_alternative<Exists>(state_); }
    int value() const { return exists_or_throw().value; }
    const Certificate& certificate() const { return exists_or_throw().certificate; }
    NotExistReason reason() const
    {
        if (exists()) throw std::logic_error("cut exists; no NotExist reason");
        return std::get<NotExist>(state_).reason;
    }
    /// Value if present.
    std::optional<int> value_if_exists() const
    {
        if (!exists()) return std::nullopt;
        return value();
    }

private:
    const Exists& exists_or_throw() const
    {
        if (!exists()) throw std::logic_error("no cut exists: " + std::string(to_string(reason())));
        return std::get<Exists>(state_);
    }

    std::variant<Exists, NotExist> state_;
};

/// kappa^g outcome; the certificate is the cut F.
using GncResult = CutOutcome<VertexSet>;
/// kappa_g (g-extra) outcome; the certificate is the R_g-cutset S.
using ExtraResult = CutOutcome<VertexSet>;
/// lambda_g outcome; the certificate is the deleted edge set.
using EdgeExtraResult = CutOutcome<std::vector<Edge>>;

struct SolveOptions {
    int threads = 1;
};

/// Every vertex of G - F keeps at least g neighbours in G - F.
/// Throws DomainError if F is not a subset of V(G) or g < 0.
bool is_gnc_faulty_set(const Graph& g, VertexSet faulty, int good);
/// A g-good-neighbour faulty set whose removal disconnects G.
bool is_gnc_cut(const Graph& g, VertexSet faulty, int good);
/// G - S is disconnected and every component has at least g + 1 vertices.
bool is_extra_cut(const Graph& g, VertexSet cut, int extra);

struct GRange {
    int g_min = 0;
    /// Negative when no g is admissible.
    int g_max = -1;
    bool admits(int g) const { return g >= g_min && g <= g_max; }
};

/// g_max = min(Delta(G), floor((n - 3) / 2)): the largest g for which kappa^g can exist.
GRange g_range(const Graph& g);

/// kappa^g(G). Subsets are tried by increasing size, lexicographically within
/// a size, and the first valid cut is returned. Sizes beyond n - 2g - 2 are
/// never tried. Throws DomainError for g < 0.
GncResult kappa_gnc(const Graph& g, int good, const SolveOptions& options = {});

/// Smallest g-good-neighbour cut of size <= size_limit for any graph,
/// connected or not (the empty set qualifies when G is already disconnected
/// with minimum degree >= g). Same enumeration order as kappa_gnc.
std::optional<VertexSet> smallest_gnc_cut(const Graph& g, int good, int size_limit, const SolveOptions& options = {});

/// kappa_g(G), the g-extra connectivity.
ExtraResult kappa_extra(const Graph& g, int extra, const SolveOptions& options = {});

/// Largest edge count lambda_extra will brute-force.
inline constexpr int lambda_extra_edge_budget = 24;

/// lambda_g(G) by brute force over edge subsets. Throws RefusedError when
/// e(G) exceeds lambda_extra_edge_budget.
EdgeExtraResult lambda_extra(const Graph& g, int extra);

} // namespace gnc
