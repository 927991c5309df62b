#pragma once

#include "gnc/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gnc {

enum class ExtremalFn { S, F, G };

std::string_view to_string(ExtremalFn fn);
std::optional<ExtremalFn> extremal_fn_from_string(std::string_view name);

struct FormulaValue {
    /// nullopt outside the formula's window or when it is not an integer.
    std::optional<int> value;
    std::string note;
    /// The closed form applies but evaluates to a half-integer.
    bool non_integral = false;
};

struct FormulaValues {
    FormulaValue s;
    FormulaValue f;
    FormulaValue g;
};

/// Closed forms for s(n,k), f(n,k) and g(n,k) at parameter g.
///   s: n - 1 for g = 1; (n-k)g/2 + k + 1 for n - k even;
///      ((n-k)g + 1)/2 + k + 1 for n - k odd.  Window 1 <= k <= n - 2g - 2.
///   f: C(n,2) - (n-k-g)(g+1) + 1.                Same window.
///   g: s(n,k+1) - 1, i.e. n - 2 for g = 1; (n-k-1)g/2 + k + 1 for n - k odd;
///      ((n-k-1)g + 1)/2 + k + 1 for n - k even.   Window k + 1 <= n - 2g - 2.
FormulaValues formula_values(int n, int k, int g);

struct ExtremalOptions {
    int threads = 1;
    /// Replaces internal enumeration when set. Every graph must have order n.
    const std::vector<Graph>* corpus = nullptr;
};

inline constexpr std::size_t max_witnesses = 10;

struct ExtremalReport {
    ExtremalFn fn = ExtremalFn::S;
    int n = 0;
    int k = 0;
    int g = 0;
    /// nullopt: no graph in the universe attains the defining condition.
    std::optional<int> searched_value;
    FormulaValue formula;
    /// searched_value == formula.value (both absent counts as equal).
    bool match = false;
    /// The formula is non-integral here, so a mismatch is expected.
    bool documented_mismatch = false;
    /// graph6 strings of graphs on the extremal edge level.
    std::vector<std::string> witnesses;
    std::uint64_t graphs_scanned = 0;
    double elapsed_seconds = 0.0;
    /// f only: the same threshold over connected graphs alone.
    std::optional<int> connected_only_value;
    /// g only: s_search(n, k+1, g) - 1.
    std::optional<int> identity_value;
};

/// min e(G) over connected G of order n with kappa^g(G) = k. Scans edge
/// levels upward and stops at the first level with a hit.
ExtremalReport s_search(int n, int k, int g, const ExtremalOptions& options = {});

/// 1 + max e(G) over graphs of order n whose smallest g-good-neighbour cut has
/// fewer than k vertices; graphs without any such cut satisfy kappa^g >= k
/// vacuously. Disconnected graphs take part (their empty cut counts as 0),
/// which is what makes k = 1 meaningful. connected_only_value repeats the
/// scan over connected graphs. Scans edge levels downward.
ExtremalReport f_search(int n, int k, int g, const ExtremalOptions& options = {});

/// min e(G) - 1 over connected G of order n with kappa^g(G) existing and
/// greater than k. Also fills identity_value from s_search(n, k+1, g).
ExtremalReport g_search(int n, int k, int g, const ExtremalOptions& options = {});

ExtremalReport extremal_search(ExtremalFn fn, int n, int k, int g, const ExtremalOptions& options = {});

} // namespace gnc
