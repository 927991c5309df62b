#include "gnc/extremal.hpp"

#include "gnc/enumerate.hpp"
#include "gnc/errors.hpp"
#include "gnc/io.hpp"
#include "gnc/parallel.hpp"
#include "gnc/solver.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>

namespace gnc {

std::string_view to_string(ExtremalFn fn)
{
    switch (fn) {
    case ExtremalFn::S: return "s";
    case ExtremalFn::F: return "f";
    case ExtremalFn::G: return "g";
    }
    return "?";
}

std::optional<ExtremalFn> extremal_fn_from_string(std::string_view name)
{
    if (name.size() != 1) return std::nullopt;
    switch (std::tolower(static_cast<unsigned char>(name[0]))) {
    case 's': return ExtremalFn::S;
    case 'f': return ExtremalFn::F;
    case 'g': return ExtremalFn::G;
    default: return std::nullopt;
    }
}

namespace {

// a / 2 + c when a is even; otherwise a non-integral marker.
FormulaValue half_plus(int a, int c, std::string note)
{
    FormulaValue out;
    out.note = std::move(note);
    if (a % 2 == 0) {
        out.value = a / 2 + c;
    } else {
        out.non_integral = true;
        out.note += "; non-integral (" + std::to_string(a) + "/2)";
    }
    return out;
}

bool in_window(int n, int k, int g) { return g >= 1 && k >= 1 && k <= n - 2 * g - 2; }

} // namespace

FormulaValues formula_values(int n, int k, int g)
{
    FormulaValues out;
    if (!in_window(n, k, g)) {
        out.s.note = "outside 1 <= g, 1 <= k <= n-2g-2";
        out.f.note = out.s.note;
    } else {
        if (g == 1) {
            out.s = {n - 1, "g = 1: n-1", false};
        } else if ((n - k) % 2 == 0) {
            out.s = half_plus((n - k) * g, k + 1, "n-k even: (n-k)g/2+k+1");
        } else {
            out.s = half_plus((n - k) * g + 1, k + 1, "n-k odd: ((n-k)g+1)/2+k+1");
        }
        out.f = {n * (n - 1) / 2 - (n - k - g) * (g + 1) + 1, "C(n,2)-(n-k-g)(g+1)+1", false};
    }
    if (!in_window(n, k + 1, g)) {
        out.g.note = "outside 1 <= g, 1 <= k, k+1 <= n-2g-2";
    } else if (g == 1) {
        out.g = {n - 2, "g = 1: s(n,k+1)-1 = n-2", false};
    } else if ((n - k) % 2 == 1) {
        out.g = half_plus((n - k - 1) * g, k + 1, "n-k odd: (n-k-1)g/2+k+1");
    } else {
        out.g = half_plus((n - k - 1) * g + 1, k + 1, "n-k even: ((n-k-1)g+1)/2+k+1");
    }
    return out;
}

namespace {

void check_parameters(int n, int k, int g)
{
    if (n < 1) throw ParameterError("n must be >= 1");
    if (k < 1) throw ParameterError("k must be >= 1");
    if (g < 0) throw ParameterError("g must be >= 0");
}

// Graphs grouped by edge count, each level in universe order.
using Levels = std::map<int, std::vector<const Graph*>>;

class Universe {
public:
    Universe(int n, const ExtremalOptions& options, bool connected_only)
    {
        if (options.corpus != nullptr) {
            for (const Graph& g : *options.corpus) {
                if (g.order() != n)
                    throw ParameterError("corpus graph of order " + std::to_string(g.order()) +
                                         " in a search for n = " + std::to_string(n));
                if (!connected_only || is_connected(g)) add(&g);
            }
        } else {
            // graph_classes is cached, so pointers stay valid.
            for (const Graph& g : graph_classes(n))
                if (!connected_only || is_connected(g)) add(&g);
        }
    }

    const Levels& levels() const { return levels_; }

private:
    void add(const Graph* g) { levels_[g->edge_count()].push_back(g); }

    Levels levels_;
};

struct LevelHit {
    std::optional<int> edges;
    std::vector<std::string> witnesses;
    std::uint64_t scanned = 0;
};

// Evaluates whole edge levels in the given direction and stops after the
// first level containing a hit.
LevelHit scan_levels(const Levels& levels, bool ascending, int threads,
                     const std::function<bool(const Graph&)>& hit)
{
    LevelHit out;
    auto visit = [&](int edges, const std::vector<const Graph*>& level) {
        std::vector<char> found(level.size(), 0);
        parallel_for(level.size(), threads, [&](std::size_t i) { found[i] = hit(*level[i]) ? 1 : 0; });
        out.scanned += level.size();
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (!found[i]) continue;
            out.edges = edges;
            if (out.witnesses.size() < max_witnesses) out.witnesses.push_back(emit_graph6(*level[i]));
        }
        return out.edges.has_value();
    };
    if (ascending) {
        for (const auto& [edges, level] : levels)
            if (visit(edges, level)) break;
    } else {
        for (auto it = levels.rbegin(); it != levels.rend(); ++it)
            if (visit(it->first, it->second)) break;
    }
    return out;
}

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void finish(ExtremalReport& r)
{
    r.match = r.searched_value == r.formula.value;
    r.documented_mismatch = r.formula.non_integral;
}

std::optional<int> level_value(const LevelHit& hit, int offset)
{
    if (!hit.edges) return std::nullopt;
    return *hit.edges + offset;
}

} // namespace

ExtremalReport s_search(int n, int k, int g, const ExtremalOptions& options)
{
    check_parameters(n, k, g);
    Stopwatch clock;
    ExtremalReport r;
    r.fn = ExtremalFn::S;
    r.n = n;
    r.k = k;
    r.g = g;
    r.formula = formula_values(n, k, g).s;
    const Universe u(n, options, true);
    auto hit = scan_levels(u.levels(), true, options.threads, [&](const Graph& G) {
        const auto res = kappa_gnc(G, g);
        return res.exists() && res.value() == k;
    });
    r.searched_value = level_value(hit, 0);
    r.witnesses = std::move(hit.witnesses);
    r.graphs_scanned = hit.scanned;
    finish(r);
    r.elapsed_seconds = clock.seconds();
    return r;
}

ExtremalReport f_search(int n, int k, int g, const ExtremalOptions& options)
{
    check_parameters(n, k, g);
    Stopwatch clock;
    ExtremalReport r;
    r.fn = ExtremalFn::F;
    r.n = n;
    r.k = k;
    r.g = g;
    r.formula = formula_values(n, k, g).f;
    auto below_k = [&](const Graph& G) { return smallest_gnc_cut(G, g, k - 1).has_value(); };

    const Universe all(n, options, false);
    auto hit = scan_levels(all.levels(), false, options.threads, below_k);
    r.searched_value = level_value(hit, 1);
    r.witnesses = std::move(hit.witnesses);
    r.graphs_scanned = hit.scanned;

    const Universe connected(n, options, true);
    const auto connected_hit = scan_levels(connected.levels(), false, options.threads, below_k);
    r.connected_only_value = level_value(connected_hit, 1);
    r.graphs_scanned += connected_hit.scanned;
    finish(r);
    r.elapsed_seconds = clock.seconds();
    return r;
}

ExtremalReport g_search(int n, int k, int g, const ExtremalOptions& options)
{
    check_parameters(n, k, g);
    Stopwatch clock;
    ExtremalReport r;
    r.fn = ExtremalFn::G;
    r.n = n;
    r.k = k;
    r.g = g;
    r.formula = formula_values(n, k, g).g;
    const Universe u(n, options, true);
    auto hit = scan_levels(u.levels(), true, options.threads, [&](const Graph& G) {
        const auto res = kappa_gnc(G, g);
        return res.exists() && res.value() > k;
    });
    r.searched_value = level_value(hit, -1);
    r.witnesses = std::move(hit.witnesses);
    r.graphs_scanned = hit.scanned;
    const auto s_next = s_search(n, k + 1, g, options);
    if (s_next.searched_value) r.identity_value = *s_next.searched_value - 1;
    r.graphs_scanned += s_next.graphs_scanned;
    finish(r);
    r.elapsed_seconds = clock.seconds();
    return r;
}

ExtremalReport extremal_search(ExtremalFn fn, int n, int k, int g, const ExtremalOptions& options)
{
    switch (fn) {
    case ExtremalFn::S: return s_search(n, k, g, options);
    case ExtremalFn::F: return f_search(n, k, g, options);
    case ExtremalFn::G: return g_search(n, k, g, options);
    }
    throw ParameterError("unknown extremal function");
}

} // namespace gnc
