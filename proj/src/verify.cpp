#include "gnc/verify.hpp"

#include "gnc/characterize.hpp"
#include "gnc/enumerate.hpp"
#include "gnc/errors.hpp"
#include "gnc/extremal.hpp"
#include "gnc/families.hpp"
#include "gnc/io.hpp"
#include "gnc/parallel.hpp"
#include "gnc/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace gnc {

bool SuiteReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

namespace {

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "none"; }

// Per-item tallies, merged in item order so the report is independent of
// scheduling.
class Recorder {
public:
    explicit Recorder(std::size_t checks) : tallies_(checks) {}

    template <class Describe>
    void check(int id, bool ok, Describe&& describe)
    {
        auto& t = tallies_[id];
        ++t.cases;
        if (ok) return;
        ++t.failures;
        if (t.counterexamples.size() < max_counterexamples) t.counterexamples.push_back(describe());
    }

    struct Tally {
        std::uint64_t cases = 0;
        std::uint64_t failures = 0;
        std::vector<Counterexample> counterexamples;
    };
    std::vector<Tally> tallies_;
};

class Suite {
public:
    Suite(std::string name, int max_n, int threads) : threads_(threads)
    {
        report_.suite = std::move(name);
        report_.max_n = max_n;
    }

    int add_check(std::string name, bool advisory = false)
    {
        CheckResult c;
        c.name = std::move(name);
        c.advisory = advisory;
        report_.checks.push_back(std::move(c));
        return static_cast<int>(report_.checks.size()) - 1;
    }

    template <class Item, class Fn>
    void run(const std::vector<Item>& items, Fn&& fn)
    {
        std::vector<Recorder> recorders(items.size(), Recorder(report_.checks.size()));
        parallel_for(items.size(), threads_, [&](std::size_t i) { fn(items[i], recorders[i]); });
        for (const auto& r : recorders) {
            for (std::size_t id = 0; id < r.tallies_.size(); ++id) {
                auto& c = report_.checks[id];
                const auto& t = r.tallies_[id];
                c.cases += t.cases;
                c.failures += t.failures;
                for (const auto& cx : t.counterexamples)
                    if (c.counterexamples.size() < max_counterexamples) c.counterexamples.push_back(cx);
            }
        }
    }

    SuiteReport take() { return std::move(report_); }

private:
    SuiteReport report_;
    int threads_;
};

std::vector<Graph> connected_classes(int max_n)
{
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : graph_classes(n))
            if (is_connected(g)) out.push_back(g);
    return out;
}

Counterexample cx(const Graph& graph, int g, std::string detail)
{
    return {emit_graph6(graph), g, std::move(detail)};
}

// kappa^g without the g-range shortcut.
std::optional<int> unrestricted_kappa(const Graph& graph, int g)
{
    if (!is_connected(graph)) return std::nullopt;
    const auto cut = smallest_gnc_cut(graph, g, graph.order());
    if (!cut) return std::nullopt;
    return cut->size();
}

SuiteReport suite_kappa1(int max_n, int threads)
{
    Suite s("kappa1", max_n, threads);
    const int iff = s.add_check("cut vertex with good components iff kappa^g = 1");
    const int valid = s.add_check("returned cut vertex is a g-good-neighbor cut");
    s.run(connected_classes(max_n), [&](const Graph& G, Recorder& r) {
        for (int g = 0; g <= g_range(G).g_max; ++g) {
            const auto solver = kappa_gnc(G, g).value_if_exists();
            const auto w = has_kappa1(G, g);
            r.check(iff, w.has_value() == (solver == 1), [&] {
                return cx(G, g, "checker " + show(w) + ", solver " + show(solver));
            });
            if (w) r.check(valid, is_gnc_cut(G, VertexSet{*w}, g), [&] { return cx(G, g, "vertex " + show(w)); });
        }
    });
    return s.take();
}

SuiteReport suite_kappa2(int max_n, int threads)
{
    Suite s("kappa2", max_n, threads);
    const int iff = s.add_check("some branch holds iff kappa^g = 2");
    const int valid = s.add_check("branch witness pair is a g-good-neighbor cut");
    s.run(connected_classes(max_n), [&](const Graph& G, Recorder& r) {
        for (int g = 0; g <= g_range(G).g_max; ++g) {
            const auto solver = kappa_gnc(G, g).value_if_exists();
            const auto w = has_kappa2(G, g);
            r.check(iff, w.has_value() == (solver == 2), [&] {
                return cx(G, g,
                          std::string("checker ") + (w ? std::string(to_string(w->branch)) : "none") + ", solver " +
                              show(solver));
            });
            if (w)
                r.check(valid, is_gnc_cut(G, w->pair, g), [&] {
                    return cx(G, g, "branch " + std::string(to_string(w->branch)) + " pair not a cut");
                });
        }
    });
    return s.take();
}

SuiteReport suite_trees(int max_n, int threads)
{
    Suite s("trees", max_n, threads);
    const int theorem = s.add_check("kappa^1 = n-t with 4 <= t <= (n+2)/2 iff T is T_n* with that t");
    const int none = s.add_check("no tree has a g-good-neighbor cut for g >= 2");
    const int predict = s.add_check("tree_kappa_predict agrees with the solver for g = 0, 1, 2");
    std::vector<Graph> trees;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& t : enumerate_trees(n)) trees.push_back(std::move(t));
    s.run(trees, [&](const Graph& T, Recorder& r) {
        const int n = T.order();
        const auto kappa = kappa_gnc(T, 1).value_if_exists();
        const bool lhs = kappa && tn_star_window(n, n - *kappa);
        const auto shape = recognize_tn_star(T);
        const bool rhs = shape && tn_star_window(n, shape->t);
        const bool same_t = !lhs || !rhs || shape->t == n - *kappa;
        r.check(theorem, lhs == rhs && same_t, [&] {
            return cx(T, 1, "kappa^1 " + show(kappa) + ", recognised t " + (shape ? std::to_string(shape->t) : "none"));
        });
        for (int g = 2; g <= std::max(2, n / 2); ++g) {
            const auto u = unrestricted_kappa(T, g);
            r.check(none, !u, [&] { return cx(T, g, "cut of size " + show(u)); });
        }
        for (int g = 0; g <= 2; ++g) {
            const auto p = tree_kappa_predict(T, g).value;
            const auto v = kappa_gnc(T, g).value_if_exists();
            r.check(predict, p == v, [&] { return cx(T, g, "predicted " + show(p) + ", solver " + show(v)); });
        }
    });
    return s.take();
}

// Partitions of total into parts >= min_part, ascending.
void partitions(int total, int min_part, std::vector<int>& prefix, const std::function<void(const std::vector<int>&)>& fn)
{
    if (total == 0) {
        fn(prefix);
        return;
    }
    for (int p = min_part; p <= total; ++p) {
        prefix.push_back(p);
        partitions(total - p, p, prefix, fn);
        prefix.pop_back();
    }
}

std::vector<FamilySpec> family_grid(int max_n)
{
    std::vector<FamilySpec> out;
    auto add = [&](FamilySpec s) { out.push_back(std::move(s)); };
    for (int n = 3; n <= max_n; ++n) add({Family::Path, n});
    for (int n = 7; n <= max_n; ++n) add({Family::Wheel, n});
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= a; ++b)
            if (a + b <= max_n) add({.family = Family::CompleteBipartite, .n = a + b, .a = a, .b = b});
    for (int n = 3; n <= std::min(max_n, 8); ++n) {
        std::vector<int> prefix;
        partitions(n, 1, prefix, [&](const std::vector<int>& parts) {
            if (parts.size() >= 3 && parts.back() >= 2) add({.family = Family::CompleteMultipartite, .n = n, .parts = parts});
        });
    }
    for (int n = 6; n <= max_n; ++n) {
        for (int t = 4; 2 * t <= n + 2; ++t) {
            std::vector<int> prefix;
            partitions(t, 2, prefix, [&](const std::vector<int>& parts) {
                if (parts.size() >= 2) add({.family = Family::TnStar, .n = n, .t = t, .parts = parts});
            });
        }
    }
    for (int n = 5; n <= max_n; ++n)
        for (int k = 1; k + 4 <= n; ++k)
            for (int a = 2; a <= n - k - a; ++a) add({.family = Family::TnPrime, .n = n, .k = k, .a = a, .b = n - k - a});
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k < n; ++k) {
            for (int g = 2; 2 * g <= n - k - 2; ++g) {
                for (int f1 = g + 1; f1 <= n - k - f1; ++f1) {
                    const int f2 = n - k - f1;
                    if (f2 < g + 1 || (f1 * g) % 2 || (f2 * g) % 2) continue;
                    add({.family = Family::FknRegularPair, .n = n, .k = k, .g = g, .f1_order = f1});
                }
                if (((n - k) * g) % 2 == 1) {
                    for (int a = g + 1; a < n - k; ++a) {
                        const int b = n - k - a;
                        if (a % 2 == 0 && b % 2 == 1 && b >= g + 1)
                            add({.family = Family::HknNearRegular, .n = n, .k = k, .g = g, .a = a, .b = b});
                    }
                }
            }
            for (int g = 1; 2 * g <= n - k - 2; ++g)
                if (k >= 2 && n - k - g >= g + 1) add({.family = Family::GknCliqueChain, .n = n, .k = k, .g = g});
        }
    }
    for (int g = 1; g <= 3; ++g)
        for (int n = 2 * g + 4; n <= max_n; ++n)
            for (Family h : {Family::H1, Family::H2, Family::H3, Family::H4}) add({.family = h, .n = n, .g = g});
    for (int g = 1; g <= 3; ++g) add({.family = Family::RemarkPair, .g = g});
    return out;
}

std::string describe(const FamilySpec& s)
{
    std::string out = std::string(to_string(s.family)) + " n=" + std::to_string(s.n);
    if (s.t) out += " t=" + std::to_string(s.t);
    if (s.k) out += " k=" + std::to_string(s.k);
    if (s.g) out += " g=" + std::to_string(s.g);
    if (s.a) out += " a=" + std::to_string(s.a);
    if (s.b) out += " b=" + std::to_string(s.b);
    if (s.f1_order) out += " f1=" + std::to_string(s.f1_order);
    if (!s.parts.empty()) {
        out += " parts=";
        for (std::size_t i = 0; i < s.parts.size(); ++i) out += (i ? "," : "") + std::to_string(s.parts[i]);
    }
    return out;
}

SuiteReport suite_families(int max_n, int threads)
{
    Suite s("families", max_n, threads);
    const auto grid = family_grid(max_n);
    std::map<Family, int> value_check;
    for (const auto& spec : grid)
        if (!value_check.count(spec.family))
            value_check[spec.family] = s.add_check(std::string(to_string(spec.family)) + " asserted values");
    const int roundtrip = s.add_check("graph6 round trip");
    const int recognise = s.add_check("recognize_tn_star inverts tn_star");
    const int spanning = s.add_check("remark pair: H is a spanning subgraph of G");
    s.run(grid, [&](const FamilySpec& spec, Recorder& r) {
        const auto generated = generate(spec);
        const int values = value_check.at(spec.family);
        for (const auto& gen : generated) {
            const Graph& G = gen.graph;
            const std::string where = describe(spec) + (generated.size() > 1 ? " (" + gen.label + ")" : "");
            for (const auto& e : gen.expected) {
                const auto got = kappa_gnc(G, e.g).value_if_exists();
                r.check(values, got == e.kappa_g, [&] {
                    return cx(G, e.g, where + ": kappa^g expected " + show(e.kappa_g) + ", got " + show(got));
                });
            }
            if (gen.kappa_expected) {
                const auto got = kappa_classical(G).value;
                r.check(values, got == gen.kappa_expected, [&] {
                    return cx(G, -1, where + ": kappa expected " + show(gen.kappa_expected) + ", got " + show(got));
                });
            }
            r.check(roundtrip, parse_graph6(emit_graph6(G)) == G, [&] { return cx(G, -1, where); });
        }
        if (spec.family == Family::TnStar) {
            const auto shape = recognize_tn_star(generated.front().graph);
            r.check(recognise, shape && shape->t == spec.t && shape->parts == spec.parts,
                    [&] { return cx(generated.front().graph, 1, describe(spec)); });
        }
        if (spec.family == Family::RemarkPair)
            r.check(spanning, is_spanning_subgraph(generated[1].graph, generated[0].graph),
                    [&] { return cx(generated[1].graph, spec.g, describe(spec)); });
    });
    return s.take();
}

SuiteReport suite_bounds(int max_n, int threads)
{
    Suite s("bounds", max_n, threads);
    const int fast = s.add_check("fast path agrees with the unrestricted search");
    const int window = s.add_check("1 <= kappa <= kappa^g <= n-2g-2");
    const int range = s.add_check("kappa^g exists only for g <= min(Delta, floor((n-3)/2))");
    const int edges = s.add_check("kappa^g exists only if e <= C(n,2)-(g+1)^2");
    s.run(connected_classes(max_n), [&](const Graph& G, Recorder& r) {
        const int n = G.order();
        const auto kappa = kappa_classical(G).value;
        for (int g = 0; g < std::max(n, 1); ++g) {
            const auto u = unrestricted_kappa(G, g);
            const auto f = kappa_gnc(G, g).value_if_exists();
            r.check(fast, u == f, [&] { return cx(G, g, "fast " + show(f) + ", unrestricted " + show(u)); });
            if (!u) continue;
            r.check(window, kappa && *kappa >= 1 && *kappa <= *u && *u <= n - 2 * g - 2,
                    [&] { return cx(G, g, "kappa " + show(kappa) + ", kappa^g " + show(u)); });
            r.check(range, g_range(G).admits(g), [&] { return cx(G, g, "g_max " + std::to_string(g_range(G).g_max)); });
            r.check(edges, G.edge_count() <= n * (n - 1) / 2 - (g + 1) * (g + 1),
                    [&] { return cx(G, g, "e = " + std::to_string(G.edge_count())); });
        }
    });
    return s.take();
}

SuiteReport suite_monotone(int max_n, int threads)
{
    Suite s("monotone", max_n, threads);
    const int in_g = s.add_check("kappa^(g+1) exists => kappa^g exists and kappa^g <= kappa^(g+1)");
    const int span = s.add_check("kappa^0(H) <= kappa^0(G) for connected spanning H of G (labeled)");
    s.run(connected_classes(max_n), [&](const Graph& G, Recorder& r) {
        for (int g = 0; g + 1 < std::max(G.order(), 1); ++g) {
            const auto lo = unrestricted_kappa(G, g);
            const auto hi = unrestricted_kappa(G, g + 1);
            if (!hi) continue;
            r.check(in_g, lo && *lo <= *hi,
                    [&] { return cx(G, g, "kappa^g " + show(lo) + ", kappa^(g+1) " + show(hi)); });
        }
    });
    // kappa^0 of every labeled graph, indexed by adjacency key; -1 when
    // disconnected, -2 when no cut exists.
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        std::vector<int> k0(static_cast<std::size_t>(labeled_graph_count(n)));
        parallel_for(k0.size(), threads, [&](std::size_t key) {
            const Graph G = graph_from_key(n, key);
            if (!is_connected(G)) {
                k0[key] = -1;
                return;
            }
            k0[key] = kappa_gnc(G, 0).value_if_exists().value_or(-2);
        });
        std::vector<std::uint64_t> connected;
        for (std::uint64_t key = 0; key < k0.size(); ++key)
            if (k0[key] >= 0) connected.push_back(key);
        s.run(connected, [&](std::uint64_t gkey, Recorder& r) {
            // Proper non-empty submasks: every spanning subgraph but G itself.
            for (std::uint64_t h = (gkey - 1) & gkey; h != 0; h = (h - 1) & gkey) {
                if (k0[h] < 0) continue;
                r.check(span, k0[h] <= k0[gkey], [&] {
                    return cx(graph_from_key(n, gkey), 0,
                              "H = " + emit_graph6(graph_from_key(n, h)) + ": " + std::to_string(k0[h]) + " > " +
                                  std::to_string(k0[gkey]));
                });
            }
        });
    }
    return s.take();
}

SuiteReport suite_relations(int max_n, int threads)
{
    Suite s("relations", max_n, threads);
    const int extra_le = s.add_check("kappa_g <= kappa^g when both exist");
    const int one = s.add_check("kappa_1 = kappa^1 when both exist", true);
    const int zero = s.add_check("kappa^0 = kappa for non-complete G");
    const int extra_zero = s.add_check("kappa_0 = kappa for non-complete G");
    const int lambda_zero = s.add_check("lambda_0 = lambda for non-complete G");
    s.run(connected_classes(max_n), [&](const Graph& G, Recorder& r) {
        if (G.order() >= 2 && !is_complete(G)) {
            const auto kappa = kappa_classical(G).value;
            const auto k0 = kappa_gnc(G, 0).value_if_exists();
            const auto x0 = kappa_extra(G, 0).value_if_exists();
            r.check(zero, k0 == kappa, [&] { return cx(G, 0, "kappa^0 " + show(k0) + ", kappa " + show(kappa)); });
            r.check(extra_zero, x0 == kappa, [&] { return cx(G, 0, "kappa_0 " + show(x0) + ", kappa " + show(kappa)); });
            if (G.edge_count() <= lambda_extra_edge_budget) {
                const auto l0 = lambda_extra(G, 0).value_if_exists();
                const int lambda = lambda_classical(G);
                r.check(lambda_zero, l0 == lambda,
                        [&] { return cx(G, 0, "lambda_0 " + show(l0) + ", lambda " + std::to_string(lambda)); });
            }
        }
        for (int g = 0; g <= g_range(G).g_max; ++g) {
            const auto good = kappa_gnc(G, g).value_if_exists();
            const auto extra = kappa_extra(G, g).value_if_exists();
            if (!good || !extra) continue;
            r.check(extra_le, *extra <= *good,
                    [&] { return cx(G, g, "kappa_g " + show(extra) + ", kappa^g " + show(good)); });
            if (g == 1)
                r.check(one, *extra == *good,
                        [&] { return cx(G, g, "kappa_1 " + show(extra) + ", kappa^1 " + show(good)); });
        }
    });
    return s.take();
}

struct Triple {
    int n, k, g;
};

SuiteReport suite_extremal(int max_n, int threads)
{
    Suite s("extremal-formulas", max_n, threads);
    const int s_eq = s.add_check("s search = s formula");
    const int s_doc = s.add_check("s formula non-integral (documented mismatch)", true);
    const int f_eq = s.add_check("f search = f formula");
    const int f_conn = s.add_check("f over connected graphs = f formula (k >= 2)");
    const int g_eq = s.add_check("g search = g formula");
    const int g_doc = s.add_check("g formula non-integral (documented mismatch)", true);
    const int g_id = s.add_check("g search = s search(n, k+1) - 1");
    const int wit = s.add_check("witnesses re-validate");
    std::vector<Triple> triples;
    for (int n = 1; n <= max_n; ++n)
        for (int g = 1; 2 * g + 3 <= n; ++g)
            for (int k = 1; k <= n - 2 * g - 2; ++k) triples.push_back({n, k, g});
    s.run(triples, [&](const Triple& t, Recorder& r) {
        const std::string at = "(n,k,g) = (" + std::to_string(t.n) + "," + std::to_string(t.k) + "," +
                               std::to_string(t.g) + ")";
        auto compare = [&](int eq, int doc, const ExtremalReport& rep) {
            const std::string detail =
                at + ": searched " + show(rep.searched_value) + ", formula " + show(rep.formula.value);
            if (rep.documented_mismatch) {
                r.check(doc, rep.match, [&] { return Counterexample{"", t.g, detail + " (" + rep.formula.note + ")"}; });
            } else {
                r.check(eq, rep.match, [&] { return Counterexample{"", t.g, detail}; });
            }
        };
        auto validate = [&](const ExtremalReport& rep, int edges, const std::function<bool(const Graph&)>& ok) {
            for (const auto& w : rep.witnesses) {
                const Graph G = parse_graph6(w);
                r.check(wit, G.edge_count() == edges && ok(G), [&] {
                    return Counterexample{w, t.g, at + " " + std::string(to_string(rep.fn)) + " witness"};
                });
            }
        };

        const auto sr = s_search(t.n, t.k, t.g);
        compare(s_eq, s_doc, sr);
        if (sr.searched_value)
            validate(sr, *sr.searched_value, [&](const Graph& G) { return unrestricted_kappa(G, t.g) == t.k; });

        const auto fr = f_search(t.n, t.k, t.g);
        compare(f_eq, f_eq, fr);
        if (t.k >= 2)
            r.check(f_conn, fr.connected_only_value == fr.formula.value, [&] {
                return Counterexample{"", t.g,
                                      at + ": connected " + show(fr.connected_only_value) + ", formula " +
                                          show(fr.formula.value)};
            });
        if (fr.searched_value)
            validate(fr, *fr.searched_value - 1,
                     [&](const Graph& G) { return smallest_gnc_cut(G, t.g, t.k - 1).has_value(); });

        if (t.k + 1 <= t.n - 2 * t.g - 2) {
            const auto gr = g_search(t.n, t.k, t.g);
            compare(g_eq, g_doc, gr);
            r.check(g_id, gr.searched_value == gr.identity_value, [&] {
                return Counterexample{"", t.g,
                                      at + ": g " + show(gr.searched_value) + ", s(n,k+1)-1 " + show(gr.identity_value)};
            });
            if (gr.searched_value)
                validate(gr, *gr.searched_value + 1, [&](const Graph& G) {
                    const auto v = unrestricted_kappa(G, t.g);
                    return v && *v > t.k;
                });
        }
    });
    return s.take();
}

using SuiteFn = SuiteReport (*)(int, int);

struct SuiteEntry {
    std::string name;
    int default_max_n;
    SuiteFn run;
};

const std::vector<SuiteEntry>& registry()
{
    static const std::vector<SuiteEntry> entries = {
        {"kappa1", 7, suite_kappa1},       {"kappa2", 7, suite_kappa2},
        {"trees", 9, suite_trees},         {"families", 14, suite_families},
        {"bounds", 7, suite_bounds},       {"monotone", 7, suite_monotone},
        {"relations", 7, suite_relations}, {"extremal-formulas", 7, suite_extremal},
    };
    return entries;
}

const SuiteEntry& find(std::string_view name)
{
    for (const auto& e : registry())
        if (e.name == name) return e;
    std::string known;
    for (const auto& e : registry()) known += (known.empty() ? "" : ", ") + e.name;
    throw ParameterError("unknown suite '" + std::string(name) + "' (known: " + known + ", all)");
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) out.push_back(e.name);
        return out;
    }();
    return names;
}

int default_max_n(std::string_view suite) { return find(suite).default_max_n; }

SuiteReport run_suite(std::string_view suite, const VerifyOptions& options)
{
    const auto& entry = find(suite);
    const int max_n = options.max_n > 0 ? options.max_n : entry.default_max_n;
    return entry.run(max_n, std::max(options.threads, 1));
}

std::vector<SuiteReport> run_suites(std::string_view suite, const VerifyOptions& options)
{
    if (suite != "all") return {run_suite(suite, options)};
    std::vector<SuiteReport> out;
    for (const auto& e : registry()) out.push_back(run_suite(e.name, options));
    return out;
}

} // namespace gnc
