#include "gnc/characterize.hpp"
#include "gnc/enumerate.hpp"
#include "gnc/errors.hpp"
#include "gnc/families.hpp"

#include <doctest.h>

using namespace gnc;

TEST_CASE("kappa^g = 1 witnesses")
{
    CHECK(has_kappa1(path(5), 1) == 2);
    CHECK_FALSE(has_kappa1(cycle(6), 1).has_value());
    CHECK(has_kappa1(remark_pair(1).g, 1) == 0);
    CHECK_FALSE(has_kappa1(remark_pair(1).h, 1).has_value());
}

TEST_CASE("kappa^g = 2 branches")
{
    const auto h1 = has_kappa2(h_example(1, 8, 1), 1);
    REQUIRE(h1);
    CHECK(h1->branch == Kappa2Branch::TwoConnected);

    // At g = 1 H3 already has kappa^1 = 1; the isolated-vertex branch shows from g = 2.
    CHECK_FALSE(has_kappa2(h_example(3, 8, 1), 1).has_value());
    const auto h3 = has_kappa2(h_example(3, 10, 2), 2);
    REQUIRE(h3);
    CHECK(h3->branch == Kappa2Branch::CutVertexIsolated);

    const auto h4 = has_kappa2(h_example(4, 8, 1), 1);
    REQUIRE(h4);
    CHECK(h4->branch == Kappa2Branch::NonCutPair);
    CHECK(is_gnc_cut(h_example(4, 8, 1), h4->pair, 1));

    CHECK_FALSE(has_kappa2(path(5), 1).has_value());
    CHECK(to_string(Kappa2Branch::TwoConnected) == "TwoConnected");
    CHECK(to_string(Kappa2Branch::NonCutPair) == "NonCutPair");
}

TEST_CASE("verdicts coincide with the solver on every connected graph n <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : graph_classes(n)) {
            if (!is_connected(g)) continue;
            for (int good = 0; good <= g_range(g).g_max; ++good) {
                const auto r = kappa_gnc(g, good);
                const auto one = has_kappa1(g, good);
                const auto two = has_kappa2(g, good);
                CHECK(one.has_value() == (r.exists() && r.value() == 1));
                CHECK(two.has_value() == (r.exists() && r.value() == 2));
                if (two) CHECK(is_gnc_cut(g, two->pair, good));
                if (one) CHECK(is_gnc_cut(g, VertexSet{*one}, good));
            }
        }
    }
}

TEST_CASE("T_n* recognition")
{
    const auto shape = recognize_tn_star(tn_star(10, 4, {2, 2}));
    REQUIRE(shape);
    CHECK(shape->t == 4);
    CHECK(shape->parts == std::vector<int>{2, 2});
    CHECK(shape->center == 0);
    CHECK_FALSE(recognize_tn_star(path(7)).has_value());
    CHECK_FALSE(recognize_tn_star(star(7)).has_value());
    CHECK_THROWS_AS(recognize_tn_star(cycle(5)), DomainError);
    CHECK(tn_star_window(10, 4));
    CHECK(tn_star_window(10, 6));
    CHECK_FALSE(tn_star_window(10, 7));
    CHECK_FALSE(tn_star_window(10, 3));
}

TEST_CASE("tree predictions")
{
    for (const Graph& t : enumerate_trees(8)) CHECK_FALSE(tree_kappa_predict(t, 2).value.has_value());
    const auto p = tree_kappa_predict(tn_star(10, 4, {2, 2}), 1);
    CHECK(p.value == 6);
    CHECK(p.source == PredictionSource::Theorem);
    CHECK(tree_kappa_predict(path(9), 0).value == 1);
    CHECK_THROWS_AS(tree_kappa_predict(cycle(5), 1), DomainError);
    for (int n = 3; n <= 8; ++n)
        for (const Graph& t : enumerate_trees(n))
            for (int good = 0; good <= 2; ++good)
                CHECK(tree_kappa_predict(t, good).value == kappa_gnc(t, good).value_if_exists());
}
