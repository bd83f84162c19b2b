#include <wdm/constructions.hpp>
#include <wdm/errors.hpp>

#include <doctest.h>

#include <algorithm>

using namespace wdm;

TEST_CASE("triangles with a center")
{
    for (std::size_t m = 1; m <= 6; ++m) {
        auto c = triangles_with_center(m);
        CHECK(c.graph.order() == 3 * m + 1);
        CHECK(c.cert.expected_size == 2 * m);
        CHECK(verify_certificate(c.graph, c.tau, c.cert));
        CHECK(2 * m == (2 * c.graph.order()) / 3);
    }
    for (std::size_t m = 1; m <= 3; ++m) {
        auto c = triangles_with_center(m);
        CHECK(min_wdm(c.graph, c.tau).size == 2 * m);
        // no minimum WDM uses the center
        SolveOptions with_center;
        with_center.required = {static_cast<Vertex>(3 * m)};
        CHECK(min_wdm(c.graph, c.tau, with_center).size == 2 * m + 1);
    }
    CHECK_THROWS_AS(triangles_with_center(0), InvalidParameter);
}

TEST_CASE("tight cubic family")
{
    auto c3 = tight_cubic(3);
    CHECK(c3.graph.order() == 10);
    CHECK(c3.graph.is_regular(3));
    CHECK(c3.cert.expected_size == 3);
    CHECK(c3.cert.expected_time == 3);
    CHECK(verify_certificate(c3.graph, c3.tau, c3.cert));
    auto r = min_wdm(c3.graph, c3.tau);
    CHECK(r.size == 3);

    for (std::size_t t : {5, 7, 9}) {
        auto c = tight_cubic(t);
        auto n = c.graph.order();
        CHECK(c.graph.is_regular(3));
        CHECK(c.graph.is_connected());
        CHECK(c.cert.expected_size == (n + 2) / 4);
        CHECK(c.cert.expected_time == t);
        CHECK(verify_certificate(c.graph, c.tau, c.cert));
    }
    CHECK(tight_cubic(5).graph.order() == 42);
    CHECK(tight_cubic(5).cert.expected_size == 11);

    CHECK_THROWS_AS(tight_cubic(4), InvalidParameter);
    CHECK_THROWS_AS(tight_cubic(1), InvalidParameter);
    CHECK_THROWS_AS(tight_cubic(25), InvalidParameter);
}

TEST_CASE("wheel")
{
    for (std::size_t n : {8, 10, 12}) {
        auto c = wheel_join(n);
        CHECK(c.graph.order() == n + 1);
        CHECK(c.graph.degree(0) == n);
        CHECK(c.tau[0] == static_cast<int>((n + 1) / 2));
        CHECK(c.tau[1] == 2);
        CHECK(verify_certificate(c.graph, c.tau, c.cert));
        CHECK(c.cert.metadata.at("wdyn_lower") == std::to_string((n + 3) / 4));
    }
    CHECK_THROWS_AS(wheel_join(2), InvalidParameter);
}

TEST_CASE("torus tiling")
{
    for (std::size_t n : {4, 8, 12}) {
        auto c = torus_pattern(n);
        CHECK(c.graph.order() == n * n);
        CHECK(c.graph.is_regular(4));
        CHECK(c.cert.expected_size * 8 == 3 * n * n);
        CHECK(c.cert.expected_time == 2);
        CHECK(verify_certificate(c.graph, c.tau, c.cert));
        auto f = torus_flags(c.graph, *c.cert.partition);
        CHECK(f.d0_independent);
        CHECK(f.d1_independent);
        CHECK(f.d2_independent);
        CHECK(f.no_d0_d2_edges);
        CHECK(c.cert.metadata.at("no_d0_d2_edges") == "true");
    }
    CHECK_THROWS_AS(torus_pattern(6), InvalidParameter);
    CHECK_THROWS_AS(torus_pattern(0), InvalidParameter);
}

TEST_CASE("big join")
{
    auto c = big_join_counterexample(2, 7, 3, 5);
    CHECK(c.graph.order() == 11);
    CHECK(c.cert.seed == VertexSet{0, 1, 2, 3});
    CHECK(c.cert.expected_time == 1);
    CHECK(verify_certificate(c.graph, c.tau, c.cert));
    CHECK(c.cert.metadata.at("degree_unbounded") == "true");
    CHECK(c.cert.metadata.at("activation_steps_max") == "2");
    CHECK_THROWS_AS(big_join_counterexample(2, 7, 1, 5), InvalidParameter);
    CHECK_THROWS_AS(big_join_counterexample(2, 7, 5, 5), InvalidParameter);
    CHECK_THROWS_AS(big_join_counterexample(2, 7, 3, 8), InvalidParameter);
}

TEST_CASE("figure 4 tree")
{
    auto c = figure4_tree();
    CHECK(c.graph.order() == 36);
    CHECK(c.graph.size() == 35);
    CHECK(c.graph.is_connected());
    CHECK(c.graph.degree(10) == 1);
    CHECK(c.cert.expected_size == 8);
    CHECK(std::ranges::binary_search(c.cert.seed, 10));
    CHECK(verify_certificate(c.graph, c.tau, c.cert));

    auto best = min_wdm(c.graph, c.tau);
    CHECK(best.size == 8);
    SolveOptions no10;
    no10.excluded = {10};
    CHECK(min_wdm(c.graph, c.tau, no10).size == 9);
}

TEST_CASE("blowup family")
{
    auto [g, tau] = blowup_family(5);
    CHECK(g.order() == 10);
    CHECK(tau.is_constant(2));
    CHECK(tau.rule() == ThresholdRule::simple_majority);
}

TEST_CASE("tampered certificates fail")
{
    auto c = torus_pattern(4);
    auto bad = c.cert;
    bad.expected_size += 1;
    CHECK_FALSE(verify_certificate(c.graph, c.tau, bad));

    bad = c.cert;
    std::swap(bad.partition->layers[1], bad.partition->layers[2]);
    CHECK_FALSE(verify_certificate(c.graph, c.tau, bad));

    bad = c.cert;
    bad.expected_time = 3;
    CHECK_FALSE(verify_certificate(c.graph, c.tau, bad));

    auto w = wheel_join(8);
    auto weak = w.cert;
    weak.claim = SeedModel::monopoly;
    CHECK_FALSE(verify_certificate(w.graph, w.tau, weak));

    auto tri = triangles_with_center(2);
    auto no_partition = tri.cert;
    no_partition.partition.reset();
    CHECK(verify_certificate(tri.graph, tri.tau, no_partition));
    no_partition.seed = {0, 2, 3};
    CHECK_FALSE(verify_certificate(tri.graph, tri.tau, no_partition));
}
