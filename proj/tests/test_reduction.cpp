#include "fixtures.hpp"

#include <wdm/errors.hpp>
#include <wdm/reduction.hpp>

#include <doctest.h>

using namespace wdm;

namespace
{
    // A = {0, 1} in one group, B = {2, 3} in two groups.
    auto sample() -> MinRepInstance
    {
        return MinRepInstance(2, 2, {{0, 2}, {1, 3}, {0, 3}}, {0, 0, 0, 1});
    }

    auto single_edge() -> MinRepInstance
    {
        return MinRepInstance(1, 1, {{0, 1}}, {0, 0});
    }
}

TEST_CASE("instance validation")
{
    CHECK_THROWS_AS(MinRepInstance(2, 1, {{0, 2}}, {0, 1, 0, 0}), InvalidParameter);  // wrong length
    CHECK_THROWS_AS(MinRepInstance(3, 1, {{0, 3}}, {0, 0, 1, 0}), InvalidParameter);  // uneven groups
    CHECK_THROWS_AS(MinRepInstance(2, 1, {{0, 2}}, {1, 1, 0}), InvalidParameter);     // groups not from 0
    CHECK_THROWS_AS(MinRepInstance(2, 1, {{0, 1}}, {0, 0, 0}), InvalidParameter);     // edge inside A
    CHECK_THROWS_AS(MinRepInstance(1, 1, {{0, 1}, {1, 0}}, {0, 0}), InvalidParameter);
    CHECK_THROWS_AS(MinRepInstance(0, 1, {}, {0}), InvalidParameter);
    auto inst = sample();
    CHECK(inst.alpha() == 1);
    CHECK(inst.beta() == 2);
    CHECK(inst.in_a(1));
    CHECK_FALSE(inst.in_a(2));
}

TEST_CASE("supergraph and covers")
{
    auto inst = sample();
    auto supers = build_supergraph(inst);
    CHECK(supers == std::vector<SuperEdge>{{0, 0}, {0, 1}});
    CHECK(verify_minrep(inst, {0, 2, 3}));
    CHECK(verify_minrep(inst, {0, 1, 2, 3}));
    CHECK_FALSE(verify_minrep(inst, {0, 2}));
    CHECK_FALSE(verify_minrep(inst, {1, 2}));
    CHECK_THROWS_AS(verify_minrep(inst, {7}), InvalidParameter);
    CHECK(solve_minrep_bruteforce(inst) == VertexSet{0, 2, 3});
    CHECK(solve_minrep_bruteforce(single_edge()) == VertexSet{0, 1});
}

TEST_CASE("brute force agrees with subset enumeration")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto inst = fixture::random_minrep(seed);
        auto best = solve_minrep_bruteforce(inst);
        CHECK(verify_minrep(inst, best));
        auto n = inst.order();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            VertexSet reps;
            for (std::size_t x = 0; x < n; ++x)
                if (mask >> x & 1)
                    reps.push_back(static_cast<Vertex>(x));
            if (reps.size() < best.size())
                CHECK_FALSE(verify_minrep(inst, reps));
        }
    }
}

TEST_CASE("gadget")
{
    std::vector<Edge> edges;
    auto g = build_gadget(3, 0, 1, 5, edges);
    CHECK(g.internal(0) == 5);
    CHECK(g.internal(2) == 7);
    CHECK(edges.size() == 6);
    Graph k23(8, edges);
    CHECK(k23.degree(0) == 3);
    CHECK(k23.degree(6) == 2);
    CHECK_FALSE(k23.adjacent(0, 1));
    CHECK_THROWS_AS(build_gadget(0, 0, 1, 2, edges), InvalidParameter);
    CHECK_THROWS_AS(build_gadget(2, 1, 1, 2, edges), InvalidParameter);
}

TEST_CASE("N = 2 census")
{
    auto inst = single_edge();
    CHECK(projected_order(inst) == 664);
    auto red = reduce_to_wdm(inst);
    CHECK(red.graph.order() == 664);
    CHECK(red.n == 2);
    CHECK(red.m == 1);
    CHECK(red.v1 == VertexSet{0, 1});
    CHECK(red.v2 == VertexSet{2});
    CHECK(red.v3 == VertexSet{3});
    CHECK(red.v4 == VertexSet{4, 5});
    CHECK(red.v5 == VertexSet{6, 7});
    CHECK(red.tau[0] == 4);
    CHECK(red.tau[2] == 64);
    CHECK(red.tau[3] == 256);
    CHECK(red.tau[4] == 4);
    CHECK(red.tau[6] == 128);
    CHECK(red.tau[100] == 1);
    CHECK(red.class_of(8) == VertexClass::internal);
    CHECK_FALSE(red.scaled);
    CHECK(red.proof_properties);
    // the first gadget joins u_ab to a with N^5 internals
    REQUIRE_FALSE(red.gadgets.empty());
    CHECK(red.gadgets[0].u == 2);
    CHECK(red.gadgets[0].w == 0);
    CHECK(red.gadgets[0].k == 32);
    CHECK(red.gadgets[0].first == 8);

    auto audit = audit_reduction(inst, red);
    CHECK(audit.ok);
    CHECK(audit.threshold_gap);
}

TEST_CASE("size guard and scaled exponents")
{
    auto five = MinRepInstance(2, 3, {{0, 2}, {1, 4}}, {0, 0, 0, 0, 0});
    CHECK_THROWS_AS(reduce_to_wdm(five), CapabilityError);
    CHECK(projected_order(five) == 962768);

    ReduceOptions small;
    small.exponents = {1, 2, 1, 0, 1, 2};
    small.size_guard = 5;
    auto red = reduce_to_wdm(five, small);
    CHECK(red.scaled);
    CHECK(BigInt(red.graph.order()) == projected_order(five, small.exponents));
    auto audit = audit_reduction(five, red);
    CHECK(audit.ok);
    CHECK(red.proof_properties == audit.threshold_gap);
}

TEST_CASE("audit catches tampering")
{
    auto inst = sample();
    auto red = reduce_to_wdm(inst);
    REQUIRE(audit_reduction(inst, red).ok);

    auto bad = red;
    auto values = bad.tau.values();
    values[static_cast<std::size_t>(bad.v3[0])] += 1;
    bad.tau = explicit_threshold(bad.graph, values);
    CHECK_FALSE(audit_reduction(inst, bad).ok);

    bad = red;
    bad.v2_pairs.pop_back();
    CHECK_FALSE(audit_reduction(inst, bad).ok);

    bad = red;
    bad.proof_properties = false;
    CHECK_FALSE(audit_reduction(inst, bad).ok);
}

TEST_CASE("lift and extract")
{
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto inst = fixture::random_minrep(seed);
        auto red = reduce_to_wdm(inst);
        auto audit = audit_reduction(inst, red);
        CHECK(audit.ok);
        CHECK(audit.threshold_gap);

        auto best = solve_minrep_bruteforce(inst);
        auto lift = lift_solution(inst, red, best);
        CHECK(lift.outcome.complete);
        CHECK(lift.v3.first == 4);
        CHECK(lift.v3.last == 4);
        CHECK(lift.v3_simultaneous);
        CHECK(lift.main_done <= 8);
        CHECK(lift.time <= 9);
        CHECK(verify_wdm_partition(red.graph, red.tau, lift.outcome.partition));

        auto back = extract_solution(inst, red, lift.seed, lift.outcome.partition);
        CHECK(verify_minrep(inst, back));
        CHECK(back.size() <= 2 * lift.seed.size());
    }
    CHECK_THROWS_AS(lift_solution(sample(), reduce_to_wdm(sample()), {0}), PreconditionError);
}

TEST_CASE("extract follows the replacement chain")
{
    auto inst = single_edge();
    auto red = reduce_to_wdm(inst);

    // one V_2 vertex spreads to the whole graph
    auto from_u = greedy_cascade(red.graph, red.tau, red.v2);
    REQUIRE(from_u.complete);
    CHECK(extract_solution(inst, red, red.v2, from_u.partition) == VertexSet{0, 1});

    auto from_v = greedy_cascade(red.graph, red.tau, red.v3);
    REQUIRE(from_v.complete);
    CHECK(extract_solution(inst, red, red.v3, from_v.partition) == VertexSet{0, 1});

    auto from_w = greedy_cascade(red.graph, red.tau, red.v4);
    if (from_w.complete)
        CHECK(extract_solution(inst, red, red.v4, from_w.partition) == red.v1);

    auto internal = make_vertex_set({red.gadgets[0].first, red.v2[0]});
    auto with_internal = greedy_cascade(red.graph, red.tau, internal);
    if (with_internal.complete)
        CHECK_THROWS_AS(extract_solution(inst, red, internal, with_internal.partition), NormalFormViolation);

    CHECK_THROWS_AS(extract_solution(inst, red, red.v2, from_v.partition), PreconditionError);
}
