#pragma once

// Instances shared by the unit tests and the acceptance run.

#include <wdm/graph.hpp>
#include <wdm/reduction.hpp>
#include <wdm/threshold.hpp>

#include <random>
#include <utility>
#include <vector>

namespace fixture {

// s1 s2 u v p w = 0..5. Greedy activates v at step 1 and p at step 2, so w
// never sees both in one step; delaying v to step 2 lets w finish.
inline auto w6() -> std::pair<wdm::Graph, wdm::ThresholdAssignment>
{
    std::vector<wdm::Edge> edges{{0, 2}, {1, 2}, {0, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
    wdm::Graph g(6, edges);
    auto tau = wdm::explicit_threshold(g, {1, 1, 2, 1, 1, 2});
    return {g, tau};
}

/// Small MINREP instance with 2 <= N <= 4; depends only on the seed.
inline auto random_minrep(std::uint64_t seed) -> wdm::MinRepInstance
{
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
    };
    auto a = pick(1, 2);
    auto b = pick(1, 4 - a);
    std::vector<int> group;
    auto side = [&](std::size_t count) {
        // one group, or singleton groups
        bool split = count > 1 && rng() % 2 == 0;
        for (std::size_t i = 0; i < count; ++i)
            group.push_back(split ? static_cast<int>(i) : 0);
    };
    side(a);
    side(b);
    std::vector<wdm::Edge> edges;
    for (std::size_t x = 0; x < a; ++x)
        for (std::size_t y = a; y < a + b; ++y)
            if (rng() % 3 != 0)
                edges.push_back({static_cast<wdm::Vertex>(x), static_cast<wdm::Vertex>(y)});
    if (edges.empty())
        edges.push_back({0, static_cast<wdm::Vertex>(a)});
    return wdm::MinRepInstance(a, b, edges, group);
}

}
