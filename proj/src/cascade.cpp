#include <wdm/cascade.hpp>
#include <wdm/errors.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <optional>
#include <string>

namespace wdm {

namespace
{
    auto check_seed(const Graph & g, const VertexSet & seed) -> void
    {
        if (seed.empty())
            throw PreconditionError("seed set must be nonempty");
        for (auto v : seed)
            if (! g.contains(v))
                throw PreconditionError("seed vertex " + std::to_string(v) + " out of range");
        if (! std::is_sorted(seed.begin(), seed.end()) || std::adjacent_find(seed.begin(), seed.end()) != seed.end())
            throw PreconditionError("seed must be a sorted set without repeats");
    }

    // Maximum matching between the k current endpoints (left ids 0..k-1) and
    // the layer below (ids k..). Returns the matched lower vertex per endpoint.
    auto distinct_predecessors(const std::vector<VertexSet> & options, const VertexSet & below,
        const std::vector<int> & index_of) -> std::optional<std::vector<Vertex>>
    {
        using Bipartite = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
        auto k = options.size();
        Bipartite bg(k + below.size());
        for (std::size_t s = 0; s < k; ++s)
            for (auto cand : options[s])
                boost::add_edge(s, k + static_cast<std::size_t>(index_of[cand]), bg);
        std::vector<boost::graph_traits<Bipartite>::vertex_descriptor> mate(k + below.size());
        boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
        if (boost::matching_size(bg, &mate[0]) != k)
            return std::nullopt;
        std::vector<Vertex> out(k);
        for (std::size_t s = 0; s < k; ++s)
            out[s] = below[mate[s] - k];
        return out;
    }
}

auto layer_of(const LayerPartition & p, std::size_t order) -> std::vector<int>
{
    std::vector<int> layer(order, -1);
    for (std::size_t i = 0; i < p.layers.size(); ++i)
        for (auto v : p.layers[i])
            if (v >= 0 && static_cast<std::size_t>(v) < order)
                layer[v] = static_cast<int>(i);
    return layer;
}

auto verify_wdm_partition(const Graph & g, const ThresholdAssignment & tau, const LayerPartition & p) -> CheckResult
{
    if (tau.size() != g.order())
        return CheckResult::fail("threshold assignment does not match the graph order");
    if (p.layers.empty() || p.layers.front().empty())
        return CheckResult::fail("D_0 is empty");

    std::vector<int> layer(g.order(), -1);
    std::size_t placed = 0;
    for (std::size_t i = 0; i < p.layers.size(); ++i) {
        if (p.layers[i].empty())
            return CheckResult::fail("layer D_" + std::to_string(i) + " is empty");
        for (auto v : p.layers[i]) {
            if (! g.contains(v))
                return CheckResult::fail("vertex " + std::to_string(v) + " out of range");
            if (layer[v] >= 0)
                return CheckResult::fail("vertex " + std::to_string(v) + " appears in D_" + std::to_string(layer[v])
                    + " and D_" + std::to_string(i));
            layer[v] = static_cast<int>(i);
            ++placed;
        }
    }
    if (placed != g.order()) {
        for (std::size_t v = 0; v < g.order(); ++v)
            if (layer[v] < 0)
                return CheckResult::fail("vertex " + std::to_string(v) + " is in no layer");
    }

    for (std::size_t i = 1; i < p.layers.size(); ++i)
        for (auto v : p.layers[i]) {
            int support = 0;
            for (auto w : g.neighbors(v))
                if (layer[w] == static_cast<int>(i) - 1)
                    ++support;
            if (support < tau[v])
                return CheckResult::fail("vertex " + std::to_string(v) + " in D_" + std::to_string(i) + " has "
                    + std::to_string(support) + " neighbours in D_" + std::to_string(i - 1) + ", threshold "
                    + std::to_string(tau[v]));
        }
    return CheckResult::pass();
}

auto greedy_cascade(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed) -> CascadeOutcome
{
    check_seed(g, seed);
    std::vector<char> placed(g.order(), 0);
    for (auto v : seed)
        placed[v] = 1;

    CascadeOutcome out;
    out.partition.layers.push_back(seed);
    std::vector<int> hits(g.order(), 0);
    std::size_t total = seed.size();
    while (true) {
        const auto & previous = out.partition.layers.back();
        std::vector<Vertex> touched;
        for (auto u : previous)
            for (auto w : g.neighbors(u))
                if (! placed[w] && hits[w]++ == 0)
                    touched.push_back(w);
        VertexSet next;
        for (auto w : touched) {
            if (hits[w] >= tau[w])
                next.push_back(w);
            hits[w] = 0;
        }
        if (next.empty())
            break;
        std::sort(next.begin(), next.end());
        for (auto w : next)
            placed[w] = 1;
        total += next.size();
        out.partition.layers.push_back(std::move(next));
    }

    for (std::size_t v = 0; v < g.order(); ++v)
        if (! placed[v])
            out.unactivated.push_back(static_cast<Vertex>(v));
    out.complete = total == g.order();
    return out;
}

auto check_dynamic_monopoly(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed) -> bool
{
    check_seed(g, seed);
    std::vector<char> active(g.order(), 0);
    std::vector<int> support(g.order(), 0);
    std::vector<Vertex> frontier(seed.begin(), seed.end());
    for (auto v : seed)
        active[v] = 1;
    std::size_t count = seed.size();
    while (! frontier.empty()) {
        std::vector<Vertex> next;
        for (auto u : frontier)
            for (auto w : g.neighbors(u))
                if (! active[w] && ++support[w] == tau[w])
                    next.push_back(w);
        for (auto w : next)
            active[w] = 1;
        count += next.size();
        frontier = std::move(next);
    }
    return count == g.order();
}

auto check_monopoly(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed) -> bool
{
    std::vector<char> in_seed(g.order(), 0);
    for (auto v : seed) {
        if (! g.contains(v))
            throw PreconditionError("seed vertex " + std::to_string(v) + " out of range");
        in_seed[v] = 1;
    }
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (in_seed[v])
            continue;
        int support = 0;
        for (auto w : g.neighbors(static_cast<Vertex>(v)))
            support += in_seed[w];
        if (support < tau[static_cast<Vertex>(v)])
            return false;
    }
    return true;
}

auto extract_disjoint_paths(const Graph & g, const ThresholdAssignment & tau, const LayerPartition & p,
    const VertexSet & endpoints) -> std::vector<LayeredPath>
{
    if (auto check = verify_wdm_partition(g, tau, p); ! check)
        throw PreconditionError("invalid partition: " + check.reason);
    if (endpoints.empty())
        throw InvalidParameter("at least one endpoint is required");
    auto sorted = make_vertex_set(endpoints);
    if (sorted.size() != endpoints.size())
        throw InvalidParameter("endpoints must be distinct");
    auto k = endpoints.size();
    if (static_cast<int>(k) > tau.min())
        throw InvalidParameter("requested " + std::to_string(k) + " paths but the minimum threshold is "
            + std::to_string(tau.min()));

    auto layer = layer_of(p, g.order());
    auto top = layer[endpoints.front()];
    for (auto v : endpoints)
        if (layer[v] != top)
            throw InvalidParameter("endpoints must lie in a single layer");

    std::vector<LayeredPath> reversed(k);
    std::vector<Vertex> current(endpoints.begin(), endpoints.end());
    for (std::size_t s = 0; s < k; ++s)
        reversed[s].push_back(current[s]);

    std::vector<int> index_of(g.order(), -1);
    for (int i = top; i >= 1; --i) {
        const auto & below = p.layers[static_cast<std::size_t>(i - 1)];
        for (std::size_t j = 0; j < below.size(); ++j)
            index_of[below[j]] = static_cast<int>(j);

        std::vector<VertexSet> options(k);
        for (std::size_t s = 0; s < k; ++s)
            for (auto w : g.neighbors(current[s]))
                if (layer[w] == i - 1)
                    options[s].push_back(w);

        // tau(v) >= k neighbours below each endpoint, so Hall's condition holds
        auto picked = distinct_predecessors(options, below, index_of);
        if (! picked)
            throw Error("no system of distinct predecessors at layer " + std::to_string(i - 1));
        current = std::move(*picked);
        for (std::size_t s = 0; s < k; ++s)
            reversed[s].push_back(current[s]);

        for (auto w : below)
            index_of[w] = -1;
    }

    for (auto & path : reversed)
        std::reverse(path.begin(), path.end());
    return reversed;
}

auto validate_disjoint_paths(const Graph & g, const LayerPartition & p, const VertexSet & endpoints,
    const std::vector<LayeredPath> & paths) -> CheckResult
{
    if (paths.size() != endpoints.size())
        return CheckResult::fail("expected " + std::to_string(endpoints.size()) + " paths, got "
            + std::to_string(paths.size()));
    auto layer = layer_of(p, g.order());
    std::vector<char> used(g.order(), 0);
    for (std::size_t s = 0; s < paths.size(); ++s) {
        const auto & path = paths[s];
        if (path.empty() || path.back() != endpoints[s])
            return CheckResult::fail("path " + std::to_string(s) + " does not end at its endpoint");
        for (std::size_t j = 0; j < path.size(); ++j) {
            auto v = path[j];
            if (! g.contains(v) || layer[v] != static_cast<int>(j))
                return CheckResult::fail("path " + std::to_string(s) + " leaves layer order at step " + std::to_string(j));
            if (used[v])
                return CheckResult::fail("vertex " + std::to_string(v) + " shared between paths");
            used[v] = 1;
            if (j > 0 && ! g.adjacent(path[j - 1], v))
                return CheckResult::fail("path " + std::to_string(s) + " uses a non-edge");
        }
    }
    return CheckResult::pass();
}

auto extract_starlike(const Graph & g, const ThresholdAssignment & tau, const LayerPartition & p) -> StarlikeTree
{
    auto k = tau.min();
    if (k < 2)
        throw InvalidParameter("starlike extraction needs min threshold >= 2, got " + std::to_string(k));
    if (p.time() < 1)
        throw InvalidParameter("starlike extraction needs processing time >= 1");
    if (auto check = verify_wdm_partition(g, tau, p); ! check)
        throw PreconditionError("invalid partition: " + check.reason);

    auto t = p.time();
    StarlikeTree tree;
    tree.center = p.layers[t].front();
    const auto & below = p.layers[t - 1];
    VertexSet roots;
    for (auto w : g.neighbors(tree.center))
        if (std::binary_search(below.begin(), below.end(), w) && roots.size() < static_cast<std::size_t>(k))
            roots.push_back(w);

    for (auto & path : extract_disjoint_paths(g, tau, p, roots)) {
        std::reverse(path.begin(), path.end());
        tree.branches.push_back(std::move(path));
    }
    return tree;
}

auto validate_starlike(const Graph & g, const StarlikeTree & tree, std::size_t expected_branches,
    std::size_t expected_length) -> CheckResult
{
    if (! g.contains(tree.center))
        return CheckResult::fail("center out of range");
    if (tree.branches.size() != expected_branches)
        return CheckResult::fail("expected " + std::to_string(expected_branches) + " branches, got "
            + std::to_string(tree.branches.size()));
    std::vector<char> used(g.order(), 0);
    used[tree.center] = 1;
    for (const auto & branch : tree.branches) {
        if (branch.empty() || branch.size() - 1 != expected_length)
            return CheckResult::fail("branch has the wrong length");
        auto previous = tree.center;
        for (auto v : branch) {
            if (! g.contains(v) || used[v])
                return CheckResult::fail("vertex " + std::to_string(v) + " repeated or out of range");
            if (! g.adjacent(previous, v))
                return CheckResult::fail("non-edge " + std::to_string(previous) + " -- " + std::to_string(v));
            used[v] = 1;
            previous = v;
        }
    }
    return CheckResult::pass();
}

}
