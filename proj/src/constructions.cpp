#include <wdm/constructions.hpp>
#include <wdm/errors.hpp>

#include <algorithm>
#include <string>

namespace wdm {

namespace
{
    auto with_partition(SeedModel claim, LayerPartition p, std::string provenance) -> Certificate
    {
        Certificate c;
        c.claim = claim;
        c.seed = p.seed();
        c.expected_size = c.seed.size();
        c.expected_time = p.time();
        c.partition = std::move(p);
        c.provenance = std::move(provenance);
        return c;
    }
}

auto verify_certificate(const Graph & g, const ThresholdAssignment & tau, const Certificate & cert,
    std::size_t exact_cap) -> CheckResult
{
    if (tau.size() != g.order())
        return CheckResult::fail("threshold assignment does not match the graph order");
    if (cert.seed.empty())
        return CheckResult::fail("empty seed");
    if (make_vertex_set(cert.seed) != cert.seed)
        return CheckResult::fail("seed is not a sorted duplicate-free list");
    for (auto v : cert.seed)
        if (! g.contains(v))
            return CheckResult::fail("seed vertex " + std::to_string(v) + " out of range");
    if (cert.seed.size() != cert.expected_size)
        return CheckResult::fail("seed has " + std::to_string(cert.seed.size()) + " vertices, expected "
            + std::to_string(cert.expected_size));

    switch (cert.claim) {
    case SeedModel::monopoly:
        if (! check_monopoly(g, tau, cert.seed))
            return CheckResult::fail("seed is not a monopoly");
        break;
    case SeedModel::dynamic:
        if (! check_dynamic_monopoly(g, tau, cert.seed))
            return CheckResult::fail("seed is not a dynamic monopoly");
        break;
    case SeedModel::weak:
        if (cert.partition) {
            if (auto r = verify_wdm_partition(g, tau, *cert.partition); ! r)
                return r;
            if (cert.partition->seed() != cert.seed)
                return CheckResult::fail("partition D_0 differs from the seed");
            if (cert.expected_time && cert.partition->time() != *cert.expected_time)
                return CheckResult::fail("partition time " + std::to_string(cert.partition->time()) + ", expected "
                    + std::to_string(*cert.expected_time));
        }
        else if (! greedy_cascade(g, tau, cert.seed).complete) {
            ExactOptions options;
            options.max_vertices = exact_cap;
            if (! exact_wdm_partition(g, tau, cert.seed, options))
                return CheckResult::fail("seed admits no WDM partition");
        }
        break;
    }
    return CheckResult::pass();
}

auto triangles_with_center(std::size_t m) -> Construction
{
    if (m < 1)
        throw InvalidParameter("triangles_with_center needs m >= 1");
    auto center = static_cast<Vertex>(3 * m);
    std::vector<Edge> edges;
    VertexSet seed;
    VertexSet rest;
    for (std::size_t j = 0; j < m; ++j) {
        auto a = static_cast<Vertex>(3 * j);
        edges.push_back({a, a + 1});
        edges.push_back({a, a + 2});
        edges.push_back({a + 1, a + 2});
        edges.push_back({a + 2, center});
        seed.push_back(a);
        seed.push_back(a + 2);
        rest.push_back(a + 1);
    }
    rest.push_back(center);

    Graph g(3 * m + 1, edges);
    auto tau = strict_majority(g);
    return {std::move(g), std::move(tau),
        with_partition(SeedModel::weak, LayerPartition{{seed, rest}}, "triangle flower, upper bound 2n/3 is tight")};
}

auto tight_cubic(std::size_t t) -> Construction
{
    if (t < 3 || t % 2 == 0)
        throw InvalidParameter("tight_cubic needs an odd t >= 3, got " + std::to_string(t));
    if (t > 24)
        throw InvalidParameter("tight_cubic order grows like 2^t; t above 24 refused");

    std::size_t half = std::size_t{1} << (t - 1);  // |D_1|
    std::size_t k = (half - 1) / 3;
    std::size_t n = 8 * k + 2;
    auto v = static_cast<Vertex>(2 * k);

    std::vector<VertexSet> layers(t + 1);
    Vertex next = 0;
    auto fill = [&](std::size_t layer, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i)
            layers[layer].push_back(next++);
    };
    fill(0, 2 * k + 1);
    fill(1, half);
    for (std::size_t i = 2; i <= t; ++i)
        fill(i, std::size_t{1} << (t - i));

    std::vector<Vertex> stubs;
    for (auto u : layers[0])
        for (int copy = 0; copy < (u == v ? 2 : 3); ++copy)
            stubs.push_back(u);

    std::vector<Edge> edges;
    for (std::size_t j = 0; j < half; ++j) {
        auto d1 = layers[1][j];
        edges.push_back({stubs[j], d1});
        edges.push_back({stubs[j + half], d1});
    }
    for (std::size_t i = 1; i < t; ++i)
        for (std::size_t j = 0; j < layers[i + 1].size(); ++j) {
            edges.push_back({layers[i][2 * j], layers[i + 1][j]});
            edges.push_back({layers[i][2 * j + 1], layers[i + 1][j]});
        }
    edges.push_back({v, layers[t][0]});

    Graph g(n, edges);
    auto tau = constant_threshold(g, 2);
    auto cert = with_partition(SeedModel::weak, LayerPartition{std::move(layers)},
        "tight cubic family, |D| = (n + 2)/4 at processing time t");
    cert.metadata["k"] = std::to_string(k);
    return {std::move(g), std::move(tau), std::move(cert)};
}

auto wheel_join(std::size_t n) -> Construction
{
    if (n < 3)
        throw InvalidParameter("wheel_join needs n >= 3");
    auto g = join(build_complete(1), build_cycle(n));
    auto tau = simple_majority(g);
    Certificate c;
    c.claim = SeedModel::dynamic;
    c.seed = {0, 1};
    c.expected_size = 2;
    c.provenance = "wheel K_1 v C_n, dyn = 2 while wdyn >= n/4";
    c.metadata["wdyn_lower"] = std::to_string((n + 3) / 4);
    return {std::move(g), std::move(tau), std::move(c)};
}

auto torus_pattern(std::size_t n) -> Construction
{
    if (n < 4 || n % 4 != 0)
        throw InvalidParameter("torus_pattern needs n divisible by 4, got " + std::to_string(n));
    auto cycle = build_cycle(n);
    auto g = cartesian_product(cycle, cycle);
    auto tau = constant_threshold(g, 3);

    std::vector<VertexSet> layers(3);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto a = i % 4;
            auto b = j % 4;
            std::size_t cls = 0;
            if ((a == 0 && b == 0) || (a == 2 && b == 2))
                cls = 2;
            else if ((a + b) % 2 == 1)
                cls = 1;
            layers[cls].push_back(static_cast<Vertex>(i * n + j));
        }

    LayerPartition p{std::move(layers)};
    auto flags = torus_flags(g, p);
    auto cert = with_partition(SeedModel::weak, p, "torus tiling, wdyn(C_n x C_n) <= 3n^2/8 with processing time 2");
    auto text = [](bool b) { return std::string(b ? "true" : "false"); };
    cert.metadata["d0_independent"] = text(flags.d0_independent);
    cert.metadata["d1_independent"] = text(flags.d1_independent);
    cert.metadata["d2_independent"] = text(flags.d2_independent);
    cert.metadata["no_d0_d2_edges"] = text(flags.no_d0_d2_edges);
    return {std::move(g), std::move(tau), std::move(cert)};
}

auto torus_flags(const Graph & g, const LayerPartition & p) -> TorusFlags
{
    auto label = layer_of(p, g.order());
    TorusFlags f{true, true, true, true};
    for (const auto & e : g.edges()) {
        auto a = label[static_cast<std::size_t>(e.u)];
        auto b = label[static_cast<std::size_t>(e.v)];
        if (a == b) {
            if (a == 0)
                f.d0_independent = false;
            if (a == 1)
                f.d1_independent = false;
            if (a == 2)
                f.d2_independent = false;
        }
        if ((a == 0 && b == 2) || (a == 2 && b == 0))
            f.no_d0_d2_edges = false;
    }
    return f;
}

auto big_join_counterexample(std::size_t k, std::size_t n, std::vector<int> values) -> Construction
{
    if (k < 1 || n < 3)
        throw InvalidParameter("big_join_counterexample needs k >= 1 and n >= 3");
    auto clique = 2 * k;
    auto g = join(build_complete(clique), build_cycle(n));
    auto tau = explicit_threshold(g, std::move(values));

    int rim_max = 0;
    int clique_max = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
        auto & top = v < clique ? clique_max : rim_max;
        top = std::max(top, tau[static_cast<Vertex>(v)]);
    }
    if (rim_max < static_cast<int>(k) || rim_max > static_cast<int>(clique))
        throw InvalidParameter("rim thresholds must have maximum in [k, 2k], got " + std::to_string(rim_max));
    if (clique_max > static_cast<int>(n))
        throw InvalidParameter("clique thresholds must not exceed n, got " + std::to_string(clique_max));

    VertexSet seed;
    VertexSet rim;
    for (std::size_t v = 0; v < g.order(); ++v)
        (v < clique ? seed : rim).push_back(static_cast<Vertex>(v));
    auto cert = with_partition(SeedModel::weak, LayerPartition{{seed, rim}}, "K_2k v C_n, wdyn <= 2k without bounded degree");
    cert.metadata["activation_steps_max"] = "2";
    cert.metadata["degree_unbounded"] = "true";
    return {std::move(g), std::move(tau), std::move(cert)};
}

auto big_join_counterexample(std::size_t k, std::size_t n, int rim_tau, int clique_tau) -> Construction
{
    std::vector<int> values(2 * k + n, rim_tau);
    std::fill(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(2 * k), clique_tau);
    return big_join_counterexample(k, n, std::move(values));
}

auto figure4_tree() -> Construction
{
    std::vector<Edge> edges{{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 8}, {4, 9}, {5, 10}, {5, 11}, {6, 12},
        {6, 13}, {7, 14}, {7, 15}};
    std::vector<Vertex> leaves{0};
    for (Vertex x = 16; x <= 35; ++x)
        leaves.push_back(x);
    std::size_t next = 0;
    VertexSet d1{4, 5, 6, 7};
    for (Vertex heavy : {8, 9, 11, 12, 13, 14, 15})
        for (int i = 0; i < 3; ++i) {
            edges.push_back({heavy, leaves[next]});
            d1.push_back(leaves[next++]);
        }

    Graph g(36, edges);
    auto tau = strict_majority(g);
    LayerPartition p{{{8, 9, 10, 11, 12, 13, 14, 15}, make_vertex_set(d1), {2, 3}, {1}}};
    return {std::move(g), std::move(tau), with_partition(SeedModel::weak, std::move(p), "tree whose minimum WDMs need a leaf")};
}

auto blowup_family(std::size_t n) -> std::pair<Graph, ThresholdAssignment>
{
    auto g = blowup_cycle(n);
    auto tau = simple_majority(g);
    return {std::move(g), std::move(tau)};
}

}
