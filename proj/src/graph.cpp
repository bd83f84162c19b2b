#include <wdm/errors.hpp>
#include <wdm/graph.hpp>

#include <algorithm>
#include <queue>
#include <random>
#include <string>

namespace wdm {

namespace
{
    auto edge_error(const Edge & e, const std::string & why) -> InvalidParameter
    {
        return InvalidParameter("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + "): " + why);
    }
}

Graph::Graph(std::size_t n) :
    _adjacency(n)
{
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) :
    _adjacency(n)
{
    _edges.reserve(edges.size());
    for (auto e : edges) {
        if (! contains(e.u) || ! contains(e.v))
            throw edge_error(e, "vertex id out of range for order " + std::to_string(n));
        if (e.u == e.v)
            throw edge_error(e, "self-loop");
        if (e.u > e.v)
            std::swap(e.u, e.v);
        _edges.push_back(e);
    }
    std::sort(_edges.begin(), _edges.end());
    auto dup = std::adjacent_find(_edges.begin(), _edges.end());
    if (dup != _edges.end())
        throw edge_error(*dup, "parallel edge");

    std::vector<std::size_t> deg(n, 0);
    for (const auto & e : _edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    for (std::size_t v = 0; v < n; ++v)
        _adjacency[v].reserve(deg[v]);
    for (const auto & e : _edges) {
        _adjacency[e.u].push_back(e.v);
        _adjacency[e.v].push_back(e.u);
    }
    for (auto & adj : _adjacency)
        std::sort(adj.begin(), adj.end());
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    if (! contains(u) || ! contains(v))
        return false;
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

auto Graph::max_degree() const noexcept -> std::size_t
{
    std::size_t best = 0;
    for (const auto & adj : _adjacency)
        best = std::max(best, adj.size());
    return best;
}

auto Graph::min_degree() const noexcept -> std::size_t
{
    if (_adjacency.empty())
        return 0;
    std::size_t best = _adjacency.front().size();
    for (const auto & adj : _adjacency)
        best = std::min(best, adj.size());
    return best;
}

auto Graph::is_regular(std::size_t d) const noexcept -> bool
{
    return std::all_of(_adjacency.begin(), _adjacency.end(), [d](const auto & adj) { return adj.size() == d; });
}

auto Graph::is_connected() const -> bool
{
    if (order() == 0)
        return true;
    std::vector<char> seen(order(), 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (! frontier.empty()) {
        auto v = frontier.front();
        frontier.pop();
        for (auto w : neighbors(v))
            if (! seen[w]) {
                seen[w] = 1;
                ++reached;
                frontier.push(w);
            }
    }
    return reached == order();
}

auto build_cycle(std::size_t n) -> Graph
{
    if (n < 3)
        throw InvalidParameter("cycle needs at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    return Graph(n, edges);
}

auto build_complete(std::size_t n) -> Graph
{
    if (n < 1)
        throw InvalidParameter("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph(n, edges);
}

auto build_path(std::size_t n) -> Graph
{
    if (n < 1)
        throw InvalidParameter("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    return Graph(n, edges);
}

auto build_star(std::size_t k) -> Graph
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= k; ++i)
        edges.push_back({0, static_cast<Vertex>(i)});
    return Graph(k + 1, edges);
}

auto build_petersen() -> Graph
{
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, static_cast<Vertex>((i + 1) % 5)});
        edges.push_back({static_cast<Vertex>(5 + i), static_cast<Vertex>(5 + (i + 2) % 5)});
        edges.push_back({i, static_cast<Vertex>(5 + i)});
    }
    return Graph(10, edges);
}

auto join(const Graph & g, const Graph & h) -> Graph
{
    if (g.order() == 0 || h.order() == 0)
        throw InvalidParameter("join operands must be nonempty");
    auto shift = static_cast<Vertex>(g.order());
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (const auto & e : h.edges())
        edges.push_back({e.u + shift, e.v + shift});
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t x = 0; x < h.order(); ++x)
            edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(x) + shift});
    return Graph(g.order() + h.order(), edges);
}

auto cartesian_product(const Graph & g, const Graph & h) -> Graph
{
    if (g.order() == 0 || h.order() == 0)
        throw InvalidParameter("product operands must be nonempty");
    auto m = static_cast<Vertex>(h.order());
    std::vector<Edge> edges;
    for (Vertex a = 0; a < static_cast<Vertex>(g.order()); ++a)
        for (const auto & e : h.edges())
            edges.push_back({a * m + e.u, a * m + e.v});
    for (const auto & e : g.edges())
        for (Vertex x = 0; x < m; ++x)
            edges.push_back({e.u * m + x, e.v * m + x});
    return Graph(g.order() * h.order(), edges);
}

auto blowup_cycle(std::size_t n) -> Graph
{
    if (n < 3)
        throw InvalidParameter("blow-up needs a cycle of at least 3 vertices, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        auto j = (i + 1) % n;
        for (Vertex a = 0; a < 2; ++a)
            for (Vertex b = 0; b < 2; ++b)
                edges.push_back({static_cast<Vertex>(2 * i) + a, static_cast<Vertex>(2 * j) + b});
    }
    return Graph(2 * n, edges);
}

auto random_graph(std::size_t n, double p, std::uint64_t seed) -> Graph
{
    if (! (p >= 0.0 && p <= 1.0))
        throw InvalidParameter("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // 53-bit uniform in [0, 1); std distributions are not portable across libraries.
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p)
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    return Graph(n, edges);
}

auto make_vertex_set(std::vector<Vertex> vs) -> VertexSet
{
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

auto all_vertices(const Graph & g) -> VertexSet
{
    VertexSet out(g.order());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<Vertex>(i);
    return out;
}

}
