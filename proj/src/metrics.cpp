#include <wdm/errors.hpp>
#include <wdm/metrics.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace wdm {

namespace
{
    constexpr int unreachable = std::numeric_limits<int>::max();

    // Depth-bounded search for a simple cycle of exactly `length` vertices whose
    // smallest vertex is `start`. Only vertices > start may be used.
    class CycleProbe
    {
    public:
        CycleProbe(const Graph & g, Vertex start, std::size_t length) :
            _g(g),
            _start(start),
            _length(length),
            _on_path(g.order(), 0),
            _dist(g.order(), unreachable)
        {
            // distances back to start inside the subgraph of vertices >= start
            std::queue<Vertex> q;
            _dist[start] = 0;
            q.push(start);
            while (! q.empty()) {
                auto v = q.front();
                q.pop();
                for (auto w : _g.neighbors(v))
                    if (w > _start && _dist[w] == unreachable) {
                        _dist[w] = _dist[v] + 1;
                        q.push(w);
                    }
            }
        }

        auto found() -> bool
        {
            _on_path[_start] = 1;
            return extend(_start, 1);
        }

    private:
        auto extend(Vertex v, std::size_t path_vertices) -> bool
        {
            if (path_vertices == _length)
                return _g.adjacent(v, _start);
            for (auto w : _g.neighbors(v)) {
                if (w <= _start || _on_path[w])
                    continue;
                // need path_vertices + 1 + dist(w) - 1 <= length, closing edge included
                if (_dist[w] == unreachable || path_vertices + static_cast<std::size_t>(_dist[w]) > _length)
                    continue;
                _on_path[w] = 1;
                bool hit = extend(w, path_vertices + 1);
                _on_path[w] = 0;
                if (hit)
                    return true;
            }
            return false;
        }

        const Graph & _g;
        Vertex _start;
        std::size_t _length;
        std::vector<char> _on_path;
        std::vector<int> _dist;
    };
}

auto even_girth(const Graph & g) -> std::optional<std::size_t>
{
    auto n = g.order();
    for (std::size_t length = 4; length <= n; length += 2)
        for (Vertex s = 0; s < static_cast<Vertex>(n); ++s)
            if (CycleProbe(g, s, length).found())
                return length;
    return std::nullopt;
}

auto longest_path_length(const Graph & g, std::size_t cap) -> std::size_t
{
    auto n = g.order();
    auto limit = std::min(cap, longest_path_hard_limit);
    if (n > limit)
        throw CapabilityError("longest path needs exact subset search", limit, n);
    if (n == 0)
        return 0;

    std::vector<std::uint32_t> nbr(n, 0);
    for (const auto & e : g.edges()) {
        nbr[e.u] |= std::uint32_t{1} << e.v;
        nbr[e.v] |= std::uint32_t{1} << e.u;
    }

    // ends[mask] = set of v such that some simple path covering exactly mask ends at v
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (std::size_t v = 0; v < n; ++v)
        ends[std::size_t{1} << v] = std::uint32_t{1} << v;

    std::size_t best = 0;
    for (std::size_t mask = 1; mask < ends.size(); ++mask) {
        auto here = ends[mask];
        if (here == 0)
            continue;
        best = std::max(best, static_cast<std::size_t>(std::popcount(mask)) - 1);
        while (here) {
            auto v = std::countr_zero(here);
            here &= here - 1;
            auto next = nbr[v] & ~static_cast<std::uint32_t>(mask);
            while (next) {
                auto w = std::countr_zero(next);
                next &= next - 1;
                ends[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return best;
}

auto matching_number(const Graph & g) -> std::size_t
{
    if (g.size() == 0)
        return 0;
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.order());
    for (const auto & e : g.edges())
        boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.order());
    boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
    return boost::matching_size(bg, &mate[0]);
}

auto compute_metrics(const Graph & g, std::size_t path_cap) -> GraphMetrics
{
    GraphMetrics m;
    m.even_girth = even_girth(g);
    if (g.order() <= std::min(path_cap, longest_path_hard_limit))
        m.longest_path_len = longest_path_length(g, path_cap);
    m.matching_number = matching_number(g);
    m.max_degree = g.max_degree();
    m.min_degree = g.min_degree();
    return m;
}

}
