#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wdm {

using Vertex = std::int32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge
{
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge &) const = default;
};

/// Simple undirected graph on dense ids 0..n-1. Immutable once built.
class Graph
{
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Throws InvalidParameter on self-loops, parallel edges or ids out of range.
    Graph(std::size_t n, std::span<const Edge> edges);

    auto order() const noexcept -> std::size_t { return _adjacency.size(); }
    auto size() const noexcept -> std::size_t { return _edges.size(); }

    /// Edges with u < v, in lexicographic order.
    auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }

    auto neighbors(Vertex v) const -> std::span<const Vertex> { return _adjacency.at(static_cast<std::size_t>(v)); }
    auto degree(Vertex v) const -> std::size_t { return neighbors(v).size(); }
    auto adjacent(Vertex u, Vertex v) const -> bool;

    auto max_degree() const noexcept -> std::size_t;
    auto min_degree() const noexcept -> std::size_t;
    auto is_regular(std::size_t d) const noexcept -> bool;
    auto is_connected() const -> bool;

    auto contains(Vertex v) const noexcept -> bool { return v >= 0 && static_cast<std::size_t>(v) < order(); }

    friend auto operator==(const Graph & a, const Graph & b) -> bool { return a._adjacency == b._adjacency; }

private:
    std::vector<std::vector<Vertex>> _adjacency;
    std::vector<Edge> _edges;
};

// Generators. Id layouts are part of the contract so certificates reproduce.

/// C_n with vertex i adjacent to i±1 mod n.
auto build_cycle(std::size_t n) -> Graph;
auto build_complete(std::size_t n) -> Graph;
/// P_n on vertices 0..n-1.
auto build_path(std::size_t n) -> Graph;
/// K_{1,k}, center 0.
auto build_star(std::size_t k) -> Graph;
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
auto build_petersen() -> Graph;

/// Disjoint union plus all cross edges; g keeps ids 0..|g|-1, h is shifted by |g|.
auto join(const Graph & g, const Graph & h) -> Graph;

/// Product vertex (a, x) gets id a * |h| + x.
auto cartesian_product(const Graph & g, const Graph & h) -> Graph;

/// C_n with every vertex replaced by an independent pair; pair i is {2i, 2i+1}
/// and consecutive pairs are completely joined.
auto blowup_cycle(std::size_t n) -> Graph;

/// G(n, p) sample; deterministic for a fixed seed on every platform.
auto random_graph(std::size_t n, double p, std::uint64_t seed) -> Graph;

// Set helpers shared by the modules.

auto make_vertex_set(std::vector<Vertex> vs) -> VertexSet;
auto set_difference(const VertexSet & a, const VertexSet & b) -> VertexSet;
auto all_vertices(const Graph & g) -> VertexSet;

}
