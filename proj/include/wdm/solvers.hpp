#pragma once

#include <wdm/cascade.hpp>
#include <wdm/graph.hpp>
#include <wdm/threshold.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace wdm {

enum class SeedModel
{
    monopoly,
    dynamic,
    weak
};

auto to_string(SeedModel m) -> std::string_view;

struct SearchStats
{
    std::uint64_t nodes = 0;       ///< branch-and-bound nodes
    std::uint64_t candidates = 0;  ///< complete seed sets handed to the checker
};

struct SolveResult
{
    SeedModel kind = SeedModel::weak;
    std::size_t size = 0;
    VertexSet witness;
    std::optional<LayerPartition> partition;  ///< weak kind only
    SearchStats explored;
    bool exact = true;
};

struct SolveOptions
{
    /// Order cap for plain subset enumeration.
    std::size_t max_vertices = default_exact_cap;
    /// Raised cap when forced-seed or pendant-support pruning applies.
    std::size_t max_vertices_pruned = 36;
    /// Restrict to seeds containing vertex 0. Only sound for vertex-transitive graphs.
    bool vertex_transitive = false;
    VertexSet required;
    VertexSet excluded;
};

/// Exact wdyn with a lexicographically least minimum witness.
auto min_wdm(const Graph & g, const ThresholdAssignment & tau, const SolveOptions & options = {}) -> SolveResult;
auto min_dyn(const Graph & g, const ThresholdAssignment & tau, const SolveOptions & options = {}) -> SolveResult;
auto min_mono(const Graph & g, const ThresholdAssignment & tau, const SolveOptions & options = {}) -> SolveResult;

/// Upper bound on wdyn: start from the hint (or V(G)) and drop vertices while
/// the greedy process still completes.
auto greedy_wdm(const Graph & g, const ThresholdAssignment & tau, const std::optional<VertexSet> & hint = std::nullopt)
    -> SolveResult;

}
