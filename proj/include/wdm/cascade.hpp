#pragma once

#include <wdm/graph.hpp>
#include <wdm/threshold.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wdm {

inline constexpr std::size_t default_exact_cap = 24;
/// Layer labels live in 64-bit masks.
inline constexpr std::size_t exact_hard_limit = 64;

/// Ordered layers D_0..D_t; each layer a sorted vertex set.
struct LayerPartition
{
    std::vector<VertexSet> layers;

    auto time() const noexcept -> std::size_t { return layers.empty() ? 0 : layers.size() - 1; }
    auto seed() const -> const VertexSet & { return layers.at(0); }

    friend auto operator==(const LayerPartition &, const LayerPartition &) -> bool = default;
};

/// Layer index of every vertex, -1 where unplaced.
auto layer_of(const LayerPartition & p, std::size_t order) -> std::vector<int>;

struct CheckResult
{
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }

    static auto pass() -> CheckResult { return {}; }
    static auto fail(std::string why) -> CheckResult { return {false, std::move(why)}; }
};

/// Every invariant of a WDM partition: disjoint, covering, nonempty layers,
/// and each v in D_i (i >= 1) has tau(v) neighbours in D_{i-1}.
auto verify_wdm_partition(const Graph & g, const ThresholdAssignment & tau, const LayerPartition & p) -> CheckResult;

struct CascadeOutcome
{
    LayerPartition partition;  ///< over activated vertices only
    VertexSet unactivated;
    bool complete = false;
};

/// Synchronous earliest-activation process with one-step memory. Sound but
/// incomplete as a WDM test: a completed outcome is a valid partition, while
/// a stalled one does not rule out a partition that delays some vertex.
auto greedy_cascade(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed) -> CascadeOutcome;

struct ExactOptions
{
    std::size_t max_vertices = default_exact_cap;
    std::optional<std::size_t> max_t;
    /// Require some vertex at layer >= min_top_layer (used for t_max searches).
    std::size_t min_top_layer = 0;
};

/// Complete search for a partition with D_0 = seed. nullopt means no valid
/// partition exists (within max_t when given).
auto exact_wdm_partition(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed,
    const ExactOptions & options = {}) -> std::optional<LayerPartition>;

struct TimeRange
{
    std::size_t t_min = 0;
    std::size_t t_max = 0;

    friend auto operator==(const TimeRange &, const TimeRange &) -> bool = default;
};

/// Smallest and largest processing time over all partitions with D_0 = seed.
auto processing_time_range(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed,
    std::size_t max_vertices = default_exact_cap) -> std::optional<TimeRange>;

/// Cumulative (progressive) process; the greedy run is exact here.
auto check_dynamic_monopoly(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed) -> bool;

/// One round: every outsider has tau(v) neighbours in the seed.
auto check_monopoly(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed) -> bool;

/// Vertex lists from D_0 up to the requested endpoint, one vertex per layer.
using LayeredPath = std::vector<Vertex>;

/// k pairwise disjoint layer-respecting paths ending at the given endpoints,
/// which must share one layer. Requires k <= min tau.
auto extract_disjoint_paths(const Graph & g, const ThresholdAssignment & tau, const LayerPartition & p,
    const VertexSet & endpoints) -> std::vector<LayeredPath>;

auto validate_disjoint_paths(const Graph & g, const LayerPartition & p, const VertexSet & endpoints,
    const std::vector<LayeredPath> & paths) -> CheckResult;

/// Subdivided star: center in D_t, each branch starts at a D_{t-1} neighbour
/// of the center and descends to D_0.
struct StarlikeTree
{
    Vertex center = -1;
    std::vector<std::vector<Vertex>> branches;
};

auto extract_starlike(const Graph & g, const ThresholdAssignment & tau, const LayerPartition & p) -> StarlikeTree;

/// Checks that the tree is a subgraph of g, all vertices distinct, with
/// `expected_branches` branches of `expected_length` edges each.
auto validate_starlike(const Graph & g, const StarlikeTree & tree, std::size_t expected_branches,
    std::size_t expected_length) -> CheckResult;

}
