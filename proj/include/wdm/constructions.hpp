#pragma once

#include <wdm/cascade.hpp>
#include <wdm/graph.hpp>
#include <wdm/solvers.hpp>
#include <wdm/threshold.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wdm {

/// Seed witness that can be re-checked without trusting the generator.
struct Certificate
{
    SeedModel claim = SeedModel::weak;
    VertexSet seed;
    std::size_t expected_size = 0;
    std::optional<std::size_t> expected_time;
    std::optional<LayerPartition> partition;
    std::string provenance;
    /// Free-form facts for downstream audits ("degree_unbounded" -> "true", ...).
    std::map<std::string, std::string> metadata;
};

struct Construction
{
    Graph graph;
    ThresholdAssignment tau;
    Certificate cert;
};

/// Re-checks a certificate against the claimed model. Weak claims without a
/// partition fall back to the greedy and then the exact checker.
auto verify_certificate(const Graph & g, const ThresholdAssignment & tau, const Certificate & cert,
    std::size_t exact_cap = default_exact_cap) -> CheckResult;

/// m triangles {3j, 3j+1, 3j+2} and a center 3m adjacent to every 3j+2.
/// Strict majority; seed {3j, 3j+2} for each j, time 1.
auto triangles_with_center(std::size_t m) -> Construction;

/// Cubic graph on n = 8k + 2 vertices, k = (2^(t-1) - 1)/3, tau = 2, with a
/// WDM of size (n + 2)/4 and processing time t. t must be odd and >= 3.
///
/// Layout: D_0 = 0..2k with v = 2k the vertex of D_0-degree 2, then D_1,
/// D_2, ..., D_t in id order. D_1 vertex j takes stubs j and j + 3k + 1 of
/// the D_0 stub list (each D_0 vertex three times, v twice); D_{i+1} vertex j
/// is adjacent to D_i vertices 2j and 2j + 1; the D_t vertex is also adjacent to v.
auto tight_cubic(std::size_t t) -> Construction;

/// K_1 v C_n: hub 0, rim i at id i + 1, tau = ceil(deg / 2). The certificate
/// is the dynamic monopoly {hub, rim 0}.
auto wheel_join(std::size_t n) -> Construction;

/// Structural facts about the torus tiling partition.
struct TorusFlags
{
    bool d0_independent = false;
    bool d1_independent = false;
    bool d2_independent = false;
    bool no_d0_d2_edges = false;
};

/// C_n x C_n with tau = 3 and the period-4 tiling: cell (i, j) (id i*n + j)
/// is in D_2 at tile offsets (0,0), (2,2), in D_1 when i + j is odd, and in
/// D_0 otherwise. Requires 4 | n.
auto torus_pattern(std::size_t n) -> Construction;
auto torus_flags(const Graph & g, const LayerPartition & p) -> TorusFlags;

/// K_2k v C_n with explicit thresholds (clique ids 0..2k-1 first). The rim
/// maximum must lie in [k, 2k] and the clique maximum must not exceed n.
auto big_join_counterexample(std::size_t k, std::size_t n, std::vector<int> tau) -> Construction;
auto big_join_counterexample(std::size_t k, std::size_t n, int rim_tau, int clique_tau) -> Construction;

/// The fixed 36-vertex tree whose minimum WDMs must contain the leaf 10.
/// Ids 1..15 are the internal labels, 10 is the leaf of 5, and the pendant
/// leaves 0, 16..35 hang three each off 8, 9, 11, 12, 13, 14, 15 in that order.
auto figure4_tree() -> Construction;

/// C_n blown up by independent pairs, simple majority.
auto blowup_family(std::size_t n) -> std::pair<Graph, ThresholdAssignment>;

}
