#pragma once

#include <wdm/bounds.hpp>
#include <wdm/cascade.hpp>
#include <wdm/graph.hpp>
#include <wdm/threshold.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wdm {

/// Bipartite MINREP instance on unified ids: A = 0..|A|-1, B = |A|..N-1.
/// group[x] indexes A_1..A_alpha for x in A and B_1..B_beta for x in B (0-based).
class MinRepInstance
{
public:
    MinRepInstance() = default;
    /// Edges are (a, b) pairs with a in A and b in B. Throws InvalidParameter
    /// when groups are uneven, not contiguous from 0, or an edge stays on one side.
    MinRepInstance(std::size_t a_count, std::size_t b_count, std::vector<Edge> edges, std::vector<int> group);

    auto a_count() const noexcept -> std::size_t { return _a; }
    auto b_count() const noexcept -> std::size_t { return _b; }
    /// N = |A| + |B|.
    auto order() const noexcept -> std::size_t { return _a + _b; }
    auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }
    auto group(Vertex x) const -> int { return _group.at(static_cast<std::size_t>(x)); }
    auto groups() const noexcept -> const std::vector<int> & { return _group; }
    auto alpha() const noexcept -> std::size_t { return _alpha; }
    auto beta() const noexcept -> std::size_t { return _beta; }
    auto in_a(Vertex x) const noexcept -> bool { return x >= 0 && static_cast<std::size_t>(x) < _a; }

    friend auto operator==(const MinRepInstance &, const MinRepInstance &) -> bool = default;

private:
    std::size_t _a = 0;
    std::size_t _b = 0;
    std::vector<Edge> _edges;
    std::vector<int> _group;
    std::size_t _alpha = 0;
    std::size_t _beta = 0;
};

/// Group pair (A_i, B_j) joined by at least one edge.
struct SuperEdge
{
    int i;
    int j;
    auto operator<=>(const SuperEdge &) const = default;
};

/// Sorted; M is its length.
auto build_supergraph(const MinRepInstance & inst) -> std::vector<SuperEdge>;

/// Representatives are unified ids; A' and B' are the parts below and above |A|.
auto verify_minrep(const MinRepInstance & inst, const VertexSet & reps) -> bool;

inline constexpr std::size_t minrep_bruteforce_cap = 12;

/// Minimum cover, lexicographically least among minima. N <= 12.
auto solve_minrep_bruteforce(const MinRepInstance & inst) -> VertexSet;

/// A K_{2,k}: k internal vertices with ids first..first+k-1, each adjacent to u and w.
struct Gadget
{
    Vertex u = -1;
    Vertex w = -1;
    std::size_t k = 0;
    Vertex first = -1;

    auto internal(std::size_t i) const -> Vertex { return first + static_cast<Vertex>(i); }
};

/// Appends the gadget's internal vertices (ids from next_id on) and edges.
auto build_gadget(std::size_t k, Vertex u, Vertex w, Vertex next_id, std::vector<Edge> & edges) -> Gadget;

enum class VertexClass
{
    v1,
    v2,
    v3,
    v4,
    v5,
    internal
};

auto to_string(VertexClass c) -> std::string_view;

/// Gadget sizes as powers of N. The defaults reproduce the hardness
/// construction; other values give the scaled exploratory mode.
struct GadgetExponents
{
    int v2_v1 = 5;  ///< Gamma_{N^5} between u_ab and a, b
    int v2_v3 = 8;  ///< Gamma_{N^8} between u_ab and v_ij
    int v3_v4 = 2;  ///< Gamma_{N^2} between v_ij and w_k
    int v1_v4 = 1;  ///< Gamma_N between V_1 and w_k
    int v2_v5 = 4;  ///< Gamma_{2N^4} between u_ab and z_k
    int v3_v5 = 6;  ///< Gamma_{2N^6} between v_ij and z_k

    friend auto operator==(const GadgetExponents &, const GadgetExponents &) -> bool = default;
};

struct ReduceOptions
{
    /// Largest N accepted; the vertex count grows like M N^7.
    std::size_t size_guard = 4;
    GadgetExponents exponents;
};

struct ReducedInstance
{
    Graph graph;
    ThresholdAssignment tau;
    std::size_t n = 0;  ///< N of the source instance
    std::size_t m = 0;  ///< number of super-edges
    GadgetExponents exponents;
    bool scaled = false;
    /// The V_5 threshold-gap inequality holds for the chosen exponents; the
    /// backward argument needs it.
    bool proof_properties = false;

    std::vector<VertexClass> cls;
    // Class members in id order. V_1 ids equal the MINREP ids.
    VertexSet v1, v2, v3, v4, v5;
    std::vector<Edge> v2_pairs;         ///< (a, b) for each V_2 vertex
    std::vector<SuperEdge> v3_pairs;    ///< (i, j) for each V_3 vertex
    std::vector<Gadget> gadgets;

    auto class_of(Vertex x) const -> VertexClass { return cls.at(static_cast<std::size_t>(x)); }
};

/// Projected order of G' without building it.
auto projected_order(const MinRepInstance & inst, const GadgetExponents & exponents = {}) -> BigInt;

/// Throws CapabilityError when N exceeds the size guard.
auto reduce_to_wdm(const MinRepInstance & inst, const ReduceOptions & options = {}) -> ReducedInstance;

struct ReductionAudit
{
    bool ok = true;
    std::vector<std::string> failures;
    /// 2|V_2| N^a + 2(M - 1) N^b < 2 M N^b with the V_5 exponents.
    bool threshold_gap = false;
};

/// Recomputes class sizes, thresholds, gadget shapes and per-class gadget
/// degrees from N and M alone and compares them with the built graph.
auto audit_reduction(const MinRepInstance & inst, const ReducedInstance & red) -> ReductionAudit;

struct ClassSteps
{
    std::optional<std::size_t> first;
    std::optional<std::size_t> last;
};

struct LiftReport
{
    VertexSet seed;
    CascadeOutcome outcome;
    ClassSteps v1, v2, v3, v4, v5, internal;
    /// Step by which every non-gadget vertex is active.
    std::size_t main_done = 0;
    /// Raw greedy layer count.
    std::size_t time = 0;
    /// All of V_3 activates in one step, each after its gadget supporters.
    bool v3_simultaneous = false;
};

/// Seeds G' with the cover as V_1 vertices and runs the greedy cascade.
/// Throws PreconditionError when reps is not a cover.
auto lift_solution(const MinRepInstance & inst, const ReducedInstance & red, const VertexSet & reps) -> LiftReport;

/// Maps a WDM of G' back to a cover with at most 2|D| representatives.
/// Rules, in this order: D = V_4 becomes V_1 (other V_4 members are dropped);
/// each z in V_5 becomes the missing endpoint of a half-seeded u_ab; each
/// v_ij becomes a u_ab with a in A_i, b in B_j; each u_ab becomes {a, b}.
/// Throws NormalFormViolation when |D| > N, D holds gadget internals, or the
/// result is not a cover.
auto extract_solution(const MinRepInstance & inst, const ReducedInstance & red, const VertexSet & d,
    const LayerPartition & partition) -> VertexSet;

}
