#pragma once

#include <wdm/bounds.hpp>
#include <wdm/constructions.hpp>
#include <wdm/graph.hpp>
#include <wdm/reduction.hpp>
#include <wdm/solvers.hpp>
#include <wdm/threshold.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wdm {

// Graph text format:
//
//   # free comment lines
//   n m
//   u v            (m edge lines)
//   t tau_0 ... tau_{n-1}     (optional; may be split over several t lines)
//   %certificate   (optional; the rest of the file is certificate JSON)

inline constexpr std::string_view certificate_marker = "%certificate";

struct GraphDocument
{
    Graph graph;
    std::optional<ThresholdAssignment> tau;
    std::vector<std::string> comments;  ///< without the leading "# "
    std::optional<std::string> certificate_json;
};

/// Throws ParseError with the 1-based line number.
auto parse_graph(std::string_view text) -> GraphDocument;
auto emit_graph(const Graph & g, const std::optional<ThresholdAssignment> & tau = std::nullopt,
    const std::vector<std::string> & comments = {}) -> std::string;

// MINREP text format: "N m", then "a |A|", "g <group of each vertex>" and m
// edge lines "a b" with a < |A| <= b, in any order after the header.
auto parse_minrep(std::string_view text) -> MinRepInstance;
auto emit_minrep(const MinRepInstance & inst) -> std::string;

/// Deterministic JSON (sorted keys, sorted vertex lists). Verifies first and
/// throws PreconditionError when the certificate does not check out.
auto emit_certificate(const Graph & g, const ThresholdAssignment & tau, const Certificate & cert) -> std::string;
/// Schema check only; callers re-verify against the graph.
auto load_certificate(std::string_view json) -> Certificate;

auto bound_report_json(const BoundReport & report) -> std::string;
auto bound_report_table(const BoundReport & report) -> std::string;

/// Class sizes, thresholds and the gadget registry of a reduced instance.
auto registry_json(const ReducedInstance & red) -> std::string;

struct CorpusOptions
{
    std::uint64_t seed = 1;
    std::size_t count = 50;
    std::size_t n_min = 4;
    std::size_t n_max = 12;
    double p = 0.4;
    ThresholdRule rule = ThresholdRule::strict_majority;
    int constant = 2;  ///< used when rule is constant
};

struct CorpusEntry
{
    Graph graph;
    ThresholdAssignment tau;
    std::uint64_t graph_seed = 0;
};

/// Connected G(n, p) samples; entry i depends only on (seed, i).
auto generate_corpus(const CorpusOptions & options) -> std::vector<CorpusEntry>;

/// Threshold rule by name: "strict", "simple" or "const:<c>".
auto make_threshold(const Graph & g, std::string_view rule) -> ThresholdAssignment;

}
