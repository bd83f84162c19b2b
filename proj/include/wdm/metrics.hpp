#pragma once

#include <wdm/graph.hpp>

#include <cstddef>
#include <optional>

namespace wdm {

inline constexpr std::size_t default_longest_path_cap = 20;
inline constexpr std::size_t longest_path_hard_limit = 26;

/// Length of the shortest even cycle, or nullopt when every cycle is odd.
auto even_girth(const Graph & g) -> std::optional<std::size_t>;

/// Edge count of a longest simple path, by subset dynamic programming.
/// Throws CapabilityError when the order exceeds cap.
auto longest_path_length(const Graph & g, std::size_t cap = default_longest_path_cap) -> std::size_t;

/// Maximum matching size alpha'(G).
auto matching_number(const Graph & g) -> std::size_t;

struct GraphMetrics
{
    std::optional<std::size_t> even_girth;
    std::optional<std::size_t> longest_path_len;  ///< absent when the order is above the path cap
    std::size_t matching_number = 0;
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
};

auto compute_metrics(const Graph & g, std::size_t path_cap = default_longest_path_cap) -> GraphMetrics;

}
