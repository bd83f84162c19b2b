#pragma once

#include <wdm/graph.hpp>

#include <string_view>
#include <vector>

namespace wdm {

enum class ThresholdRule
{
    strict_majority,  ///< ceil((deg + 1) / 2)
    simple_majority,  ///< ceil(deg / 2), raised to 1 on isolated vertices
    constant,
    explicit_list
};

auto to_string(ThresholdRule r) -> std::string_view;

/// Per-vertex thresholds, all >= 1. Records the rule that produced them and
/// whether tau(v) <= deg(v) holds everywhere (required for dynamic monopolies,
/// not for WDMs).
class ThresholdAssignment
{
public:
    ThresholdAssignment() = default;
    ThresholdAssignment(const Graph & g, std::vector<int> tau, ThresholdRule rule);

    auto operator[](Vertex v) const -> int { return _tau.at(static_cast<std::size_t>(v)); }
    auto values() const noexcept -> const std::vector<int> & { return _tau; }
    auto size() const noexcept -> std::size_t { return _tau.size(); }
    auto rule() const noexcept -> ThresholdRule { return _rule; }
    auto within_degree() const noexcept -> bool { return _within_degree; }

    /// t_m = min over v of tau(v); 0 for the empty graph.
    auto min() const noexcept -> int;
    auto max() const noexcept -> int;
    auto is_constant(int c) const noexcept -> bool;

    friend auto operator==(const ThresholdAssignment & a, const ThresholdAssignment & b) -> bool
    {
        return a._tau == b._tau;
    }

private:
    std::vector<int> _tau;
    ThresholdRule _rule = ThresholdRule::explicit_list;
    bool _within_degree = true;
};

auto strict_majority(const Graph & g) -> ThresholdAssignment;
auto simple_majority(const Graph & g) -> ThresholdAssignment;
auto constant_threshold(const Graph & g, int c) -> ThresholdAssignment;
auto explicit_threshold(const Graph & g, std::vector<int> tau) -> ThresholdAssignment;

/// True when tau coincides with the strict-majority assignment of g,
/// whatever rule label it carries.
auto is_strict_majority(const Graph & g, const ThresholdAssignment & tau) -> bool;

}
