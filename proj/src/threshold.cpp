#include <wdm/errors.hpp>
#include <wdm/threshold.hpp>

#include <algorithm>
#include <string>

namespace wdm {

auto to_string(ThresholdRule r) -> std::string_view
{
    switch (r) {
    case ThresholdRule::strict_majority: return "strict_majority";
    case ThresholdRule::simple_majority: return "simple_majority";
    case ThresholdRule::constant: return "constant";
    case ThresholdRule::explicit_list: return "explicit";
    }
    return "explicit";
}

ThresholdAssignment::ThresholdAssignment(const Graph & g, std::vector<int> tau, ThresholdRule rule) :
    _tau(std::move(tau)),
    _rule(rule)
{
    if (_tau.size() != g.order())
        throw InvalidParameter("threshold list has " + std::to_string(_tau.size()) + " entries for a graph of order "
            + std::to_string(g.order()));
    for (std::size_t v = 0; v < _tau.size(); ++v) {
        if (_tau[v] < 1)
            throw InvalidParameter("threshold of vertex " + std::to_string(v) + " is " + std::to_string(_tau[v])
                + ", must be at least 1");
        if (static_cast<std::size_t>(_tau[v]) > g.degree(static_cast<Vertex>(v)))
            _within_degree = false;
    }
}

auto ThresholdAssignment::min() const noexcept -> int
{
    return _tau.empty() ? 0 : *std::min_element(_tau.begin(), _tau.end());
}

auto ThresholdAssignment::max() const noexcept -> int
{
    return _tau.empty() ? 0 : *std::max_element(_tau.begin(), _tau.end());
}

auto ThresholdAssignment::is_constant(int c) const noexcept -> bool
{
    return std::all_of(_tau.begin(), _tau.end(), [c](int x) { return x == c; });
}

auto strict_majority(const Graph & g) -> ThresholdAssignment
{
    std::vector<int> tau(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        auto d = static_cast<int>(g.degree(static_cast<Vertex>(v)));
        tau[v] = (d + 2) / 2;
    }
    return {g, std::move(tau), ThresholdRule::strict_majority};
}

auto simple_majority(const Graph & g) -> ThresholdAssignment
{
    std::vector<int> tau(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        auto d = static_cast<int>(g.degree(static_cast<Vertex>(v)));
        tau[v] = std::max(1, (d + 1) / 2);
    }
    return {g, std::move(tau), ThresholdRule::simple_majority};
}

auto constant_threshold(const Graph & g, int c) -> ThresholdAssignment
{
    if (c < 1)
        throw InvalidParameter("constant threshold must be at least 1, got " + std::to_string(c));
    return {g, std::vector<int>(g.order(), c), ThresholdRule::constant};
}

auto explicit_threshold(const Graph & g, std::vector<int> tau) -> ThresholdAssignment
{
    return {g, std::move(tau), ThresholdRule::explicit_list};
}

auto is_strict_majority(const Graph & g, const ThresholdAssignment & tau) -> bool
{
    if (tau.size() != g.order())
        return false;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (tau[static_cast<Vertex>(v)] != (static_cast<int>(g.degree(static_cast<Vertex>(v))) + 2) / 2)
            return false;
    return true;
}

}
