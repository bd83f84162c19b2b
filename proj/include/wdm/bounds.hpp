#pragma once

#include <wdm/cascade.hpp>
#include <wdm/graph.hpp>
#include <wdm/solvers.hpp>
#include <wdm/threshold.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wdm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

auto ceil_of(const Rational & q) -> BigInt;
auto floor_of(const Rational & q) -> BigInt;
auto to_string(const Rational & q) -> std::string;

/// n / (2r + 2 - (2r + 1)(r / (r + 1))^t): lower bound on |D| when
/// Delta <= 2r + 1 and tau >= r + 1 everywhere.
auto lower_bound_odd(long n, long r, long t) -> Rational;

enum class EvenRegularVariant
{
    tau_r_plus_1,  ///< n / (1 + r(1 - ((r - 1)/(r + 1))^t))
    tau_r          ///< n / (1 + 2t)
};

auto lower_bound_even_regular(long n, long r, long t, EvenRegularVariant variant) -> Rational;

/// (t_m - 1)^(floor(k/2) + 1). Throws InapplicableBound for t_m < 3 or k < 3.
auto lower_bound_even_girth(long t_m, long k) -> BigInt;

/// 1 + ((t_m + 1)/(t_m - 2))((t_m - 1)^k - 1) + t_m(t_m - 2): the order bound
/// the even-girth argument passes through. Same hypotheses as above.
auto order_bound_even_girth(long t_m, long k) -> Rational;

enum class BoundDirection
{
    lower_size,
    upper_size,
    upper_time,
    lower_order
};

auto to_string(BoundDirection d) -> std::string_view;

struct BoundEntry
{
    std::string name;
    bool applicable = false;
    std::vector<std::string> notes;  ///< failed hypotheses, or how the value was instantiated
    Rational value = 0;
    BoundDirection direction = BoundDirection::lower_size;
    std::optional<long> at_time;      ///< processing time the value was evaluated at
    std::optional<bool> satisfied;    ///< set only when an exact quantity was compared
    std::optional<bool> tight;        ///< the rounded value equals the exact quantity

    /// ceil for lower bounds, floor for upper bounds.
    auto rounded() const -> BigInt;
};

struct BoundReport
{
    std::vector<BoundEntry> entries;

    auto find(std::string_view name) const -> const BoundEntry *;
    auto find_all(std::string_view name) const -> std::vector<const BoundEntry *>;
    auto violations() const -> std::vector<const BoundEntry *>;
};

struct ExactQuantities
{
    std::size_t wdyn = 0;
    std::optional<TimeRange> time;  ///< processing-time range of the witness seed
};

struct AuditOptions
{
    /// Degree cap k of the family the graph belongs to. Absent: take
    /// max(Delta, 2), the graph's own cap.
    std::optional<long> degree_bound;
    /// The family's maximum degree grows without bound (join constructions).
    bool degree_unbounded = false;
    std::size_t path_cap = 20;
    /// Throw BoundViolation from audit(); off to inspect a failing report.
    bool throw_on_violation = true;
};

/// Processing-time bounds for one (G, tau). When seed_size and t are given,
/// the size-versus-time inequality n <= k^(t+1)|D| is added.
auto time_bounds(const Graph & g, const ThresholdAssignment & tau, std::optional<std::size_t> seed_size = std::nullopt,
    std::optional<TimeRange> time = std::nullopt, const AuditOptions & options = {}) -> BoundReport;

/// Every size and time bound with its hypotheses checked. With exact
/// quantities, sets `satisfied`; an applicable bound that fails throws
/// BoundViolation.
auto audit(const Graph & g, const ThresholdAssignment & tau, const std::optional<ExactQuantities> & exact = std::nullopt,
    const AuditOptions & options = {}) -> BoundReport;

// Entry names.
inline constexpr std::string_view bound_strict_majority_upper = "strict_majority_upper";
inline constexpr std::string_view bound_cubic_lower = "cubic_lower";
inline constexpr std::string_view bound_odd_degree_lower = "odd_max_degree_lower";
inline constexpr std::string_view bound_even_regular_lower = "even_regular_lower";
inline constexpr std::string_view bound_even_girth_lower = "even_girth_lower";
inline constexpr std::string_view bound_even_girth_order = "even_girth_order";
inline constexpr std::string_view bound_matching_time = "matching_time";
inline constexpr std::string_view bound_longest_path_time = "longest_path_time";
inline constexpr std::string_view bound_longest_path_strict_time = "longest_path_strict_time";
inline constexpr std::string_view bound_degree_growth = "degree_growth_lower";

}
