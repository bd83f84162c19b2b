#include <wdm/bounds.hpp>
#include <wdm/errors.hpp>
#include <wdm/metrics.hpp>

#include <algorithm>
#include <sstream>

namespace wdm {

namespace
{
    auto power(Rational base, long exponent) -> Rational
    {
        Rational result = 1;
        for (long i = 0; i < exponent; ++i)
            result *= base;
        return result;
    }

    auto power(BigInt base, long exponent) -> BigInt
    {
        BigInt result = 1;
        for (long i = 0; i < exponent; ++i)
            result *= base;
        return result;
    }

    auto require_positive(long value, const char * name) -> void
    {
        if (value < 1)
            throw InvalidParameter(std::string(name) + " must be positive, got " + std::to_string(value));
    }

    auto make_entry(std::string_view name, BoundDirection direction) -> BoundEntry
    {
        BoundEntry e;
        e.name = std::string(name);
        e.direction = direction;
        return e;
    }

    // Time-parametrised size bounds are evaluated at t_min (strongest) and
    // t_max (weakest). Without a known range, t = n - 1 bounds every partition
    // that leaves a vertex outside the seed, and the value decreases in t.
    auto time_points(std::size_t n, const std::optional<TimeRange> & time) -> std::vector<long>
    {
        if (time) {
            if (time->t_min == time->t_max)
                return {static_cast<long>(time->t_min)};
            return {static_cast<long>(time->t_min), static_cast<long>(time->t_max)};
        }
        return {std::max<long>(1, static_cast<long>(n) - 1)};
    }

    auto compare(BoundEntry & e, const Rational & exact_value) -> void
    {
        switch (e.direction) {
        case BoundDirection::lower_size:
        case BoundDirection::lower_order: e.satisfied = exact_value >= e.value; break;
        case BoundDirection::upper_size:
        case BoundDirection::upper_time: e.satisfied = exact_value <= e.value; break;
        }
        e.tight = Rational(e.rounded()) == exact_value;
    }
}

auto ceil_of(const Rational & q) -> BigInt
{
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt quotient = num / den;
    if (num % den != 0 && num > 0)
        quotient += 1;
    return quotient;
}

auto floor_of(const Rational & q) -> BigInt
{
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt quotient = num / den;
    if (num % den != 0 && num < 0)
        quotient -= 1;
    return quotient;
}

auto to_string(const Rational & q) -> std::string
{
    std::ostringstream out;
    out << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1)
        out << "/" << boost::multiprecision::denominator(q);
    return out.str();
}

auto to_string(BoundDirection d) -> std::string_view
{
    switch (d) {
    case BoundDirection::lower_size: return "lower-size";
    case BoundDirection::upper_size: return "upper-size";
    case BoundDirection::upper_time: return "upper-time";
    case BoundDirection::lower_order: return "lower-order";
    }
    return "lower-size";
}

auto lower_bound_odd(long n, long r, long t) -> Rational
{
    require_positive(n, "n");
    require_positive(r, "r");
    if (t < 0)
        throw InvalidParameter("t must be non-negative");
    Rational denominator = Rational(2 * r + 2) - Rational(2 * r + 1) * power(Rational(r, r + 1), t);
    return Rational(n) / denominator;
}

auto lower_bound_even_regular(long n, long r, long t, EvenRegularVariant variant) -> Rational
{
    require_positive(n, "n");
    require_positive(r, "r");
    if (t < 0)
        throw InvalidParameter("t must be non-negative");
    if (variant == EvenRegularVariant::tau_r)
        return Rational(n, 1 + 2 * t);
    Rational shrink = power(Rational(r - 1, r + 1), t);
    return Rational(n) / (Rational(1) + Rational(r) * (Rational(1) - shrink));
}

auto lower_bound_even_girth(long t_m, long k) -> BigInt
{
    if (t_m < 3)
        throw InapplicableBound("even-girth bound needs minimum threshold >= 3, got " + std::to_string(t_m));
    if (k < 3)
        throw InapplicableBound("even-girth bound needs even girth 2k + 2 with k >= 3, got k = " + std::to_string(k));
    return power(BigInt(t_m - 1), k / 2 + 1);
}

auto order_bound_even_girth(long t_m, long k) -> Rational
{
    lower_bound_even_girth(t_m, k);
    Rational tail = Rational(power(BigInt(t_m - 1), k) - 1);
    return Rational(1) + Rational(t_m + 1, t_m - 2) * tail + Rational(t_m * (t_m - 2));
}

auto BoundEntry::rounded() const -> BigInt
{
    switch (direction) {
    case BoundDirection::lower_size:
    case BoundDirection::lower_order: return ceil_of(value);
    case BoundDirection::upper_size:
    case BoundDirection::upper_time: return floor_of(value);
    }
    return floor_of(value);
}

auto BoundReport::find(std::string_view name) const -> const BoundEntry *
{
    for (const auto & e : entries)
        if (e.name == name)
            return &e;
    return nullptr;
}

auto BoundReport::find_all(std::string_view name) const -> std::vector<const BoundEntry *>
{
    std::vector<const BoundEntry *> out;
    for (const auto & e : entries)
        if (e.name == name)
            out.push_back(&e);
    return out;
}

auto BoundReport::violations() const -> std::vector<const BoundEntry *>
{
    std::vector<const BoundEntry *> out;
    for (const auto & e : entries)
        if (e.applicable && e.satisfied && ! *e.satisfied)
            out.push_back(&e);
    return out;
}

auto time_bounds(const Graph & g, const ThresholdAssignment & tau, std::optional<std::size_t> seed_size,
    std::optional<TimeRange> time, const AuditOptions & options) -> BoundReport
{
    BoundReport report;
    auto n = static_cast<long>(g.order());
    auto k = static_cast<long>(tau.min());
    auto t_max = time ? std::optional<Rational>(Rational(static_cast<long>(time->t_max))) : std::nullopt;

    {
        auto e = make_entry(bound_matching_time, BoundDirection::upper_time);
        e.applicable = k >= 1;
        if (e.applicable) {
            auto alpha = static_cast<long>(matching_number(g));
            e.value = Rational(2 * alpha, k) + 2;
            e.notes.push_back("k = min tau = " + std::to_string(k) + ", matching number " + std::to_string(alpha));
            if (t_max)
                compare(e, *t_max);
        }
        else
            e.notes.push_back("empty graph");
        report.entries.push_back(std::move(e));
    }

    std::optional<long> longest;
    if (g.order() <= std::min(options.path_cap, longest_path_hard_limit))
        longest = static_cast<long>(longest_path_length(g, options.path_cap));

    {
        auto e = make_entry(bound_longest_path_time, BoundDirection::upper_time);
        e.applicable = k >= 2 && longest.has_value();
        if (k < 2)
            e.notes.push_back("needs tau(v) >= 2 everywhere");
        if (! longest)
            e.notes.push_back("order above longest-path cap " + std::to_string(options.path_cap));
        if (e.applicable) {
            e.value = Rational(*longest, 2);
            e.notes.push_back("longest path " + std::to_string(*longest));
            if (t_max)
                compare(e, *t_max);
        }
        report.entries.push_back(std::move(e));
    }

    {
        auto e = make_entry(bound_longest_path_strict_time, BoundDirection::upper_time);
        bool strict = is_strict_majority(g, tau);
        e.applicable = strict && longest.has_value();
        if (! strict)
            e.notes.push_back("needs strict-majority thresholds");
        if (! longest)
            e.notes.push_back("order above longest-path cap " + std::to_string(options.path_cap));
        if (e.applicable) {
            e.value = Rational(*longest + 2, 2);
            e.notes.push_back("longest path " + std::to_string(*longest));
            if (t_max)
                compare(e, *t_max);
        }
        report.entries.push_back(std::move(e));
    }

    {
        auto delta = static_cast<long>(g.max_degree());
        long cap = options.degree_bound.value_or(std::max<long>(delta, 2));
        std::vector<std::string> failed;
        if (options.degree_unbounded)
            failed.push_back("maximum degree grows with the family; no constant degree cap");
        else if (delta > cap)
            failed.push_back("Delta = " + std::to_string(delta) + " exceeds the degree cap " + std::to_string(cap));
        if (cap < 2)
            failed.push_back("degree cap must be at least 2");
        for (auto t : time_points(g.order(), time)) {
            auto e = make_entry(bound_degree_growth, BoundDirection::lower_size);
            e.applicable = failed.empty() && n > 0;
            e.notes = failed;
            if (e.applicable) {
                e.at_time = t;
                e.value = Rational(BigInt(n), power(BigInt(cap), t + 1));
                e.notes.push_back("k = " + std::to_string(cap) + ", n <= k^(t+1)|D|");
                if (seed_size && time)
                    compare(e, Rational(static_cast<long>(*seed_size)));
            }
            report.entries.push_back(std::move(e));
            if (! failed.empty())
                break;
        }
    }
    return report;
}

auto audit(const Graph & g, const ThresholdAssignment & tau, const std::optional<ExactQuantities> & exact,
    const AuditOptions & options) -> BoundReport
{
    if (tau.size() != g.order())
        throw PreconditionError("threshold assignment does not match the graph order");
    BoundReport report;
    auto n = static_cast<long>(g.order());
    auto delta = static_cast<long>(g.max_degree());
    auto wdyn = exact ? std::optional<Rational>(Rational(static_cast<long>(exact->wdyn))) : std::nullopt;
    auto time = exact ? exact->time : std::nullopt;

    {
        auto e = make_entry(bound_strict_majority_upper, BoundDirection::upper_size);
        bool strict = is_strict_majority(g, tau);
        bool no_isolated = g.min_degree() >= 1;
        e.applicable = strict && no_isolated && n > 0;
        if (! strict)
            e.notes.push_back("needs strict-majority thresholds");
        if (! no_isolated)
            e.notes.push_back("isolated vertices are forced seeds");
        e.value = Rational(2 * n, 3);
        if (e.applicable && wdyn)
            compare(e, *wdyn);
        report.entries.push_back(std::move(e));
    }

    {
        auto e = make_entry(bound_cubic_lower, BoundDirection::lower_size);
        bool cubic = n > 0 && g.is_regular(3);
        bool two = tau.is_constant(2);
        e.applicable = cubic && two;
        if (! cubic)
            e.notes.push_back("needs a cubic graph");
        if (! two)
            e.notes.push_back("needs tau = 2 everywhere");
        e.value = Rational(n + 2, 4);
        if (e.applicable && wdyn)
            compare(e, *wdyn);
        report.entries.push_back(std::move(e));
    }

    {
        // smallest r >= 1 with Delta <= 2r + 1 gives the strongest instance
        long r = std::max<long>(1, delta / 2);
        std::vector<std::string> failed;
        if (tau.min() < r + 1)
            failed.push_back("needs tau(v) >= r + 1 = " + std::to_string(r + 1) + " with Delta = " + std::to_string(delta));
        if (n == 0)
            failed.push_back("empty graph");
        for (auto t : time_points(g.order(), time)) {
            auto e = make_entry(bound_odd_degree_lower, BoundDirection::lower_size);
            e.applicable = failed.empty();
            e.notes = failed;
            if (e.applicable) {
                e.at_time = t;
                e.value = lower_bound_odd(n, r, t);
                e.notes.push_back("r = " + std::to_string(r));
                if (wdyn && time)
                    compare(e, *wdyn);
            }
            report.entries.push_back(std::move(e));
            if (! failed.empty())
                break;
        }
    }

    {
        std::vector<std::string> failed;
        long r = 0;
        std::optional<EvenRegularVariant> variant;
        if (n == 0 || delta == 0 || delta % 2 != 0 || ! g.is_regular(static_cast<std::size_t>(delta)))
            failed.push_back("needs a 2r-regular graph with r >= 1");
        else {
            r = delta / 2;
            if (tau.is_constant(static_cast<int>(r + 1)))
                variant = EvenRegularVariant::tau_r_plus_1;
            else if (tau.is_constant(static_cast<int>(r)))
                variant = EvenRegularVariant::tau_r;
            else
                failed.push_back("needs tau = r + 1 or tau = r everywhere, r = " + std::to_string(r));
        }
        for (auto t : time_points(g.order(), time)) {
            auto e = make_entry(bound_even_regular_lower, BoundDirection::lower_size);
            e.applicable = failed.empty();
            e.notes = failed;
            if (e.applicable) {
                e.at_time = t;
                e.value = lower_bound_even_regular(n, r, t, *variant);
                e.notes.push_back(std::string("r = ") + std::to_string(r)
                    + (*variant == EvenRegularVariant::tau_r_plus_1 ? ", tau = r + 1" : ", tau = r"));
                if (wdyn && time)
                    compare(e, *wdyn);
            }
            report.entries.push_back(std::move(e));
            if (! failed.empty())
                break;
        }
    }

    {
        auto e = make_entry(bound_even_girth_lower, BoundDirection::lower_size);
        auto order = make_entry(bound_even_girth_order, BoundDirection::lower_order);
        std::vector<std::string> failed;
        auto eg = even_girth(g);
        long k = 0;
        if (! eg)
            failed.push_back("no even cycle");
        else {
            k = (static_cast<long>(*eg) - 2) / 2;
            if (k < 3)
                failed.push_back("even girth " + std::to_string(*eg) + " gives k = " + std::to_string(k) + " < 3");
        }
        bool strictly_inside = true;
        for (std::size_t v = 0; v < g.order(); ++v)
            if (static_cast<std::size_t>(tau[static_cast<Vertex>(v)]) >= g.degree(static_cast<Vertex>(v)))
                strictly_inside = false;
        if (! strictly_inside)
            failed.push_back("needs 0 < tau(v) < deg(v) everywhere");
        if (tau.min() < 3)
            failed.push_back("needs minimum threshold t_m >= 3, got " + std::to_string(tau.min()));

        e.applicable = failed.empty();
        order.applicable = failed.empty();
        e.notes = failed;
        order.notes = failed;
        if (e.applicable) {
            e.value = Rational(lower_bound_even_girth(tau.min(), k));
            order.value = order_bound_even_girth(tau.min(), k);
            if (wdyn)
                compare(e, *wdyn);
            compare(order, Rational(n));
        }
        report.entries.push_back(std::move(e));
        report.entries.push_back(std::move(order));
    }

    auto times = time_bounds(g, tau, exact ? std::optional<std::size_t>(exact->wdyn) : std::nullopt, time, options);
    for (auto & e : times.entries)
        report.entries.push_back(std::move(e));

    if (auto bad = report.violations(); ! bad.empty() && options.throw_on_violation) {
        std::string names;
        for (auto * e : bad)
            names += (names.empty() ? "" : ", ") + e->name;
        throw BoundViolation("applicable bound violated by exact values: " + names);
    }
    return report;
}

}
