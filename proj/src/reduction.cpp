#include <wdm/errors.hpp>
#include <wdm/reduction.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace wdm {

namespace
{
    auto check_groups(const std::vector<int> & group, std::size_t begin, std::size_t end, const char * side)
        -> std::size_t
    {
        if (begin == end)
            throw InvalidParameter(std::string("side ") + side + " is empty");
        std::map<int, std::size_t> sizes;
        for (std::size_t x = begin; x < end; ++x) {
            if (group[x] < 0)
                throw InvalidParameter("vertex " + std::to_string(x) + " has a negative group");
            ++sizes[group[x]];
        }
        auto count = sizes.size();
        if (sizes.rbegin()->first != static_cast<int>(count) - 1)
            throw InvalidParameter(std::string("groups on side ") + side + " must be numbered 0.."
                + std::to_string(count - 1));
        auto each = (end - begin) / count;
        for (const auto & [g, s] : sizes)
            if (s != each || each * count != end - begin)
                throw InvalidParameter(std::string("groups on side ") + side + " must have equal sizes");
        return count;
    }

    auto pow_n(std::size_t n, int e) -> BigInt
    {
        return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(e));
    }

    auto to_int(const BigInt & x, const char * what) -> int
    {
        if (x > std::numeric_limits<int>::max())
            throw CapabilityError(std::string(what) + " does not fit a threshold", std::numeric_limits<int>::max(), 0);
        return x.convert_to<int>();
    }

    auto to_size(const BigInt & x) -> std::size_t
    {
        return x.convert_to<std::size_t>();
    }

    auto super_index(const std::vector<SuperEdge> & supers, SuperEdge s) -> std::size_t
    {
        return static_cast<std::size_t>(std::lower_bound(supers.begin(), supers.end(), s) - supers.begin());
    }

    auto steps_of(const std::vector<int> & label, const VertexSet & members) -> ClassSteps
    {
        ClassSteps s;
        for (auto x : members) {
            auto l = label[static_cast<std::size_t>(x)];
            if (l < 0)
                continue;
            auto step = static_cast<std::size_t>(l);
            s.first = std::min(s.first.value_or(step), step);
            s.last = std::max(s.last.value_or(step), step);
        }
        return s;
    }
}

MinRepInstance::MinRepInstance(std::size_t a_count, std::size_t b_count, std::vector<Edge> edges,
    std::vector<int> group) :
    _a(a_count),
    _b(b_count),
    _group(std::move(group))
{
    if (_group.size() != _a + _b)
        throw InvalidParameter("group list has " + std::to_string(_group.size()) + " entries, expected "
            + std::to_string(_a + _b));
    _alpha = check_groups(_group, 0, _a, "A");
    _beta = check_groups(_group, _a, _a + _b, "B");
    for (auto e : edges) {
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u < 0 || static_cast<std::size_t>(e.v) >= _a + _b)
            throw InvalidParameter("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") out of range");
        if (! in_a(e.u) || in_a(e.v))
            throw InvalidParameter("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v)
                + ") does not join A to B");
        _edges.push_back(e);
    }
    std::sort(_edges.begin(), _edges.end());
    if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
        throw InvalidParameter("duplicate MINREP edge");
}

auto build_supergraph(const MinRepInstance & inst) -> std::vector<SuperEdge>
{
    std::vector<SuperEdge> out;
    for (const auto & e : inst.edges())
        out.push_back({inst.group(e.u), inst.group(e.v)});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto verify_minrep(const MinRepInstance & inst, const VertexSet & reps) -> bool
{
    std::vector<char> chosen(inst.order(), 0);
    for (auto x : reps) {
        if (x < 0 || static_cast<std::size_t>(x) >= inst.order())
            throw InvalidParameter("representative " + std::to_string(x) + " out of range");
        chosen[static_cast<std::size_t>(x)] = 1;
    }
    auto supers = build_supergraph(inst);
    std::vector<char> covered(supers.size(), 0);
    for (const auto & e : inst.edges())
        if (chosen[static_cast<std::size_t>(e.u)] && chosen[static_cast<std::size_t>(e.v)])
            covered[super_index(supers, {inst.group(e.u), inst.group(e.v)})] = 1;
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

auto solve_minrep_bruteforce(const MinRepInstance & inst) -> VertexSet
{
    auto n = inst.order();
    if (n > minrep_bruteforce_cap)
        throw CapabilityError("MINREP brute force", minrep_bruteforce_cap, n);
    std::optional<VertexSet> best;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        VertexSet reps;
        for (std::size_t x = 0; x < n; ++x)
            if (mask >> x & 1)
                reps.push_back(static_cast<Vertex>(x));
        if (best && (reps.size() > best->size() || (reps.size() == best->size() && reps >= *best)))
            continue;
        if (verify_minrep(inst, reps))
            best = std::move(reps);
    }
    if (! best)
        throw Error("MINREP instance has no cover");
    return *best;
}

auto build_gadget(std::size_t k, Vertex u, Vertex w, Vertex next_id, std::vector<Edge> & edges) -> Gadget
{
    if (k < 1)
        throw InvalidParameter("gadget size must be at least 1");
    if (u == w)
        throw InvalidParameter("gadget endpoints must differ");
    Gadget g{u, w, k, next_id};
    for (std::size_t i = 0; i < k; ++i) {
        edges.push_back({u, g.internal(i)});
        edges.push_back({w, g.internal(i)});
    }
    return g;
}

auto to_string(VertexClass c) -> std::string_view
{
    switch (c) {
    case VertexClass::v1: return "V1";
    case VertexClass::v2: return "V2";
    case VertexClass::v3: return "V3";
    case VertexClass::v4: return "V4";
    case VertexClass::v5: return "V5";
    case VertexClass::internal: return "gadget";
    }
    return "gadget";
}

auto projected_order(const MinRepInstance & inst, const GadgetExponents & x) -> BigInt
{
    auto n = inst.order();
    BigInt e = inst.edges().size();
    BigInt m = build_supergraph(inst).size();
    BigInt main = BigInt(n) * 3 + e + m;
    BigInt internal = e * 2 * pow_n(n, x.v2_v1) + e * pow_n(n, x.v2_v3) + m * n * pow_n(n, x.v3_v4)
        + BigInt(n) * n * pow_n(n, x.v1_v4) + e * n * 2 * pow_n(n, x.v2_v5) + m * n * 2 * pow_n(n, x.v3_v5);
    return main + internal;
}

auto reduce_to_wdm(const MinRepInstance & inst, const ReduceOptions & options) -> ReducedInstance
{
    auto n = inst.order();
    const auto & x = options.exponents;
    if (n > options.size_guard) {
        auto projected = projected_order(inst, x);
        throw CapabilityError("reduction with projected order " + projected.str(), options.size_guard, n);
    }
    if (inst.edges().empty())
        throw InvalidParameter("reduction needs at least one MINREP edge");
    for (int e : {x.v2_v1, x.v2_v3, x.v3_v4, x.v1_v4, x.v2_v5, x.v3_v5})
        if (e < 0)
            throw InvalidParameter("gadget exponents must be non-negative");
    auto projected = projected_order(inst, x);
    if (projected > std::numeric_limits<Vertex>::max())
        throw CapabilityError("reduction order " + projected.str(), static_cast<std::size_t>(std::numeric_limits<Vertex>::max()),
            to_size(projected));

    ReducedInstance red;
    auto supers = build_supergraph(inst);
    red.n = n;
    red.m = supers.size();
    red.exponents = x;
    red.scaled = x != GadgetExponents{};
    red.v2_pairs = inst.edges();
    red.v3_pairs = supers;

    Vertex next = 0;
    auto take = [&](VertexSet & into, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i)
            into.push_back(next++);
    };
    take(red.v1, n);
    take(red.v2, inst.edges().size());
    take(red.v3, red.m);
    take(red.v4, n);
    take(red.v5, n);

    std::vector<Edge> edges;
    auto wire = [&](const BigInt & k, Vertex u, Vertex w) {
        auto g = build_gadget(to_size(k), u, w, next, edges);
        next += static_cast<Vertex>(g.k);
        red.gadgets.push_back(g);
    };
    for (std::size_t e = 0; e < red.v2.size(); ++e) {
        wire(pow_n(n, x.v2_v1), red.v2[e], red.v2_pairs[e].u);
        wire(pow_n(n, x.v2_v1), red.v2[e], red.v2_pairs[e].v);
    }
    for (std::size_t e = 0; e < red.v2.size(); ++e) {
        const auto & p = red.v2_pairs[e];
        wire(pow_n(n, x.v2_v3), red.v2[e], red.v3[super_index(supers, {inst.group(p.u), inst.group(p.v)})]);
    }
    for (auto v : red.v3)
        for (auto w : red.v4)
            wire(pow_n(n, x.v3_v4), v, w);
    for (auto a : red.v1)
        for (auto w : red.v4)
            wire(pow_n(n, x.v1_v4), a, w);
    for (auto u : red.v2)
        for (auto z : red.v5)
            wire(2 * pow_n(n, x.v2_v5), u, z);
    for (auto v : red.v3)
        for (auto z : red.v5)
            wire(2 * pow_n(n, x.v3_v5), v, z);

    auto order = static_cast<std::size_t>(next);
    red.cls.assign(order, VertexClass::internal);
    std::vector<int> tau(order, 1);
    auto mark = [&](const VertexSet & members, VertexClass c, const BigInt & threshold, const char * what) {
        auto value = to_int(threshold, what);
        for (auto v : members) {
            red.cls[static_cast<std::size_t>(v)] = c;
            tau[static_cast<std::size_t>(v)] = value;
        }
    };
    mark(red.v1, VertexClass::v1, n * pow_n(n, x.v1_v4), "V1 threshold");
    mark(red.v2, VertexClass::v2, 2 * pow_n(n, x.v2_v1), "V2 threshold");
    mark(red.v3, VertexClass::v3, pow_n(n, x.v2_v3), "V3 threshold");
    mark(red.v4, VertexClass::v4, red.m * pow_n(n, x.v3_v4), "V4 threshold");
    mark(red.v5, VertexClass::v5, 2 * red.m * pow_n(n, x.v3_v5), "V5 threshold");

    red.graph = Graph(order, edges);
    red.tau = explicit_threshold(red.graph, std::move(tau));
    red.proof_properties = BigInt(red.v2.size()) * pow_n(n, x.v2_v5) < pow_n(n, x.v3_v5);
    return red;
}

auto audit_reduction(const MinRepInstance & inst, const ReducedInstance & red) -> ReductionAudit
{
    ReductionAudit audit;
    auto fail = [&](std::string why) {
        audit.ok = false;
        audit.failures.push_back(std::move(why));
    };
    auto n = inst.order();
    auto supers = build_supergraph(inst);
    BigInt m = supers.size();
    BigInt e_count = inst.edges().size();
    const auto & x = red.exponents;
    const auto & g = red.graph;

    if (red.v1.size() != n)
        fail("|V1| = " + std::to_string(red.v1.size()) + ", expected N = " + std::to_string(n));
    if (red.v2.size() != inst.edges().size())
        fail("|V2| differs from |E|");
    if (red.v3.size() != supers.size())
        fail("|V3| differs from M");
    if (red.v4.size() != n || red.v5.size() != n)
        fail("|V4| or |V5| differs from N");
    if (red.v2_pairs != inst.edges() || red.v3_pairs != supers)
        fail("back-references do not match the instance");
    if (BigInt(g.order()) != projected_order(inst, x))
        fail("order " + std::to_string(g.order()) + " differs from the closed-form count " + projected_order(inst, x).str());
    if (! audit.ok)
        return audit;

    auto check_tau = [&](const VertexSet & members, const BigInt & expected, const char * name) {
        for (auto v : members)
            if (BigInt(red.tau[v]) != expected) {
                fail(std::string(name) + " vertex " + std::to_string(v) + " has threshold " + std::to_string(red.tau[v])
                    + ", expected " + expected.str());
                return;
            }
    };
    check_tau(red.v1, n * pow_n(n, x.v1_v4), "V1");
    check_tau(red.v2, 2 * pow_n(n, x.v2_v1), "V2");
    check_tau(red.v3, pow_n(n, x.v2_v3), "V3");
    check_tau(red.v4, m * pow_n(n, x.v3_v4), "V4");
    check_tau(red.v5, 2 * m * pow_n(n, x.v3_v5), "V5");

    // gadget shape, and the per-class coupling each main vertex receives
    std::vector<std::map<VertexClass, BigInt>> coupling(g.order());
    std::vector<BigInt> gadget_degree(g.order());
    std::size_t internal_total = 0;
    for (const auto & gd : red.gadgets) {
        for (std::size_t i = 0; i < gd.k; ++i) {
            auto v = gd.internal(i);
            auto nb = g.neighbors(v);
            if (red.class_of(v) != VertexClass::internal || red.tau[v] != 1 || nb.size() != 2
                || ! ((nb[0] == gd.u && nb[1] == gd.w) || (nb[0] == gd.w && nb[1] == gd.u))) {
                fail("gadget internal " + std::to_string(v) + " is not a threshold-1 degree-2 vertex on its endpoints");
                return audit;
            }
        }
        internal_total += gd.k;
        coupling[static_cast<std::size_t>(gd.u)][red.class_of(gd.w)] += gd.k;
        coupling[static_cast<std::size_t>(gd.w)][red.class_of(gd.u)] += gd.k;
        gadget_degree[static_cast<std::size_t>(gd.u)] += gd.k;
        gadget_degree[static_cast<std::size_t>(gd.w)] += gd.k;
    }
    auto main_count = 3 * n + red.v2.size() + red.v3.size();
    if (internal_total + main_count != g.order())
        fail("gadget registry does not account for every vertex");

    std::vector<std::size_t> edge_degree(n, 0);
    std::vector<std::size_t> super_size(supers.size(), 0);
    for (const auto & e : inst.edges()) {
        ++edge_degree[static_cast<std::size_t>(e.u)];
        ++edge_degree[static_cast<std::size_t>(e.v)];
        ++super_size[super_index(supers, {inst.group(e.u), inst.group(e.v)})];
    }

    using Expect = std::map<VertexClass, BigInt>;
    auto check_vertex = [&](Vertex v, const Expect & expected) {
        auto & got = coupling[static_cast<std::size_t>(v)];
        std::erase_if(got, [](const auto & kv) { return kv.second == 0; });
        Expect want = expected;
        std::erase_if(want, [](const auto & kv) { return kv.second == 0; });
        if (got != want) {
            fail(std::string(to_string(red.class_of(v))) + " vertex " + std::to_string(v) + " has wrong gadget degrees");
            return;
        }
        if (BigInt(g.degree(v)) != gadget_degree[static_cast<std::size_t>(v)])
            fail("vertex " + std::to_string(v) + " has edges outside its gadgets");
    };
    for (auto a : red.v1)
        check_vertex(a, {{VertexClass::v2, edge_degree[static_cast<std::size_t>(a)] * pow_n(n, x.v2_v1)},
                            {VertexClass::v4, n * pow_n(n, x.v1_v4)}});
    for (auto u : red.v2)
        check_vertex(u, {{VertexClass::v1, 2 * pow_n(n, x.v2_v1)}, {VertexClass::v3, pow_n(n, x.v2_v3)},
                            {VertexClass::v5, n * 2 * pow_n(n, x.v2_v5)}});
    for (std::size_t s = 0; s < red.v3.size(); ++s)
        check_vertex(red.v3[s], {{VertexClass::v2, super_size[s] * pow_n(n, x.v2_v3)},
                                    {VertexClass::v4, n * pow_n(n, x.v3_v4)}, {VertexClass::v5, n * 2 * pow_n(n, x.v3_v5)}});
    for (auto w : red.v4)
        check_vertex(w, {{VertexClass::v3, m * pow_n(n, x.v3_v4)}, {VertexClass::v1, n * pow_n(n, x.v1_v4)}});
    for (auto z : red.v5)
        check_vertex(z, {{VertexClass::v2, e_count * 2 * pow_n(n, x.v2_v5)}, {VertexClass::v3, m * 2 * pow_n(n, x.v3_v5)}});

    for (auto u : red.v2)
        if (BigInt(red.tau[u]) != coupling[static_cast<std::size_t>(u)][VertexClass::v1])
            fail("V2 vertex " + std::to_string(u) + " threshold differs from its two V1 gadget degrees");

    audit.threshold_gap = 2 * e_count * pow_n(n, x.v2_v5) + 2 * (m - 1) * pow_n(n, x.v3_v5) < 2 * m * pow_n(n, x.v3_v5);
    if (! red.scaled && ! audit.threshold_gap)
        fail("V5 threshold-gap inequality fails");
    if (red.proof_properties != audit.threshold_gap)
        fail("proof-property label disagrees with the threshold gap");
    return audit;
}

auto lift_solution(const MinRepInstance & inst, const ReducedInstance & red, const VertexSet & reps) -> LiftReport
{
    auto clean = make_vertex_set(reps);
    if (clean.empty() || ! verify_minrep(inst, clean))
        throw PreconditionError("representatives do not cover every super-edge");

    LiftReport report;
    report.seed = clean;
    report.outcome = greedy_cascade(red.graph, red.tau, clean);
    auto label = layer_of(report.outcome.partition, red.graph.order());
    report.v1 = steps_of(label, red.v1);
    report.v2 = steps_of(label, red.v2);
    report.v3 = steps_of(label, red.v3);
    report.v4 = steps_of(label, red.v4);
    report.v5 = steps_of(label, red.v5);
    VertexSet internal;
    for (std::size_t v = 0; v < red.cls.size(); ++v)
        if (red.cls[v] == VertexClass::internal)
            internal.push_back(static_cast<Vertex>(v));
    report.internal = steps_of(label, internal);
    report.time = report.outcome.partition.time();
    for (const auto * s : {&report.v1, &report.v2, &report.v3, &report.v4, &report.v5})
        report.main_done = std::max(report.main_done, s->last.value_or(0));

    report.v3_simultaneous = report.outcome.complete && report.v3.first && report.v3.first == report.v3.last;
    if (report.v3_simultaneous)
        for (auto v : red.v3) {
            auto at = label[static_cast<std::size_t>(v)];
            int support = 0;
            for (auto y : red.graph.neighbors(v))
                if (red.class_of(y) == VertexClass::internal && label[static_cast<std::size_t>(y)] == at - 1)
                    ++support;
            if (support < red.tau[v])
                report.v3_simultaneous = false;
        }
    return report;
}

auto extract_solution(const MinRepInstance & inst, const ReducedInstance & red, const VertexSet & d,
    const LayerPartition & partition) -> VertexSet
{
    auto seed = make_vertex_set(d);
    if (partition.layers.empty() || partition.seed() != seed)
        throw PreconditionError("partition D_0 differs from the supplied seed");
    if (auto r = verify_wdm_partition(red.graph, red.tau, partition); ! r)
        throw PreconditionError("supplied partition is not a WDM partition: " + r.reason);
    if (seed.size() > red.n)
        throw NormalFormViolation("seed has " + std::to_string(seed.size()) + " vertices, more than N = "
            + std::to_string(red.n));
    for (auto v : seed)
        if (red.class_of(v) == VertexClass::internal)
            throw NormalFormViolation("seed contains gadget vertex " + std::to_string(v));

    std::set<Vertex> s(seed.begin(), seed.end());
    auto members = [&](VertexClass c) {
        VertexSet out;
        for (auto v : s)
            if (red.class_of(v) == c)
                out.push_back(v);
        return out;
    };
    auto index_in = [](const VertexSet & cls, Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(cls.begin(), cls.end(), v) - cls.begin());
    };

    if (auto w = members(VertexClass::v4); ! w.empty()) {
        if (VertexSet(s.begin(), s.end()) == red.v4)
            s = std::set<Vertex>(red.v1.begin(), red.v1.end());
        else
            for (auto v : w)
                s.erase(v);
    }

    for (auto z : members(VertexClass::v5)) {
        s.erase(z);
        for (const auto & p : red.v2_pairs)
            if (s.contains(p.u) != s.contains(p.v)) {
                s.insert(s.contains(p.u) ? p.v : p.u);
                break;
            }
    }

    for (auto v : members(VertexClass::v3)) {
        s.erase(v);
        auto target = red.v3_pairs[index_in(red.v3, v)];
        for (std::size_t e = 0; e < red.v2_pairs.size(); ++e) {
            const auto & p = red.v2_pairs[e];
            if (inst.group(p.u) == target.i && inst.group(p.v) == target.j) {
                s.insert(red.v2[e]);
                break;
            }
        }
    }

    for (auto u : members(VertexClass::v2)) {
        s.erase(u);
        const auto & p = red.v2_pairs[index_in(red.v2, u)];
        s.insert(p.u);
        s.insert(p.v);
    }

    VertexSet reps(s.begin(), s.end());
    if (reps.size() > 2 * seed.size())
        throw NormalFormViolation("replacement chain produced " + std::to_string(reps.size())
            + " representatives from a seed of " + std::to_string(seed.size()));
    if (! verify_minrep(inst, reps))
        throw NormalFormViolation("replacement chain did not produce a cover");
    return reps;
}

}
