#include <wdm/errors.hpp>
#include <wdm/solvers.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>

namespace wdm {

auto to_string(SeedModel m) -> std::string_view
{
    switch (m) {
    case SeedModel::monopoly: return "mono";
    case SeedModel::dynamic: return "dyn";
    case SeedModel::weak: return "wdm";
    }
    return "wdm";
}

namespace
{
    using Mask = std::uint64_t;

    auto to_set(Mask m) -> VertexSet
    {
        VertexSet out;
        while (m) {
            out.push_back(static_cast<Vertex>(std::countr_zero(m)));
            m &= m - 1;
        }
        return out;
    }

    auto to_mask(const Graph & g, const VertexSet & vs) -> Mask
    {
        Mask m = 0;
        for (auto v : vs) {
            if (! g.contains(v))
                throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
            m |= Mask{1} << v;
        }
        return m;
    }

    // Seed predicate: returns true and may fill the partition for weak seeds.
    using Acceptor = std::function<bool(const VertexSet &, std::optional<LayerPartition> &)>;

    // Branch and bound over in/out decisions in vertex-id order, in-branch first,
    // so the first accepted seed of each size is the lexicographically least.
    //
    // Pruning rules, all valid for monopolies, dynamic monopolies and WDMs:
    //  - tau(v) > deg(v) forces v into the seed;
    //  - a pendant neighbour of v can only support v from the seed (it needs v
    //    active before itself), so v outside the seed needs at least
    //    tau(v) - (deg(v) - #pendants(v)) of its pendants inside.
    class SeedSearch
    {
    public:
        SeedSearch(const Graph & g, const ThresholdAssignment & tau, const SolveOptions & options, Acceptor accept) :
            _g(g),
            _accept(std::move(accept)),
            _n(g.order()),
            _pendants(g.order(), 0),
            _deficit(g.order(), 0)
        {
            if (tau.size() != g.order())
                throw PreconditionError("threshold assignment does not match the graph order");

            bool pruning = false;
            for (std::size_t v = 0; v < _n; ++v) {
                auto vx = static_cast<Vertex>(v);
                _deficit[v] = pendant_deficit(tau, vx);
                if (_deficit[v] > 0)
                    pruning = true;
            }
            auto cap = std::min(pruning ? options.max_vertices_pruned : options.max_vertices, exact_hard_limit);
            if (_n > cap)
                throw CapabilityError("exact minimum seed search", cap, _n);
            _cap = cap;

            for (std::size_t v = 0; v < _n; ++v) {
                auto vx = static_cast<Vertex>(v);
                if (static_cast<std::size_t>(tau[vx]) > g.degree(vx))
                    _forced_in |= Mask{1} << v;
                for (auto w : g.neighbors(vx))
                    if (g.degree(w) == 1)
                        _pendants[v] |= Mask{1} << w;
            }

            _forced_in |= to_mask(g, options.required);
            _forced_out = to_mask(g, options.excluded);
            if (options.vertex_transitive && options.required.empty() && options.excluded.empty() && _n > 0)
                _forced_in |= 1;
        }

        auto cap() const noexcept -> std::size_t { return _cap; }

        auto run(SolveResult & result) -> bool
        {
            if (_forced_in & _forced_out)
                return false;
            auto lower = std::max<std::size_t>(1, static_cast<std::size_t>(std::popcount(_forced_in)));
            for (std::size_t s = lower; s <= _n; ++s) {
                _target = s;
                if (descend(0, 0, 0)) {
                    result.size = s;
                    result.witness = _witness;
                    result.partition = _partition;
                    result.explored = _stats;
                    return true;
                }
            }
            result.explored = _stats;
            return false;
        }

    private:
        auto pendant_deficit(const ThresholdAssignment & tau, Vertex v) const -> int
        {
            int pendants = 0;
            for (auto w : _g.neighbors(v))
                if (_g.degree(w) == 1)
                    ++pendants;
            auto others = static_cast<int>(_g.degree(v)) - pendants;
            return tau[v] - others;
        }

        auto bound_ok(Mask in, Mask out, std::size_t next) const -> bool
        {
            auto chosen = static_cast<std::size_t>(std::popcount(in));
            if (chosen > _target || chosen + (_n - next) < _target)
                return false;
            Mask undecided = ~(in | out) & (_n == 64 ? ~Mask{0} : ((Mask{1} << _n) - 1));
            std::size_t owed = 0;
            for (Mask rest = out; rest; rest &= rest - 1) {
                auto v = static_cast<std::size_t>(std::countr_zero(rest));
                if (_deficit[v] <= 0)
                    continue;
                auto have = std::popcount(_pendants[v] & in);
                auto could = have + std::popcount(_pendants[v] & undecided);
                if (could < _deficit[v])
                    return false;
                owed += static_cast<std::size_t>(std::max(0, _deficit[v] - have));
            }
            return chosen + owed <= _target;
        }

        auto descend(std::size_t next, Mask in, Mask out) -> bool
        {
            ++_stats.nodes;
            if (! bound_ok(in, out, next))
                return false;
            if (next == _n) {
                ++_stats.candidates;
                auto seed = to_set(in);
                std::optional<LayerPartition> partition;
                if (_accept(seed, partition)) {
                    _witness = std::move(seed);
                    _partition = std::move(partition);
                    return true;
                }
                return false;
            }
            Mask bit = Mask{1} << next;
            if (! (_forced_out & bit) && descend(next + 1, in | bit, out))
                return true;
            if (! (_forced_in & bit) && descend(next + 1, in, out | bit))
                return true;
            return false;
        }

        const Graph & _g;
        Acceptor _accept;
        std::size_t _n;
        std::size_t _cap = 0;
        std::size_t _target = 0;
        Mask _forced_in = 0;
        Mask _forced_out = 0;
        std::vector<Mask> _pendants;
        std::vector<int> _deficit;
        SearchStats _stats;
        VertexSet _witness;
        std::optional<LayerPartition> _partition;
    };

    auto solve(const Graph & g, const ThresholdAssignment & tau, const SolveOptions & options, SeedModel kind)
        -> SolveResult
    {
        std::size_t checker_cap = exact_hard_limit;
        Acceptor accept;
        switch (kind) {
        case SeedModel::monopoly:
            accept = [&](const VertexSet & seed, std::optional<LayerPartition> &) { return check_monopoly(g, tau, seed); };
            break;
        case SeedModel::dynamic:
            accept = [&](const VertexSet & seed, std::optional<LayerPartition> &) {
                return check_dynamic_monopoly(g, tau, seed);
            };
            break;
        case SeedModel::weak:
            accept = [&](const VertexSet & seed, std::optional<LayerPartition> & partition) {
                // every WDM is a dynamic monopoly; cheap reject first
                if (! check_dynamic_monopoly(g, tau, seed))
                    return false;
                auto greedy = greedy_cascade(g, tau, seed);
                if (greedy.complete) {
                    partition = std::move(greedy.partition);
                    return true;
                }
                ExactOptions exact;
                exact.max_vertices = checker_cap;
                partition = exact_wdm_partition(g, tau, seed, exact);
                return partition.has_value();
            };
            break;
        }

        SeedSearch search(g, tau, options, accept);
        checker_cap = search.cap();
        SolveResult result;
        result.kind = kind;
        if (! search.run(result))
            throw PreconditionError("no " + std::string(to_string(kind))
                + " seed exists under the required/excluded constraints");
        return result;
    }
}

auto min_wdm(const Graph & g, const ThresholdAssignment & tau, const SolveOptions & options) -> SolveResult
{
    return solve(g, tau, options, SeedModel::weak);
}

auto min_dyn(const Graph & g, const ThresholdAssignment & tau, const SolveOptions & options) -> SolveResult
{
    return solve(g, tau, options, SeedModel::dynamic);
}

auto min_mono(const Graph & g, const ThresholdAssignment & tau, const SolveOptions & options) -> SolveResult
{
    return solve(g, tau, options, SeedModel::monopoly);
}

auto greedy_wdm(const Graph & g, const ThresholdAssignment & tau, const std::optional<VertexSet> & hint) -> SolveResult
{
    if (g.order() == 0)
        throw PreconditionError("empty graph has no seed");
    VertexSet seed = all_vertices(g);
    if (hint && ! hint->empty()) {
        auto clean = make_vertex_set(*hint);
        if (greedy_cascade(g, tau, clean).complete)
            seed = std::move(clean);
    }

    SolveResult result;
    result.kind = SeedModel::weak;
    result.exact = false;
    bool shrunk = true;
    while (shrunk && seed.size() > 1) {
        shrunk = false;
        for (std::size_t i = 0; i < seed.size() && seed.size() > 1;) {
            VertexSet trial = seed;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
            ++result.explored.candidates;
            if (greedy_cascade(g, tau, trial).complete) {
                seed = std::move(trial);
                shrunk = true;
            }
            else
                ++i;
        }
    }
    auto outcome = greedy_cascade(g, tau, seed);
    result.size = seed.size();
    result.witness = std::move(seed);
    result.partition = std::move(outcome.partition);
    return result;
}

}
