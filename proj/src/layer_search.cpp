// Exact WDM partition search: every non-seed vertex carries a 64-bit mask of
// still-possible layer labels; labels without enough possible supporters one
// layer below are pruned to a fixpoint, then the search branches.

#include <wdm/cascade.hpp>
#include <wdm/errors.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace wdm {

namespace
{
    using Mask = std::uint64_t;

    class LayerSearch
    {
    public:
        LayerSearch(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed, std::size_t max_t,
            std::size_t min_top) :
            _g(g),
            _tau(tau),
            _min_top(min_top),
            _domains(g.order(), 0)
        {
            std::vector<char> in_seed(g.order(), 0);
            for (auto v : seed)
                in_seed[v] = 1;
            Mask labels = max_t >= 63 ? ~Mask{1} : ((Mask{1} << (max_t + 1)) - 2);
            for (std::size_t v = 0; v < g.order(); ++v) {
                if (in_seed[v])
                    _domains[v] = 1;
                else {
                    _domains[v] = labels;
                    _free.push_back(static_cast<Vertex>(v));
                }
            }
            // hardest vertices first when domain sizes tie
            std::stable_sort(_free.begin(), _free.end(), [&](Vertex a, Vertex b) { return tau[a] > tau[b]; });
        }

        auto run() -> std::optional<LayerPartition>
        {
            auto domains = _domains;
            if (! propagate(domains) || ! search(domains))
                return std::nullopt;

            LayerPartition p;
            for (std::size_t v = 0; v < _g.order(); ++v) {
                auto label = static_cast<std::size_t>(std::countr_zero(_solution[v]));
                if (p.layers.size() <= label)
                    p.layers.resize(label + 1);
                p.layers[label].push_back(static_cast<Vertex>(v));
            }
            return p;
        }

    private:
        auto propagate(std::vector<Mask> & dom) const -> bool
        {
            std::array<int, 64> count{};
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto v : _free) {
                    Mask here = dom[v];
                    for (auto u : _g.neighbors(v)) {
                        Mask lifted = (dom[u] << 1) & here;
                        while (lifted) {
                            ++count[static_cast<std::size_t>(std::countr_zero(lifted))];
                            lifted &= lifted - 1;
                        }
                    }
                    Mask keep = 0;
                    for (Mask rest = here; rest; rest &= rest - 1) {
                        auto b = static_cast<std::size_t>(std::countr_zero(rest));
                        if (count[b] >= _tau[v])
                            keep |= Mask{1} << b;
                        count[b] = 0;
                    }
                    if (keep != here) {
                        if (keep == 0)
                            return false;
                        dom[v] = keep;
                        changed = true;
                    }
                }
            }
            if (_min_top > 0) {
                Mask all = 0;
                for (auto v : _free)
                    all |= dom[v];
                if ((all >> _min_top) == 0)
                    return false;
            }
            return true;
        }

        auto search(std::vector<Mask> & dom) -> bool
        {
            Vertex pick = -1;
            int best = 65;
            for (auto v : _free) {
                int size = std::popcount(dom[v]);
                if (size > 1 && size < best) {
                    best = size;
                    pick = v;
                }
            }
            if (pick < 0) {
                _solution = dom;
                return true;
            }
            for (Mask rest = dom[pick]; rest; rest &= rest - 1) {
                auto trial = dom;
                trial[pick] = rest & (~rest + 1);
                if (propagate(trial) && search(trial))
                    return true;
            }
            return false;
        }

        const Graph & _g;
        const ThresholdAssignment & _tau;
        std::size_t _min_top;
        std::vector<Mask> _domains;
        std::vector<Vertex> _free;
        std::vector<Mask> _solution;
    };

    auto check_inputs(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed, std::size_t cap) -> void
    {
        auto limit = std::min(cap, exact_hard_limit);
        if (g.order() > limit)
            throw CapabilityError("exact WDM partition search", limit, g.order());
        if (tau.size() != g.order())
            throw PreconditionError("threshold assignment does not match the graph order");
        if (seed.empty())
            throw PreconditionError("seed set must be nonempty");
        for (auto v : seed)
            if (! g.contains(v))
                throw PreconditionError("seed vertex " + std::to_string(v) + " out of range");
    }
}

auto exact_wdm_partition(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed,
    const ExactOptions & options) -> std::optional<LayerPartition>
{
    check_inputs(g, tau, seed, options.max_vertices);
    auto clean = make_vertex_set(seed);
    auto outside = g.order() - clean.size();
    if (outside == 0) {
        if (options.min_top_layer > 0)
            return std::nullopt;
        return LayerPartition{{clean}};
    }
    // layers are nonempty, so t never exceeds the number of non-seed vertices
    auto max_t = std::min(options.max_t.value_or(outside), outside);
    if (max_t == 0 || options.min_top_layer > max_t)
        return std::nullopt;
    return LayerSearch(g, tau, clean, max_t, options.min_top_layer).run();
}

auto processing_time_range(const Graph & g, const ThresholdAssignment & tau, const VertexSet & seed,
    std::size_t max_vertices) -> std::optional<TimeRange>
{
    ExactOptions options;
    options.max_vertices = max_vertices;
    auto any = exact_wdm_partition(g, tau, seed, options);
    if (! any)
        return std::nullopt;

    TimeRange range{any->time(), any->time()};
    for (std::size_t t = 1; t < any->time(); ++t) {
        options.max_t = t;
        if (exact_wdm_partition(g, tau, seed, options)) {
            range.t_min = t;
            break;
        }
    }

    options.max_t.reset();
    while (true) {
        options.min_top_layer = range.t_max + 1;
        auto longer = exact_wdm_partition(g, tau, seed, options);
        if (! longer)
            break;
        range.t_max = longer->time();
    }
    return range;
}

}
