// Runs the ten acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include "fixtures.hpp"
#include "oracles.hpp"

#include <wdm/bounds.hpp>
#include <wdm/cascade.hpp>
#include <wdm/constructions.hpp>
#include <wdm/io.hpp>
#include <wdm/reduction.hpp>
#include <wdm/solvers.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace wdm;

namespace
{
    // Collects the first few failure messages of one criterion.
    class Check
    {
    public:
        auto expect(bool ok, const std::string & what) -> bool
        {
            if (! ok) {
                ++_failures;
                if (_notes.size() < 5)
                    _notes.push_back(what);
            }
            return ok;
        }

        auto note(const std::string & s) -> void { _info.push_back(s); }
        auto passed() const -> bool { return _failures == 0; }
        auto failures() const -> const std::vector<std::string> & { return _notes; }
        auto info() const -> const std::vector<std::string> & { return _info; }

    private:
        std::size_t _failures = 0;
        std::vector<std::string> _notes;
        std::vector<std::string> _info;
    };

    auto str(const VertexSet & s) -> std::string
    {
        std::ostringstream out;
        out << "{";
        for (std::size_t i = 0; i < s.size(); ++i)
            out << (i ? "," : "") << s[i];
        out << "}";
        return out.str();
    }

    auto ceil_div(std::size_t a, std::size_t b) -> std::size_t { return (a + b - 1) / b; }

    auto criterion_1(Check & c) -> void
    {
        for (std::size_t n = 3; n <= 9; ++n) {
            auto g = build_cycle(n);
            auto tau = strict_majority(g);
            auto d = min_dyn(g, tau).size;
            auto w = min_wdm(g, tau).size;
            auto m = min_mono(g, tau).size;
            auto want = ceil_div(n, 2);
            c.expect(d == want && w == want && m == want,
                "C_" + std::to_string(n) + ": dyn " + std::to_string(d) + " wdm " + std::to_string(w) + " mono "
                    + std::to_string(m) + ", expected " + std::to_string(want));
        }
    }

    auto criterion_2(Check & c) -> void
    {
        for (std::size_t n : {4, 5}) {
            auto [g, tau] = blowup_family(n);
            auto w = min_wdm(g, tau).size;
            auto m = min_mono(g, tau).size;
            c.note("H_" + std::to_string(n) + ": wdm " + std::to_string(w) + " < mono " + std::to_string(m));
            c.expect(w < m, "H_" + std::to_string(n) + ": wdm " + std::to_string(w) + " not below mono " + std::to_string(m));
        }
        for (std::size_t n : {8, 10, 12}) {
            auto wheel = wheel_join(n);
            auto d = min_dyn(wheel.graph, wheel.tau).size;
            auto w = min_wdm(wheel.graph, wheel.tau).size;
            c.note("K_1 v C_" + std::to_string(n) + ": dyn " + std::to_string(d) + ", wdm " + std::to_string(w));
            c.expect(d == 2, "K_1 v C_" + std::to_string(n) + ": dyn " + std::to_string(d));
            c.expect(w >= ceil_div(n, 4), "K_1 v C_" + std::to_string(n) + ": wdm " + std::to_string(w) + " below n/4");
        }
    }

    auto criterion_3(Check & c) -> void
    {
        for (std::size_t m = 1; m <= 3; ++m) {
            auto t = triangles_with_center(m);
            auto w = min_wdm(t.graph, t.tau).size;
            c.expect(w == 2 * m, "triangles(" + std::to_string(m) + "): wdm " + std::to_string(w));
        }
        CorpusOptions options;
        options.seed = 3001;
        options.count = 50;
        options.n_min = 4;
        options.n_max = 12;
        std::size_t tight = 0;
        for (const auto & e : generate_corpus(options)) {
            auto w = min_wdm(e.graph, e.tau).size;
            auto cap = 2 * e.graph.order() / 3;
            tight += w == cap;
            c.expect(w <= cap, "corpus graph " + std::to_string(e.graph_seed) + ": wdm " + std::to_string(w) + " > 2n/3");
        }
        c.note("corpus of 50, " + std::to_string(tight) + " at 2n/3");
    }

    auto criterion_4(Check & c) -> void
    {
        auto c3 = tight_cubic(3);
        auto n = c3.graph.order();
        c.expect(n == 10, "tight_cubic(3) order " + std::to_string(n));
        auto r = min_wdm(c3.graph, c3.tau);
        auto odd = ceil_of(lower_bound_odd(10, 1, 3));
        c.expect(r.size == 3 && (n + 2) / 4 == 3 && odd == 3,
            "tight_cubic(3): wdm " + std::to_string(r.size) + ", odd bound " + odd.str());
        c.expect(verify_certificate(c3.graph, c3.tau, c3.cert).ok, "tight_cubic(3) certificate");
        c.expect(c3.cert.partition && c3.cert.partition->time() == 3
                && verify_wdm_partition(c3.graph, c3.tau, *c3.cert.partition).ok,
            "tight_cubic(3) partition of time 3");

        auto c5 = tight_cubic(5);
        c.expect(c5.graph.order() == 42, "tight_cubic(5) order");
        c.expect(verify_certificate(c5.graph, c5.tau, c5.cert).ok, "tight_cubic(5) certificate");
        c.expect(c5.cert.expected_size == 11 && c5.cert.expected_time == 5, "tight_cubic(5) size/time");
        auto odd5 = ceil_of(lower_bound_odd(42, 1, 5));
        c.expect(odd5 == 11, "ceil(lower_bound_odd(42,1,5)) = " + odd5.str());
    }

    auto criterion_5(Check & c) -> void
    {
        for (std::size_t n : {4, 8}) {
            auto t = torus_pattern(n);
            auto ok = verify_certificate(t.graph, t.tau, t.cert);
            c.expect(ok.ok, "torus(" + std::to_string(n) + ") certificate: " + ok.reason);
            c.expect(8 * t.cert.seed.size() == 3 * n * n, "torus(" + std::to_string(n) + ") |D_0|");
            c.expect(t.cert.expected_time == 2, "torus(" + std::to_string(n) + ") t");
        }

        for (std::size_t n : {3, 4}) {
            auto cycle = build_cycle(n);
            auto g = cartesian_product(cycle, cycle);
            auto tau = constant_threshold(g, 3);
            std::mt19937_64 rng(500 + n);
            std::uniform_real_distribution<double> density(0.3, 0.9);
            std::size_t found = 0;
            std::size_t attempts = 0;
            std::size_t worst = 0;
            std::size_t above = 0;
            while (found < 200 && attempts < 200000) {
                ++attempts;
                auto p = density(rng);
                VertexSet seed;
                for (std::size_t v = 0; v < g.order(); ++v)
                    if (std::bernoulli_distribution(p)(rng))
                        seed.push_back(static_cast<Vertex>(v));
                if (seed.empty() || seed.size() == g.order() || ! exact_wdm_partition(g, tau, seed))
                    continue;
                ++found;
                auto range = processing_time_range(g, tau, seed);
                worst = std::max(worst, range->t_max);
                if (range->t_max > 2) {
                    ++above;
                    c.expect(false, "C_" + std::to_string(n) + " x C_" + std::to_string(n) + " seed " + str(seed)
                            + " has t_max " + std::to_string(range->t_max));
                }
            }
            c.expect(found == 200, "only " + std::to_string(found) + " WDM seeds sampled");
            c.note("C_" + std::to_string(n) + " x C_" + std::to_string(n) + ": " + std::to_string(found)
                + " WDM seeds in " + std::to_string(attempts) + " draws, max t_max " + std::to_string(worst) + ", "
                + std::to_string(above) + " above 2");
        }
    }

    auto criterion_6(Check & c) -> void
    {
        auto [g, tau] = fixture::w6();
        c.expect(! greedy_cascade(g, tau, {0, 1}).complete, "greedy completes on W6");
        auto p = exact_wdm_partition(g, tau, {0, 1});
        c.expect(p && verify_wdm_partition(g, tau, *p).ok, "exact search misses the W6 partition");

        CorpusOptions options;
        options.seed = 6006;
        options.count = 100;
        options.n_min = 4;
        options.n_max = 8;
        std::size_t pairs = 0;
        std::size_t positive = 0;
        std::size_t index = 0;
        for (const auto & e : generate_corpus(options)) {
            const auto & gg = e.graph;
            static const char * rules[] = {"strict", "simple", "const:2"};
            auto t = make_threshold(gg, rules[index++ % 3]);
            oracle::LayerEnumerator all_layers(gg, t);
            for (oracle::Mask s = 1; s < (oracle::Mask{1} << gg.order()); ++s) {
                ++pairs;
                bool want = all_layers.times(s) != 0;
                auto got = exact_wdm_partition(gg, t, oracle::to_set(s));
                positive += want;
                c.expect(got.has_value() == want, "disagreement on corpus graph " + std::to_string(e.graph_seed)
                        + " seed " + str(oracle::to_set(s)));
                if (got)
                    c.expect(verify_wdm_partition(gg, t, *got).ok, "invalid exact partition");
            }
        }
        c.note(std::to_string(pairs) + " (graph, seed) pairs, " + std::to_string(positive) + " WDMs");
    }

    auto criterion_7(Check & c) -> void
    {
        CorpusOptions options;
        options.seed = 7007;
        options.count = 40;
        options.n_min = 4;
        options.n_max = 10;
        std::size_t checked = 0;
        std::size_t index = 0;
        for (const auto & e : generate_corpus(options)) {
            const auto & g = e.graph;
            static const char * rules[] = {"strict", "simple", "const:2", "const:3"};
            auto tau = make_threshold(g, rules[index++ % 4]);
            auto k = tau.min();
            auto alpha = oracle::matching_number(g);
            auto l = oracle::longest_path(g);
            auto delta = static_cast<long>(g.max_degree());
            bool strict = is_strict_majority(g, tau);
            std::mt19937_64 rng(e.graph_seed);
            oracle::Mask all = (oracle::Mask{1} << g.order()) - 1;
            for (int draw = 0; draw < 40; ++draw) {
                oracle::Mask s = static_cast<oracle::Mask>(rng()) & all;
                if (s == 0)
                    continue;
                auto seed = oracle::to_set(s);
                auto range = processing_time_range(g, tau, seed);
                if (! range)
                    continue;
                ++checked;
                auto t = static_cast<long>(range->t_max);
                auto tag = "graph " + std::to_string(e.graph_seed) + " seed " + str(seed);
                // 2 alpha / k + 2, cross-multiplied
                c.expect(t * k <= 2 * alpha + 2 * k, tag + ": matching bound");
                if (k >= 2)
                    c.expect(2 * t <= l, tag + ": l/2 bound");
                if (strict)
                    c.expect(2 * t <= l + 2, tag + ": (l+2)/2 bound");
                for (auto tt : {range->t_min, range->t_max}) {
                    BigInt cap = boost::multiprecision::pow(BigInt(delta), static_cast<unsigned>(tt + 1));
                    c.expect(BigInt(g.order()) <= cap * seed.size(), tag + ": n <= Delta^(t+1)|D|");
                }
                auto report = time_bounds(g, tau, seed.size(), *range);
                c.expect(report.violations().empty(), tag + ": library time bounds disagree");
            }
        }
        c.note(std::to_string(checked) + " WDM seeds checked");

        auto cubic = tight_cubic(3);
        const auto & p = *cubic.cert.partition;
        auto top = p.layers[p.time() - 1];
        auto paths = extract_disjoint_paths(cubic.graph, cubic.tau, p, top);
        c.expect(validate_disjoint_paths(cubic.graph, p, top, paths).ok, "tight_cubic(3) disjoint paths");
        auto star = extract_starlike(cubic.graph, cubic.tau, p);
        c.expect(validate_starlike(cubic.graph, star, 2, p.time() - 1).ok, "tight_cubic(3) starlike tree");

        auto torus = torus_pattern(4);
        const auto & tp = *torus.cert.partition;
        for (std::size_t layer = 1; layer <= 2; ++layer) {
            VertexSet ends(tp.layers[layer].begin(), tp.layers[layer].begin() + 2);
            auto tpaths = extract_disjoint_paths(torus.graph, torus.tau, tp, ends);
            c.expect(validate_disjoint_paths(torus.graph, tp, ends, tpaths).ok, "torus(4) disjoint paths");
        }
        auto tstar = extract_starlike(torus.graph, torus.tau, tp);
        c.expect(validate_starlike(torus.graph, tstar, 3, 1).ok, "torus(4) starlike tree");
    }

    auto criterion_8(Check & c) -> void
    {
        auto f = figure4_tree();
        auto best = min_wdm(f.graph, f.tau);
        c.expect(best.size == 8, "figure-4 tree wdm " + std::to_string(best.size));
        SolveOptions with10;
        with10.required = {10};
        auto w = min_wdm(f.graph, f.tau, with10);
        c.expect(w.size == 8, "no optimum contains leaf 10");
        SolveOptions no10;
        no10.excluded = {10};
        auto wo = min_wdm(f.graph, f.tau, no10);
        c.expect(wo.size == 9, "optimum without leaf 10 has size " + std::to_string(wo.size));
        c.note("witness " + str(best.witness) + ", without 10: " + str(wo.witness) + ", "
            + std::to_string(best.explored.nodes + wo.explored.nodes) + " nodes");
    }

    auto criterion_9(Check & c) -> void
    {
        std::size_t instances = 0;
        std::size_t extracted = 0;
        for (std::uint64_t seed = 0; seed < 16; ++seed) {
            auto inst = fixture::random_minrep(9000 + seed);
            auto tag = "instance " + std::to_string(seed);
            auto red = reduce_to_wdm(inst);
            ++instances;
            auto audit = audit_reduction(inst, red);
            c.expect(audit.ok, tag + ": audit " + (audit.failures.empty() ? "" : audit.failures.front()));

            BigInt n = inst.order();
            BigInt m = red.m;
            BigInt v2 = red.v2.size();
            using boost::multiprecision::pow;
            bool gap = 2 * v2 * pow(n, 4) + 2 * (m - 1) * pow(n, 6) < 2 * m * pow(n, 6);
            c.expect(gap, tag + ": threshold gap");

            auto best = solve_minrep_bruteforce(inst);
            auto lift = lift_solution(inst, red, best);
            c.expect(lift.outcome.complete, tag + ": lift incomplete");
            c.expect(lift.v3.first == 4 && lift.v3.last == 4, tag + ": V3 not at step 4");
            c.expect(lift.main_done <= 8, tag + ": main vertices done at " + std::to_string(lift.main_done));
            c.expect(lift.time <= 9, tag + ": time " + std::to_string(lift.time));

            std::vector<std::pair<VertexSet, LayerPartition>> inputs{{lift.seed, lift.outcome.partition}};
            for (const auto & d : {red.v2, red.v3})
                if (d.size() <= red.n)
                    if (auto run = greedy_cascade(red.graph, red.tau, d); run.complete)
                        inputs.push_back({d, run.partition});
            for (const auto & [d, part] : inputs) {
                auto reps = extract_solution(inst, red, d, part);
                ++extracted;
                c.expect(verify_minrep(inst, reps) && reps.size() <= 2 * d.size(), tag + ": extracted " + str(reps));
            }
        }
        c.note(std::to_string(instances) + " instances, " + std::to_string(extracted) + " extractions");
    }

    auto criterion_10(Check & c) -> void
    {
        // t_m, k, (t_m - 1)^(floor(k/2)+1), order bound, worked by hand
        struct Row
        {
            long tm, k, lower, order;
        };
        const Row grid[] = {{3, 3, 4, 32}, {3, 4, 8, 64}, {3, 5, 8, 128}, {4, 3, 9, 74}, {4, 4, 27, 209},
            {4, 5, 27, 614}, {5, 3, 16, 142}, {5, 4, 64, 526}, {5, 5, 64, 2062}};
        for (const auto & r : grid) {
            auto tag = "(t_m, k) = (" + std::to_string(r.tm) + ", " + std::to_string(r.k) + ")";
            c.expect(lower_bound_even_girth(r.tm, r.k) == r.lower, tag + " size bound");
            c.expect(order_bound_even_girth(r.tm, r.k) == r.order, tag + " order bound");
        }
        auto k4 = build_complete(4);
        auto c8 = build_cycle(8);
        auto petersen = build_petersen();
        const std::pair<std::string, const Graph *> graphs[] = {{"K_4", &k4}, {"C_8", &c8}, {"Petersen", &petersen}};
        for (const auto & [name, g] : graphs)
            for (auto rule : {"strict", "const:3"}) {
                auto report = audit(*g, make_threshold(*g, rule));
                const auto * e = report.find(bound_even_girth_lower);
                c.expect(e && ! e->applicable && ! e->notes.empty(), name + " even-girth bound not reported inapplicable");
            }
    }
}

int main()
{
    const std::pair<const char *, std::function<void(Check &)>> criteria[] = {
        {"hierarchy and equality on cycles", criterion_1},
        {"gap families", criterion_2},
        {"2n/3 upper bound tightness", criterion_3},
        {"tight cubic family", criterion_4},
        {"torus tiling and processing time", criterion_5},
        {"greedy incompleteness and exact checker", criterion_6},
        {"processing-time corollaries and path extraction", criterion_7},
        {"figure-4 tree", criterion_8},
        {"MINREP reduction", criterion_9},
        {"even-girth evaluator and inapplicability", criterion_10},
    };
    int failed = 0;
    int index = 0;
    for (const auto & [name, run] : criteria) {
        ++index;
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            run(c);
        }
        catch (const std::exception & e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " (" << seconds
                  << " s)\n";
        for (const auto & s : c.info())
            std::cout << "    " << s << "\n";
        for (const auto & s : c.failures())
            std::cout << "    failure: " << s << "\n";
        failed += c.passed() ? 0 : 1;
    }
    std::cout << (10 - failed) << "/10 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
