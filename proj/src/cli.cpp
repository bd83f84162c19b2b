#include <wdm/bounds.hpp>
#include <wdm/cli.hpp>
#include <wdm/constructions.hpp>
#include <wdm/errors.hpp>
#include <wdm/io.hpp>
#include <wdm/metrics.hpp>
#include <wdm/reduction.hpp>
#include <wdm/solvers.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace wdm {

using json = nlohmann::json;

namespace
{
    // A failed verification, reported with exit code 1.
    struct Failed
    {
        std::string why;
    };

    auto env_size(const char * name) -> std::optional<std::size_t>
    {
        const char * raw = std::getenv(name);
        if (! raw || ! *raw)
            return std::nullopt;
        try {
            return static_cast<std::size_t>(std::stoul(raw));
        }
        catch (const std::exception &) {
            throw InvalidParameter(std::string(name) + " must be a non-negative integer");
        }
    }

    auto exact_cap() -> std::size_t
    {
        return env_size("WDM_EXACT_CAP").value_or(default_exact_cap);
    }

    auto read_source(const std::string & path, std::istream & in) -> std::string
    {
        std::ostringstream buffer;
        if (path == "-")
            buffer << in.rdbuf();
        else {
            std::ifstream file(path);
            if (! file)
                throw InvalidParameter("cannot open " + path);
            buffer << file.rdbuf();
        }
        return buffer.str();
    }

    auto write_file(const std::string & path, const std::string & text) -> void
    {
        std::ofstream file(path);
        if (! file)
            throw InvalidParameter("cannot write " + path);
        file << text;
    }

    auto parse_size(const std::string & s, const char * what) -> std::size_t
    {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &pos);
        }
        catch (const std::exception &) {
            pos = 0;
        }
        if (pos != s.size() || s.empty() || s.front() == '-')
            throw InvalidParameter(std::string(what) + " must be a non-negative integer, got '" + s + "'");
        return static_cast<std::size_t>(v);
    }

    auto parse_int(const std::string & s, const char * what) -> int
    {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        }
        catch (const std::exception &) {
            pos = 0;
        }
        if (pos != s.size() || s.empty())
            throw InvalidParameter(std::string(what) + " must be an integer, got '" + s + "'");
        return v;
    }

    auto parse_ids(const std::string & s) -> VertexSet
    {
        VertexSet out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            if (! item.empty())
                out.push_back(static_cast<Vertex>(parse_size(item, "vertex id")));
        return make_vertex_set(out);
    }

    auto join_ids(const VertexSet & vs) -> std::string
    {
        std::string s;
        for (auto v : vs)
            s += (s.empty() ? "" : " ") + std::to_string(v);
        return s;
    }

    auto graph_json(const Graph & g, const std::optional<ThresholdAssignment> & tau) -> json
    {
        json edges = json::array();
        for (const auto & e : g.edges())
            edges.push_back({e.u, e.v});
        json j{{"n", g.order()}, {"edges", edges}};
        j["tau"] = tau ? json(tau->values()) : json(nullptr);
        return j;
    }

    struct Loaded
    {
        GraphDocument doc;
        ThresholdAssignment tau;
    };

    // Thresholds come from the file unless a rule is forced; strict majority otherwise.
    auto load_graph(const std::string & path, const std::string & rule, std::istream & in) -> Loaded
    {
        auto doc = parse_graph(read_source(path, in));
        ThresholdAssignment tau;
        if (! rule.empty())
            tau = make_threshold(doc.graph, rule);
        else if (doc.tau)
            tau = *doc.tau;
        else
            tau = strict_majority(doc.graph);
        return {std::move(doc), std::move(tau)};
    }

    auto generate(const std::string & family, const std::vector<std::string> & p, const std::string & rule)
        -> std::pair<Construction, bool>
    {
        auto need = [&](std::size_t count) {
            if (p.size() != count)
                throw InvalidParameter("family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
        };
        auto plain = [&](Graph g) {
            Construction c;
            c.tau = rule.empty() ? strict_majority(g) : make_threshold(g, rule);
            c.graph = std::move(g);
            return std::pair{std::move(c), false};
        };
        if (family == "triangles") {
            need(1);
            return {triangles_with_center(parse_size(p[0], "m")), true};
        }
        if (family == "cubic") {
            need(1);
            return {tight_cubic(parse_size(p[0], "t")), true};
        }
        if (family == "wheel") {
            need(1);
            return {wheel_join(parse_size(p[0], "n")), true};
        }
        if (family == "torus") {
            need(1);
            return {torus_pattern(parse_size(p[0], "n")), true};
        }
        if (family == "bigjoin") {
            need(4);
            return {big_join_counterexample(parse_size(p[0], "k"), parse_size(p[1], "n"), parse_int(p[2], "rim tau"),
                        parse_int(p[3], "clique tau")),
                true};
        }
        if (family == "figure4") {
            need(0);
            return {figure4_tree(), true};
        }
        if (family == "cycle") {
            need(1);
            return plain(build_cycle(parse_size(p[0], "n")));
        }
        if (family == "complete") {
            need(1);
            return plain(build_complete(parse_size(p[0], "n")));
        }
        if (family == "path") {
            need(1);
            return plain(build_path(parse_size(p[0], "n")));
        }
        if (family == "petersen") {
            need(0);
            return plain(build_petersen());
        }
        if (family == "blowup") {
            need(1);
            auto [g, tau] = blowup_family(parse_size(p[0], "n"));
            auto out = plain(std::move(g));
            if (rule.empty())
                out.first.tau = std::move(tau);
            return out;
        }
        if (family == "random") {
            need(3);
            double prob = 0;
            try {
                prob = std::stod(p[1]);
            }
            catch (const std::exception &) {
                throw InvalidParameter("p must be a number");
            }
            return plain(random_graph(parse_size(p[0], "n"), prob, parse_size(p[2], "seed")));
        }
        throw InvalidParameter("unknown family '" + family
            + "' (triangles, cubic, wheel, torus, bigjoin, figure4, cycle, complete, path, petersen, blowup, random)");
    }

    auto cmd_gen(const std::string & family, const std::vector<std::string> & params, const std::string & rule,
        bool as_json, std::ostream & out) -> int
    {
        auto [c, has_cert] = generate(family, params, rule);
        std::string name = family;
        for (const auto & p : params)
            name += " " + p;
        if (as_json) {
            auto j = graph_json(c.graph, c.tau);
            j["family"] = name;
            j["certificate"] = has_cert ? json::parse(emit_certificate(c.graph, c.tau, c.cert)) : json(nullptr);
            out << j.dump(2) << "\n";
            return exit_ok;
        }
        std::vector<std::string> comments{"family: " + name};
        if (has_cert && ! c.cert.provenance.empty())
            comments.push_back("provenance: " + c.cert.provenance);
        out << emit_graph(c.graph, c.tau, comments);
        if (has_cert)
            out << certificate_marker << "\n" << emit_certificate(c.graph, c.tau, c.cert);
        return exit_ok;
    }

    auto cmd_solve(const std::string & model, const std::string & path, const std::string & rule, bool greedy,
        const std::string & required, const std::string & excluded, bool transitive, bool as_json, std::istream & in,
        std::ostream & out) -> int
    {
        auto [doc, tau] = load_graph(path, rule, in);
        SolveOptions options;
        if (auto cap = env_size("WDM_EXACT_CAP")) {
            options.max_vertices = *cap;
            options.max_vertices_pruned = std::max(*cap, options.max_vertices_pruned);
        }
        options.required = parse_ids(required);
        options.excluded = parse_ids(excluded);
        options.vertex_transitive = transitive;

        SolveResult r;
        if (greedy) {
            if (model != "wdm")
                throw InvalidParameter("--greedy only applies to wdm");
            r = greedy_wdm(doc.graph, tau);
        }
        else if (model == "wdm")
            r = min_wdm(doc.graph, tau, options);
        else if (model == "dyn")
            r = min_dyn(doc.graph, tau, options);
        else if (model == "mono")
            r = min_mono(doc.graph, tau, options);
        else
            throw InvalidParameter("model must be wdm, dyn or mono");

        if (as_json) {
            json j{{"model", std::string(to_string(r.kind))}, {"size", r.size}, {"witness", r.witness},
                {"exact", r.exact}, {"nodes", r.explored.nodes}, {"candidates", r.explored.candidates}};
            if (r.partition) {
                j["layers"] = r.partition->layers;
                j["time"] = r.partition->time();
            }
            else {
                j["layers"] = nullptr;
                j["time"] = nullptr;
            }
            out << j.dump(2) << "\n";
            return exit_ok;
        }
        out << r.size << "\n";
        out << "seed " << join_ids(r.witness) << "\n";
        if (r.partition)
            out << "time " << r.partition->time() << "\n";
        if (! r.exact)
            out << "heuristic upper bound\n";
        return exit_ok;
    }

    auto cmd_verify(const std::string & graph_path, const std::string & cert_path, bool as_json, std::istream & in,
        std::ostream & out) -> int
    {
        auto doc = parse_graph(read_source(graph_path, in));
        if (! doc.tau)
            throw InvalidParameter("graph file has no threshold line");
        std::string text;
        if (! cert_path.empty())
            text = read_source(cert_path, in);
        else if (doc.certificate_json)
            text = *doc.certificate_json;
        else
            throw InvalidParameter("no certificate given and none bundled with the graph");
        auto cert = load_certificate(text);
        auto result = verify_certificate(doc.graph, *doc.tau, cert, exact_cap());
        if (as_json) {
            json j{{"verified", result.ok}, {"claim", std::string(to_string(cert.claim))}, {"size", cert.seed.size()}};
            j["reason"] = result.ok ? json(nullptr) : json(result.reason);
            out << j.dump(2) << "\n";
        }
        else if (result)
            out << "verified " << to_string(cert.claim) << " size " << cert.seed.size()
                << (cert.expected_time ? " time " + std::to_string(*cert.expected_time) : std::string()) << "\n";
        else
            out << "not verified: " << result.reason << "\n";
        return result ? exit_ok : exit_failed;
    }

    auto cmd_bounds(const std::string & path, const std::string & rule, bool exact, long degree_bound,
        bool degree_unbounded, bool as_json, std::istream & in, std::ostream & out) -> int
    {
        auto [doc, tau] = load_graph(path, rule, in);
        AuditOptions options;
        options.throw_on_violation = false;
        options.path_cap = env_size("WDM_PATH_CAP").value_or(default_longest_path_cap);
        if (degree_bound > 0)
            options.degree_bound = degree_bound;
        options.degree_unbounded = degree_unbounded;
        if (doc.certificate_json) {
            auto cert = load_certificate(*doc.certificate_json);
            if (auto it = cert.metadata.find("degree_unbounded"); it != cert.metadata.end() && it->second == "true")
                options.degree_unbounded = true;
        }

        std::optional<ExactQuantities> quantities;
        std::optional<SolveResult> solved;
        if (exact) {
            SolveOptions so;
            if (auto cap = env_size("WDM_EXACT_CAP")) {
                so.max_vertices = *cap;
                so.max_vertices_pruned = std::max(*cap, so.max_vertices_pruned);
            }
            solved = min_wdm(doc.graph, tau, so);
            quantities = ExactQuantities{solved->size,
                processing_time_range(doc.graph, tau, solved->witness, std::max(exact_cap(), doc.graph.order()))};
        }
        auto report = audit(doc.graph, tau, quantities, options);
        if (as_json) {
            auto j = json::parse(bound_report_json(report));
            if (quantities) {
                j["wdyn"] = quantities->wdyn;
                j["witness"] = solved->witness;
                j["t_min"] = quantities->time ? json(quantities->time->t_min) : json(nullptr);
                j["t_max"] = quantities->time ? json(quantities->time->t_max) : json(nullptr);
            }
            out << j.dump(2) << "\n";
        }
        else {
            if (quantities) {
                out << "wdyn " << quantities->wdyn << " witness " << join_ids(solved->witness);
                if (quantities->time)
                    out << " t in [" << quantities->time->t_min << ", " << quantities->time->t_max << "]";
                out << "\n";
            }
            out << bound_report_table(report);
        }
        return report.violations().empty() ? exit_ok : exit_failed;
    }

    auto parse_exponents(const std::string & s) -> GadgetExponents
    {
        std::vector<int> v;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            v.push_back(parse_int(item, "exponent"));
        if (v.size() != 6)
            throw InvalidParameter("--exponents takes six comma-separated values");
        return {v[0], v[1], v[2], v[3], v[4], v[5]};
    }

    auto cmd_reduce(const std::string & path, std::size_t guard, const std::string & exponents,
        const std::string & graph_out, const std::string & registry_out, bool as_json, std::istream & in,
        std::ostream & out) -> int
    {
        auto inst = parse_minrep(read_source(path, in));
        ReduceOptions options;
        options.size_guard = guard;
        if (! exponents.empty())
            options.exponents = parse_exponents(exponents);
        auto red = reduce_to_wdm(inst, options);
        auto check = audit_reduction(inst, red);
        if (! graph_out.empty())
            write_file(graph_out, emit_graph(red.graph, red.tau, {"reduced MINREP instance"}));
        auto registry = registry_json(red);
        if (! registry_out.empty())
            write_file(registry_out, registry);

        if (as_json) {
            auto j = json::parse(registry);
            j["audit"] = {{"ok", check.ok}, {"failures", check.failures}, {"threshold_gap", check.threshold_gap}};
            out << j.dump(2) << "\n";
        }
        else {
            out << "N " << red.n << " M " << red.m << " order " << red.graph.order() << " size " << red.graph.size()
                << (red.scaled ? " scaled" : "") << "\n";
            const std::pair<const char *, const VertexSet *> classes[] = {
                {"V1", &red.v1}, {"V2", &red.v2}, {"V3", &red.v3}, {"V4", &red.v4}, {"V5", &red.v5}};
            for (const auto & [name, members] : classes)
                out << name << " " << members->size() << " threshold "
                    << (members->empty() ? 0 : red.tau[members->front()]) << "\n";
            out << "gadgets " << red.gadgets.size() << "\n";
            out << "threshold gap " << (check.threshold_gap ? "holds" : "fails") << "\n";
            out << "audit " << (check.ok ? "ok" : "FAILED") << "\n";
            for (const auto & f : check.failures)
                out << "  " << f << "\n";
        }
        return check.ok ? exit_ok : exit_failed;
    }

    auto cmd_minrep_solve(const std::string & path, bool lift, std::size_t guard, bool as_json, std::istream & in,
        std::ostream & out) -> int
    {
        auto inst = parse_minrep(read_source(path, in));
        auto best = solve_minrep_bruteforce(inst);
        json j{{"size", best.size()}, {"representatives", best}};
        std::ostringstream text;
        text << best.size() << "\nreps " << join_ids(best) << "\n";
        bool ok = true;
        if (lift) {
            ReduceOptions options;
            options.size_guard = guard;
            auto red = reduce_to_wdm(inst, options);
            auto report = lift_solution(inst, red, best);
            auto v3 = report.v3.first.value_or(0);
            j["lift"] = {{"complete", report.outcome.complete}, {"v3_step", v3}, {"main_done", report.main_done},
                {"time", report.time}};
            text << "lift " << (report.outcome.complete ? "complete" : "STALLED") << " v3 step " << v3 << " main done "
                 << report.main_done << " time " << report.time << "\n";
            ok = report.outcome.complete;
            if (ok) {
                auto back = extract_solution(inst, red, report.seed, report.outcome.partition);
                j["extracted"] = back;
                text << "extracted " << join_ids(back) << "\n";
            }
        }
        if (as_json)
            out << j.dump(2) << "\n";
        else
            out << text.str();
        return ok ? exit_ok : exit_failed;
    }

    auto cmd_corpus(const CorpusOptions & options, const std::string & rule, bool as_json, std::ostream & out) -> int
    {
        auto opts = options;
        if (rule == "strict")
            opts.rule = ThresholdRule::strict_majority;
        else if (rule == "simple")
            opts.rule = ThresholdRule::simple_majority;
        else if (rule.starts_with("const:")) {
            opts.rule = ThresholdRule::constant;
            opts.constant = parse_int(rule.substr(6), "constant threshold");
        }
        else
            throw InvalidParameter("unknown threshold rule '" + rule + "'");
        auto corpus = generate_corpus(opts);
        if (as_json) {
            json all = json::array();
            for (const auto & e : corpus) {
                auto j = graph_json(e.graph, e.tau);
                j["seed"] = e.graph_seed;
                all.push_back(j);
            }
            out << all.dump(2) << "\n";
            return exit_ok;
        }
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (i > 0)
                out << "%%\n";
            out << emit_graph(corpus[i].graph, corpus[i].tau,
                {"corpus " + std::to_string(i) + " seed " + std::to_string(corpus[i].graph_seed)});
        }
        return exit_ok;
    }
}

auto run_command(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
    -> int
{
    CLI::App app{"Weak dynamic monopolies: solvers, bounds, constructions and the MINREP reduction", "wdm"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string family;
    std::vector<std::string> params;
    std::string rule;
    auto * gen = app.add_subcommand("gen", "Generate a family member with its certificate");
    gen->add_option("family", family, "Family name")->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("--rule", rule, "Threshold rule for plain families: strict, simple, const:<c>");
    gen->add_flag("--json", as_json);

    std::string model;
    std::string graph_path;
    bool greedy = false;
    std::string required;
    std::string excluded;
    bool transitive = false;
    auto * solve = app.add_subcommand("solve", "Minimum seed for a model");
    solve->add_option("model", model, "wdm, dyn or mono")->required();
    solve->add_option("graph", graph_path, "Graph file or -")->required();
    solve->add_option("--rule", rule, "Override thresholds: strict, simple, const:<c>");
    solve->add_flag("--greedy", greedy, "Heuristic upper bound instead of exact search");
    solve->add_option("--require", required, "Comma-separated vertices forced into the seed");
    solve->add_option("--exclude", excluded, "Comma-separated vertices kept out of the seed");
    solve->add_flag("--vertex-transitive", transitive, "Assume vertex 0 can be in an optimum");
    solve->add_flag("--json", as_json);

    std::string cert_path;
    auto * verify = app.add_subcommand("verify", "Re-check a certificate against a graph");
    verify->add_option("graph", graph_path, "Graph file, bundle, or -")->required();
    verify->add_option("certificate", cert_path, "Certificate JSON (default: bundled)");
    verify->add_flag("--json", as_json);

    bool exact = false;
    long degree_bound = 0;
    bool degree_unbounded = false;
    auto * bounds = app.add_subcommand("bounds", "Audit every bound with its hypotheses");
    bounds->add_option("graph", graph_path, "Graph file or -")->required();
    bounds->add_option("--rule", rule, "Override thresholds: strict, simple, const:<c>");
    bounds->add_flag("--exact", exact, "Compare against exact wdyn and processing times");
    bounds->add_option("--degree-bound", degree_bound, "Degree cap k of the graph family");
    bounds->add_flag("--degree-unbounded", degree_unbounded, "The family has no degree cap");
    bounds->add_flag("--json", as_json);

    std::string minrep_path;
    std::size_t guard = 4;
    std::string exponents;
    std::string graph_out;
    std::string registry_out;
    auto * reduce = app.add_subcommand("reduce", "Build the reduced WDM instance of a MINREP file");
    reduce->add_option("minrep", minrep_path, "MINREP file or -")->required();
    reduce->add_option("--guard", guard, "Largest N accepted");
    reduce->add_option("--exponents", exponents, "Scaled mode: six gadget exponents");
    reduce->add_option("--graph-out", graph_out, "Write the reduced graph here");
    reduce->add_option("--registry-out", registry_out, "Write the class and gadget registry here");
    reduce->add_flag("--json", as_json);

    bool lift = false;
    auto * minrep = app.add_subcommand("minrep-solve", "Brute-force MINREP optimum");
    minrep->add_option("minrep", minrep_path, "MINREP file or -")->required();
    minrep->add_flag("--lift", lift, "Lift through the reduction and extract back");
    minrep->add_option("--guard", guard, "Largest N accepted by the reduction");
    minrep->add_flag("--json", as_json);

    CorpusOptions corpus_options;
    std::string corpus_rule = "strict";
    auto * corpus = app.add_subcommand("corpus", "Seeded random connected graphs");
    corpus->add_option("--seed", corpus_options.seed, "Corpus seed")->required();
    corpus->add_option("--count", corpus_options.count, "Number of graphs")->required();
    corpus->add_option("--n-min", corpus_options.n_min, "Smallest order");
    corpus->add_option("--n-max", corpus_options.n_max, "Largest order");
    corpus->add_option("--p", corpus_options.p, "Edge probability");
    corpus->add_option("--rule", corpus_rule, "strict, simple or const:<c>");
    corpus->add_flag("--json", as_json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp & e) {
        app.exit(e, out, err);
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (gen->parsed())
            return cmd_gen(family, params, rule, as_json, out);
        if (solve->parsed())
            return cmd_solve(model, graph_path, rule, greedy, required, excluded, transitive, as_json, in, out);
        if (verify->parsed())
            return cmd_verify(graph_path, cert_path, as_json, in, out);
        if (bounds->parsed())
            return cmd_bounds(graph_path, rule, exact, degree_bound, degree_unbounded, as_json, in, out);
        if (reduce->parsed())
            return cmd_reduce(minrep_path, guard, exponents, graph_out, registry_out, as_json, in, out);
        if (minrep->parsed())
            return cmd_minrep_solve(minrep_path, lift, guard, as_json, in, out);
        if (corpus->parsed())
            return cmd_corpus(corpus_options, corpus_rule, as_json, out);
    }
    catch (const CapabilityError & e) {
        err << "wdm: " << e.what() << "\n";
        return exit_capability;
    }
    catch (const NormalFormViolation & e) {
        err << "wdm: " << e.what() << "\n";
        return exit_failed;
    }
    catch (const BoundViolation & e) {
        err << "wdm: " << e.what() << "\n";
        return exit_failed;
    }
    catch (const Error & e) {
        err << "wdm: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}
