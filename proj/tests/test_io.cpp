#include <wdm/cli.hpp>
#include <wdm/constructions.hpp>
#include <wdm/errors.hpp>
#include <wdm/io.hpp>

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace wdm;

namespace
{
    struct Run
    {
        int code;
        std::string out;
        std::string err;
    };

    auto run(const std::vector<std::string> & args, const std::string & input = "") -> Run
    {
        std::istringstream in(input);
        std::ostringstream out;
        std::ostringstream err;
        int code = run_command(args, in, out, err);
        return {code, out.str(), err.str()};
    }

    auto parse_error_line(std::string_view text) -> std::size_t
    {
        try {
            parse_graph(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return 0;
    }
}

TEST_CASE("graph round trip")
{
    auto g = build_petersen();
    auto tau = strict_majority(g);
    auto text = emit_graph(g, tau, {"petersen"});
    auto doc = parse_graph(text);
    CHECK(doc.graph == g);
    REQUIRE(doc.tau.has_value());
    CHECK(*doc.tau == tau);
    CHECK(doc.comments == std::vector<std::string>{"petersen"});
    CHECK_FALSE(doc.certificate_json.has_value());
    CHECK(emit_graph(doc.graph, doc.tau, doc.comments) == text);

    auto bare = parse_graph("3 2\n0 1\n1 2\n");
    CHECK_FALSE(bare.tau.has_value());
    CHECK(bare.graph.size() == 2);

    auto split = parse_graph("3 1\n0 1\nt 1 2\nt 1\n");
    CHECK(split.tau->values() == std::vector<int>{1, 2, 1});
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("3\n") == 1);
    CHECK(parse_error_line("# c\n3 1\n1 1\n") == 3);
    CHECK(parse_error_line("3 1\n0 5\n") == 2);
    CHECK(parse_error_line("3 2\n0 1\n1 0\n") == 3);
    CHECK(parse_error_line("3 2\n0 1\n") == 2);
    CHECK(parse_error_line("3 1\n0 1\n1 2\n") == 3);
    CHECK(parse_error_line("3 1\n0 1\nt 1 1\n") == 3);
    CHECK(parse_error_line("3 1\n0 1\nt 1 0 1\n") == 3);
    CHECK(parse_error_line("3 1\n0 x\n") == 2);
    CHECK(parse_error_line("2 0\nt 1 1\n0 1\n") == 3);
}

TEST_CASE("certificates")
{
    auto c = torus_pattern(4);
    auto a = emit_certificate(c.graph, c.tau, c.cert);
    auto b = emit_certificate(c.graph, c.tau, torus_pattern(4).cert);
    CHECK(a == b);
    auto back = load_certificate(a);
    CHECK(back.seed == c.cert.seed);
    CHECK(back.partition == c.cert.partition);
    CHECK(back.expected_time == 2);
    CHECK(back.metadata == c.cert.metadata);
    CHECK(verify_certificate(c.graph, c.tau, back));
    auto j = nlohmann::json::parse(a);
    CHECK(j["verified"] == true);
    CHECK(j["claim"] == "wdm");

    auto bad = c.cert;
    bad.expected_size = 1;
    CHECK_THROWS_AS(emit_certificate(c.graph, c.tau, bad), PreconditionError);

    CHECK_THROWS_AS(load_certificate("[1, 2]"), ParseError);
    CHECK_THROWS_AS(load_certificate("{\"claim\": \"wdm\"}"), ParseError);
    CHECK_THROWS_AS(load_certificate("{\"claim\": \"x\", \"seed\": [0], \"expected_size\": 1}"), ParseError);
    CHECK_THROWS_AS(load_certificate("{not json"), ParseError);
}

TEST_CASE("minrep format")
{
    MinRepInstance inst(2, 2, {{0, 2}, {1, 3}, {0, 3}}, {0, 0, 0, 1});
    auto text = emit_minrep(inst);
    CHECK(parse_minrep(text) == inst);
    CHECK_THROWS_AS(parse_minrep("4 1\na 2\n0 2\n"), ParseError);
}

TEST_CASE("thresholds by name")
{
    auto c5 = build_cycle(5);
    CHECK(make_threshold(c5, "strict").is_constant(2));
    CHECK(make_threshold(c5, "simple").is_constant(1));
    CHECK(make_threshold(c5, "const:3").is_constant(3));
    CHECK_THROWS_AS(make_threshold(c5, "const:0"), InvalidParameter);
    CHECK_THROWS_AS(make_threshold(c5, "majority"), InvalidParameter);
}

TEST_CASE("corpus is reproducible")
{
    CorpusOptions options;
    options.seed = 3;
    options.count = 10;
    auto a = generate_corpus(options);
    auto b = generate_corpus(options);
    REQUIRE(a.size() == 10);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].graph == b[i].graph);
        CHECK(a[i].graph.is_connected());
        CHECK(a[i].graph.order() >= 4);
        CHECK(a[i].graph.order() <= 12);
    }
    options.count = 4;
    auto prefix = generate_corpus(options);
    for (std::size_t i = 0; i < prefix.size(); ++i)
        CHECK(prefix[i].graph == a[i].graph);
}

TEST_CASE("bound report rendering")
{
    auto c6 = build_cycle(6);
    auto report = audit(c6, strict_majority(c6), ExactQuantities{3, TimeRange{1, 1}});
    auto table = bound_report_table(report);
    CHECK(table.find("strict_majority_upper") != std::string::npos);
    CHECK(table.find("tight") != std::string::npos);
    auto j = nlohmann::json::parse(bound_report_json(report));
    CHECK(j.is_object());
}

TEST_CASE("command line")
{
    auto cycle = run({"gen", "cycle", "5"});
    REQUIRE(cycle.code == exit_ok);
    auto solved = run({"solve", "wdm", "-"}, cycle.out);
    CHECK(solved.code == exit_ok);
    CHECK(solved.out.rfind("3\n", 0) == 0);

    auto dyn = run({"solve", "dyn", "-", "--json"}, cycle.out);
    CHECK(nlohmann::json::parse(dyn.out)["size"] == 3);

    auto cubic = run({"gen", "cubic", "3"});
    REQUIRE(cubic.code == exit_ok);
    CHECK(cubic.out.find(certificate_marker) != std::string::npos);
    CHECK(run({"verify", "-"}, cubic.out).code == exit_ok);
    auto bounds = run({"bounds", "-", "--exact"}, cubic.out);
    CHECK(bounds.code == exit_ok);
    CHECK(bounds.out.find("wdyn 3") != std::string::npos);

    auto tampered = cubic.out;
    tampered.replace(tampered.find("\"expected_size\": 3"), 18, "\"expected_size\": 2");
    CHECK(run({"verify", "-"}, tampered).code == exit_failed);

    CHECK(run({"gen", "nosuch"}).code == exit_usage);
    CHECK(run({"solve"}).code == exit_usage);
    CHECK(run({"solve", "wdm", "-"}, "3 1\n0 0\n").code == exit_usage);

    auto big = run({"gen", "cycle", "40"});
    CHECK(run({"solve", "wdm", "-"}, big.out).code == exit_capability);

    auto minrep = run({"minrep-solve", "-", "--lift"}, "2 1\na 1\ng 0 0\n0 1\n");
    CHECK(minrep.code == exit_ok);
    auto reduced = run({"reduce", "-"}, "2 1\na 1\ng 0 0\n0 1\n");
    CHECK(reduced.code == exit_ok);
    CHECK(reduced.out.find("order 664") != std::string::npos);
    CHECK(reduced.out.find("audit ok") != std::string::npos);
    CHECK(run({"reduce", "-"}, "5 1\na 2\ng 0 0 0 0 0\n0 2\n").code == exit_capability);

    auto corpus = run({"corpus", "--seed", "1", "--count", "3", "--json"});
    CHECK(corpus.code == exit_ok);
    CHECK(nlohmann::json::parse(corpus.out).size() == 3);
}
