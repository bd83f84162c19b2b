#include <wdm/errors.hpp>
#include <wdm/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

namespace wdm {

using json = nlohmann::json;

namespace
{
    struct Line
    {
        std::size_t number;
        std::vector<std::string_view> tokens;
    };

    auto trim(std::string_view s) -> std::string_view
    {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string_view::npos)
            return {};
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    auto split(std::string_view s) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                ++i;
            auto start = i;
            while (i < s.size() && s[i] != ' ' && s[i] != '\t')
                ++i;
            if (i > start)
                out.push_back(s.substr(start, i - start));
        }
        return out;
    }

    auto to_long(std::string_view token, std::size_t line) -> long
    {
        long value = 0;
        auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || end != token.data() + token.size())
            throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
        return value;
    }

    auto to_count(std::string_view token, std::size_t line, const char * what) -> std::size_t
    {
        auto v = to_long(token, line);
        if (v < 0)
            throw ParseError(line, std::string(what) + " must be non-negative");
        return static_cast<std::size_t>(v);
    }

    // Splits into content lines, collecting comments and stopping at the
    // certificate marker.
    auto scan(std::string_view text, std::vector<std::string> * comments, std::optional<std::string> * tail)
        -> std::vector<Line>
    {
        std::vector<Line> lines;
        std::size_t number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto raw = text.substr(pos, end - pos);
            ++number;
            auto line = trim(raw);
            if (line == certificate_marker) {
                if (! tail)
                    throw ParseError(number, "unexpected certificate section");
                *tail = std::string(end < text.size() ? text.substr(end + 1) : std::string_view{});
                break;
            }
            if (! line.empty() && line.front() == '#') {
                if (comments)
                    comments->emplace_back(trim(line.substr(1)));
            }
            else if (! line.empty())
                lines.push_back({number, split(line)});
            if (end == text.size())
                break;
            pos = end + 1;
        }
        return lines;
    }

    auto edge_from(const Line & l, std::size_t n) -> Edge
    {
        if (l.tokens.size() != 2)
            throw ParseError(l.number, "edge line needs exactly two vertex ids");
        auto u = to_long(l.tokens[0], l.number);
        auto v = to_long(l.tokens[1], l.number);
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw ParseError(l.number, "vertex id out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
        if (u == v)
            throw ParseError(l.number, "self-loop at " + std::to_string(u));
        return {static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    }

    auto model_from(const std::string & s) -> SeedModel
    {
        if (s == "wdm")
            return SeedModel::weak;
        if (s == "dyn")
            return SeedModel::dynamic;
        if (s == "mono")
            return SeedModel::monopoly;
        throw ParseError(0, "unknown certificate claim '" + s + "'");
    }

    auto vertex_list(const json & j, const char * what) -> VertexSet
    {
        if (! j.is_array())
            throw ParseError(0, std::string(what) + " must be an array of vertex ids");
        VertexSet out;
        for (const auto & x : j) {
            if (! x.is_number_integer())
                throw ParseError(0, std::string(what) + " must contain integers");
            out.push_back(x.get<Vertex>());
        }
        return out;
    }
}

auto parse_graph(std::string_view text) -> GraphDocument
{
    GraphDocument doc;
    auto lines = scan(text, &doc.comments, &doc.certificate_json);
    if (lines.empty())
        throw ParseError(1, "missing 'n m' header");
    const auto & header = lines[0];
    if (header.tokens.size() != 2)
        throw ParseError(header.number, "header must be 'n m'");
    auto n = to_count(header.tokens[0], header.number, "n");
    auto m = to_count(header.tokens[1], header.number, "m");
    if (n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max()))
        throw ParseError(header.number, "order too large");

    std::vector<Edge> edges;
    std::vector<int> tau;
    bool saw_tau = false;
    std::vector<std::pair<Edge, std::size_t>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto & l = lines[i];
        if (l.tokens[0] == "t") {
            saw_tau = true;
            for (std::size_t k = 1; k < l.tokens.size(); ++k) {
                auto value = to_long(l.tokens[k], l.number);
                if (value < 1)
                    throw ParseError(l.number, "thresholds must be at least 1");
                if (tau.size() == n)
                    throw ParseError(l.number, "more than n thresholds");
                tau.push_back(static_cast<int>(value));
            }
            continue;
        }
        if (saw_tau)
            throw ParseError(l.number, "edge line after thresholds");
        if (edges.size() == m)
            throw ParseError(l.number, "more than m = " + std::to_string(m) + " edge lines");
        edges.push_back(edge_from(l, n));
        seen.push_back({edges.back(), l.number});
    }
    if (edges.size() != m)
        throw ParseError(lines.back().number, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    if (saw_tau && tau.size() != n)
        throw ParseError(lines.back().number, "expected " + std::to_string(n) + " thresholds, found "
            + std::to_string(tau.size()));

    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first)
            throw ParseError(seen[i].second, "duplicate edge " + std::to_string(seen[i].first.u) + " "
                + std::to_string(seen[i].first.v));

    doc.graph = Graph(n, edges);
    if (saw_tau)
        doc.tau = explicit_threshold(doc.graph, std::move(tau));
    return doc;
}

auto emit_graph(const Graph & g, const std::optional<ThresholdAssignment> & tau, const std::vector<std::string> & comments)
    -> std::string
{
    std::ostringstream out;
    for (const auto & c : comments)
        out << "# " << c << "\n";
    out << g.order() << " " << g.size() << "\n";
    for (const auto & e : g.edges())
        out << e.u << " " << e.v << "\n";
    if (tau) {
        out << "t";
        for (auto x : tau->values())
            out << " " << x;
        out << "\n";
    }
    return out.str();
}

auto parse_minrep(std::string_view text) -> MinRepInstance
{
    auto lines = scan(text, nullptr, nullptr);
    if (lines.empty())
        throw ParseError(1, "missing 'N m' header");
    const auto & header = lines[0];
    if (header.tokens.size() != 2)
        throw ParseError(header.number, "header must be 'N m'");
    auto n = to_count(header.tokens[0], header.number, "N");
    auto m = to_count(header.tokens[1], header.number, "m");

    std::optional<std::size_t> a_count;
    std::optional<std::vector<int>> groups;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto & l = lines[i];
        if (l.tokens[0] == "a") {
            if (l.tokens.size() != 2 || a_count)
                throw ParseError(l.number, "expected a single 'a |A|' line");
            a_count = to_count(l.tokens[1], l.number, "|A|");
            if (*a_count > n)
                throw ParseError(l.number, "|A| exceeds N");
        }
        else if (l.tokens[0] == "g") {
            if (groups)
                throw ParseError(l.number, "duplicate group line");
            if (l.tokens.size() != n + 1)
                throw ParseError(l.number, "group line needs N = " + std::to_string(n) + " entries");
            groups.emplace();
            for (std::size_t k = 1; k < l.tokens.size(); ++k)
                groups->push_back(static_cast<int>(to_long(l.tokens[k], l.number)));
        }
        else {
            edges.push_back(edge_from(l, n));
            edge_lines.push_back(l.number);
        }
    }
    auto last = lines.back().number;
    if (! a_count)
        throw ParseError(last, "missing 'a |A|' line");
    if (! groups)
        throw ParseError(last, "missing 'g' group line");
    if (edges.size() != m)
        throw ParseError(last, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (static_cast<std::size_t>(edges[i].u) >= *a_count || static_cast<std::size_t>(edges[i].v) < *a_count)
            throw ParseError(edge_lines[i], "edge must join A to B");
    try {
        return MinRepInstance(*a_count, n - *a_count, std::move(edges), std::move(*groups));
    }
    catch (const InvalidParameter & e) {
        throw ParseError(last, e.what());
    }
}

auto emit_minrep(const MinRepInstance & inst) -> std::string
{
    std::ostringstream out;
    out << inst.order() << " " << inst.edges().size() << "\n";
    out << "a " << inst.a_count() << "\n";
    out << "g";
    for (auto g : inst.groups())
        out << " " << g;
    out << "\n";
    for (const auto & e : inst.edges())
        out << e.u << " " << e.v << "\n";
    return out.str();
}

auto emit_certificate(const Graph & g, const ThresholdAssignment & tau, const Certificate & cert) -> std::string
{
    if (auto r = verify_certificate(g, tau, cert); ! r)
        throw PreconditionError("refusing to emit an unverified certificate: " + r.reason);
    json j;
    j["claim"] = std::string(to_string(cert.claim));
    j["seed"] = make_vertex_set(cert.seed);
    j["expected_size"] = cert.expected_size;
    j["expected_time"] = cert.expected_time ? json(*cert.expected_time) : json(nullptr);
    if (cert.partition) {
        json layers = json::array();
        for (const auto & layer : cert.partition->layers)
            layers.push_back(make_vertex_set(layer));
        j["layers"] = layers;
    }
    else
        j["layers"] = nullptr;
    j["provenance"] = cert.provenance;
    j["metadata"] = cert.metadata;
    j["verified"] = true;
    return j.dump(2) + "\n";
}

auto load_certificate(std::string_view text) -> Certificate
{
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::parse_error & e) {
        throw ParseError(0, std::string("certificate JSON: ") + e.what());
    }
    if (! j.is_object())
        throw ParseError(0, "certificate must be a JSON object");
    for (const char * key : {"claim", "seed", "expected_size"})
        if (! j.contains(key))
            throw ParseError(0, std::string("certificate lacks '") + key + "'");

    Certificate c;
    if (! j["claim"].is_string())
        throw ParseError(0, "claim must be a string");
    c.claim = model_from(j["claim"].get<std::string>());
    c.seed = vertex_list(j["seed"], "seed");
    if (! j["expected_size"].is_number_unsigned())
        throw ParseError(0, "expected_size must be a non-negative integer");
    c.expected_size = j["expected_size"].get<std::size_t>();
    if (j.contains("expected_time") && ! j["expected_time"].is_null()) {
        if (! j["expected_time"].is_number_unsigned())
            throw ParseError(0, "expected_time must be a non-negative integer");
        c.expected_time = j["expected_time"].get<std::size_t>();
    }
    if (j.contains("layers") && ! j["layers"].is_null()) {
        if (! j["layers"].is_array())
            throw ParseError(0, "layers must be an array");
        LayerPartition p;
        for (const auto & layer : j["layers"])
            p.layers.push_back(vertex_list(layer, "layer"));
        c.partition = std::move(p);
    }
    if (j.contains("provenance") && j["provenance"].is_string())
        c.provenance = j["provenance"].get<std::string>();
    if (j.contains("metadata") && j["metadata"].is_object())
        for (const auto & [k, v] : j["metadata"].items())
            c.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return c;
}

auto bound_report_json(const BoundReport & report) -> std::string
{
    json entries = json::array();
    for (const auto & e : report.entries) {
        json j;
        j["name"] = e.name;
        j["applicable"] = e.applicable;
        j["notes"] = e.notes;
        j["direction"] = std::string(to_string(e.direction));
        if (e.applicable) {
            j["value"] = to_string(e.value);
            j["rounded"] = e.rounded().str();
        }
        j["at_time"] = e.at_time ? json(*e.at_time) : json(nullptr);
        j["satisfied"] = e.satisfied ? json(*e.satisfied) : json(nullptr);
        j["tight"] = e.tight ? json(*e.tight) : json(nullptr);
        entries.push_back(j);
    }
    json root;
    root["bounds"] = entries;
    root["violations"] = report.violations().size();
    return root.dump(2) + "\n";
}

auto bound_report_table(const BoundReport & report) -> std::string
{
    std::ostringstream out;
    out << std::left << std::setw(26) << "bound" << std::setw(12) << "direction" << std::setw(6) << "t" << std::setw(16)
        << "value" << std::setw(8) << "status" << "notes\n";
    for (const auto & e : report.entries) {
        std::string status = ! e.applicable ? "n/a" : ! e.satisfied ? "-" : ! *e.satisfied ? "VIOLATED" : e.tight.value_or(false) ? "tight" : "ok";
        std::string value = e.applicable ? to_string(e.value) : "-";
        std::string notes;
        for (const auto & n : e.notes)
            notes += (notes.empty() ? "" : "; ") + n;
        out << std::setw(26) << e.name << std::setw(12) << to_string(e.direction) << std::setw(6)
            << (e.at_time ? std::to_string(*e.at_time) : "-") << std::setw(16) << value << std::setw(8) << status << notes
            << "\n";
    }
    return out.str();
}

auto registry_json(const ReducedInstance & red) -> std::string
{
    json j;
    j["N"] = red.n;
    j["M"] = red.m;
    j["order"] = red.graph.order();
    j["size"] = red.graph.size();
    j["scaled"] = red.scaled;
    j["proof_properties"] = red.proof_properties;
    const auto & x = red.exponents;
    j["exponents"] = {{"v2_v1", x.v2_v1}, {"v2_v3", x.v2_v3}, {"v3_v4", x.v3_v4}, {"v1_v4", x.v1_v4},
        {"v2_v5", x.v2_v5}, {"v3_v5", x.v3_v5}};

    auto threshold = [&](const VertexSet & s) { return s.empty() ? json(nullptr) : json(red.tau[s.front()]); };
    j["classes"] = {{"V1", {{"ids", red.v1}, {"threshold", threshold(red.v1)}}},
        {"V2", {{"ids", red.v2}, {"threshold", threshold(red.v2)}}},
        {"V3", {{"ids", red.v3}, {"threshold", threshold(red.v3)}}},
        {"V4", {{"ids", red.v4}, {"threshold", threshold(red.v4)}}},
        {"V5", {{"ids", red.v5}, {"threshold", threshold(red.v5)}}}};
    json pairs = json::array();
    for (std::size_t i = 0; i < red.v2.size(); ++i)
        pairs.push_back({{"id", red.v2[i]}, {"a", red.v2_pairs[i].u}, {"b", red.v2_pairs[i].v}});
    j["V2_pairs"] = pairs;
    json supers = json::array();
    for (std::size_t i = 0; i < red.v3.size(); ++i)
        supers.push_back({{"id", red.v3[i]}, {"i", red.v3_pairs[i].i}, {"j", red.v3_pairs[i].j}});
    j["V3_super_edges"] = supers;
    json gadgets = json::array();
    for (const auto & g : red.gadgets)
        gadgets.push_back({{"u", g.u}, {"w", g.w}, {"k", g.k}, {"first", g.first},
            {"last", g.first + static_cast<Vertex>(g.k) - 1}});
    j["gadgets"] = gadgets;
    return j.dump(2) + "\n";
}

auto generate_corpus(const CorpusOptions & options) -> std::vector<CorpusEntry>
{
    if (options.n_min < 1 || options.n_max < options.n_min)
        throw InvalidParameter("corpus needs 1 <= n_min <= n_max");
    if (! (options.p > 0.0 && options.p <= 1.0))
        throw InvalidParameter("corpus edge probability must be in (0, 1]");
    std::vector<CorpusEntry> out;
    auto span = options.n_max - options.n_min + 1;
    for (std::size_t i = 0; i < options.count; ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
            static_cast<std::uint32_t>(i)};
        std::uint32_t words[2];
        seq.generate(words, words + 2);
        std::uint64_t graph_seed = (std::uint64_t{words[0]} << 32) | words[1];
        auto n = options.n_min + static_cast<std::size_t>(graph_seed % span);

        for (std::uint64_t attempt = 0;; ++attempt) {
            auto g = random_graph(n, options.p, graph_seed + attempt);
            if (! g.is_connected())
                continue;
            ThresholdAssignment tau;
            switch (options.rule) {
            case ThresholdRule::strict_majority: tau = strict_majority(g); break;
            case ThresholdRule::simple_majority: tau = simple_majority(g); break;
            case ThresholdRule::constant:
            case ThresholdRule::explicit_list: tau = constant_threshold(g, options.constant); break;
            }
            out.push_back({std::move(g), std::move(tau), graph_seed + attempt});
            break;
        }
    }
    return out;
}

auto make_threshold(const Graph & g, std::string_view rule) -> ThresholdAssignment
{
    if (rule == "strict")
        return strict_majority(g);
    if (rule == "simple")
        return simple_majority(g);
    if (rule.starts_with("const:")) {
        int c = 0;
        auto body = rule.substr(6);
        auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), c);
        if (ec != std::errc{} || end != body.data() + body.size())
            throw InvalidParameter("bad constant threshold '" + std::string(body) + "'");
        return constant_threshold(g, c);
    }
    throw InvalidParameter("unknown threshold rule '" + std::string(rule) + "' (strict, simple, const:<c>)");
}

}
