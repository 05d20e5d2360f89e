#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it in-process.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "onikit/onikit.hpp"

namespace onikit::cli {

using io::Json;

struct Options {
    std::string in;
    std::string other;
    std::string format = "json";
    std::string out;
    bool assert_result = false;
    bool pretty = false;
    std::size_t cap_forest = kDefaultFacetCap;
    std::size_t cap_decompose = kDefaultDecompositionCap;
    std::size_t cap_oracle = 20;
    bool inject_fault = false;
    bool brute_force = false;
    std::string variable;
    std::string certificate;
    std::string first;
    std::string second;
    std::string at;
    std::string to;
    std::size_t n = 6;
    std::vector<std::string> vertices;
    std::string name;
};

/// Result document plus the boolean that --assert inspects, if any.
/// `failed` forces exit 1 regardless of --assert.
struct Outcome {
    Json doc;
    std::optional<bool> verdict;
    bool failed = false;
};

namespace detail {

inline std::string slurp(const std::string& path, std::istream& stdin_stream)
{
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>()};
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline Json parse_json(const std::string& text, const std::string& what)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(what + ": malformed JSON (" + e.what() + ")");
    }
}

class Inputs {
public:
    Inputs(const Options& o, std::istream& in) : opts_(o), stdin_(in) {}

    Json json(const std::string& path, const char* what) const
    {
        if (path.empty() && stdin_used_)
            throw InputError(std::string(what) + ": no file given and standard input is already used");
        if (path.empty() || path == "-")
            stdin_used_ = true;
        return parse_json(slurp(path, stdin_), what);
    }

    Json main() const { return json(opts_.in, "--in"); }
    Json other() const
    {
        if (opts_.other.empty())
            throw InputError("this command needs --other");
        return json(opts_.other, "--other");
    }

    Graph graph(const std::string& path, const char* what) const
    {
        if (opts_.format == "text") {
            if (path.empty() || path == "-")
                stdin_used_ = true;
            return io::graph_from_text(slurp(path, stdin_));
        }
        return io::graph_from_json(json(path, what));
    }

    Graph graph() const { return graph(opts_.in, "--in"); }

private:
    const Options& opts_;
    std::istream& stdin_;
    mutable bool stdin_used_ = false;
};

inline Json sets_json(const SpernerFamily& f) { return io::to_json(f)["sets"]; }

inline Json heights_json(const Graph& g)
{
    auto hp = heights(g);
    Json per = Json::object();
    for (std::size_t v = 0; v < g.order(); ++v)
        per[g.label(v)] = hp.height[v] == kNoHeight ? Json(nullptr) : Json(hp.height[v]);
    Json strata = Json::array();
    for (const auto& s : hp.strata)
        strata.push_back(g.universe().labels_of(s));
    return Json{{"heights", per},
                {"strata", strata},
                {"odd", g.universe().labels_of(hp.odd)},
                {"even", g.universe().labels_of(hp.even)},
                {"height", hp.graph_height},
                {"balanced", hp.balanced},
                {"tree", hp.tree},
                {"forest", hp.forest}};
}

inline Json checks_json(const std::vector<CheckResult>& results, bool& all)
{
    Json arr = Json::array();
    all = true;
    for (const auto& r : results) {
        Json item{{"check", r.name}, {"passed", r.passed}};
        if (!r.passed)
            item["detail"] = r.detail;
        arr.push_back(item);
        all = all && r.passed;
    }
    return arr;
}

inline Json fixture_json(const std::string& name)
{
    if (name == "p6")
        return io::to_json(fixtures::p6());
    if (name == "t_a")
        return io::to_json(fixtures::t_a());
    if (name == "beg_A")
        return io::to_json(fixtures::beg_a());
    if (name == "base_case")
        return io::to_json(fixtures::base_case());
    if (name == "c7")
        return io::to_json(fixtures::c7());
    std::string known;
    for (const auto& n : fixtures::names())
        known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown fixture '" + name + "'; available: " + known);
}

}  // namespace detail

using Action = std::function<Outcome(const detail::Inputs&, const Options&)>;

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out)
{
    Options opts;
    Action action;

    CLI::App app{"Neighbourhood ideals, total domination and geometric vertex decomposition", "oni-kit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    auto common = [&](CLI::App* c) {
        c->add_option("--in", opts.in, "Input file (default: standard input)");
        c->add_option("--format", opts.format, "Graph input format")->check(CLI::IsMember({"json", "text"}));
        c->add_option("--out", opts.out, "Write the result here instead of standard output");
        c->add_flag("--assert", opts.assert_result, "Exit 1 when the boolean result is false");
        c->add_flag("--pretty", opts.pretty, "Indented output");
        c->add_option("--cap-forest", opts.cap_forest, "Facet cap for forest and cycle tests");
        c->add_option("--cap-decompose", opts.cap_decompose, "Vertex cap for the exhaustive decomposition search");
        c->add_option("--cap-oracle", opts.cap_oracle, "Universe cap for brute-force dualization");
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Action a) {
        auto* c = parent->add_subcommand(name, help);
        common(c);
        c->callback([&action, a] { action = a; });
        return c;
    };
    auto group = [&](const std::string& name, const std::string& help) {
        auto* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        return g;
    };
    auto with_other = [&](CLI::App* c) { c->add_option("--other", opts.other, "Second operand")->required(); };

    // dualize
    auto* dualize = leaf(&app, "dualize", "Minimal transversals of a Sperner family", [](const auto& in, const Options& o) {
        auto f = io::family_from_json(in.main());
        auto t = o.brute_force ? brute_force_transversals(f, o.cap_oracle) : minimal_transversals(f);
        return Outcome{Json{{"transversals", io::to_json(t)}}, {}};
    });
    dualize->add_flag("--brute-force", opts.brute_force, "Exhaustive subset scan (capped by --cap-oracle)");

    // ideal
    auto* ideal = group("ideal", "Square-free monomial ideals");
    leaf(ideal, "primes", "Minimal primes", [](const auto& in, const Options&) {
        auto mp = minimal_primes(io::ideal_from_json(in.main()));
        return Outcome{Json{{"minimal_primes", detail::sets_json(mp.primes)}, {"zero_ideal", mp.zero_ideal}}, {}};
    });
    leaf(ideal, "unmixed", "All minimal primes have the same height", [](const auto& in, const Options&) {
        bool u = is_unmixed(io::ideal_from_json(in.main()));
        return Outcome{Json{{"unmixed", u}}, u};
    });
    leaf(ideal, "sr-complex", "Stanley-Reisner complex", [](const auto& in, const Options&) {
        return Outcome{Json{{"complex", io::to_json(stanley_reisner_complex(io::ideal_from_json(in.main())))}}, {}};
    });
    with_other(leaf(ideal, "equal", "Equality of minimal generators", [](const auto& in, const Options&) {
        bool e = io::ideal_from_json(in.main()) == io::ideal_from_json(in.other());
        return Outcome{Json{{"equal", e}}, e};
    }));
    with_other(leaf(ideal, "sum", "Sum of two ideals over one universe", [](const auto& in, const Options&) {
        return Outcome{Json{{"ideal", io::to_json(sum(io::ideal_from_json(in.main()), io::ideal_from_json(in.other())))}}, {}};
    }));
    with_other(leaf(ideal, "intersect", "Intersection of two ideals over one universe", [](const auto& in, const Options&) {
        auto i = intersect(io::ideal_from_json(in.main()), io::ideal_from_json(in.other()));
        return Outcome{Json{{"ideal", io::to_json(i)}}, {}};
    }));

    // complex
    auto* complex = group("complex", "Simplicial complexes");
    leaf(complex, "vd", "Vertex decomposability with a shedding certificate", [](const auto& in, const Options&) {
        auto r = is_vertex_decomposable(io::complex_from_json(in.main()));
        return Outcome{Json{{"vertex_decomposable", r.decomposable},
                            {"certificate", r.certificate ? io::to_json(*r.certificate) : Json(nullptr)}},
                       r.decomposable};
    });
    leaf(complex, "sr-ideal", "Stanley-Reisner ideal", [](const auto& in, const Options&) {
        return Outcome{Json{{"ideal", io::to_json(stanley_reisner_ideal(io::complex_from_json(in.main())))}}, {}};
    });
    leaf(complex, "facet-ideal", "Ideal generated by the facets", [](const auto& in, const Options&) {
        return Outcome{Json{{"ideal", io::to_json(facet_ideal(io::complex_from_json(in.main())))}}, {}};
    });
    leaf(complex, "covers", "Minimal vertex covers", [](const auto& in, const Options&) {
        auto c = minimal_vertex_covers(io::complex_from_json(in.main()));
        return Outcome{Json{{"minimal_vertex_covers", detail::sets_json(c)}}, {}};
    });
    leaf(complex, "tree", "Simplicial tree and forest tests", [](const auto& in, const Options& o) {
        auto c = io::complex_from_json(in.main());
        bool forest = is_simplicial_forest(c, o.cap_forest);
        bool tree = forest && is_connected(c);
        return Outcome{Json{{"simplicial_tree", tree}, {"simplicial_forest", forest}}, tree};
    });
    leaf(complex, "cycle", "Simplicial cycle test", [](const auto& in, const Options& o) {
        auto c = io::complex_from_json(in.main());
        auto r = is_cycle(c, o.cap_forest);
        Json order = Json::array();
        for (const auto& f : r.order)
            order.push_back(c.universe().labels_of(f));
        return Outcome{Json{{"cycle", r.is_cycle}, {"ring_verified", r.ring_verified}, {"order", order}}, r.is_cycle};
    });
    with_other(leaf(complex, "join", "Join of complexes on disjoint vertices", [](const auto& in, const Options&) {
        auto j = join(io::complex_from_json(in.main()), io::complex_from_json(in.other()));
        return Outcome{Json{{"complex", io::to_json(j)}}, {}};
    }));

    // graph
    auto* graph = group("graph", "Graphs and trees");
    leaf(graph, "oni", "Open neighbourhood ideal", [](const auto& in, const Options&) {
        return Outcome{Json{{"ideal", io::to_json(oni(in.graph()))}}, {}};
    });
    leaf(graph, "odd-oni", "Odd open neighbourhood ideal of a balanced forest", [](const auto& in, const Options&) {
        return Outcome{Json{{"ideal", io::to_json(odd_oni(in.graph()))}}, {}};
    });
    leaf(graph, "td-sets", "Minimal total dominating sets", [](const auto& in, const Options&) {
        return Outcome{Json{{"minimal_td_sets", detail::sets_json(minimal_td_sets(in.graph()))}}, {}};
    });
    leaf(graph, "odd-td-sets", "Minimal odd total dominating sets", [](const auto& in, const Options&) {
        return Outcome{Json{{"minimal_odd_td_sets", detail::sets_json(minimal_odd_td_sets(in.graph()))}}, {}};
    });
    leaf(graph, "heights", "Heights, strata and balance", [](const auto& in, const Options&) {
        return Outcome{detail::heights_json(in.graph()), {}};
    });
    leaf(graph, "unmixed", "TD-unmixedness", [](const auto& in, const Options&) {
        auto g = in.graph();
        bool u = is_td_unmixed(g);
        auto hp = heights(g);
        Json doc{{"td_unmixed", u}};
        doc["structural"] = hp.tree && hp.balanced ? Json(is_td_unmixed_structural(g)) : Json(nullptr);
        doc["odd_td_unmixed"] = hp.balanced ? Json(is_odd_td_unmixed(g)) : Json(nullptr);
        return Outcome{doc, u};
    });
    leaf(graph, "stable", "Stable complex", [](const auto& in, const Options&) {
        return Outcome{Json{{"complex", io::to_json(stable_complex(in.graph()))}}, {}};
    });
    leaf(graph, "even-stable", "Even-stable complex of a balanced forest", [](const auto& in, const Options&) {
        return Outcome{Json{{"complex", io::to_json(even_stable_complex(in.graph()))}}, {}};
    });
    leaf(graph, "chordal", "Chordality", [](const auto& in, const Options&) {
        bool c = is_chordal(in.graph());
        return Outcome{Json{{"chordal", c}}, c};
    });
    auto* decompose = leaf(graph, "decompose", "Split a tree into two balanced forests", [](const auto& in, const Options& o) {
        auto t = in.graph();
        if (!o.first.empty() || !o.second.empty()) {
            if (o.first.empty() || o.second.empty())
                throw InputError("verification needs both --first and --second");
            auto check = check_decomposition(t, in.graph(o.first, "--first"), in.graph(o.second, "--second"));
            return Outcome{Json{{"valid", check.ok()},
                                {"balanced", check.balanced},
                                {"partition", check.partition},
                                {"ideal_sum", check.ideal_sum}},
                           check.ok()};
        }
        auto d = search_decomposition(t, o.cap_decompose);
        Json doc{{"found", d.has_value()}};
        doc["decomposition"] = d ? Json{{"first", io::to_json(d->first)}, {"second", io::to_json(d->second)}} : Json(nullptr);
        return Outcome{doc, d.has_value()};
    });
    decompose->add_option("--first", opts.first, "First piece to verify instead of searching");
    decompose->add_option("--second", opts.second, "Second piece to verify instead of searching");
    leaf(graph, "split-vertex", "Canonically first height-2 vertex of degree 2", [](const auto& in, const Options&) {
        auto t = in.graph();
        return Outcome{Json{{"split_vertex", t.label(find_split_vertex(t))}}, {}};
    });

    // build
    auto* build = group("build", "Graph builders");
    leaf(build, "path", "Path on vertices 0..n", [](const auto&, const Options& o) {
        return Outcome{io::to_json(path_graph(o.n)), {}};
    })->add_option("--n", opts.n, "Last vertex")->required();
    leaf(build, "o-seq", "Extend P_6 along a vertex sequence", [](const auto&, const Options& o) {
        return Outcome{io::to_json(o_sequence(o.vertices)), {}};
    })->add_option("vertices", opts.vertices, "Vertex labels, in order");
    leaf(build, "realize", "Chordal graph whose minimal TD-sets are the given family", [](const auto& in, const Options&) {
        return Outcome{io::to_json(realize_as_oni(io::family_from_json(in.main()))), {}};
    });
    auto* ej = leaf(build, "edge-join", "Disjoint union plus one edge", [](const auto& in, const Options& o) {
        auto g1 = in.graph();
        if (o.other.empty())
            throw InputError("edge-join needs --other");
        auto g2 = in.graph(o.other, "--other");
        return Outcome{io::to_json(edge_join(g1, g2, o.at, o.to)), {}};
    });
    ej->add_option("--other", opts.other, "Second graph")->required();
    ej->add_option("--at", opts.at, "Endpoint in the first graph")->required();
    ej->add_option("--to", opts.to, "Endpoint in the second graph")->required();

    // gvd
    auto* gvd = group("gvd", "Geometric vertex decomposition");
    leaf(gvd, "check", "GVD decision with a certificate", [](const auto& in, const Options&) {
        auto r = is_gvd(io::ideal_from_json(in.main()));
        return Outcome{Json{{"gvd", r.gvd}, {"certificate", r.certificate ? io::to_json(*r.certificate) : Json(nullptr)}}, r.gvd};
    });
    leaf(gvd, "split", "Link and deletion ideals at a variable", [](const auto& in, const Options& o) {
        auto i = io::ideal_from_json(in.main());
        auto [c, n] = split(i, o.variable);
        bool valid = is_valid_geometric_decomposition(i, o.variable);
        return Outcome{Json{{"C", io::to_json(c)}, {"N", io::to_json(n)}, {"valid", valid}}, valid};
    })->add_option("--var", opts.variable, "Split variable")->required();
    leaf(gvd, "certify-tree", "Search-free certificate for a TD-unmixed balanced forest", [](const auto& in, const Options&) {
        auto t = in.graph();
        auto cert = certify_tree_gvd(t);
        return Outcome{Json{{"ideal", io::to_json(odd_oni(t))}, {"certificate", io::to_json(*cert)}}, {}};
    });
    leaf(gvd, "validate", "Replay a certificate against an ideal", [](const auto& in, const Options& o) {
        auto i = io::ideal_from_json(in.main());
        auto cert = io::gvd_certificate_from_json(in.json(o.certificate, "--certificate"));
        bool ok = validate_certificate(i, *cert);
        return Outcome{Json{{"valid", ok}}, ok};
    })->add_option("--certificate", opts.certificate, "Certificate JSON file")->required();

    // fixture, verify-paper
    leaf(&app, "fixture", "Emit a reference object", [](const auto&, const Options& o) {
        return Outcome{detail::fixture_json(o.name), {}};
    })->add_option("name", opts.name, "Fixture name")->required();
    leaf(&app, "verify-paper", "Run the golden checks on the worked examples", [](const auto&, const Options& o) {
        bool all = true;
        auto checks = detail::checks_json(run_reference_checks(o.inject_fault ? Dualizer(faulty_transversals)
                                                                                : Dualizer(minimal_transversals)),
                                          all);
        return Outcome{Json{{"passed", all}, {"checks", checks}}, all, !all};
    })->add_flag("--inject-fault", opts.inject_fault, "Use a broken transversal kernel");

    auto emit = [&](const Json& doc) {
        auto text = doc.dump(opts.pretty ? 2 : -1) + "\n";
        if (opts.out.empty()) {
            out << text;
            return;
        }
        std::ofstream f(opts.out);
        if (!f)
            throw InputError("cannot write '" + opts.out + "'");
        f << text;
    };

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, out);
    } catch (const CLI::ParseError& e) {
        out << Json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
        return 2;
    }

    try {
        detail::Inputs inputs(opts, in);
        auto outcome = action(inputs, opts);
        emit(outcome.doc);
        if (opts.assert_result && outcome.verdict && !*outcome.verdict)
            return 1;
        if (outcome.failed)
            return 1;
        return 0;
    } catch (const Error& e) {
        out << Json{{"error", e.what()}, {"kind", e.kind()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << Json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
        return 2;
    }
}

/// ONI_KIT_SEED is accepted but unused: every command is deterministic.
inline std::optional<unsigned long long> seed_from_environment()
{
    const char* s = std::getenv("ONI_KIT_SEED");
    if (!s || !*s)
        return std::nullopt;
    char* end = nullptr;
    auto v = std::strtoull(s, &end, 10);
    if (*end != '\0')
        return std::nullopt;
    return v;
}

}  // namespace onikit::cli
