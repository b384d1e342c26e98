#include "racg/cli.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "racg/coxeter.hpp"
#include "racg/errors.hpp"
#include "racg/lcs.hpp"
#include "racg/nk.hpp"
#include "racg/series.hpp"

namespace racg::cli {

using nlohmann::json;

std::vector<std::string> catalog_names() {
    return {"k2", "k3", "path4", "cycle4", "pentagon", "simplex1", "simplex2", "simplex3"};
}

namespace {

FlagComplex simplex(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return FlagComplex::from_edges(n, edges);
}

std::optional<FlagComplex> try_catalog(const std::string& name) {
    if (name == "k2") return FlagComplex::from_edges(2, {});
    if (name == "k3") return FlagComplex::from_edges(3, {{1, 3}});
    if (name == "path4") return FlagComplex::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    if (name == "cycle4") return FlagComplex::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    if (name == "pentagon")
        return FlagComplex::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    if (name.rfind("simplex", 0) == 0) {
        const std::string tail = name.substr(7);
        if (!tail.empty() && std::all_of(tail.begin(), tail.end(), [](unsigned char c) {
                return std::isdigit(c);
            })) {
            int n = std::stoi(tail);
            if (n >= 1 && n <= FlagComplex::kMaxVertices) return simplex(n);
        }
    }
    return std::nullopt;
}

} // namespace

bool is_catalog_name(const std::string& name) { return try_catalog(name).has_value(); }

FlagComplex catalog_complex(const std::string& name) {
    if (auto K = try_catalog(name)) return *K;
    throw input_error("unknown built-in complex '" + name + "'");
}

FlagComplex complex_from_json(const std::string& text, bool flag_completion) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw input_error(std::string("complex file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer())
        throw input_error("complex JSON needs an integer field \"m\"");
    int m = j["m"].get<int>();
    if (m < 1 || m > FlagComplex::kMaxVertices)
        throw input_error("vertex count must be between 1 and " +
                          std::to_string(FlagComplex::kMaxVertices));

    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw input_error("\"edges\" must be an array of pairs");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw input_error("every edge must be a pair of integers");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }

    std::vector<std::vector<int>> faces;
    if (j.contains("faces")) {
        if (!j["faces"].is_array()) throw input_error("\"faces\" must be an array of vertex lists");
        for (const auto& f : j["faces"]) {
            if (!f.is_array()) throw input_error("every face must be a list of vertices");
            std::vector<int> face;
            for (const auto& v : f) {
                if (!v.is_number_integer()) throw input_error("face vertices must be integers");
                face.push_back(v.get<int>());
            }
            std::sort(face.begin(), face.end());
            if (std::adjacent_find(face.begin(), face.end()) != face.end())
                throw input_error("faces may not repeat vertices");
            faces.push_back(std::move(face));
        }
        for (const auto& f : faces)
            for (std::size_t a = 0; a < f.size(); ++a)
                for (std::size_t b = a + 1; b < f.size(); ++b) edges.emplace_back(f[a], f[b]);
    }

    FlagComplex K = FlagComplex::from_edges(m, edges);
    if (!faces.empty() && !flag_completion) {
        // The listed faces describe a flag complex iff every maximal clique of
        // the 1-skeleton is contained in some listed face.
        std::vector<VertexSet> face_sets;
        face_sets.reserve(faces.size());
        for (const auto& f : faces) face_sets.push_back(vertex_set_of(f));
        VertexSet all = full_vertex_set(m);
        for (VertexSet S = 1; S <= all; ++S) {
            if (std::popcount(S) < 3) continue;
            std::vector<int> vs = vertices_of(S);
            bool clique = true;
            for (std::size_t a = 0; a < vs.size() && clique; ++a)
                for (std::size_t b = a + 1; b < vs.size() && clique; ++b)
                    clique = K.has_edge(vs[a], vs[b]);
            if (!clique) continue;
            bool maximal = true;
            for (int v = 1; v <= m && maximal; ++v) {
                if ((S >> (v - 1)) & 1u) continue;
                maximal = (S & ~K.neighbors(v)) != 0;
            }
            if (!maximal) continue;
            bool covered = false;
            for (VertexSet f : face_sets) covered = covered || (S & ~f) == 0;
            if (!covered)
                throw input_error(
                    "the faces do not form a flag complex (a clique of the 1-skeleton is "
                    "missing); pass --flag-completion to take the flag completion");
        }
    }
    return K;
}

FlagComplex resolve_complex(const std::string& name_or_path, bool flag_completion) {
    if (auto K = try_catalog(name_or_path)) return *K;
    std::ifstream in(name_or_path);
    if (!in)
        throw input_error("'" + name_or_path +
                          "' is neither a built-in complex nor a readable file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return complex_from_json(buf.str(), flag_completion);
}

namespace {

int default_degree(const FlagComplex& K) { return K.m() <= 5 ? 6 : 4; }

json complex_summary(const FlagComplex& K) {
    json e = json::array();
    for (auto [a, b] : K.edge_list()) e.push_back({a, b});
    return {{"m", K.m()}, {"edges", e}};
}

std::string set_to_string(VertexSet J) {
    std::string s = "{";
    bool first = true;
    for (int v : vertices_of(J)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

std::string entry_formula(const GptwEntry& g) {
    std::vector<int> letters = g.outer();
    letters.push_back(g.j);
    std::string s;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) s += "[g" + std::to_string(letters[i]) + ",";
    s += "g" + std::to_string(letters.back());
    s += std::string(letters.size() - 1, ']');
    return s;
}

std::string poly_to_string(const std::map<int, mpz_class>& coeffs, const std::string& var) {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : coeffs) {
        if (c == 0) continue;
        mpz_class a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono = d == 0 ? "" : d == 1 ? var : var + "^" + std::to_string(d);
        if (mono.empty()) s += a.get_str();
        else if (a == 1) s += mono;
        else s += a.get_str() + mono;
    }
    return s.empty() ? "0" : s;
}

struct CommonOpts {
    std::string complex_spec;
    int max_degree = 0; // 0: use the per-complex default
    bool json_out = false;
    bool flag_completion = false;
    unsigned long long seed = 0;
    int threads = 1;
};

void add_common(CLI::App* sub, CommonOpts& o, bool needs_complex = true) {
    auto* opt = sub->add_option("--complex", o.complex_spec,
                                "built-in complex name or path to a JSON file");
    if (needs_complex) opt->required();
    sub->add_option("--max-degree", o.max_degree, "largest total degree to compute");
    sub->add_flag("--json", o.json_out, "emit the JSON report only");
    sub->add_flag("--flag-completion", o.flag_completion,
                  "accept non-flag face lists by taking the flag completion of their 1-skeleton");
    sub->add_option("--seed", o.seed, "seed echoed into the report (reserved for sampling)");
    sub->add_option("--threads", o.threads, "worker threads for the heavy subcommands")
        ->check(CLI::PositiveNumber);
}

void emit(const CommonOpts& o, const json& report, const std::string& human) {
    if (o.json_out) std::cout << report.dump(2) << "\n";
    else std::cout << human;
}

json verdicts_json(const ConjectureReport& rep) {
    json degrees = json::array();
    for (const auto& [k, v] : rep.degrees)
        degrees.push_back({{"degree", k},
                           {"n_k", v.n_k},
                           {"target", v.target},
                           {"lower_bound", v.lower},
                           {"verified", v.verified}});
    return {{"max_degree", rep.max_degree},
            {"degrees", degrees},
            {"all_verified", rep.all_verified()},
            {"semantics",
             "verified means the group-side lower bound met the conjectured dimension; "
             "anything else is inconclusive, never a refutation"}};
}

int cmd_analyze(const CommonOpts& o) {
    FlagComplex K = resolve_complex(o.complex_spec, o.flag_completion);
    int D = o.max_degree > 0 ? o.max_degree : default_degree(K);
    SubcomplexTypeCounts c = subcomplex_type_counts(K);
    long long h1_total = 0;
    VertexSet all = full_vertex_set(K.m());
    for (VertexSet J = 1; J <= all; ++J) h1_total += h1_dim_gf2(K, J);
    GptwIndex gens = gptw_index(K);
    DimTable tbl = extract_exponents(rhs_poly(K), D);

    json by_degree = json::object();
    for (const auto& [k, n] : tbl.by_total_degree()) by_degree[std::to_string(k)] = n;
    json rep = {{"command", "analyze"},
                {"complex", complex_summary(K)},
                {"edge_count", K.edge_count()},
                {"chordal", is_chordal(K)},
                {"subcomplex_counts",
                 {{"edge_pair", c.edge_pair},
                  {"non_edge_pair", c.non_edge_pair},
                  {"three_discrete", c.three_discrete},
                  {"edge_plus_point", c.edge_plus_point},
                  {"path3", c.path3},
                  {"triangle", c.triangle}}},
                {"sum_h1_over_subcomplexes", h1_total},
                {"generator_count", gens.size()},
                {"series_exponents_by_degree", by_degree},
                {"seed", o.seed}};

    std::ostringstream out;
    out << "complex: " << K.m() << " vertices, " << K.edge_count() << " edges\n"
        << "chordal: " << (is_chordal(K) ? "yes" : "no") << "\n"
        << "non-edges: " << c.non_edge_pair << ", discrete triples: " << c.three_discrete
        << ", edge+point triples: " << c.edge_plus_point << "\n"
        << "sum of first homology ranks over full subcomplexes: " << h1_total << "\n"
        << "generating-set entries: " << gens.size() << "\n"
        << "series exponents by degree:";
    for (const auto& [k, n] : tbl.by_total_degree()) out << " n_" << k << "=" << n;
    out << "\n";
    emit(o, rep, out.str());
    return 0;
}

int cmd_gptw(const CommonOpts& o) {
    FlagComplex K = resolve_complex(o.complex_spec, o.flag_completion);
    GptwIndex gens = gptw_index(K);
    json list = json::array();
    std::ostringstream out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const GptwEntry& g = gens[i];
        list.push_back({{"name", "q" + std::to_string(i + 1)},
                        {"J", vertices_of(g.J)},
                        {"j", g.j},
                        {"degree", g.degree()},
                        {"formula", entry_formula(g)}});
        out << "q" << i + 1 << "  J=" << set_to_string(g.J) << "  j=" << g.j << "  degree "
            << g.degree() << "  " << entry_formula(g) << "\n";
    }
    json rep = {{"command", "gptw"},
                {"complex", complex_summary(K)},
                {"count", gens.size()},
                {"generators", list}};
    out << "total: " << gens.size() << "\n";
    emit(o, rep, out.str());
    return 0;
}

int cmd_series(const CommonOpts& o) {
    FlagComplex K = resolve_complex(o.complex_spec, o.flag_completion);
    int D = o.max_degree > 0 ? o.max_degree : default_degree(K);
    MultiPoly P = rhs_poly(K);
    DimTable tbl = extract_exponents(P, D);
    json terms = json::array();
    for (const auto& [alpha, n] : tbl.n) terms.push_back({{"alpha", alpha}, {"n", n}});
    json by_degree = json::object();
    for (const auto& [k, n] : tbl.by_total_degree()) by_degree[std::to_string(k)] = n;
    std::string single = poly_to_string(P.single_variable(), "x");
    json rep = {{"command", "series"},
                {"complex", complex_summary(K)},
                {"max_degree", D},
                {"rhs_single_variable", single},
                {"exponents", terms},
                {"exponents_by_degree", by_degree}};
    std::ostringstream out;
    out << "alternating-sum polynomial: " << single << "\n" << "exponents:";
    for (const auto& [k, n] : tbl.by_total_degree()) out << " n_" << k << "=" << n;
    out << "\n";
    emit(o, rep, out.str());
    return 0;
}

int cmd_dims(const CommonOpts& o) {
    FlagComplex K = resolve_complex(o.complex_spec, o.flag_completion);
    int D = o.max_degree > 0 ? o.max_degree : default_degree(K);
    NkContext ctx(K);
    NkDims nd = nk_dims(ctx, D, o.threads);
    DimTable pred = extract_exponents(rhs_poly(K), D);

    bool match = true;
    json mismatches = json::array();
    std::set<Exponent> alphas;
    for (const auto& [a, n] : nd.dims) alphas.insert(a);
    for (const auto& [a, n] : pred.n)
        if (total_degree(a) >= 2 && total_degree(a) <= D) alphas.insert(a);
    for (const Exponent& a : alphas) {
        long long got = nd.dims.count(a) ? nd.dims.at(a) : 0;
        long long want = pred.at(a);
        if (got != want) {
            match = false;
            mismatches.push_back({{"alpha", a}, {"computed", got}, {"series", want}});
        }
    }

    json list = json::array();
    for (const auto& [a, n] : nd.dims) list.push_back({{"alpha", a}, {"n", n}});
    json by_degree = json::object();
    for (const auto& [k, n] : nd.by_total_degree()) by_degree[std::to_string(k)] = n;
    json rep = {{"command", "dims"},
                {"complex", complex_summary(K)},
                {"max_degree", D},
                {"dims", list},
                {"dims_by_degree", by_degree},
                {"series_match", match},
                {"mismatches", mismatches}};
    std::ostringstream out;
    out << "computed dimensions by degree:";
    for (const auto& [k, n] : nd.by_total_degree()) out << " " << k << ":" << n;
    out << "\nseries prediction " << (match ? "matches" : "DIFFERS") << "\n";
    emit(o, rep, out.str());
    return 0;
}

int cmd_conjecture(const CommonOpts& o) {
    FlagComplex K = resolve_complex(o.complex_spec, o.flag_completion);
    int D = o.max_degree > 0 ? o.max_degree : default_degree(K);
    ConjectureReport rep = conjecture_status(K, D, o.threads);
    json jr = verdicts_json(rep);
    jr["command"] = "conjecture";
    jr["complex"] = complex_summary(K);
    std::ostringstream out;
    out << "degree  n_k  target  lower  verdict\n";
    for (const auto& [k, v] : rep.degrees)
        out << std::setw(6) << k << std::setw(5) << v.n_k << std::setw(8) << v.target
            << std::setw(7) << v.lower << "  " << (v.verified ? "verified" : "inconclusive")
            << "\n";
    out << (rep.all_verified() ? "conjecture verified on every computed degree\n"
                               : "some degrees remain inconclusive (never refuted)\n");
    emit(o, jr, out.str());
    return 0;
}

struct BracketOpts {
    std::string lhs, rhs;
};

int cmd_bracket(const CommonOpts& o, const BracketOpts& b) {
    FlagComplex K = resolve_complex(o.complex_spec, o.flag_completion);
    NkContext ctx(K);
    LElem l = parse_lelem(ctx, b.lhs);
    LElem r = parse_lelem(ctx, b.rhs);
    LElem res = bracket_L(ctx, l, r);
    std::string rendered = format_lelem(ctx, res);
    json rep = {{"command", "bracket"},
                {"complex", complex_summary(K)},
                {"lhs", format_lelem(ctx, l)},
                {"rhs", format_lelem(ctx, r)},
                {"bracket", rendered},
                {"semantics", "conjectural: assumes the graded pieces match the series"}};
    emit(o, rep, "[" + b.lhs + ", " + b.rhs + "] = " + rendered + "   (conjectural)\n");
    return 0;
}

int cmd_examples(const CommonOpts& o) {
    struct Line {
        std::string label, expected, actual;
    };
    std::vector<Line> lines;
    auto check = [&](const std::string& label, const std::string& expected,
                     const std::string& actual) {
        lines.push_back({label, expected, actual});
    };

    { // two isolated vertices: one generator, everything shifts by t
        FlagComplex K = catalog_complex("k2");
        NkContext ctx(K);
        GptwIndex gens = ctx.gens();
        std::string g0 = gens.size() == 1
                             ? entry_formula(gens[0]) + " (J=" + set_to_string(gens[0].J) +
                                   ", j=" + std::to_string(gens[0].j) + ")"
                             : "wrong count " + std::to_string(gens.size());
        check("k2 generating set", "[g2,g1] (J={1,2}, j=1)", g0);
        check("k2 [g1,[g1,g2]]", "q1 t",
              format_lelem(ctx, LElem{{}, remove_repeats(ctx, {1, 1, 2})}));
        check("k2 [g1,[g1,[g1,g2]]]", "q1 t^2",
              format_lelem(ctx, LElem{{}, remove_repeats(ctx, {1, 1, 1, 2})}));
        ConjectureReport rep = conjecture_status(K, 6, o.threads);
        std::ostringstream verdicts;
        for (const auto& [k, v] : rep.degrees)
            verdicts << (k > 2 ? " " : "") << k << ":"
                     << (v.verified && v.lower == 1 ? "1/verified" : "unexpected");
        check("k2 conjecture degrees 2..6", "2:1/verified 3:1/verified 4:1/verified 5:1/verified 6:1/verified",
              verdicts.str());
    }

    { // one edge {1,3} on three vertices: the full bracket table
        FlagComplex K = catalog_complex("k3");
        NkContext ctx(K);
        auto table_line = [&](const std::string& lhs, const std::string& rhs) {
            LElem res = bracket_L(ctx, parse_lelem(ctx, lhs), parse_lelem(ctx, rhs));
            return format_lelem(ctx, res);
        };
        const std::vector<std::array<std::string, 3>> expected = {
            {"g1", "g2", "q1"},  {"g1", "g3", "0"},  {"g2", "g3", "q2"},
            {"g1", "q1", "q1 t"}, {"g2", "q1", "q1 t"}, {"g3", "q1", "q3"},
            {"g1", "q2", "q3"},  {"g2", "q2", "q2 t"}, {"g3", "q2", "q2 t"},
            {"g1", "q3", "q3 t"}, {"g2", "q3", "[q1,q2] + q3 t"}, {"g3", "q3", "q3 t"}};
        for (const auto& [lhs, rhs, want] : expected)
            check("k3 [" + lhs + "," + rhs + "]", want, table_line(lhs, rhs));
    }

    { // pentagon: ten generators and the single degree-5 relation
        FlagComplex K = catalog_complex("pentagon");
        NkContext ctx(K);
        const GptwIndex& gens = ctx.gens();
        std::ostringstream names;
        for (std::size_t i = 0; i < gens.size(); ++i)
            names << (i ? " " : "") << entry_formula(gens[i]);
        check("pentagon generating set",
              "[g3,g1] [g4,g1] [g4,g2] [g5,g2] [g5,g3] "
              "[g2,[g4,g1]] [g3,[g4,g1]] [g1,[g5,g3]] [g3,[g5,g2]] [g4,[g5,g2]]",
              names.str());
        if (gens.size() == 10) {
            LiePoly rel;
            bool each_nonzero = true;
            for (int i = 0; i < 5; ++i) {
                LiePoly term = lie_bracket(LiePoly(LieTree::gptw_leaf(i)),
                                           LiePoly(LieTree::gptw_leaf(9 - i)));
                each_nonzero = each_nonzero && !ctx.eval(term).is_zero();
                rel += term;
            }
            check("pentagon single relation",
                  "sum vanishes, summands do not",
                  std::string(ctx.eval(rel).is_zero() ? "sum vanishes" : "sum nonzero") +
                      (each_nonzero ? ", summands do not" : ", some summand vanishes"));
        } else {
            check("pentagon single relation", "sum vanishes, summands do not",
                  "generator count off");
        }
    }

    bool ok = true;
    json jlines = json::array();
    std::ostringstream out;
    for (const Line& l : lines) {
        bool good = l.expected == l.actual;
        ok = ok && good;
        jlines.push_back(
            {{"label", l.label}, {"expected", l.expected}, {"actual", l.actual}, {"ok", good}});
        out << (good ? "ok   " : "FAIL ") << l.label << ": " << l.actual;
        if (!good) out << "   (expected: " << l.expected << ")";
        out << "\n";
    }
    out << (ok ? "all worked examples reproduced\n" : "some worked examples DIFFER\n");
    json rep = {{"command", "examples"}, {"lines", jlines}, {"all_ok", ok}};
    emit(o, rep, out.str());
    return ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"graded Lie-algebra invariants of right-angled Coxeter groups over GF(2)"};
    app.require_subcommand(1);

    CommonOpts az, gp, se, di, cj, br, ex;
    BracketOpts bopts;

    CLI::App* s_analyze = app.add_subcommand("analyze", "summary invariants of a complex");
    add_common(s_analyze, az);
    CLI::App* s_gptw = app.add_subcommand("gptw", "list the generating set");
    add_common(s_gptw, gp);
    CLI::App* s_series =
        app.add_subcommand("series", "alternating-sum polynomial and its exponents");
    add_common(s_series, se);
    CLI::App* s_dims =
        app.add_subcommand("dims", "dimensions of the generated Lie subalgebra");
    add_common(s_dims, di);
    CLI::App* s_conj =
        app.add_subcommand("conjecture", "per-degree dimension verdicts for the group");
    add_common(s_conj, cj);
    CLI::App* s_bracket = app.add_subcommand("bracket", "conjectural bracket calculator");
    add_common(s_bracket, br);
    s_bracket->add_option("--lhs", bopts.lhs, "left operand expression")->required();
    s_bracket->add_option("--rhs", bopts.rhs, "right operand expression")->required();
    CLI::App* s_examples =
        app.add_subcommand("examples", "reproduce the built-in worked examples");
    add_common(s_examples, ex, /*needs_complex=*/false);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (s_analyze->parsed()) return cmd_analyze(az);
        if (s_gptw->parsed()) return cmd_gptw(gp);
        if (s_series->parsed()) return cmd_series(se);
        if (s_dims->parsed()) return cmd_dims(di);
        if (s_conj->parsed()) return cmd_conjecture(cj);
        if (s_bracket->parsed()) return cmd_bracket(br, bopts);
        if (s_examples->parsed()) return cmd_examples(ex);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const identity_violation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 4;
    } catch (const internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 4;
    }
    return 1;
}

} // namespace racg::cli
