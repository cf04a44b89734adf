#include "pgst/census.hpp"
#include "pgst/corpus.hpp"
#include "pgst/engine.hpp"
#include "pgst/graph_io.hpp"
#include "pgst/paths.hpp"
#include "pgst/simulator.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace pgst;

std::string factored(const UniPoly& p) {
    if (p.degree() < 1) return p.str();
    Factorization f = factor_over_Q(p);
    if (f.factors.size() == 1 && f.factors.front().second == 1 && f.unit == 1)
        return p.str() + "  (irreducible)";
    std::ostringstream out;
    out << p.str() << "  =  ";
    if (!(f.unit == 1)) out << to_string(f.unit) << " ";
    for (const auto& [factor, mult] : f.factors) {
        out << "(" << factor.str() << ")";
        if (mult > 1) out << "^" << mult;
    }
    return out.str();
}

json poly_json(const UniPoly& p) {
    json out;
    out["text"] = p.str();
    if (p.degree() >= 1) {
        json factors = json::array();
        Factorization f = factor_over_Q(p);
        for (const auto& [factor, mult] : f.factors) factors.push_back({factor.str(), mult});
        out["factors"] = std::move(factors);
        out["unit"] = to_string(f.unit);
    }
    return out;
}

json relation_json(const IntegerRelation& rel) {
    json out;
    out["ell"] = rel.ell;
    out["m"] = rel.m;
    out["residual"] = rel.residual;
    out["sum_m_odd"] = rel.sum_m_odd;
    out["exact_verified"] = rel.exact_verified;
    return out;
}

json verdict_json(const PGSTVerdict& v) {
    json out;
    out["status"] = status_name(v.status);
    out["rule"] = v.rule;
    out["cospectral"] = v.cospectrality.cospectral;
    out["parallel"] = v.cospectrality.parallel;
    out["strongly_cospectral"] = v.cospectrality.strongly_cospectral;
    out["witness"] = v.cospectrality.witness;
    out["p_plus"] = poly_json(v.pair.p_plus);
    out["p_minus"] = poly_json(v.pair.p_minus);
    if (v.pair.p_zero_available) out["p_zero"] = poly_json(v.pair.p_zero);
    if (v.sufficiency) {
        out["certificate"] = {{"kind", "trace_ratio"},
                              {"ratio_plus", to_string(v.sufficiency->ratio_plus)},
                              {"ratio_minus", to_string(v.sufficiency->ratio_minus)}};
    } else if (v.odd_degree) {
        out["certificate"] = {{"kind", "odd_degree_pair"},
                              {"f_plus", v.odd_degree->f_plus.str()},
                              {"f_minus", v.odd_degree->f_minus.str()}};
    } else if (v.three_factor) {
        out["certificate"] = {{"kind", "three_factor"},
                              {"side", std::string(1, v.three_factor->side)},
                              {"f", v.three_factor->f.str()},
                              {"g", v.three_factor->g.str()},
                              {"h", v.three_factor->h.str()}};
    }
    if (v.relation) out["relation"] = relation_json(*v.relation);
    if (v.search_truncated) out["search_truncated"] = true;
    return out;
}

void print_verdict(std::ostream& os, const PGSTVerdict& v, const std::string& indent) {
    os << indent << "P+ = " << factored(v.pair.p_plus) << "\n";
    os << indent << "P- = " << factored(v.pair.p_minus) << "\n";
    if (v.pair.p_zero_available) os << indent << "P0 = " << factored(v.pair.p_zero) << "\n";
    os << indent << "cospectral: " << (v.cospectrality.cospectral ? "yes" : "no")
       << "; parallel: " << (v.cospectrality.parallel ? "yes" : "no")
       << "; strongly cospectral: " << (v.cospectrality.strongly_cospectral ? "yes" : "no") << "\n";
    os << indent << "  (" << v.cospectrality.witness << ")\n";
    os << indent << "verdict: " << status_name(v.status) << "\n";
    os << indent << "rule: " << v.rule << "\n";
    if (v.sufficiency)
        os << indent << "certificate: trace/degree ratios " << to_string(v.sufficiency->ratio_plus)
           << " vs " << to_string(v.sufficiency->ratio_minus) << ", both sides irreducible\n";
    if (v.odd_degree)
        os << indent << "certificate: odd-degree divisors f+ = " << v.odd_degree->f_plus.str()
           << ", f- = " << v.odd_degree->f_minus.str() << " with equal trace/degree ratios\n";
    if (v.three_factor)
        os << indent << "certificate: side " << v.three_factor->side << ", f = "
           << v.three_factor->f.str() << ", g = " << v.three_factor->g.str() << ", h = "
           << v.three_factor->h.str() << "\n";
    if (v.relation) {
        os << indent << "relation: ell = [";
        for (std::size_t i = 0; i < v.relation->ell.size(); ++i)
            os << (i ? ", " : "") << v.relation->ell[i];
        os << "], m = [";
        for (std::size_t i = 0; i < v.relation->m.size(); ++i) os << (i ? ", " : "") << v.relation->m[i];
        os << "], residual = " << v.relation->residual
           << ", minus-side sum " << (v.relation->sum_m_odd ? "odd" : "even")
           << (v.relation->exact_verified ? ", exactly verified" : ", numeric only") << "\n";
    }
    if (v.search_truncated) os << indent << "note: certificate search hit its budget\n";
}

std::vector<std::pair<int, int>> sorted_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [u, v, w] : g.edges) out.push_back({u, v});
    std::sort(out.begin(), out.end());
    return out;
}

json trace_json(const FidelityTrace& tr) {
    json out;
    out["t_max"] = tr.t_max;
    out["best_t"] = tr.best_t;
    out["best_fidelity"] = tr.best_fidelity;
    return out;
}

struct AnalyzeArgs {
    std::string file;
    std::vector<int> pair;
    double simulate = 0.0;
    bool json_out = false;
    int precision = 60;
    long long coeff_bound = 1000000;
};

int cmd_analyze(const AnalyzeArgs& args) {
    GraphDocument doc = load_graph_document(args.file);
    const Graph& g = doc.graph;
    EngineOptions opts;
    opts.precision_digits = args.precision;
    opts.coeff_bound = args.coeff_bound;

    std::vector<std::pair<int, int>> pairs;
    if (!args.pair.empty()) {
        int x = args.pair[0], y = args.pair[1];
        if (x < 1 || x > g.n || y < 1 || y > g.n || x == y)
            throw DocumentError("pair: vertices must be distinct labels in 1..n");
        pairs.push_back({x - 1, y - 1});
    } else if (doc.pair) {
        pairs.push_back(*doc.pair);
    } else {
        for (int x = 0; x < g.n; ++x)
            for (int y = x + 1; y < g.n; ++y) pairs.push_back({x, y});
    }

    GraphAnalyzer an(g);
    std::optional<NumericSpectrum> spec;
    if (args.simulate > 0) spec = numeric_eigen(an.adjacency());

    if (args.json_out) {
        json out;
        out["name"] = doc.name;
        out["n"] = g.n;
        out["phi"] = poly_json(an.char_poly_of_graph());
        json results = json::array();
        for (auto [x, y] : pairs) {
            PGSTVerdict v = decide_pgst(an, x, y, opts);
            json r = verdict_json(v);
            r["pair"] = {x + 1, y + 1};
            if (spec) r["simulation"] = trace_json(search_max_fidelity(*spec, x, y, args.simulate));
            results.push_back(std::move(r));
        }
        out["pairs"] = std::move(results);
        std::cout << out.dump() << "\n";
        return 0;
    }

    std::cout << "graph: " << (doc.name.empty() ? args.file : doc.name) << "  (" << g.n
              << " vertices, " << g.edges.size() << " edges";
    if (!g.loops.empty()) std::cout << ", " << g.loops.size() << " loops";
    std::cout << ")\n";
    std::cout << "phi = " << factored(an.char_poly_of_graph()) << "\n";
    for (auto [x, y] : pairs) {
        std::cout << "pair (" << x + 1 << ", " << y + 1 << "):\n";
        PGSTVerdict v = decide_pgst(an, x, y, opts);
        print_verdict(std::cout, v, "  ");
        if (spec) {
            FidelityTrace tr = search_max_fidelity(*spec, x, y, args.simulate);
            std::printf("  simulated max |U(t)[x,y]| over [0, %g]: %.9f at t = %.9f\n", tr.t_max,
                        tr.best_fidelity, tr.best_t);
        }
    }
    return 0;
}

int cmd_path(int n, int a, int b, bool json_out) {
    PathClassification c = classify_path(n, a, b);
    if (json_out) {
        json out;
        out["n"] = c.n;
        out["a"] = c.a;
        out["b"] = c.b;
        out["verdict"] = c.pgst ? "PGST" : "NO_PGST";
        if (c.clause) out["clause"] = std::string(1, c.clause);
        if (c.t) out["t"] = c.t;
        if (c.p) out["p"] = c.p;
        out["reason"] = c.reason;
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "path on " << n << " vertices, pair (" << a << ", " << b << "): "
              << (c.pgst ? "PGST" : "NO_PGST") << "\n";
    if (c.clause) {
        std::cout << "clause (" << c.clause << ")";
        if (c.t) std::cout << ", t = " << c.t;
        if (c.p) std::cout << ", p = " << c.p;
        std::cout << "\n";
    }
    std::cout << "reason: " << c.reason << "\n";
    return 0;
}

struct ModpathArgs {
    int n = 0;
    int m = 0;
    std::string specialize;
    double simulate = 0.0;
    bool json_out = false;
    int precision = 60;
    long long coeff_bound = 1000000;
};

int cmd_modpath(const ModpathArgs& args) {
    ModifiedPath mp = build_modified_path(args.n, args.m, std::nullopt);
    if (mp.canonicalized)
        std::cerr << "note: M = " << args.m << " mirrored to " << mp.m << " (M <= N/2 canonical)\n";
    ModifiedPathClassification c = classify_modified_path(mp.n, mp.m);
    ModifiedPathQuotients q = modified_path_quotients(mp.n, mp.m);
    const char* verdict = c.verdict == ModifiedPathVerdict::PGST ? "PGST"
                          : c.verdict == ModifiedPathVerdict::NO_PGST ? "NO_PGST"
                                                                      : "UNDECIDED";

    std::optional<Rational> w0;
    if (!args.specialize.empty()) w0 = parse_rational(args.specialize);

    if (args.json_out) {
        json out;
        out["n"] = mp.n;
        out["m"] = mp.m;
        out["canonicalized"] = mp.canonicalized;
        out["verdict"] = verdict;
        out["clause"] = c.clause;
        out["pi_plus"] = q.pi_plus.str();
        out["pi_minus"] = q.pi_minus.str();
        if (w0) {
            Graph g = build_modified_path(mp.n, mp.m, w0).as_graph();
            EngineOptions opts;
            opts.precision_digits = args.precision;
            opts.coeff_bound = args.coeff_bound;
            PGSTVerdict v = decide_pgst(g, 1, mp.n, opts);
            json r = verdict_json(v);
            r["w"] = to_string(*w0);
            r["pair"] = {1, mp.n}; // path ends, in the construction's 0..N+1 labels
            if (args.simulate > 0)
                r["simulation"] =
                    trace_json(search_max_fidelity(numeric_eigen(g.adjacency()), 1, mp.n, args.simulate));
            out["specialized"] = std::move(r);
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    std::cout << "modified path N = " << mp.n << ", M = " << mp.m
              << " (vertices 0.." << mp.n + 1 << ", pendants at 0 and " << mp.n + 1 << ")\n";
    std::cout << "verdict for the transcendental weight: " << verdict << "  [" << c.clause << "]\n";
    std::cout << "Pi+ = " << q.pi_plus.str() << "\n";
    std::cout << "Pi- = " << q.pi_minus.str() << "\n";
    if (w0) {
        Graph g = build_modified_path(mp.n, mp.m, w0).as_graph();
        EngineOptions opts;
        opts.precision_digits = args.precision;
        opts.coeff_bound = args.coeff_bound;
        std::cout << "specialized at w = " << to_string(*w0) << ", path ends (1, " << mp.n << "):\n";
        PGSTVerdict v = decide_pgst(g, 1, mp.n, opts);
        print_verdict(std::cout, v, "  ");
        if (args.simulate > 0) {
            FidelityTrace tr = search_max_fidelity(numeric_eigen(g.adjacency()), 1, mp.n, args.simulate);
            std::printf("  simulated max |U(t)| over [0, %g]: %.9f at t = %.9f\n", tr.t_max,
                        tr.best_fidelity, tr.best_t);
        }
    }
    return 0;
}

int cmd_corpus(bool json_out) {
    std::vector<CorpusCheck> checks = run_corpus();
    bool all = true;
    if (json_out) {
        json out = json::array();
        for (const CorpusCheck& c : checks) {
            json e;
            e["name"] = c.name;
            e["passed"] = c.passed;
            json pairs = json::array();
            for (auto [x, y] : c.matched_pairs) pairs.push_back({x + 1, y + 1});
            e["matched_pairs"] = std::move(pairs);
            if (c.passed) {
                e["ratio_plus"] = to_string(c.ratio_plus);
                e["ratio_minus"] = to_string(c.ratio_minus);
            } else {
                e["detail"] = c.detail;
            }
            out.push_back(std::move(e));
            all = all && c.passed;
        }
        std::cout << out.dump() << "\n";
        return all ? 0 : 3;
    }
    for (const CorpusCheck& c : checks) {
        std::printf("%-36s %s", c.name.c_str(), c.passed ? "ok  " : "FAIL");
        if (c.passed) {
            std::printf("  pairs:");
            for (auto [x, y] : c.matched_pairs) std::printf(" (%d,%d)", x + 1, y + 1);
            std::printf("  ratios (%s, %s)", to_string(c.ratio_plus).c_str(),
                        to_string(c.ratio_minus).c_str());
        }
        std::printf("\n");
        if (!c.passed) std::printf("    %s\n", c.detail.c_str());
        all = all && c.passed;
    }
    std::printf("%s\n", all ? "all entries verified" : "corpus mismatch");
    return all ? 0 : 3;
}

int cmd_census(int max_n, bool json_out) {
    CensusResult res = run_census(max_n);
    if (json_out) {
        json out;
        json levels = json::array();
        for (const CensusLevel& lv : res.levels)
            levels.push_back({{"n", lv.n}, {"connected", lv.connected}, {"hit_graphs", lv.hit_graphs}});
        out["levels"] = std::move(levels);
        json hits = json::array();
        for (const CensusGraph& hg : res.hit_graphs) {
            json e;
            e["n"] = hg.n;
            e["code"] = hg.code;
            json edges = json::array();
            for (auto [u, v] : sorted_edges(hg.graph)) edges.push_back({u + 1, v + 1});
            e["edges"] = std::move(edges);
            json pairs = json::array();
            for (const CensusHit& h : hg.hits)
                pairs.push_back({{"pair", {h.x + 1, h.y + 1}},
                                 {"p_plus", h.p_plus.str()},
                                 {"p_minus", h.p_minus.str()},
                                 {"ratio_plus", to_string(h.ratio_plus)},
                                 {"ratio_minus", to_string(h.ratio_minus)}});
            e["hits"] = std::move(pairs);
            hits.push_back(std::move(e));
        }
        out["hit_graphs"] = std::move(hits);
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::size_t idx = 0;
    for (const CensusLevel& lv : res.levels) {
        std::printf("n=%d: %ld connected graphs, %ld with certified pairs\n", lv.n, lv.connected,
                    lv.hit_graphs);
        for (; idx < res.hit_graphs.size() && res.hit_graphs[idx].n == lv.n; ++idx) {
            const CensusGraph& hg = res.hit_graphs[idx];
            std::printf("  edges:");
            for (auto [u, v] : sorted_edges(hg.graph)) std::printf(" (%d,%d)", u + 1, v + 1);
            std::printf("\n");
            for (const CensusHit& h : hg.hits)
                std::printf("    pair (%d,%d): P+ = %s  P- = %s  ratios = (%s, %s)\n", h.x + 1,
                            h.y + 1, h.p_plus.str().c_str(), h.p_minus.str().c_str(),
                            to_string(h.ratio_plus).c_str(), to_string(h.ratio_minus).c_str());
        }
    }
    return 0;
}

struct SimulateArgs {
    std::string file;
    std::vector<int> pair;
    double t_max = 10000.0;
    bool json_out = false;
};

int cmd_simulate(const SimulateArgs& args) {
    GraphDocument doc = load_graph_document(args.file);
    const Graph& g = doc.graph;
    int x, y;
    if (!args.pair.empty()) {
        x = args.pair[0] - 1;
        y = args.pair[1] - 1;
    } else if (doc.pair) {
        x = doc.pair->first;
        y = doc.pair->second;
    } else {
        throw DocumentError("simulate: no pair given (use --pair X Y or a \"pair\" in the document)");
    }
    if (x < 0 || x >= g.n || y < 0 || y >= g.n || x == y)
        throw DocumentError("pair: vertices must be distinct labels in 1..n");

    NumericSpectrum spec = numeric_eigen(g.adjacency());
    FidelityTrace tr = search_max_fidelity(spec, x, y, args.t_max);
    if (args.json_out) {
        json out;
        out["name"] = doc.name;
        out["pair"] = {x + 1, y + 1};
        out["eigenvalues"] = spec.values;
        out["residual"] = spec.residual;
        json t = trace_json(tr);
        out["best_t"] = t["best_t"];
        out["best_fidelity"] = t["best_fidelity"];
        out["t_max"] = t["t_max"];
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::printf("graph: %s  pair (%d, %d)\n", doc.name.empty() ? args.file.c_str() : doc.name.c_str(),
                x + 1, y + 1);
    std::printf("eigenvalues:");
    for (double lam : spec.values) std::printf(" %.9f", lam);
    std::printf("  (residual %.2e)\n", spec.residual);
    std::printf("max |U(t)[x,y]| over [0, %g]: %.9f at t = %.9f\n", tr.t_max, tr.best_fidelity,
                tr.best_t);
    std::printf("evidence at this horizon only; the supremum over all t is not certified\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pretty good state transfer: exact certificates and numeric evidence"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    CLI::App* a = app.add_subcommand("analyze", "decide transfer for pairs of a graph document");
    a->add_option("file", analyze.file, "graph document (JSON)")->required();
    a->add_option("--pair", analyze.pair, "vertex pair, 1-indexed")->expected(2);
    a->add_option("--simulate", analyze.simulate, "add numeric fidelity search up to T_MAX");
    a->add_flag("--json", analyze.json_out, "machine-readable output");
    a->add_option("--precision", analyze.precision, "relation-search precision digits");
    a->add_option("--coeff-bound", analyze.coeff_bound, "relation coefficient bound");

    int path_n = 0, path_a = 0, path_b = 0;
    bool path_json = false;
    CLI::App* p = app.add_subcommand("path", "classify transfer on the unweighted path");
    p->add_option("n", path_n, "path length")->required();
    p->add_option("a", path_a, "first vertex, 1-indexed")->required();
    p->add_option("b", path_b, "second vertex, 1-indexed")->required();
    p->add_flag("--json", path_json, "machine-readable output");

    ModpathArgs modpath;
    CLI::App* m = app.add_subcommand("modpath", "classify the doubly-pendant modified path");
    m->add_option("N", modpath.n, "path length")->required();
    m->add_option("M", modpath.m, "attachment index")->required();
    m->add_option("--specialize", modpath.specialize, "run the exact pipeline at rational w = P/Q");
    m->add_option("--simulate", modpath.simulate, "with --specialize, add numeric search up to T_MAX");
    m->add_flag("--json", modpath.json_out, "machine-readable output");
    m->add_option("--precision", modpath.precision, "relation-search precision digits");
    m->add_option("--coeff-bound", modpath.coeff_bound, "relation coefficient bound");

    bool corpus_json = false;
    CLI::App* c = app.add_subcommand("corpus", "verify the bundled reference entries");
    c->add_flag("--json", corpus_json, "machine-readable output");

    int census_max_n = 7;
    bool census_json = false;
    CLI::App* s = app.add_subcommand("census", "scan all small connected graphs for certified pairs");
    s->add_option("--max-n", census_max_n, "largest vertex count (2..8)");
    s->add_flag("--json", census_json, "machine-readable output");

    SimulateArgs simulate;
    CLI::App* u = app.add_subcommand("simulate", "numeric fidelity search for a pair");
    u->add_option("file", simulate.file, "graph document (JSON)")->required();
    u->add_option("--pair", simulate.pair, "vertex pair, 1-indexed")->expected(2);
    u->add_option("--simulate", simulate.t_max, "time horizon T_MAX");
    u->add_flag("--json", simulate.json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (a->parsed()) return cmd_analyze(analyze);
        if (p->parsed()) return cmd_path(path_n, path_a, path_b, path_json);
        if (m->parsed()) return cmd_modpath(modpath);
        if (c->parsed()) return cmd_corpus(corpus_json);
        if (s->parsed()) return cmd_census(census_max_n, census_json);
        if (u->parsed()) return cmd_simulate(simulate);
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
