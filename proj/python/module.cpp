#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pgst/census.hpp"
#include "pgst/corpus.hpp"
#include "pgst/engine.hpp"
#include "pgst/graph_io.hpp"
#include "pgst/involutions.hpp"
#include "pgst/paths.hpp"
#include "pgst/simulator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace pgst;

namespace {

// Vertices are 1-indexed at this boundary, matching the document format.
Rational weight_from(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
    return parse_rational(h.cast<std::string>());
}

Graph make_graph(int n, const std::vector<py::tuple>& edges, const std::vector<py::tuple>& loops) {
    Graph g(n);
    for (const py::tuple& e : edges) {
        if (e.size() != 2 && e.size() != 3) throw std::invalid_argument("edge: expected (u, v[, w])");
        Rational w = e.size() == 3 ? weight_from(e[2]) : Rational(1);
        g.add_edge(e[0].cast<int>() - 1, e[1].cast<int>() - 1, w);
    }
    for (const py::tuple& l : loops) {
        if (l.size() != 2) throw std::invalid_argument("loop: expected (v, w)");
        g.add_loop(l[0].cast<int>() - 1, weight_from(l[1]));
    }
    g.validate();
    return g;
}

int check_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.n) throw std::invalid_argument("vertex label out of range");
    return v - 1;
}

py::dict verdict_dict(const PGSTVerdict& v) {
    py::dict out;
    out["status"] = status_name(v.status);
    out["rule"] = v.rule;
    out["cospectral"] = v.cospectrality.cospectral;
    out["parallel"] = v.cospectrality.parallel;
    out["strongly_cospectral"] = v.cospectrality.strongly_cospectral;
    out["p_plus"] = v.pair.p_plus.str();
    out["p_minus"] = v.pair.p_minus.str();
    if (v.pair.p_zero_available) out["p_zero"] = v.pair.p_zero.str();
    if (v.sufficiency) {
        py::dict c;
        c["kind"] = "trace_ratio";
        c["ratio_plus"] = to_string(v.sufficiency->ratio_plus);
        c["ratio_minus"] = to_string(v.sufficiency->ratio_minus);
        out["certificate"] = c;
    } else if (v.odd_degree) {
        py::dict c;
        c["kind"] = "odd_degree_pair";
        c["f_plus"] = v.odd_degree->f_plus.str();
        c["f_minus"] = v.odd_degree->f_minus.str();
        out["certificate"] = c;
    } else if (v.three_factor) {
        py::dict c;
        c["kind"] = "three_factor";
        c["side"] = std::string(1, v.three_factor->side);
        c["f"] = v.three_factor->f.str();
        c["g"] = v.three_factor->g.str();
        c["h"] = v.three_factor->h.str();
        out["certificate"] = c;
    }
    if (v.relation) {
        py::dict r;
        r["ell"] = v.relation->ell;
        r["m"] = v.relation->m;
        r["residual"] = v.relation->residual;
        r["sum_m_odd"] = v.relation->sum_m_odd;
        r["exact_verified"] = v.relation->exact_verified;
        out["relation"] = r;
    }
    if (v.search_truncated) out["search_truncated"] = true;
    return out;
}

py::dict document_dict(const GraphDocument& doc) {
    py::dict out;
    out["name"] = doc.name;
    out["graph"] = doc.graph;
    if (doc.pair)
        out["pair"] = py::make_tuple(doc.pair->first + 1, doc.pair->second + 1);
    else
        out["pair"] = py::none();
    return out;
}

} // namespace

PYBIND11_MODULE(pgstkit, m) {
    m.doc() = "exact certificates and numeric evidence for pretty good state transfer";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<py::tuple>& edges,
                         const std::vector<py::tuple>& loops) { return make_graph(n, edges, loops); }),
             py::arg("n"), py::arg("edges") = std::vector<py::tuple>(),
             py::arg("loops") = std::vector<py::tuple>())
        .def_readonly("n", &Graph::n)
        .def_static("path", &Graph::path, py::arg("n"))
        .def_static("cycle", &Graph::cycle, py::arg("n"))
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def("edges",
             [](const Graph& g) {
                 std::vector<py::tuple> out;
                 for (const auto& [u, v, w] : g.edges)
                     out.push_back(py::make_tuple(u + 1, v + 1, to_string(w)));
                 return out;
             })
        .def("char_poly", [](const Graph& g) { return GraphAnalyzer(g).char_poly_of_graph().str(); })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n) + " edges=" + std::to_string(g.edges.size()) +
                   ">";
        });

    m.def(
        "relative_pair",
        [](const Graph& g, int x, int y) {
            RelativeMinPolyPair p = relative_pair(g, check_vertex(g, x), check_vertex(g, y));
            py::dict out;
            out["p_plus"] = p.p_plus.str();
            out["p_minus"] = p.p_minus.str();
            if (p.p_zero_available) out["p_zero"] = p.p_zero.str();
            return out;
        },
        py::arg("graph"), py::arg("x"), py::arg("y"));

    m.def(
        "cospectrality",
        [](const Graph& g, int x, int y) {
            GraphAnalyzer an(g);
            CospectralityReport r = an.cospectrality(check_vertex(g, x), check_vertex(g, y));
            py::dict out;
            out["cospectral"] = r.cospectral;
            out["parallel"] = r.parallel;
            out["strongly_cospectral"] = r.strongly_cospectral;
            out["witness"] = r.witness;
            return out;
        },
        py::arg("graph"), py::arg("x"), py::arg("y"));

    m.def(
        "decide",
        [](const Graph& g, int x, int y, bool relation_search, int precision, long long coeff_bound) {
            EngineOptions opts;
            opts.enable_relation_search = relation_search;
            opts.precision_digits = precision;
            opts.coeff_bound = coeff_bound;
            return verdict_dict(decide_pgst(g, check_vertex(g, x), check_vertex(g, y), opts));
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("relation_search") = true,
        py::arg("precision") = 60, py::arg("coeff_bound") = 1000000LL);

    m.def(
        "classify_path",
        [](int n, int a, int b) {
            PathClassification c = classify_path(n, a, b);
            py::dict out;
            out["n"] = c.n;
            out["a"] = c.a;
            out["b"] = c.b;
            out["pgst"] = c.pgst;
            if (c.clause) out["clause"] = std::string(1, c.clause);
            if (c.t) out["t"] = c.t;
            if (c.p) out["p"] = c.p;
            out["reason"] = c.reason;
            return out;
        },
        py::arg("n"), py::arg("a"), py::arg("b"));

    m.def(
        "classify_modified_path",
        [](int n, int mm) {
            ModifiedPathClassification c = classify_modified_path(n, mm);
            py::dict out;
            out["n"] = c.n;
            out["m"] = c.m;
            out["verdict"] = c.verdict == ModifiedPathVerdict::PGST        ? "PGST"
                             : c.verdict == ModifiedPathVerdict::NO_PGST ? "NO_PGST"
                                                                           : "UNDECIDED";
            out["clause"] = c.clause;
            return out;
        },
        py::arg("n"), py::arg("m"));

    m.def(
        "modified_path_quotients",
        [](int n, int mm) {
            ModifiedPathQuotients q = modified_path_quotients(n, mm);
            return py::make_tuple(q.pi_plus.str(), q.pi_minus.str());
        },
        py::arg("n"), py::arg("m"));

    m.def(
        "modified_path_graph",
        [](int n, int mm, const std::string& w) {
            return build_modified_path(n, mm, parse_rational(w)).as_graph();
        },
        py::arg("n"), py::arg("m"), py::arg("w"));

    m.def(
        "involutions",
        [](const Graph& g) {
            std::vector<std::vector<int>> out;
            for (const Involution& inv : find_involutions(g)) {
                std::vector<int> sigma;
                for (int v : inv.sigma) sigma.push_back(v + 1);
                out.push_back(std::move(sigma));
            }
            return out;
        },
        py::arg("graph"));

    m.def(
        "quotient_polys",
        [](const Graph& g, const std::vector<int>& sigma) {
            std::vector<int> sigma0;
            for (int v : sigma) sigma0.push_back(v - 1);
            QuotientPair q = quotient_pair(g, make_involution(g, sigma0));
            return py::make_tuple(q.pi_plus.str(), q.pi_minus.str());
        },
        py::arg("graph"), py::arg("sigma"));

    m.def(
        "fidelity",
        [](const Graph& g, int x, int y, double t) {
            return fidelity_at(numeric_eigen(GraphAnalyzer(g).adjacency()), check_vertex(g, x),
                               check_vertex(g, y), t);
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("t"));

    m.def(
        "max_fidelity",
        [](const Graph& g, int x, int y, double t_max) {
            FidelityTrace tr = search_max_fidelity(numeric_eigen(GraphAnalyzer(g).adjacency()),
                                                   check_vertex(g, x), check_vertex(g, y), t_max);
            return py::make_tuple(tr.best_t, tr.best_fidelity);
        },
        py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("t_max"));

    m.def(
        "census_counts",
        [](int max_n) {
            std::vector<py::dict> out;
            for (const CensusLevel& lv : run_census(max_n).levels) {
                py::dict d;
                d["n"] = lv.n;
                d["connected"] = lv.connected;
                d["hit_graphs"] = lv.hit_graphs;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("max_n") = 6);

    m.def("corpus_check", []() {
        std::vector<py::tuple> out;
        for (const CorpusCheck& c : run_corpus()) out.push_back(py::make_tuple(c.name, c.passed));
        return out;
    });

    m.def(
        "parse_document", [](const std::string& text) { return document_dict(parse_graph_document(text)); },
        py::arg("text"));
    m.def(
        "load_document", [](const std::string& path) { return document_dict(load_graph_document(path)); },
        py::arg("path"));
    m.def(
        "serialize_document",
        [](const Graph& g, const std::string& name, std::optional<std::pair<int, int>> pair) {
            GraphDocument doc;
            doc.graph = g;
            doc.name = name;
            if (pair) doc.pair = {check_vertex(g, pair->first), check_vertex(g, pair->second)};
            return serialize_graph_document(doc);
        },
        py::arg("graph"), py::arg("name") = "", py::arg("pair") = std::nullopt);

    py::register_exception<DocumentError>(m, "DocumentError");
}
