#include "pgst/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pgst {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(const std::string& text, std::size_t byte, const std::string& msg) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream out;
    out << msg << " at line " << line << ", column " << col;
    throw DocumentError(out.str(), line, col);
}

Rational weight_from(const json& j, const char* what) {
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw DocumentError(std::string(what) + ": " + e.what());
        }
    }
    throw DocumentError(std::string(what) + ": weight must be a \"p/q\" string or integer");
}

int vertex_from(const json& j, int n, const char* what) {
    if (!j.is_number_integer()) throw DocumentError(std::string(what) + ": vertex label must be an integer");
    long v = j.get<long>();
    if (v < 1 || v > n) {
        std::ostringstream out;
        out << what << ": unknown vertex label " << v << " (valid range 1.." << n << ")";
        throw DocumentError(out.str());
    }
    return static_cast<int>(v) - 1;
}

} // namespace

GraphDocument parse_graph_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail_at(text, e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
    }
    if (!doc.is_object()) throw DocumentError("document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw DocumentError("document needs an integer vertex count \"n\"");
    long n = doc["n"].get<long>();
    if (n < 1 || n > 10000) throw DocumentError("vertex count out of range");

    GraphDocument out;
    out.graph = Graph(static_cast<int>(n));
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw DocumentError("\"name\" must be a string");
        out.name = doc["name"].get<std::string>();
    }
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw DocumentError("\"edges\" must be an array");
        for (const json& e : doc["edges"]) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3)
                throw DocumentError("edge entries are [u, v] or [u, v, \"p/q\"]");
            int u = vertex_from(e[0], static_cast<int>(n), "edge");
            int v = vertex_from(e[1], static_cast<int>(n), "edge");
            Rational w = e.size() == 3 ? weight_from(e[2], "edge") : Rational(1);
            try {
                out.graph.add_edge(u, v, w);
            } catch (const std::exception& ex) {
                throw DocumentError(std::string("edge: ") + ex.what());
            }
        }
    }
    if (doc.contains("loops")) {
        if (!doc["loops"].is_array()) throw DocumentError("\"loops\" must be an array");
        for (const json& l : doc["loops"]) {
            if (!l.is_array() || l.size() != 2)
                throw DocumentError("loop entries are [v, \"p/q\"]");
            int v = vertex_from(l[0], static_cast<int>(n), "loop");
            try {
                out.graph.add_loop(v, weight_from(l[1], "loop"));
            } catch (const std::exception& ex) {
                throw DocumentError(std::string("loop: ") + ex.what());
            }
        }
    }
    if (doc.contains("pair")) {
        if (!doc["pair"].is_array() || doc["pair"].size() != 2)
            throw DocumentError("\"pair\" must be [x, y]");
        int x = vertex_from(doc["pair"][0], static_cast<int>(n), "pair");
        int y = vertex_from(doc["pair"][1], static_cast<int>(n), "pair");
        if (x == y) throw DocumentError("pair: vertices must be distinct");
        out.pair = {x, y};
    }
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "n" && key != "name" && key != "edges" && key != "loops" && key != "pair")
            throw DocumentError("unknown key \"" + key + "\"");
    }
    try {
        out.graph.validate();
    } catch (const std::exception& ex) {
        throw DocumentError(ex.what());
    }
    return out;
}

GraphDocument load_graph_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph_document(buf.str());
    } catch (DocumentError& e) {
        throw DocumentError(path + ": " + e.what(), e.line, e.column);
    }
}

std::string serialize_graph_document(const GraphDocument& doc) {
    json out = json::object(); // nlohmann objects iterate in sorted key order
    auto edges = doc.graph.edges;
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b)
                                                : std::get<1>(a) < std::get<1>(b);
    });
    json je = json::array();
    for (const auto& [u, v, w] : edges) je.push_back({u + 1, v + 1, to_string(w)});
    out["edges"] = std::move(je);
    if (!doc.graph.loops.empty()) {
        auto loops = doc.graph.loops;
        std::sort(loops.begin(), loops.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        json jl = json::array();
        for (const auto& [v, w] : loops) jl.push_back({v + 1, to_string(w)});
        out["loops"] = std::move(jl);
    }
    out["n"] = doc.graph.n;
    if (!doc.name.empty()) out["name"] = doc.name;
    if (doc.pair) out["pair"] = {doc.pair->first + 1, doc.pair->second + 1};
    return out.dump();
}

} // namespace pgst
