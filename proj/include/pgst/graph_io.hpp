#pragma once

#include "pgst/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace pgst {

// Parse/validation failure for a graph document; maps to exit code 2 in the
// command-line driver.  line/column are 1-based; 0 means "not positional"
// (semantic error rather than a syntax error).
struct DocumentError : std::runtime_error {
    int line = 0;
    int column = 0;
    DocumentError(const std::string& msg, int l = 0, int c = 0)
        : std::runtime_error(msg), line(l), column(c) {}
};

// One-line JSON description of a graph: {"edges":[[u,v,"p/q"],...],
// "loops":[[v,"p/q"],...],"n":N,"name":...,"pair":[x,y]} with 1-indexed
// vertices and exact rational weights as strings.  Internally 0-indexed.
struct GraphDocument {
    std::string name;
    Graph graph{1};
    std::optional<std::pair<int, int>> pair;
};

GraphDocument parse_graph_document(const std::string& text);
GraphDocument load_graph_document(const std::string& path);

// Canonical form: sorted keys, edges sorted by (u, v), loops by vertex,
// weights in lowest terms, no insignificant whitespace, one line.
std::string serialize_graph_document(const GraphDocument& doc);

} // namespace pgst
