#pragma once

#include "pgst/engine.hpp"
#include "pgst/graph_io.hpp"

#include <string>
#include <vector>

namespace pgst {

// Reference data: ten small unweighted graphs with the published relative
// minimal polynomials of their transfer pair.  The pair itself is not part
// of the data; the checker searches all pairs for a match.
struct CorpusEntry {
    GraphDocument doc;
    UniPoly expected_p_plus;
    UniPoly expected_p_minus;
    std::string note; // transcription notes, empty for most entries
};

const std::vector<CorpusEntry>& bundled_corpus();

struct CorpusCheck {
    std::string name;
    std::vector<std::pair<int, int>> matched_pairs; // all pairs with (P+, P-) equal to expected
    bool certified = false; // ratio rule fires on the matched pairs
    Rational ratio_plus;
    Rational ratio_minus;
    bool passed = false;
    std::string detail; // on failure, computed-vs-expected summary
};

// Verify every bundled entry: some vertex pair must reproduce the expected
// (P+, P-) exactly and the ratio rule must certify transfer for it.
std::vector<CorpusCheck> run_corpus();

} // namespace pgst
