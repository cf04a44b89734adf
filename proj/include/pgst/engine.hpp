#pragma once

#include "pgst/factor.hpp"
#include "pgst/lattice.hpp"
#include "pgst/spectra.hpp"

#include <optional>
#include <string>

namespace pgst {

enum class Status {
    PGST_CERTIFIED,
    NO_PGST_CERTIFIED,
    NOT_STRONGLY_COSPECTRAL,
    UNDECIDED_EVIDENCE_FOR,
    UNDECIDED_EVIDENCE_AGAINST,
    UNDECIDED,
};

std::string status_name(Status s);

// Both relative polynomials irreducible with distinct trace/degree ratios.
struct SufficiencyCertificate {
    Rational ratio_plus;
    Rational ratio_minus;
};

// Odd-degree divisors of P+ and P- with equal trace/degree ratios.
struct OddDegreePair {
    UniPoly f_plus;
    UniPoly f_minus;
};

// f*g divides one side, f has odd integer trace, tr(f)deg(g) - tr(g)deg(f)
// is odd, and the other side carries an odd-degree divisor h.
struct ThreeFactorCertificate {
    char side = '+'; // side carrying f*g
    UniPoly f, g, h;
};

struct PGSTVerdict {
    Status status = Status::UNDECIDED;
    std::string rule;
    CospectralityReport cospectrality;
    RelativeMinPolyPair pair;
    std::optional<SufficiencyCertificate> sufficiency;
    std::optional<OddDegreePair> odd_degree;
    std::optional<ThreeFactorCertificate> three_factor;
    std::optional<IntegerRelation> relation;
    bool search_truncated = false;
};

struct EngineOptions {
    bool enable_relation_search = true;
    int precision_digits = 60;
    long long coeff_bound = 1000000;
};

std::optional<SufficiencyCertificate> pgst_sufficient(const RelativeMinPolyPair& pair);
std::optional<OddDegreePair> obstruction_odd_degree(const RelativeMinPolyPair& pair);
std::optional<ThreeFactorCertificate> obstruction_three_factor(const RelativeMinPolyPair& pair);

PGSTVerdict decide_pgst(const Graph& g, int x, int y, const EngineOptions& opts = {});
PGSTVerdict decide_pgst(GraphAnalyzer& an, int x, int y, const EngineOptions& opts = {});

// Certificate re-checks, independent of how the certificate was found.
bool verify_sufficiency(const RelativeMinPolyPair& pair, const SufficiencyCertificate& c);
bool verify_odd_degree(const RelativeMinPolyPair& pair, const OddDegreePair& c);
bool verify_three_factor(const RelativeMinPolyPair& pair, const ThreeFactorCertificate& c);

} // namespace pgst
