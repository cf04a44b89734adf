#pragma once

#include "pgst/graph.hpp"
#include "pgst/weightpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pgst {

// Characteristic polynomial of the k-vertex path: p_k = x p_{k-1} - p_{k-2}
// with p_{-1} = 0, p_0 = 1.
UniPoly path_poly(int k);

// Verdict for pretty good state transfer between vertices a and b of the
// unweighted path on n vertices (1-indexed ends a = 1, b = n).
struct PathClassification {
    int n = 0, a = 0, b = 0;
    bool pgst = false;
    char clause = 0; // 'a' n = 2^t - 1; 'b' n = p - 1; 'c' n = 2^t p - 1
    int t = 0;
    long p = 0;
    std::string reason;
};

PathClassification classify_path(int n, int a, int b);

// Path of length N (vertices 1..N) with pendant vertex 0 joined to M and
// pendant vertex N+1 joined to N+1-M, both by edges of weight w.
struct ModifiedPath {
    int n = 0; // path length N
    int m = 0; // attachment index, canonical 1 <= M <= N/2
    std::optional<Rational> w; // empty -> symbolic weight
    bool canonicalized = false; // input had M > N/2 and was mirrored

    Graph as_graph() const; // requires rational w
};

ModifiedPath build_modified_path(int n, int m, std::optional<Rational> w);

// Closed forms for the quotient polynomials of the mirror involution,
// selected by the parity of N; quadratic in the symbolic weight.
struct ModifiedPathQuotients {
    WeightPoly pi_plus;
    WeightPoly pi_minus;
};
ModifiedPathQuotients modified_path_quotients(int n, int m);

// Transcendental-weight classification of end-to-end transfer on the
// modified path: PGST when M odd, N even, gcd(N+1, M) = 1; no transfer when
// M is even, or when gcd(N+1, M) has a prime factor 4r+3 and N = 2 mod 4.
enum class ModifiedPathVerdict { PGST, NO_PGST, UNDECIDED };

struct ModifiedPathClassification {
    int n = 0, m = 0;
    ModifiedPathVerdict verdict = ModifiedPathVerdict::UNDECIDED;
    std::string clause;
};
ModifiedPathClassification classify_modified_path(int n, int m);

// Kernel vectors for even M: z lives on vertices 0..M (sign pattern on odd
// indices, (-1)^(M/2)/w at the pendant), y is z reversed, and
// w+ = [z 0 y], w- = [z 0 -y] satisfy A w = 0 exactly.  Their end entries
// differ in sign pairing, so vertices 1 and N share eigenvalue 0 with both
// sign patterns and are not strongly cospectral.
struct EvenMWitness {
    std::vector<Rational> z;       // full length N+2, zero past index M
    std::vector<Rational> w_plus;  // A w_plus = 0, w_plus[1] = w_plus[N]
    std::vector<Rational> w_minus; // A w_minus = 0, w_minus[1] = -w_minus[N]
};
EvenMWitness even_m_witness(int n, int m, const Rational& w0);

// Exact checks of the path-polynomial root structure: p_k +- p_{k-1} divide
// p_{2k}, and p_k, p_l share roots exactly when gcd(k+1, l+1) > 1.
struct PathRootIdentities {
    bool plus_divides = false;  // (p_k + p_{k-1}) | p_2k
    bool minus_divides = false; // (p_k - p_{k-1}) | p_2k
    UniPoly common_factor;      // gcd(p_k, p_l), monic
    bool have_common_roots = false;
    bool gcd_rule_holds = false; // common roots <=> gcd(k+1, l+1) > 1
};
PathRootIdentities path_root_identities(int k, int l);

} // namespace pgst
