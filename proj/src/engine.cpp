#include "pgst/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgst {

namespace {

constexpr std::size_t kSearchBudget = 1u << 20;

struct SubProduct {
    std::vector<int> idx; // sorted positions into the factor list
    UniPoly poly;
    int degree = 0;
    Rational trace;
};

// all nonempty sub-products, ordered by total degree then factor-index tuple
std::vector<SubProduct> ordered_subproducts(const std::vector<UniPoly>& factors, bool odd_only,
                                            bool& truncated) {
    const std::size_t r = factors.size();
    std::size_t masks = (r >= 21) ? kSearchBudget : ((std::size_t{1} << r) - 1);
    if (r >= 21) truncated = true;
    std::vector<SubProduct> out;
    for (std::size_t mask = 1; mask <= masks; ++mask) {
        SubProduct sp;
        sp.poly = UniPoly::constant(Rational(1));
        for (std::size_t i = 0; i < r; ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            sp.idx.push_back(static_cast<int>(i));
            sp.poly = sp.poly * factors[i];
            sp.degree += factors[i].degree();
        }
        if (odd_only && sp.degree % 2 == 0) continue;
        sp.trace = trace_of(sp.poly);
        out.push_back(std::move(sp));
    }
    std::sort(out.begin(), out.end(), [](const SubProduct& a, const SubProduct& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.idx < b.idx;
    });
    return out;
}

std::vector<UniPoly> simple_factors(const Factorization& f) {
    std::vector<UniPoly> out;
    out.reserve(f.factors.size());
    for (const auto& [p, m] : f.factors) {
        (void)m;
        out.push_back(p);
    }
    return out;
}

bool odd_integer(const Rational& v) { return is_integer(v) && numerator(v) % 2 != 0; }

std::optional<SufficiencyCertificate> sufficiency_impl(const Factorization& fp, const Factorization& fm,
                                                       const RelativeMinPolyPair& pair) {
    if (fp.factors.size() != 1 || fp.factors[0].second != 1) return std::nullopt;
    if (fm.factors.size() != 1 || fm.factors[0].second != 1) return std::nullopt;
    SufficiencyCertificate c;
    c.ratio_plus = trace_of(pair.p_plus) / pair.p_plus.degree();
    c.ratio_minus = trace_of(pair.p_minus) / pair.p_minus.degree();
    if (c.ratio_plus == c.ratio_minus) return std::nullopt;
    return c;
}

std::optional<OddDegreePair> odd_degree_impl(const Factorization& fp, const Factorization& fm,
                                             bool& truncated) {
    auto sub_p = ordered_subproducts(simple_factors(fp), true, truncated);
    auto sub_m = ordered_subproducts(simple_factors(fm), true, truncated);
    if (sub_p.empty() || sub_m.empty()) return std::nullopt;

    struct Key {
        int total;
        const SubProduct* a;
        const SubProduct* b;
    };
    std::vector<Key> pairs;
    pairs.reserve(std::min(sub_p.size() * sub_m.size(), kSearchBudget));
    std::size_t budget = kSearchBudget;
    for (const auto& a : sub_p) {
        for (const auto& b : sub_m) {
            if (budget == 0) {
                truncated = true;
                break;
            }
            --budget;
            pairs.push_back({a.degree + b.degree, &a, &b});
        }
        if (budget == 0) break;
    }
    std::sort(pairs.begin(), pairs.end(), [](const Key& x, const Key& y) {
        if (x.total != y.total) return x.total < y.total;
        if (x.a->idx != y.a->idx) return x.a->idx < y.a->idx;
        return x.b->idx < y.b->idx;
    });
    for (const auto& pr : pairs) {
        // equal trace/degree ratio, cross-multiplied to stay exact
        if (pr.a->trace * pr.b->degree == pr.b->trace * pr.a->degree)
            return OddDegreePair{pr.a->poly, pr.b->poly};
    }
    return std::nullopt;
}

std::optional<ThreeFactorCertificate> three_factor_impl(const Factorization& fp, const Factorization& fm,
                                                        bool& truncated) {
    for (char side : {'+', '-'}) {
        const Factorization& own = (side == '+') ? fp : fm;
        const Factorization& other = (side == '+') ? fm : fp;
        bool trunc_here = false;
        auto subs = ordered_subproducts(simple_factors(own), false, trunc_here);
        auto hs = ordered_subproducts(simple_factors(other), true, trunc_here);
        truncated = truncated || trunc_here;
        if (hs.empty()) continue;
        const SubProduct* h = nullptr;
        for (const auto& cand : hs) {
            if (is_integer(cand.trace)) {
                h = &cand;
                break;
            }
        }
        if (h == nullptr) continue;

        struct Key {
            int total;
            const SubProduct* f;
            const SubProduct* g;
        };
        std::vector<Key> pairs;
        std::size_t budget = kSearchBudget;
        for (const auto& f : subs) {
            if (!odd_integer(f.trace)) continue;
            for (const auto& g : subs) {
                if (budget == 0) {
                    truncated = true;
                    break;
                }
                --budget;
                if (&f == &g) continue;
                bool disjoint = true;
                std::size_t ai = 0;
                for (int gi : g.idx) {
                    while (ai < f.idx.size() && f.idx[ai] < gi) ++ai;
                    if (ai < f.idx.size() && f.idx[ai] == gi) {
                        disjoint = false;
                        break;
                    }
                }
                if (!disjoint) continue;
                if (!is_integer(g.trace)) continue;
                Rational parity = f.trace * g.degree - g.trace * f.degree;
                if (!odd_integer(parity)) continue;
                pairs.push_back({f.degree + g.degree, &f, &g});
            }
            if (budget == 0) break;
        }
        if (pairs.empty()) continue;
        std::sort(pairs.begin(), pairs.end(), [](const Key& x, const Key& y) {
            if (x.total != y.total) return x.total < y.total;
            if (x.f->idx != y.f->idx) return x.f->idx < y.f->idx;
            return x.g->idx < y.g->idx;
        });
        ThreeFactorCertificate c;
        c.side = side;
        c.f = pairs.front().f->poly;
        c.g = pairs.front().g->poly;
        c.h = h->poly;
        return c;
    }
    return std::nullopt;
}

} // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::PGST_CERTIFIED: return "PGST_CERTIFIED";
        case Status::NO_PGST_CERTIFIED: return "NO_PGST_CERTIFIED";
        case Status::NOT_STRONGLY_COSPECTRAL: return "NOT_STRONGLY_COSPECTRAL";
        case Status::UNDECIDED_EVIDENCE_FOR: return "UNDECIDED_EVIDENCE_FOR";
        case Status::UNDECIDED_EVIDENCE_AGAINST: return "UNDECIDED_EVIDENCE_AGAINST";
        case Status::UNDECIDED: return "UNDECIDED";
    }
    return "UNKNOWN";
}

std::optional<SufficiencyCertificate> pgst_sufficient(const RelativeMinPolyPair& pair) {
    return sufficiency_impl(factor_over_Q(pair.p_plus), factor_over_Q(pair.p_minus), pair);
}

std::optional<OddDegreePair> obstruction_odd_degree(const RelativeMinPolyPair& pair) {
    bool trunc = false;
    return odd_degree_impl(factor_over_Q(pair.p_plus), factor_over_Q(pair.p_minus), trunc);
}

std::optional<ThreeFactorCertificate> obstruction_three_factor(const RelativeMinPolyPair& pair) {
    bool trunc = false;
    return three_factor_impl(factor_over_Q(pair.p_plus), factor_over_Q(pair.p_minus), trunc);
}

PGSTVerdict decide_pgst(GraphAnalyzer& an, int x, int y, const EngineOptions& opts) {
    PGSTVerdict v;
    v.cospectrality = an.cospectrality(x, y);
    v.pair = an.relative_pair(x, y);
    if (!v.cospectrality.strongly_cospectral) {
        v.status = Status::NOT_STRONGLY_COSPECTRAL;
        v.rule = v.cospectrality.cospectral ? "eigenvalue supports of P+ and P- overlap"
                                            : "vertices are not cospectral";
        return v;
    }

    Factorization fp = factor_over_Q(v.pair.p_plus);
    Factorization fm = factor_over_Q(v.pair.p_minus);

    if (auto c = sufficiency_impl(fp, fm, v.pair)) {
        v.status = Status::PGST_CERTIFIED;
        v.rule = "irreducible relative polynomials with distinct trace ratios";
        v.sufficiency = c;
        return v;
    }
    if (auto c = odd_degree_impl(fp, fm, v.search_truncated)) {
        v.status = Status::NO_PGST_CERTIFIED;
        v.rule = "odd-degree divisor pair with equal trace ratios";
        v.odd_degree = c;
        return v;
    }
    if (auto c = three_factor_impl(fp, fm, v.search_truncated)) {
        v.status = Status::NO_PGST_CERTIFIED;
        v.rule = "odd-trace divisor pair against an odd-degree cofactor";
        v.three_factor = c;
        return v;
    }

    if (!opts.enable_relation_search) {
        v.status = Status::UNDECIDED;
        v.rule = "certificate rules exhausted, relation search disabled";
        return v;
    }
    v.relation = heuristic_relation_search(v.pair, opts.precision_digits, opts.coeff_bound);
    if (v.relation && v.relation->sum_m_odd) {
        if (v.relation->exact_verified) {
            v.status = Status::NO_PGST_CERTIFIED;
            v.rule = "exact eigenvalue relation with odd minus-side weight";
        } else {
            v.status = Status::UNDECIDED_EVIDENCE_AGAINST;
            v.rule = "numeric eigenvalue relation with odd minus-side weight";
        }
    } else {
        v.status = Status::UNDECIDED_EVIDENCE_FOR;
        v.rule = v.relation ? "all lattice relations carry even minus-side weight"
                            : "no integer eigenvalue relation within bounds";
    }
    return v;
}

PGSTVerdict decide_pgst(const Graph& g, int x, int y, const EngineOptions& opts) {
    GraphAnalyzer an(g);
    return decide_pgst(an, x, y, opts);
}

bool verify_sufficiency(const RelativeMinPolyPair& pair, const SufficiencyCertificate& c) {
    if (!is_irreducible(pair.p_plus) || !is_irreducible(pair.p_minus)) return false;
    if (c.ratio_plus != trace_of(pair.p_plus) / pair.p_plus.degree()) return false;
    if (c.ratio_minus != trace_of(pair.p_minus) / pair.p_minus.degree()) return false;
    return c.ratio_plus != c.ratio_minus;
}

bool verify_odd_degree(const RelativeMinPolyPair& pair, const OddDegreePair& c) {
    if (c.f_plus.degree() % 2 == 0 || c.f_minus.degree() % 2 == 0) return false;
    if (!divides(c.f_plus, pair.p_plus) || !divides(c.f_minus, pair.p_minus)) return false;
    return trace_of(c.f_plus) * c.f_minus.degree() == trace_of(c.f_minus) * c.f_plus.degree();
}

bool verify_three_factor(const RelativeMinPolyPair& pair, const ThreeFactorCertificate& c) {
    const UniPoly& own = (c.side == '+') ? pair.p_plus : pair.p_minus;
    const UniPoly& other = (c.side == '+') ? pair.p_minus : pair.p_plus;
    if (c.f.degree() < 1 || c.g.degree() < 1 || c.h.degree() < 1) return false;
    if (!divides(c.f * c.g, own) || !divides(c.h, other)) return false;
    if (c.h.degree() % 2 == 0) return false;
    if (!odd_integer(trace_of(c.f))) return false;
    if (!is_integer(trace_of(c.g)) || !is_integer(trace_of(c.h))) return false;
    return odd_integer(trace_of(c.f) * c.g.degree() - trace_of(c.g) * c.f.degree());
}

} // namespace pgst
