#pragma once

#include "pgst/poly.hpp"

#include <vector>

namespace pgst {

class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {}

    static RationalMatrix identity(int n);

    int size() const { return n_; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_symmetric() const;
    RationalMatrix minor_removing(int v) const; // delete row and column v

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    bool operator==(const RationalMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    int n_ = 0;
    std::vector<Rational> a_;
};

// Characteristic polynomial det(xI - A), monic of degree n.  Computed by the
// trace recurrence on the integer rescaling d*A, then mapped back.
UniPoly char_poly(const RationalMatrix& a);

} // namespace pgst
