#include "pgst/matrix.hpp"

#include <stdexcept>

namespace pgst {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RationalMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RationalMatrix RationalMatrix::minor_removing(int v) const {
    RationalMatrix m(n_ - 1);
    for (int i = 0, ti = 0; i < n_; ++i) {
        if (i == v) continue;
        for (int j = 0, tj = 0; j < n_; ++j) {
            if (j == v) continue;
            m.at(ti, tj) = at(i, j);
            ++tj;
        }
        ++ti;
    }
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix: size mismatch");
    RationalMatrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const Rational& v = a.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < a.n_; ++j) c.at(i, j) += v * b.at(k, j);
        }
    return c;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("matrix: vector size mismatch");
    std::vector<Rational> r(static_cast<std::size_t>(n_), Rational(0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (at(i, j) != 0) r[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

UniPoly char_poly(const RationalMatrix& a) {
    const int n = a.size();
    if (n == 0) return UniPoly::constant(Rational(1));

    Int d(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d = lcm_int(d, denominator(a.at(i, j)));

    std::vector<Int> b(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b[static_cast<std::size_t>(i) * n + j] = numerator(a.at(i, j) * Rational(d));

    // c[k] coefficients of det(xI - dA): M <- B*M + c*I, c = -tr(B*M)/step
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
    c[static_cast<std::size_t>(n)] = 1;
    std::vector<Int> m(static_cast<std::size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;

    std::vector<Int> bm(static_cast<std::size_t>(n) * n);
    for (int step = 1; step <= n; ++step) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int acc(0);
                for (int k = 0; k < n; ++k)
                    acc += b[static_cast<std::size_t>(i) * n + k] * m[static_cast<std::size_t>(k) * n + j];
                bm[static_cast<std::size_t>(i) * n + j] = std::move(acc);
            }
        Int tr(0);
        for (int i = 0; i < n; ++i) tr += bm[static_cast<std::size_t>(i) * n + i];
        Int ck = -tr / step;
        if (ck * step != -tr) throw std::logic_error("char_poly: inexact trace division");
        c[static_cast<std::size_t>(n - step)] = ck;
        if (step < n) {
            m = bm;
            for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] += ck;
        }
    }

    // det(xI - A) = det((dx)I - dA) / d^n
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    Int pw(1);
    for (int k = n; k >= 0; --k) {
        coeffs[static_cast<std::size_t>(k)] = make_rational(c[static_cast<std::size_t>(k)], pw);
        pw *= d;
    }
    return UniPoly(std::move(coeffs));
}

} // namespace pgst
