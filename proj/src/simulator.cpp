#include "pgst/simulator.hpp"

#include "pgst/threads.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace pgst {

namespace {

std::vector<std::vector<double>> to_doubles(const RationalMatrix& a) {
    const int n = a.size();
    std::vector<std::vector<double>> m(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<double>(a.at(i, j));
    return m;
}

} // namespace

NumericSpectrum numeric_eigen(const RationalMatrix& a) {
    if (!a.is_symmetric()) throw std::invalid_argument("numeric eigen: matrix is not symmetric");
    const int n = a.size();
    auto m = to_doubles(a);
    const auto orig = m;

    std::vector<std::vector<double>> v(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return std::sqrt(2.0 * s);
    };
    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            scale = std::max(scale, std::fabs(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    const double tol = 1e-15 * std::max(1.0, scale) * n;

    for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                if (std::fabs(apq) <= tol / (n * n + 1.0)) continue;
                double app = m[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
                double aqq = m[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double mkp = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
                    double mkq = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)];
                    m[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] = c * mkp - s * mkq;
                    m[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    double mpk = m[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
                    double mqk = m[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)];
                    m[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] = c * mpk - s * mqk;
                    m[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)] = s * mpk + c * mqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
                    double vkq = v[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)];
                    v[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] = c * vkp - s * vkq;
                    v[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = s * vkp + c * vkq;
                }
            }
    }

    NumericSpectrum out;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] < m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
    });
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int k = 0; k < n; ++k) {
        int src = order[static_cast<std::size_t>(k)];
        out.values[static_cast<std::size_t>(k)] = m[static_cast<std::size_t>(src)][static_cast<std::size_t>(src)];
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)][static_cast<std::size_t>(src)];
    }

    double rho = 0.0;
    for (double lam : out.values) rho = std::max(rho, std::fabs(lam));
    double res = 0.0;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            double av = 0.0;
            for (int j = 0; j < n; ++j)
                av += orig[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * out.vectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            res = std::max(res, std::fabs(av - out.values[static_cast<std::size_t>(k)] * out.vectors[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]));
        }
    out.residual = res;
    if (res >= 1e-10 * (1.0 + rho)) throw std::runtime_error("numeric eigen: residual did not converge");
    return out;
}

double fidelity_at(const NumericSpectrum& spec, int x, int y, double t) {
    double re = 0.0, im = 0.0;
    const std::size_t n = spec.values.size();
    for (std::size_t k = 0; k < n; ++k) {
        double vv = spec.vectors[k][static_cast<std::size_t>(x)] * spec.vectors[k][static_cast<std::size_t>(y)];
        re += std::cos(spec.values[k] * t) * vv;
        im += std::sin(spec.values[k] * t) * vv;
    }
    return std::hypot(re, im);
}

double unitarity_defect(const NumericSpectrum& spec, int x, double t) {
    double sum = 0.0;
    for (std::size_t z = 0; z < spec.values.size(); ++z) {
        double f = fidelity_at(spec, x, static_cast<int>(z), t);
        sum += f * f;
    }
    return std::fabs(sum - 1.0);
}

namespace {

struct Candidate {
    double t;
    double f;
};

double golden_refine(const NumericSpectrum& spec, int x, int y, double a, double b, double tol) {
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = fidelity_at(spec, x, y, c);
    double fd = fidelity_at(spec, x, y, d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = fidelity_at(spec, x, y, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = fidelity_at(spec, x, y, d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

FidelityTrace search_max_fidelity(const NumericSpectrum& spec, int x, int y, double t_max,
                                  long grid, bool refine) {
    if (t_max <= 0) throw std::invalid_argument("fidelity search: t_max must be positive");
    if (grid < 2) grid = 2;
    FidelityTrace trace;
    trace.x = x;
    trace.y = y;
    trace.t_max = t_max;
    const double h = t_max / static_cast<double>(grid);

    const int workers = std::min<long>(thread_count(), grid);
    std::vector<std::vector<Candidate>> local_max(static_cast<std::size_t>(workers));
    std::vector<Candidate> boundary(static_cast<std::size_t>(workers), Candidate{0.0, -1.0});
    const long sample_stride = std::max<long>(1, (grid + 1) / 1024);
    std::vector<std::vector<std::pair<double, double>>> sampled(static_cast<std::size_t>(workers));

    auto run = [&](int w) {
        long lo = grid * w / workers;
        long hi = grid * (w + 1) / workers; // scan indices [lo, hi]
        double prev = fidelity_at(spec, x, y, (lo > 0 ? lo - 1 : 0) * h);
        double cur = fidelity_at(spec, x, y, lo * h);
        Candidate best{lo * h, cur};
        auto& locals = local_max[static_cast<std::size_t>(w)];
        for (long i = lo; i <= hi; ++i) {
            double t = i * h;
            double next = (i < grid) ? fidelity_at(spec, x, y, (i + 1) * h) : cur;
            if (cur > best.f) best = Candidate{t, cur};
            if (cur >= prev && cur >= next && (cur > prev || cur > next))
                locals.push_back(Candidate{t, cur});
            if (i % sample_stride == 0) sampled[static_cast<std::size_t>(w)].push_back({t, cur});
            prev = cur;
            cur = next;
        }
        // keep the strongest few peaks per partition
        std::sort(locals.begin(), locals.end(), [](const Candidate& l, const Candidate& r) {
            return l.f > r.f || (l.f == r.f && l.t < r.t);
        });
        if (locals.size() > 8) locals.resize(8);
        boundary[static_cast<std::size_t>(w)] = best;
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    std::vector<Candidate> cands;
    for (int w = 0; w < workers; ++w) {
        cands.insert(cands.end(), local_max[static_cast<std::size_t>(w)].begin(), local_max[static_cast<std::size_t>(w)].end());
        cands.push_back(boundary[static_cast<std::size_t>(w)]);
        trace.samples.insert(trace.samples.end(), sampled[static_cast<std::size_t>(w)].begin(), sampled[static_cast<std::size_t>(w)].end());
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& l, const Candidate& r) {
        return l.f > r.f || (l.f == r.f && l.t < r.t);
    });
    if (cands.size() > 8) cands.resize(8);

    Candidate best = cands.empty() ? Candidate{0.0, fidelity_at(spec, x, y, 0.0)} : cands.front();
    if (refine) {
        for (const Candidate& c : cands) {
            double a = std::max(0.0, c.t - h);
            double b = std::min(t_max, c.t + h);
            double t_star = golden_refine(spec, x, y, a, b, 1e-9);
            double f_star = fidelity_at(spec, x, y, t_star);
            if (f_star > best.f || (f_star == best.f && t_star < best.t)) best = Candidate{t_star, f_star};
        }
    }
    trace.best_t = best.t;
    trace.best_fidelity = best.f;
    return trace;
}

bool strong_cospectral_numeric(const NumericSpectrum& spec, int x, int y,
                               double group_tol, double proj_tol) {
    const std::size_t n = spec.values.size();
    std::size_t k = 0;
    while (k < n) {
        std::size_t j = k + 1;
        while (j < n && spec.values[j] - spec.values[j - 1] <= group_tol) ++j;
        double exx = 0.0, eyy = 0.0, exy = 0.0;
        for (std::size_t i = k; i < j; ++i) {
            double vx = spec.vectors[i][static_cast<std::size_t>(x)];
            double vy = spec.vectors[i][static_cast<std::size_t>(y)];
            exx += vx * vx;
            eyy += vy * vy;
            exy += vx * vy;
        }
        if (std::fabs(exx - eyy) > proj_tol) return false;
        if (std::max(exx, eyy) > proj_tol && std::fabs(std::fabs(exy) - 0.5 * (exx + eyy)) > proj_tol)
            return false;
        k = j;
    }
    return true;
}

} // namespace pgst
