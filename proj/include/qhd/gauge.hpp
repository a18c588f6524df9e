#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "qhd/numeric.hpp"

namespace qhd {

// Outcome of a numeric gauge-equivalence search. A small best_residual is
// evidence for equivalence; a large one after many starts is evidence against,
// never a proof.
struct GaugeReport {
    double best_residual = std::numeric_limits<double>::infinity();
    int starts = 0;
    int iterations = 0;
    bool spectra_match = true;
};

namespace detail {

inline double nelder_mead(std::function<double(const std::array<double, 4>&)> f,
                          std::array<double, 4>& x, double step, int max_iter, int& evals) {
    constexpr int n = 4;
    std::array<std::array<double, 4>, n + 1> pts;
    std::array<double, n + 1> val;
    pts[0] = x;
    val[0] = f(x);
    ++evals;
    for (int i = 0; i < n; ++i) {
        pts[i + 1] = x;
        pts[i + 1][i] += step;
        val[i + 1] = f(pts[i + 1]);
        ++evals;
    }
    auto order = [&] {
        std::array<int, n + 1> idx{};
        for (int i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return val[a] < val[b]; });
        std::array<std::array<double, 4>, n + 1> p2;
        std::array<double, n + 1> v2;
        for (int i = 0; i <= n; ++i) {
            p2[i] = pts[idx[i]];
            v2[i] = val[idx[i]];
        }
        pts = p2;
        val = v2;
    };
    for (int it = 0; it < max_iter; ++it) {
        order();
        if (val[n] - val[0] < 1e-15 && val[0] < 1e-13) break;
        std::array<double, 4> centroid{};
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < 4; ++d) centroid[d] += pts[i][d] / n;
        auto point_at = [&](double t) {
            std::array<double, 4> p;
            for (int d = 0; d < 4; ++d) p[d] = centroid[d] + t * (pts[n][d] - centroid[d]);
            return p;
        };
        auto xr = point_at(-1.0);
        double fr = f(xr);
        ++evals;
        if (fr < val[0]) {
            auto xe = point_at(-2.0);
            double fe = f(xe);
            ++evals;
            if (fe < fr) {
                pts[n] = xe;
                val[n] = fe;
            } else {
                pts[n] = xr;
                val[n] = fr;
            }
        } else if (fr < val[n - 1]) {
            pts[n] = xr;
            val[n] = fr;
        } else {
            auto xc = point_at(fr < val[n] ? -0.5 : 0.5);
            double fc = f(xc);
            ++evals;
            if (fc < std::min(fr, val[n])) {
                pts[n] = xc;
                val[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int d = 0; d < 4; ++d) pts[i][d] = pts[0][d] + 0.5 * (pts[i][d] - pts[0][d]);
                    val[i] = f(pts[i]);
                    ++evals;
                }
            }
        }
    }
    order();
    x = pts[0];
    return val[0];
}

inline bool numeric_triangular(const NumMat& r, bool& upper, double tol = 1e-12) {
    bool up = true, lo = true;
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j) {
            if (j < i && std::abs(r.at(i, j)) > tol) up = false;
            if (j > i && std::abs(r.at(i, j)) > tol) lo = false;
        }
    upper = up;
    return up || lo;
}

inline bool spectra_multiset_match(const NumMat& a, const NumMat& b, double tol = 1e-9) {
    std::vector<cplx> da, db;
    for (std::size_t i = 0; i < a.dim(); ++i) da.push_back(a.at(i, i));
    for (std::size_t i = 0; i < b.dim(); ++i) db.push_back(b.at(i, i));
    auto key = [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    };
    std::sort(da.begin(), da.end(), key);
    std::sort(db.begin(), db.end(), key);
    for (std::size_t i = 0; i < da.size(); ++i)
        if (std::abs(da[i] - db[i]) > tol) return false;
    return true;
}

} // namespace detail

// Multi-start derivative-free minimization of
//   || (M^-1 (x) M^-1) Rsrc (M (x) M) - Rdst ||_F
// over invertible 2x2 M. The overall scale of M cancels in the conjugation;
// M is renormalized to |det| = 1 only for conditioning. When both inputs are
// numerically triangular with different diagonal multisets the search is
// skipped, since conjugation preserves triangular spectra.
inline GaugeReport search_gauge(const NumMat& rsrc, const NumMat& rdst, int starts, int iters,
                                uint64_t seed) {
    if (rsrc.dim() != 4 || rdst.dim() != 4) throw error("search_gauge: expected 4x4 matrices");
    GaugeReport rep;
    bool up_s = false, up_d = false;
    bool tri_s = detail::numeric_triangular(rsrc, up_s);
    bool tri_d = detail::numeric_triangular(rdst, up_d);
    if (tri_s && tri_d && !detail::spectra_multiset_match(rsrc, rdst)) {
        rep.spectra_match = false;
        return rep;
    }
    rep.spectra_match = true;

    auto objective = [&](const std::array<double, 4>& v) {
        double dt = v[0] * v[3] - v[1] * v[2];
        if (std::abs(dt) < 1e-10) return 1e9;
        double s = 1.0 / std::sqrt(std::abs(dt));
        NumMat m(2), mi(2);
        m.at(0, 0) = v[0] * s;
        m.at(0, 1) = v[1] * s;
        m.at(1, 0) = v[2] * s;
        m.at(1, 1) = v[3] * s;
        double d2 = (m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)).real();
        mi.at(0, 0) = m.at(1, 1) / d2;
        mi.at(0, 1) = -m.at(0, 1) / d2;
        mi.at(1, 0) = -m.at(1, 0) / d2;
        mi.at(1, 1) = m.at(0, 0) / d2;
        NumMat c = kron(mi, mi) * rsrc * kron(m, m);
        return (c - rdst).frobenius();
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> cube(-3.0, 3.0);
    int evals = 0;
    for (int s = 0; s < starts; ++s) {
        std::array<double, 4> x{cube(rng), cube(rng), cube(rng), cube(rng)};
        double best = 1e18;
        for (double step : {0.5, 1e-2, 1e-4, 1e-6}) {
            best = detail::nelder_mead(objective, x, step, iters, evals);
            if (best > 1e8) break; // start landed on a singular ray
        }
        rep.best_residual = std::min(rep.best_residual, best);
        ++rep.starts;
        if (rep.best_residual < 1e-12) break;
    }
    rep.iterations = evals;
    return rep;
}

} // namespace qhd
