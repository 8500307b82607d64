// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include "qcwt/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcwt/parallel.hpp"

namespace qcwt {

constexpr double kPi = std::numbers::pi;

// Smallest centred box holding every sample above 1e-15 of the peak, plus a
// margin for the interpolation stencil. Outside it the spectrum reads as zero.
static QSpectrum2D crop_band(const QSpectrum2D& F) {
    const Grid2D& g = F.grid;
    double thr = 1e-15 * F.max_modulus();
    std::size_t c1 = g.n1 / 2, c2 = g.n2 / 2, h1 = 0, h2 = 0;
    for (std::size_t m1 = 0; m1 < g.n1; ++m1)
        for (std::size_t m2 = 0; m2 < g.n2; ++m2)
            if (quat_modulus(F(m1, m2)) > thr) {
                h1 = std::max(h1, m1 > c1 ? m1 - c1 : c1 - m1);
                h2 = std::max(h2, m2 > c2 ? m2 - c2 : c2 - m2);
            }
    h1 = std::min(h1 + 4, c1);
    h2 = std::min(h2 + 4, c2);
    std::size_t lo1 = c1 - h1, lo2 = c2 - h2;
    std::size_t n1 = std::min(2 * h1 + 1, g.n1 - lo1), n2 = std::min(2 * h2 + 1, g.n2 - lo2);
    QSpectrum2D out;
    out.grid = {n1, n2, g.x(lo1), g.y(lo2), g.dx, g.dy};
    out.x0 = F.x0;
    out.y0 = F.y0;
    out.data.resize(n1 * n2);
    for (std::size_t m1 = 0; m1 < n1; ++m1)
        for (std::size_t m2 = 0; m2 < n2; ++m2) out(m1, m2) = F(lo1 + m1, lo2 + m2);
    return out;
}

QWavelet make_wavelet(QSignal2D mother, std::string name) {
    if (!mother.all_finite()) throw Error(Status::InvalidArgument, "wavelet: non-finite samples");
    if (mother.max_modulus() == 0.0)
        throw Error(Status::InvalidArgument, "wavelet: mother is identically zero");
    QWavelet w;
    w.name = std::move(name);
    w.spectrum = qft_forward(mother);
    const Grid2D& g = mother.grid();
    auto [p, m] = split_pm(crop_band(qft_forward(zero_pad(mother, 2 * g.n1, 2 * g.n2))));
    w.fine_plus = std::make_shared<const QSpectrum2D>(std::move(p));
    w.fine_minus = std::make_shared<const QSpectrum2D>(std::move(m));
    w.mother = std::move(mother);
    return w;
}

static void require_span(const Grid2D& g, double half, const char* what) {
    double eps = 1e-9;
    bool ok = g.x0 <= -half + eps && g.y0 <= -half + eps && g.x(g.n1 - 1) >= half - eps &&
              g.y(g.n2 - 1) >= half - eps;
    if (!ok) throw Error(Status::InvalidArgument, std::string(what) + ": grid must span [-6,6]^2");
}

QWavelet log_gaussian_wavelet(const Grid2D& grid) {
    require_span(grid, 6.0, "log_gaussian_wavelet");
    auto m = QSignal2D::from_function(grid, [](double x, double y) {
        double r2 = x * x + y * y;
        return Quaternion((1.0 / kPi - r2) * std::exp(-kPi * r2));
    });
    return make_wavelet(std::move(m), "log");
}

QWavelet log_gaussian_wavelet() { return log_gaussian_wavelet(Grid2D::symmetric(769, 6.0)); }

QWavelet directional_wavelet(const Grid2D& grid) {
    require_span(grid, 6.0, "directional_wavelet");
    const Quaternion lambda(0.5, 0.5, 0.5, 0.5);
    auto m = QSignal2D::from_function(grid, [&](double x, double y) {
        return lambda * (-x * std::exp(-kPi * (x * x + y * y)));
    });
    return make_wavelet(std::move(m), "dgauss");
}

QWavelet directional_wavelet() { return directional_wavelet(Grid2D::symmetric(769, 6.0)); }

Quaternion rotated_mother_spectrum(const QWavelet& w, double theta, Vec2 eta) {
    return sample_cubic(*w.fine_plus, rotate(eta, theta)) +
           sample_cubic(*w.fine_minus, rotate(eta, -theta));
}

Quaternion rotated_mother_spectrum_exact(const QWavelet& w, double theta, Vec2 eta) {
    Quaternion p = qft_eval(w.mother, rotate(eta, theta));
    Quaternion m = qft_eval(w.mother, rotate(eta, -theta));
    const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2();
    return 0.5 * (p + e1 * p * e2) + 0.5 * (m - e1 * m * e2);
}

std::vector<Vec2> default_probes(std::size_t count) {
    static const double radii[3] = {0.6, 1.0, 1.5};
    std::vector<Vec2> out;
    for (std::size_t k = 0; k < count; ++k) {
        double ang = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count) + 0.37;
        double r = radii[k % 3];
        out.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    return out;
}

SimGrid default_scale_quadrature() {
    return SimGrid::log_uniform(256, 1e-2, 1e2, 64, Grid2D{2, 2, 0, 0, 1, 1});
}

AdmissibilityReport admissibility_report(const QWavelet& w, const std::vector<Vec2>& probes,
                                         const SimGrid& sq) {
    if (probes.size() < 4) throw Error(Status::InvalidArgument, "admissibility: need >= 4 probes");
    for (const auto& p : probes)
        if (norm(p) == 0.0) throw Error(Status::InvalidArgument, "admissibility: zero probe");

    std::size_t np = probes.size(), ns = sq.n_scales(), na = sq.n_angles();
    std::vector<std::vector<double>> prof(np, std::vector<double>(ns, 0.0));
    std::vector<double> peak_c(np, 0.0), resid(np, 0.0);
    std::size_t stride = std::max<std::size_t>(1, na / 8);

    parallel_for(np, [&](std::size_t p) {
        for (std::size_t j = 0; j < ns; ++j) {
            Vec2 eta = sq.scales[j] * probes[p];
            double acc = 0.0;
            for (std::size_t k = 0; k < na; ++k)
                acc += quat_norm2(rotated_mother_spectrum(w, sq.angles[k], eta));
            prof[p][j] = acc * sq.dtheta;
        }
        // commutation test at the scale carrying the most energy, exact evaluation
        std::size_t jstar = static_cast<std::size_t>(
            std::max_element(prof[p].begin(), prof[p].end()) - prof[p].begin());
        Vec2 eta = sq.scales[jstar] * probes[p];
        for (std::size_t k = 0; k < na; k += stride) {
            Quaternion q = rotated_mother_spectrum_exact(w, sq.angles[k], eta);
            peak_c[p] = std::max(peak_c[p], quat_modulus(q));
            resid[p] = std::max({resid[p], std::fabs(q.q1), std::fabs(q.q3)});
        }
    });

    AdmissibilityReport r;
    r.probes = probes;
    double peak_all = 0.0, resid_all = 0.0;
    // Fit g ~ a^p over the outermost cells at each end of the window. A
    // convergent tail needs p > 0 at small scales and p < 0 at large ones;
    // the analytic remainder g_edge / |p| is added to the quadrature sum.
    const std::size_t fit = std::min<std::size_t>(8, ns / 4);
    auto slope = [&](const std::vector<double>& g, std::size_t i0, std::size_t i1) {
        double a = std::log(std::max(g[i0], 1e-300)), b = std::log(std::max(g[i1], 1e-300));
        return (b - a) / (sq.dlog * (static_cast<double>(i1) - static_cast<double>(i0)));
    };
    for (std::size_t p = 0; p < np; ++p) {
        const auto& g = prof[p];
        double c = 0.0, pk = 0.0;
        for (double v : g) {
            c += v * sq.dlog;
            pk = std::max(pk, v);
        }
        if (!(pk > 0.0) || !std::isfinite(c)) {
            r.divergent = true;
            r.values.push_back(c);
            continue;
        }
        double lo_edge = g.front() / pk, hi_edge = g.back() / pk;
        r.tail_ratio = std::max({r.tail_ratio, lo_edge, hi_edge});
        double p_lo = slope(g, 0, fit), p_hi = slope(g, ns - 1 - fit, ns - 1);
        if (lo_edge >= 1e-3) {
            if (p_lo < 0.5) r.divergent = true;
            else c += g.front() * std::exp(-0.5 * p_lo * sq.dlog) / p_lo;
        }
        if (hi_edge >= 1e-3) {
            if (p_hi > -0.5) r.divergent = true;
            else c += g.back() * std::exp(0.5 * p_hi * sq.dlog) / -p_hi;
        }
        r.values.push_back(c);
        peak_all = std::max(peak_all, peak_c[p]);
        resid_all = std::max(resid_all, resid[p]);
    }
    double lo = *std::min_element(r.values.begin(), r.values.end());
    double hi = *std::max_element(r.values.begin(), r.values.end());
    double sum = 0.0;
    for (double v : r.values) sum += v;
    r.mean = sum / static_cast<double>(np);
    r.spread = r.mean > 0.0 ? (hi - lo) / r.mean : INFINITY;
    r.commute_residual = peak_all > 0.0 ? resid_all / peak_all : INFINITY;
    r.commutes_with_e2 = r.commute_residual <= 1e-8;
    return r;
}

double admissibility_constant(QWavelet& w, const std::vector<Vec2>& probes, const SimGrid& sq,
                              double spread_tol) {
    AdmissibilityReport r = admissibility_report(w, probes, sq);
    if (r.divergent)
        throw Error(Status::Admissibility,
                    "admissibility failure: scale integral does not converge (edge/peak ratio " +
                        std::to_string(r.tail_ratio) + ")");
    if (r.spread > spread_tol)
        throw Error(Status::Admissibility, "admissibility failure: C(xi) depends on xi (spread " +
                                               std::to_string(r.spread) + ")");
    w.c_phi = r.mean;
    w.commutes_with_e2 = r.commutes_with_e2;
    w.admissibility = r;
    return r.mean;
}

QSignal2D daughter(const QWavelet& w, double a, double theta, Vec2 b) {
    return resample_similitude(w.mother, a, theta, b);
}

QSignal2D daughter(const QWavelet& w, double a, double theta, Vec2 b, const Grid2D& target) {
    return resample_similitude(w.mother, a, theta, b, target);
}

QSpectrum2D daughter_spectrum(const QWavelet& w, double a, double theta, Vec2 b) {
    if (!(a > 0.0)) throw Error(Status::InvalidArgument, "daughter_spectrum: scale must be positive");
    QSpectrum2D out = w.spectrum;
    const Grid2D& g = out.grid;
    for (std::size_t m1 = 0; m1 < g.n1; ++m1) {
        Quaternion left = unit_phase(Quaternion::e1(), -2.0 * kPi * g.x(m1) * b.x);
        for (std::size_t m2 = 0; m2 < g.n2; ++m2) {
            Quaternion right = unit_phase(Quaternion::e2(), -2.0 * kPi * g.y(m2) * b.y);
            Vec2 xi = g.point(m1, m2);
            out(m1, m2) = a * (left * rotated_mother_spectrum(w, theta, a * xi) * right);
        }
    }
    return out;
}

static std::size_t dc_index(const Grid2D& fg) { return fg.index(fg.n1 / 2, fg.n2 / 2); }

Quaternion aqw_inner_product(const QWavelet& w1, const QWavelet& w2) {
    for (const QWavelet* w : {&w1, &w2}) {
        double dc = quat_modulus(w->spectrum.data[dc_index(w->spectrum.grid)]);
        if (dc > 1e-8 * w->spectrum.max_modulus())
            throw Error(Status::Domain, "aqw_inner_product: spectrum does not vanish at xi = 0");
    }
    const Grid2D& g = w1.spectrum.grid;
    bool same = g.same_as(w2.spectrum.grid);
    Quaternion acc;
    for (std::size_t m1 = 0; m1 < g.n1; ++m1)
        for (std::size_t m2 = 0; m2 < g.n2; ++m2) {
            Vec2 xi = g.point(m1, m2);
            double r2 = xi.x * xi.x + xi.y * xi.y;
            if (g.index(m1, m2) == dc_index(g)) continue;
            Quaternion b = same ? w2.spectrum(m1, m2) : sample_cubic(w2.spectrum, xi);
            acc += w1.spectrum(m1, m2) * quat_conj(b) / r2;
        }
    return acc * g.cell_area();
}

}  // namespace qcwt
