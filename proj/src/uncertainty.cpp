// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include "qcwt/uncertainty.hpp"

#include <algorithm>
#include <numbers>

#include "qcwt/parallel.hpp"

namespace qcwt {

namespace {

constexpr double kPi = std::numbers::pi;

// Largest modulus on the outer ring of the grid, relative to the peak.
double edge_ratio(const Grid2D& g, const std::vector<Quaternion>& d) {
    double peak = 0.0, edge = 0.0;
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
            double m = quat_modulus(d[g.index(i1, i2)]);
            peak = std::max(peak, m);
            if (i1 == 0 || i2 == 0 || i1 + 1 == g.n1 || i2 + 1 == g.n2) edge = std::max(edge, m);
        }
    return peak == 0.0 ? 0.0 : edge / peak;
}

// sum |x_l|^2 |v|^2 dA with the three weights xi1^2, xi2^2, |xi|^2 accumulated side by side
struct Moments {
    double m1 = 0.0, m2 = 0.0, m0 = 0.0;
};

Moments second_moments(const Grid2D& g, const Quaternion* v) {
    Moments m;
    for (std::size_t i1 = 0; i1 < g.n1; ++i1) {
        double x = g.x(i1);
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
            double y = g.y(i2), p = quat_norm2(v[g.index(i1, i2)]);
            m.m1 += x * x * p;
            m.m2 += y * y * p;
            m.m0 += (x * x + y * y) * p;
        }
    }
    double dA = g.cell_area();
    m.m1 *= dA;
    m.m2 *= dA;
    m.m0 *= dA;
    return m;
}

double pick(const Moments& m, int axis) { return axis == 1 ? m.m1 : axis == 2 ? m.m2 : m.m0; }

double log_moment(const Grid2D& g, const Quaternion* v) {
    double s = 0.0;
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
            double p = quat_norm2(v[g.index(i1, i2)]);
            if (p != 0.0) s += log_weight(g, i1, i2) * p;
        }
    return s * g.cell_area();
}

double norm2(const std::vector<Quaternion>& v, double dA) {
    double s = 0.0;
    for (const auto& q : v) s += quat_norm2(q);
    return s * dA;
}

double require_c(const QWavelet& w) {
    if (!w.c_phi) throw Error(Status::Admissibility, "wavelet has no admissibility constant");
    return *w.c_phi;
}

void check_source(const Scalogram& S, const QSignal2D& f) {
    if (!S.signal_grid.same_as(f.grid()))
        throw Error(Status::GridMismatch, "scalogram was computed on a different signal grid");
}

}  // namespace

double log_up_constant() { return -std::log(kPi) - kEulerGamma; }

double log_up_constant_2d() { return -kEulerGamma - 2.0 * std::numbers::ln2 - std::log(kPi); }

double log_weight(const Grid2D& g, std::size_t i1, std::size_t i2) {
    double x = g.x(i1), y = g.y(i2);
    if (std::fabs(x) > 1e-9 * g.dx || std::fabs(y) > 1e-9 * g.dy) return 0.5 * std::log(x * x + y * y);
    // mean of ln|x| over [-p, p] x [-q, q]
    double p = 0.5 * g.dx, q = 0.5 * g.dy;
    double I = p * q * (std::log(p * p + q * q) - 3.0) + p * p * std::atan(q / p) + q * q * std::atan(p / q);
    return I / (2.0 * p * q);
}

UPReport heisenberg_lemma_check(const Scalogram& S, const QSignal2D& f, const QWavelet& w, int axis) {
    if (axis < 0 || axis > 2) throw Error(Status::InvalidArgument, "axis must be 0, 1 or 2");
    check_source(S, f);
    double C = require_c(w);
    UPReport r;
    r.name = axis == 0 ? "heisenberg_lemma_abs" : axis == 1 ? "heisenberg_lemma_1" : "heisenberg_lemma_2";

    const SimGrid& sim = S.sim;
    std::vector<Moments> per(sim.n_slices());
    parallel_for(sim.n_slices(), [&](std::size_t s) {
        QSignal2D slice(sim.translations,
                        std::vector<Quaternion>(S.coeffs.begin() + s * S.slice_size(),
                                                S.coeffs.begin() + (s + 1) * S.slice_size()));
        QSpectrum2D T = qft_forward(slice);
        per[s] = second_moments(T.grid, T.data.data());
    });
    Moments acc;
    for (std::size_t j = 0; j < sim.n_scales(); ++j)
        for (std::size_t k = 0; k < sim.n_angles(); ++k) {
            const Moments& m = per[j * sim.n_angles() + k];
            double wt = sim.weight(j, k);
            acc.m1 += wt * m.m1;
            acc.m2 += wt * m.m2;
            acc.m0 += wt * m.m0;
        }
    QSpectrum2D F = qft_forward(f);
    Moments fm = second_moments(F.grid, F.data.data());

    r.lhs = pick(acc, axis);
    r.rhs = C * pick(fm, axis);
    r.trivial = r.rhs == 0.0;
    r.ratio = r.trivial ? 1.0 : r.lhs / r.rhs;
    r.margin = r.ratio - 1.0;
    double edge = edge_ratio(F.grid, F.data);
    r.hypotheses_ok = w.commutes_with_e2 && edge <= 1e-6;
    r.details["lhs_axis1"] = acc.m1;
    r.details["lhs_axis2"] = acc.m2;
    r.details["identity_residual"] = acc.m0 == 0.0 ? 0.0 : std::fabs(acc.m0 - acc.m1 - acc.m2) / acc.m0;
    r.details["spectrum_edge"] = edge;
    r.details["c_phi"] = C;
    if (!w.commutes_with_e2) r.note = "wavelet spectrum not in R + R e2";
    return r;
}

UPReport heisenberg_lemma_check(const QSignal2D& f, const QWavelet& w, const SimGrid& sim, int axis) {
    return heisenberg_lemma_check(cqwt_fast(f, w, sim), f, w, axis);
}

UPReport heisenberg_qft_ratio(const QSignal2D& f) {
    UPReport r;
    r.name = "heisenberg_qft";
    QSpectrum2D F = qft_forward(f);
    double t2 = second_moments(f.grid(), f.data().data()).m0;
    double x2 = second_moments(F.grid, F.data.data()).m0;
    double n2 = norm2(f.data(), f.grid().cell_area());
    r.lhs = t2 * x2;
    r.rhs = n2 * n2 / (16.0 * kPi * kPi);
    r.trivial = r.rhs == 0.0;
    r.ratio = r.trivial ? 1.0 : r.lhs / r.rhs;
    r.margin = r.ratio - 1.0;
    double es = edge_ratio(f.grid(), f.data()), ef = edge_ratio(F.grid, F.data);
    r.hypotheses_ok = es <= 1e-6 && ef <= 1e-6;
    r.details["time_moment"] = t2;
    r.details["frequency_moment"] = x2;
    r.details["signal_edge"] = es;
    r.details["spectrum_edge"] = ef;
    if (!r.hypotheses_ok) r.note = "signal or spectrum does not decay inside the grid";
    return r;
}

UPReport heisenberg_cqwt_ratio(const Scalogram& S, const QSignal2D& f, const QWavelet& w) {
    check_source(S, f);
    double C = require_c(w);
    UPReport r;
    r.name = "heisenberg_cqwt";
    const SimGrid& sim = S.sim;
    const Grid2D& tg = sim.translations;
    double bT = 0.0;
    for (std::size_t j = 0; j < sim.n_scales(); ++j)
        for (std::size_t k = 0; k < sim.n_angles(); ++k)
            bT += sim.weight(j, k) * second_moments(tg, S.slice(j, k)).m0;
    double T2 = scalogram_norm2(S);
    QSpectrum2D F = qft_forward(f);
    double xf = second_moments(F.grid, F.data.data()).m0;
    r.lhs = std::sqrt(bT) * std::sqrt(xf);
    r.rhs = T2 / (4.0 * kPi * std::sqrt(C));
    r.trivial = r.rhs == 0.0;
    r.ratio = r.trivial ? 1.0 : r.lhs / r.rhs;
    r.margin = r.ratio - 1.0;
    // stands in for the L^2 condition on the second derivative of f
    double edge = edge_ratio(F.grid, F.data);
    r.hypotheses_ok = w.commutes_with_e2 && edge <= 1e-6;
    r.details["b_moment"] = bT;
    r.details["xi_moment"] = xf;
    r.details["scalogram_norm2"] = T2;
    r.details["spectrum_edge"] = edge;
    if (r.trivial) r.note = "zero signal";
    return r;
}

UPReport heisenberg_cqwt_ratio(const QSignal2D& f, const QWavelet& w, const SimGrid& sim) {
    return heisenberg_cqwt_ratio(cqwt_fast(f, w, sim), f, w);
}

UPReport log_up_check(const Scalogram& S, const QSignal2D& f, const QWavelet& w, double A) {
    check_source(S, f);
    double C = require_c(w);
    UPReport r;
    r.name = "log_up_cqwt";
    QSpectrum2D F = qft_forward(f);
    double spec = log_moment(F.grid, F.data.data());
    const SimGrid& sim = S.sim;
    double sim_part = 0.0;
    for (std::size_t j = 0; j < sim.n_scales(); ++j)
        for (std::size_t k = 0; k < sim.n_angles(); ++k)
            sim_part += sim.weight(j, k) * log_moment(sim.translations, S.slice(j, k));
    double n2 = norm2(f.data(), f.grid().cell_area());
    double scale = C * n2;
    r.lhs = C * spec + sim_part;
    r.rhs = A * scale;
    r.trivial = scale == 0.0;
    r.margin = r.trivial ? 0.0 : (r.lhs - r.rhs) / scale;
    r.ratio = r.trivial ? 1.0 : r.lhs / r.rhs;
    bool c2 = spectrum_in_c2(F);
    r.hypotheses_ok = w.commutes_with_e2 && c2;
    r.details["A"] = A;
    r.details["spectral_term"] = C * spec;
    r.details["sim_term"] = sim_part;
    r.details["scale"] = scale;
    if (!c2) r.note = "f^ not in R + R e2";
    else if (!w.commutes_with_e2) r.note = "wavelet spectrum not in R + R e2";
    return r;
}

UPReport log_up_check(const Scalogram& S, const QSignal2D& f, const QWavelet& w) {
    return log_up_check(S, f, w, log_up_constant());
}

UPReport log_up_check(const QSignal2D& f, const QWavelet& w, const SimGrid& sim) {
    return log_up_check(cqwt_fast(f, w, sim), f, w);
}

UPReport log_up_qft(const QSignal2D& f, double A) {
    UPReport r;
    r.name = "log_up_qft";
    QSpectrum2D F = qft_forward(f);
    double spec = log_moment(F.grid, F.data.data());
    double sig = log_moment(f.grid(), f.data().data());
    double n2 = norm2(f.data(), f.grid().cell_area());
    r.lhs = spec + sig;
    r.rhs = A * n2;
    r.trivial = n2 == 0.0;
    r.margin = r.trivial ? 0.0 : (r.lhs - r.rhs) / n2;
    r.ratio = r.trivial ? 1.0 : r.lhs / r.rhs;
    r.hypotheses_ok = edge_ratio(f.grid(), f.data()) <= 1e-6 && edge_ratio(F.grid, F.data) <= 1e-6;
    r.details["A"] = A;
    r.details["spectral_term"] = spec;
    r.details["signal_term"] = sig;
    r.details["scale"] = n2;
    return r;
}

UPReport log_up_qft(const QSignal2D& f) { return log_up_qft(f, log_up_constant()); }

LogQuadFit log_quadratic_fit(const Grid2D& g, const std::vector<Quaternion>& v, double lo, double hi) {
    LogQuadFit fit;
    double peak = 0.0;
    for (const auto& q : v) peak = std::max(peak, quat_modulus(q));
    if (peak == 0.0) return fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    std::size_t n = 0;
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
        for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
            double m = quat_modulus(v[g.index(i1, i2)]);
            if (m < lo * peak || m > hi * peak) continue;
            double x = g.x(i1) * g.x(i1) + g.y(i2) * g.y(i2), y = std::log(m);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            syy += y * y;
            ++n;
        }
    fit.points = n;
    if (n < 3) return fit;
    double dn = static_cast<double>(n);
    double vx = sxx - sx * sx / dn, vy = syy - sy * sy / dn, cxy = sxy - sx * sy / dn;
    if (vx <= 0.0) return fit;
    fit.slope = cxy / vx;
    fit.intercept = (sy - fit.slope * sx) / dn;
    fit.r2 = vy > 0.0 ? cxy * cxy / (vx * vy) : 1.0;
    return fit;
}

UPReport hardy_classify(const Scalogram& S, const QSpectrum2D& F, double a, double theta) {
    if (!(a > 0.0)) throw Error(Status::InvalidArgument, "hardy_classify: scale must be positive");
    const SimGrid& sim = S.sim;
    UPReport r;
    r.name = "hardy";
    std::size_t j = 0, k = 0;
    for (std::size_t i = 1; i < sim.n_scales(); ++i)
        if (std::fabs(std::log(sim.scales[i] / a)) < std::fabs(std::log(sim.scales[j] / a))) j = i;
    auto angdist = [&](double t) {
        double d = std::remainder(t - theta, 2.0 * kPi);
        return std::fabs(d);
    };
    for (std::size_t i = 1; i < sim.n_angles(); ++i)
        if (angdist(sim.angles[i]) < angdist(sim.angles[k])) k = i;
    r.details["j"] = static_cast<double>(j);
    r.details["k"] = static_cast<double>(k);
    r.details["a"] = sim.scales[j];
    r.details["theta"] = sim.angles[k];

    const Grid2D& tg = sim.translations;
    std::vector<Quaternion> slice(S.slice(j, k), S.slice(j, k) + S.slice_size());
    double se = edge_ratio(tg, slice), fe = edge_ratio(F.grid, F.data);
    r.details["slice_edge"] = se;
    r.details["spectrum_edge"] = fe;
    r.hypotheses_ok = spectrum_in_c2(F);
    r.details["case"] = static_cast<double>(HardyCase::Unclassifiable);
    if (se > 1e-8 || fe > 1e-8) {
        r.note = "insufficient decay inside the grid";
        return r;
    }
    LogQuadFit ft = log_quadratic_fit(tg, slice), ff = log_quadratic_fit(F.grid, F.data);
    if (!std::isfinite(ft.slope) || !std::isfinite(ff.slope)) {
        r.note = "too few samples in the fit band";
        return r;
    }
    double alpha = -ft.slope, beta = -ff.slope;
    r.details["alpha"] = alpha;
    r.details["beta"] = beta;
    r.details["alpha_fit_r2"] = ft.r2;
    r.details["beta_fit_r2"] = ff.r2;
    r.lhs = alpha * beta;
    r.rhs = kPi * kPi;
    r.ratio = r.lhs / r.rhs;
    r.margin = r.ratio - 1.0;
    r.details["alpha_beta"] = r.lhs;

    // best quaternion multiple of exp(-alpha |b|^2)
    Quaternion num;
    double den = 0.0;
    Quaternion mean;
    for (std::size_t i1 = 0; i1 < tg.n1; ++i1)
        for (std::size_t i2 = 0; i2 < tg.n2; ++i2) {
            double gb = std::exp(-alpha * (tg.x(i1) * tg.x(i1) + tg.y(i2) * tg.y(i2)));
            const Quaternion& t = slice[tg.index(i1, i2)];
            num += t * gb;
            den += gb * gb;
            mean += t;
        }
    Quaternion A = num * (1.0 / den);
    mean *= 1.0 / static_cast<double>(slice.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i1 = 0; i1 < tg.n1; ++i1)
        for (std::size_t i2 = 0; i2 < tg.n2; ++i2) {
            double gb = std::exp(-alpha * (tg.x(i1) * tg.x(i1) + tg.y(i2) * tg.y(i2)));
            const Quaternion& t = slice[tg.index(i1, i2)];
            ss_res += quat_norm2(t - A * gb);
            ss_tot += quat_norm2(t - mean);
        }
    r.details["slice_r2"] = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
    r.details["A_modulus"] = quat_modulus(A);

    QSpectrum2D Ts = qft_forward(QSignal2D(tg, slice));
    LogQuadFit fs = log_quadratic_fit(Ts.grid, Ts.data);
    r.details["beta_slice"] = -fs.slope;

    HardyCase c;
    double speak = 0.0;
    for (const auto& q : slice) speak = std::max(speak, quat_modulus(q));
    if (r.ratio > 1.05) c = speak <= 1e-12 * S.source_norm ? HardyCase::Vanishing : HardyCase::Unclassifiable;
    else if (r.ratio < 0.95) c = HardyCase::Many;
    else c = HardyCase::Gaussian;
    r.details["case"] = static_cast<double>(c);
    switch (c) {
        case HardyCase::Vanishing: r.note = "alpha beta > pi^2"; break;
        case HardyCase::Many: r.note = "alpha beta < pi^2"; break;
        case HardyCase::Gaussian: r.note = "alpha beta = pi^2"; break;
        default: r.note = "alpha beta > pi^2 with a nonzero slice: finite-resolution artifact";
    }
    return r;
}

HardyCase hardy_case(const UPReport& r) {
    auto it = r.details.find("case");
    if (it == r.details.end()) return HardyCase::Unclassifiable;
    return static_cast<HardyCase>(static_cast<int>(it->second));
}

}  // namespace qcwt
