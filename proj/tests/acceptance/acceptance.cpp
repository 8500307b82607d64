// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors
//
// Acceptance suite: one PASS/FAIL line per criterion, INFO lines for
// supporting numbers. Exit status is nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "qcwt/corpus.hpp"
#include "qcwt/parallel.hpp"
#include "qcwt/uncertainty.hpp"

using namespace qcwt;
using oracle::pi;

namespace {

// tolerances
constexpr double kTolAlgebra = 1e-12;
constexpr double kTolEigen = 1e-6;
constexpr double kTolOracle = 1e-10;
constexpr double kTolParseval = 1e-8;
constexpr double kTolRoundTrip = 1e-10;
constexpr double kTolDerivative = 1e-4;
constexpr double kTolLaplacian = 1e-12;
constexpr double kTolAdmissibility = 0.02;
constexpr double kTolSpread = 0.02;
constexpr double kTolFast = 1e-6;
constexpr double kTolCqwtPlancherel = 0.05;
constexpr double kTolInversion = 0.05;
constexpr double kTolKernel = 0.05;
constexpr double kTolExact = 1e-12;
constexpr double kTolCovariance = 0.01;
constexpr double kTolLp = 0.01;
constexpr double kTolLemma = 0.05;
constexpr double kTolGaussRatio = 0.02;
constexpr double kTolHeisenberg = 0.01;
constexpr double kTolLogUp = 0.01;
constexpr double kTolHardyBeta = 0.05;
constexpr double kHardyR2 = 0.999;
constexpr double kLimitFastSeconds = 1.0;
constexpr double kLimitReferenceSeconds = 60.0;

int g_failed = 0;

void verdict(int id, bool ok, const std::string& what, const std::string& detail) {
    if (!ok) ++g_failed;
    std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
}

void info(int id, const std::string& detail) {
    std::printf("INFO %2d   %s\n", id, detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Hamilton product written out as a 4x4 matrix acting on q.
Quaternion hamilton(const Quaternion& p, const Quaternion& q) {
    const double m[4][4] = {{p.q0, -p.q1, -p.q2, -p.q3},
                            {p.q1, p.q0, -p.q3, p.q2},
                            {p.q2, p.q3, p.q0, -p.q1},
                            {p.q3, -p.q2, p.q1, p.q0}};
    double r[4];
    for (int i = 0; i < 4; ++i) r[i] = m[i][0] * q.q0 + m[i][1] * q.q1 + m[i][2] * q.q2 + m[i][3] * q.q3;
    return {r[0], r[1], r[2], r[3]};
}

double rel_to_peak(const std::vector<Quaternion>& lhs, const std::vector<Quaternion>& rhs) {
    double m = 0.0, p = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        m = std::max(m, quat_modulus(lhs[i] - rhs[i]));
        p = std::max(p, quat_modulus(rhs[i]));
    }
    return m / p;
}

// sum f conj(g) dA
Quaternion inner(const std::vector<Quaternion>& f, const std::vector<Quaternion>& g, double dA) {
    Quaternion s;
    for (std::size_t i = 0; i < f.size(); ++i) s += hamilton(f[i], quat_conj(g[i]));
    return s * dA;
}

// Frequencies of an n-point axis with spacing dx: (m - floor(n/2)) / (n dx).
std::vector<double> freq_axis(std::size_t n, double dx) {
    std::vector<double> u(n);
    for (std::size_t m = 0; m < n; ++m) u[m] = (double(m) - double(n / 2)) / (double(n) * dx);
    return u;
}

// Two-sided transform by the defining sum.
std::vector<Quaternion> qft_by_sum(const QSignal2D& f) {
    const Grid2D& g = f.grid();
    auto u1 = freq_axis(g.n1, g.dx), u2 = freq_axis(g.n2, g.dy);
    std::vector<Quaternion> out(g.size());
    for (std::size_t m1 = 0; m1 < g.n1; ++m1)
        for (std::size_t m2 = 0; m2 < g.n2; ++m2) {
            Quaternion acc;
            for (std::size_t i1 = 0; i1 < g.n1; ++i1) {
                double p1 = -2 * pi * u1[m1] * (g.x0 + double(i1) * g.dx);
                Quaternion left(std::cos(p1), std::sin(p1), 0, 0);
                for (std::size_t i2 = 0; i2 < g.n2; ++i2) {
                    double p2 = -2 * pi * u2[m2] * (g.y0 + double(i2) * g.dy);
                    Quaternion right(std::cos(p2), 0, std::sin(p2), 0);
                    acc += hamilton(hamilton(left, f(i1, i2)), right);
                }
            }
            out[m1 * g.n2 + m2] = acc * (g.dx * g.dy);
        }
    return out;
}

// Fraction of C ||f||^2 that the LoG scale window [smin, smax] captures for a
// radial |f^(r)|^2. Uses int_{s1}^{s2} 2 pi s^3 e^{-2 pi s^2} ds in closed form.
double window_gain(double r, double smin, double smax) {
    auto prim = [](double s) {
        double t = 2 * pi * s * s;
        return -(1 + t) * std::exp(-t) / (4 * pi);
    };
    return (prim(smax * r) - prim(smin * r)) * 4 * pi;
}

double predicted_plancherel(const std::function<double(double)>& spec2, double smin, double smax) {
    double num = oracle::simpson([&](double r) { return 2 * pi * r * spec2(r) * window_gain(r, smin, smax); }, 0.0,
                                 8.0, 40000);
    double den = oracle::simpson([&](double r) { return 2 * pi * r * spec2(r); }, 0.0, 8.0, 40000);
    return num / den;
}

// Relative L2 error of reconstructing from the windowed transform.
double predicted_inversion_error(const std::function<double(double)>& spec2, double smin, double smax) {
    double num = oracle::simpson(
        [&](double r) {
            double m = 1.0 - window_gain(r, smin, smax);
            return 2 * pi * r * spec2(r) * m * m;
        },
        0.0, 8.0, 40000);
    double den = oracle::simpson([&](double r) { return 2 * pi * r * spec2(r); }, 0.0, 8.0, 40000);
    return std::sqrt(num / den);
}

const Grid2D kRef = Grid2D::square(128, 8.0);

struct Corpus {
    QWavelet logw;
    std::vector<std::string> names;
    std::map<std::string, QSignal2D> f;
    std::map<std::string, Scalogram> T;
    double seconds_gaussian = 0.0;
};

// |f^(r)|^2 of the unit Gaussian and of the unit mexican hat (pi times the LoG).
double gauss_spec2(double r) { return std::exp(-2 * pi * r * r); }
double hat_spec2(double r) { return pi * pi * std::pow(r, 4) * std::exp(-2 * pi * r * r); }

void criterion_algebra() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2026);
    double mult = 0.0, anti = 0.0, assoc = 0.0, inv = 0.0, prod = 0.0;
    for (int i = 0; i < 10000; ++i) {
        Quaternion p = oracle::random_quaternion(rng), q = oracle::random_quaternion(rng),
                   r = oracle::random_quaternion(rng);
        Quaternion pq = p * q;
        double scale = quat_modulus(p) * quat_modulus(q);
        prod = std::max(prod, quat_modulus(pq - hamilton(p, q)) / scale);
        mult = std::max(mult, std::fabs(quat_modulus(pq) - scale) / scale);
        anti = std::max(anti, quat_modulus(quat_conj(pq) - quat_conj(q) * quat_conj(p)) / scale);
        Quaternion l = (p * q) * r, rr = p * (q * r);
        assoc = std::max(assoc, quat_modulus(l - rr) / (scale * quat_modulus(r)));
        inv = std::max(inv, std::max(quat_modulus(p * quat_inverse(p) - Quaternion(1.0)),
                                     quat_modulus(quat_inverse(p) * p - Quaternion(1.0))));
    }
    double worst = std::max({mult, anti, assoc, inv, prod});
    double s = seconds_since(t0);
    verdict(1, worst <= kTolAlgebra && s < kLimitFastSeconds, "quaternion algebra",
            fmt("10^4 triples, max rel err %.2e (tol %.0e): product %.1e, modulus %.1e, conj %.1e, assoc %.1e, "
                "inverse %.1e; %.3f s",
                worst, kTolAlgebra, prod, mult, anti, assoc, inv, s));
}

void criterion_eigen() {
    auto t0 = std::chrono::steady_clock::now();
    auto f = QSignal2D::from_function(kRef, [](double x, double y) { return Quaternion(std::exp(-pi * (x * x + y * y))); });
    auto F = qft_forward(f);
    double s = seconds_since(t0);
    auto u1 = freq_axis(kRef.n1, kRef.dx), u2 = freq_axis(kRef.n2, kRef.dy);
    double err = 0.0;
    for (std::size_t m1 = 0; m1 < kRef.n1; ++m1)
        for (std::size_t m2 = 0; m2 < kRef.n2; ++m2) {
            double want = std::exp(-pi * (u1[m1] * u1[m1] + u2[m2] * u2[m2]));
            err = std::max(err, quat_modulus(F(m1, m2) - Quaternion(want)));
        }
    verdict(2, err <= kTolEigen && s < kLimitFastSeconds, "QFT Gaussian eigenfunction",
            fmt("N=128 on [-8,8]^2, max abs err %.2e (tol %.0e); %.3f s", err, kTolEigen, s));
}

void criterion_oracle() {
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t n1 = 2; n1 <= 16; ++n1)
        for (std::size_t n2 = 2; n2 <= 16; ++n2) shapes.emplace_back(n1, n2);
    std::vector<double> worst(shapes.size(), 0.0);
    parallel_for(shapes.size(), [&](std::size_t s) {
        auto [n1, n2] = shapes[s];
        std::mt19937_64 rng(1000 + s);
        for (int k = 0; k < 20; ++k) {
            Grid2D g{n1, n2, -0.3 * double(n1) / 2, -0.2 * double(n2) / 2 + 0.05, 0.3, 0.2};
            auto f = oracle::random_signal(g, rng);
            worst[s] = std::max(worst[s], oracle::max_abs_diff(qft_forward(f).data, qft_by_sum(f)));
        }
    });
    double w = *std::max_element(worst.begin(), worst.end());
    verdict(3, w <= kTolOracle, "QFT vs direct sum",
            fmt("all %zu grids 2x2..16x16, 20 random quaternion signals each, max abs diff %.2e (tol %.0e)",
                shapes.size(), w, kTolOracle));
}

void criterion_plancherel() {
    double pars = 0.0, full = 0.0, scalar = 0.0, real_pair = 0.0, rt = 0.0;
    double dA = kRef.cell_area();
    Grid2D fg = QSpectrum2D::frequency_grid(kRef);
    double dU = fg.cell_area();
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto f = random_bandlimited(kRef, seed), g = random_bandlimited(kRef, seed + 50);
        auto F = qft_forward(f), G = qft_forward(g);
        double nf = std::sqrt(inner(f.data(), f.data(), dA).q0), ng = std::sqrt(inner(g.data(), g.data(), dA).q0);
        double nF2 = inner(F.data, F.data, dU).q0;
        pars = std::max(pars, std::fabs(nF2 - nf * nf) / (nf * nf));
        Quaternion a = inner(f.data(), g.data(), dA), b = inner(F.data, G.data, dU);
        full = std::max(full, quat_modulus(a - b) / (nf * ng));
        scalar = std::max(scalar, std::fabs(a.q0 - b.q0) / (nf * ng));
        rt = std::max(rt, oracle::rel_l2(qft_inverse(F).data(), f.data()));
        auto fr = random_bandlimited(kRef, seed, 6, 0.8, 2.0, false),
             gr = random_bandlimited(kRef, seed + 50, 6, 0.8, 2.0, false);
        Quaternion ar = inner(fr.data(), gr.data(), dA), br = inner(qft_forward(fr).data, qft_forward(gr).data, dU);
        real_pair = std::max(real_pair, quat_modulus(ar - br) / (l2_norm(fr) * l2_norm(gr)));
    }
    bool ok = pars <= kTolParseval && full <= kTolParseval && rt <= kTolRoundTrip;
    verdict(4, ok, "QFT Plancherel/Parseval and round trip",
            fmt("8 quaternion band-limited pairs: Parseval %.2e, full inner product %.2e (tol %.0e each), "
                "round trip %.2e (tol %.0e)",
                pars, full, kTolParseval, rt, kTolRoundTrip));
    info(4, fmt("scalar part of the inner product %.2e; real-valued pairs %.2e", scalar, real_pair));
}

void criterion_derivative() {
    auto f = random_bandlimited(kRef, 3, 6, 1.0);
    auto F = qft_forward(f);
    double d = 0.0;
    for (int axis : {1, 2}) {
        auto spec = qft_inverse(spectral_derivative(F, axis == 1, axis == 2));
        d = std::max(d, oracle::rel_l2(spec.data(), oracle::central_difference(f, axis).data()));
    }
    auto lap = spectral_laplacian(F);
    auto a = spectral_derivative(F, 2, 0), b = spectral_derivative(F, 0, 2);
    std::vector<Quaternion> sum(a.data.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.data[i] + b.data[i];
    double l = oracle::rel_l2(lap.data, sum);
    verdict(5, d <= kTolDerivative && l <= kTolLaplacian, "derivative theorem and Laplacian",
            fmt("spectral vs 8th-order difference rel L2 %.2e (tol %.0e); Laplacian vs axis sum %.2e (tol %.0e)", d,
                kTolDerivative, l, kTolLaplacian));
}

void criterion_admissibility(const QWavelet& w) {
    // 2 pi |xi|^4 int a^3 exp(-2 pi a^2 |xi|^2) da at |xi| = 1
    double analytic = oracle::simpson([](double a) { return 2 * pi * a * a * a * std::exp(-2 * pi * a * a); }, 0.0,
                                      6.0, 200000);
    const auto& rep = *w.admissibility;
    double err = std::fabs(*w.c_phi / analytic - 1.0);
    QWavelet g = make_wavelet(gaussian(Grid2D::symmetric(385, 6.0)), "gaussian");
    bool rejected = false;
    std::string why = "accepted";
    try {
        admissibility_constant(g, default_probes(8), default_scale_quadrature());
    } catch (const Error& e) {
        rejected = e.status() == Status::Admissibility;
        why = e.what();
    }
    verdict(6, err <= kTolAdmissibility && rep.spread <= kTolSpread && rejected, "LoG admissibility",
            fmt("C_phi %.6f vs quadrature %.6f (rel %.2e, tol %.0e); probe spread %.2e (tol %.0e); "
                "Gaussian rejected: %s",
                *w.c_phi, analytic, err, kTolAdmissibility, rep.spread, kTolSpread, rejected ? "yes" : "no"));
    info(6, "Gaussian: " + why);
}

void criterion_fast(const QWavelet& w) {
    Grid2D g = Grid2D::square(16, 2.0);
    SimGrid sim = SimGrid::log_uniform(4, 0.25, 1.0, 4, g);
    // signals whose spectrum lies in R + R e2, the fast path's hypothesis
    std::vector<QSignal2D> fs{gaussian(g, 0.6), mexican_hat(g, 0.7, {0.0, 0.3}),
                              right_mul(anisotropic_gaussian(g, 0.8, 0.5, 0.0), Quaternion(1.0, 0.0, -0.7, 0.0))};
    double worst = 0.0;
    bool fell_back = false;
    for (const auto& f : fs) {
        auto fast = cqwt_fast(f, w, sim), direct = cqwt_direct(f, w, sim);
        fell_back |= fast.fallback;
        worst = std::max(worst, oracle::rel_l2(fast.coeffs, direct.coeffs));
    }
    verdict(7, worst <= kTolFast && !fell_back, "CQWT fast vs direct",
            fmt("16x16, 4 scales x 4 angles, 3 signals, rel L2 %.2e (tol %.0e)%s", worst, kTolFast,
                fell_back ? ", fast path fell back" : ""));
    auto q = random_bandlimited(g, 2, 3, 0.5, 1.0);
    info(7, std::string("quaternion random signal: fast path ") +
                (cqwt_fast(q, w, sim).fallback ? "declines (spectrum outside R + R e2)" : "runs"));
}

void criterion_cqwt_plancherel(const Corpus& c) {
    double C = *c.logw.c_phi;
    bool ok = true;
    std::string detail;
    for (const char* name : {"gaussian", "mexican_hat"}) {
        double nf = l2_norm(c.f.at(name));
        double ratio = scalogram_norm2(c.T.at(name)) / (C * nf * nf);
        ok &= std::fabs(ratio - 1.0) <= kTolCqwtPlancherel;
        detail += fmt("%s ratio %.4f, ", name, ratio);
    }
    const auto &f = c.f.at("mexican_hat"), &g = c.f.at("mexican_hat_wide");
    Quaternion lhs = scalogram_inner_product(c.T.at("mexican_hat"), c.T.at("mexican_hat_wide"));
    Quaternion rhs = inner(f.data(), g.data(), kRef.cell_area()) * C;
    double pr = lhs.q0 / rhs.q0, pq = quat_modulus(lhs - rhs) / quat_modulus(rhs);
    ok &= pq <= kTolCqwtPlancherel;
    ok &= c.seconds_gaussian < kLimitReferenceSeconds;
    detail += fmt("Parseval pair ratio %.4f (quaternion rel err %.2e); band [0.95, 1.05]; Gaussian run %.1f s", pr,
                  pq, c.seconds_gaussian);
    verdict(8, ok, "CQWT Plancherel/Parseval", detail);
    info(8, fmt("scale-window prediction for [0.25, 4]: Gaussian %.4f, mexican hat %.4f",
                predicted_plancherel(gauss_spec2, 0.25, 4.0), predicted_plancherel(hat_spec2, 0.25, 4.0)));
    for (const char* name : {"mexican_hat_shift2", "mexican_hat_e2", "mexican_hat_wide"}) {
        double nf = l2_norm(c.f.at(name));
        info(8, fmt("%s ratio %.4f", name, scalogram_norm2(c.T.at(name)) / (C * nf * nf)));
    }
}

void criterion_inversion(const Corpus& c) {
    const auto& f = c.f.at("gaussian");
    std::vector<std::size_t> counts{8, 16, 32, 64};
    std::vector<double> err(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] == 32) {
            err[i] = oracle::rel_l2(cqwt_inverse(c.T.at("gaussian"), c.logw).data(), f.data());
            continue;
        }
        SimGrid sim = SimGrid::log_uniform(counts[i], 0.25, 4.0, 8, strided(kRef, 2));
        err[i] = oracle::rel_l2(cqwt_inverse(cqwt_fast(f, c.logw, sim), c.logw).data(), f.data());
    }
    bool mono = true;
    for (std::size_t i = 1; i < err.size(); ++i) mono &= err[i] < err[i - 1];
    verdict(9, err[2] <= kTolInversion && mono, "CQWT inversion",
            fmt("Gaussian rel L2 %.4f at 32 scales (tol %.2f); 8/16/32/64 scales: %.5f %.5f %.5f %.5f, %s", err[2],
                kTolInversion, err[0], err[1], err[2], err[3], mono ? "decreasing" : "not decreasing"));
    info(9, fmt("scale-window floor for [0.25, 4]: Gaussian %.4f, mexican hat %.4f",
                predicted_inversion_error(gauss_spec2, 0.25, 4.0), predicted_inversion_error(hat_spec2, 0.25, 4.0)));
    info(9, fmt("mexican hat rel L2 %.4f",
                oracle::rel_l2(cqwt_inverse(c.T.at("mexican_hat"), c.logw).data(), c.f.at("mexican_hat").data())));
}

// 8 nodes drawn with a fixed seed among those holding at least 1% of the peak modulus
std::vector<RkPoint> sample_nodes(const Scalogram& S, std::uint64_t seed) {
    const SimGrid& sim = S.sim;
    double peak = 0.0;
    for (const auto& q : S.coeffs) peak = std::max(peak, quat_modulus(q));
    std::mt19937_64 rng(seed);
    std::vector<RkPoint> pts;
    while (pts.size() < 8) {
        RkPoint p{rng() % sim.n_scales(), rng() % sim.n_angles(), rng() % sim.translations.n1,
                  rng() % sim.translations.n2};
        if (quat_modulus(S.at(p.j, p.k, p.i1, p.i2)) >= 0.01 * peak) pts.push_back(p);
    }
    return pts;
}

void criterion_kernel(const Corpus& c) {
    const Scalogram& S = c.T.at("gaussian");
    const SimGrid& sim = S.sim;
    auto pts = sample_nodes(S, 20);
    auto rk = reproducing_kernel_check(S, c.logw, pts);
    verdict(10, rk.max_residual <= kTolKernel, "reproducing kernel",
            fmt("8 sampled SIM(2) nodes on the Gaussian scalogram, max residual %.4f (tol %.2f)", rk.max_residual,
                kTolKernel));
    std::string per;
    for (std::size_t i = 0; i < pts.size(); ++i)
        per += fmt("(a=%.3f, |b|=%.2f) %.4f  ", sim.scales[pts[i].j], norm(sim.translations.point(pts[i].i1, pts[i].i2)),
                   quat_modulus(rk.lhs[i] - rk.rhs[i]) / quat_modulus(rk.lhs[i]));
    info(10, "per-node residual: " + per);
    const Scalogram& H = c.T.at("mexican_hat");
    auto hat = reproducing_kernel_check(H, c.logw, sample_nodes(H, 20));
    info(10, fmt("mexican hat scalogram, 8 nodes sampled the same way: max residual %.4f", hat.max_residual));
}

void criterion_covariance(const QWavelet& dg) {
    Grid2D g = Grid2D::square(32, 4.0);
    SimGrid sim = SimGrid::log_uniform(3, 0.3, 1.0, 2, g);
    auto f = gaussian(g, 0.7, {0.1, -0.2});
    auto h = right_mul(anisotropic_gaussian(g, 0.9, 0.5, 0.4), Quaternion(0, 1, 0, 1));
    Quaternion lam(0.5, -1, 2, 0.25), mu(-1.5, 0.5, 0.5, 1);

    // linearity in f (left scalars)
    auto Tf = cqwt_direct(f, dg, sim), Th = cqwt_direct(h, dg, sim);
    auto Tm = cqwt_direct(left_mul(lam, f) + left_mul(mu, h), dg, sim);
    std::vector<Quaternion> want(Tm.coeffs.size());
    for (std::size_t i = 0; i < want.size(); ++i) want[i] = lam * Tf.coeffs[i] + mu * Th.coeffs[i];
    double lin = rel_to_peak(Tm.coeffs, want);

    // anti-linearity in the wavelet (right conjugate scalars)
    QWavelet logw = log_gaussian_wavelet();
    QWavelet mix = make_wavelet(left_mul(lam, logw.mother) + left_mul(mu, dg.mother), "mix");
    auto Tmix = cqwt_direct(f, mix, sim), Tl = cqwt_direct(f, logw, sim);
    for (std::size_t i = 0; i < want.size(); ++i) want[i] = Tl.coeffs[i] * quat_conj(lam) + Tf.coeffs[i] * quat_conj(mu);
    double anti = rel_to_peak(Tmix.coeffs, want);

    // grid-aligned translation by (3, 2) samples
    QSignal2D sh(g);
    for (std::size_t i1 = 3; i1 < g.n1; ++i1)
        for (std::size_t i2 = 2; i2 < g.n2; ++i2) sh(i1, i2) = f(i1 - 3, i2 - 2);
    auto Ts = cqwt_direct(sh, dg, sim);
    std::vector<Quaternion> l, r;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t i1 = 3; i1 < g.n1; ++i1)
                for (std::size_t i2 = 2; i2 < g.n2; ++i2) {
                    l.push_back(Ts.at(j, k, i1, i2));
                    r.push_back(Tf.at(j, k, i1 - 3, i2 - 2));
                }
    double tr = rel_to_peak(l, r);

    const Vec2 probes[] = {{0.0, 0.0}, {0.2, 0.1}, {-0.4, 0.3}, {0.6, 0.0}, {0.1, -0.7}, {-0.5, -0.5}};
    Grid2D fine = Grid2D::square(64, 4.0);

    // off-grid translation of analytic signals
    Vec2 c0{0.1, -0.2}, s{0.31, -0.17};
    auto f0 = gaussian(fine, 0.7, c0), f1 = gaussian(fine, 0.7, c0 + s);
    l.clear();
    r.clear();
    for (Vec2 b : probes) {
        l.push_back(cqwt_coefficient(f1, dg, 0.7, 0.5, b));
        r.push_back(cqwt_coefficient(f0, dg, 0.7, 0.5, b - s));
    }
    double off = rel_to_peak(l, r);

    // scaling by 2: T[f(2.)](a, theta, b) = (1/2) T f(2a, theta, 2b)
    auto fg = gaussian(fine, 1.0);
    auto f2 = QSignal2D::from_function(fine, [](double x, double y) { return Quaternion(std::exp(-4 * pi * (x * x + y * y))); });
    l.clear();
    r.clear();
    for (double a : {0.4, 0.7})
        for (Vec2 b : probes) {
            l.push_back(cqwt_coefficient(f2, dg, a, 0.3, 0.5 * b));
            r.push_back(cqwt_coefficient(fg, dg, 2 * a, 0.3, b) * 0.5);
        }
    double sc = rel_to_peak(l, r);

    // rotation: T[f(r_w .)](a, theta, b) = T f(a, theta + w, r_w b)
    double om = pi / 4;
    Vec2 cc{0.3, 0.1};
    auto fa = anisotropic_gaussian(fine, 1.2, 0.6, 0.2, cc);
    auto fr = QSignal2D::from_function(fine, [&](double x, double y) {
        Vec2 p = rotate({x, y}, om) - cc;
        Vec2 q = rotate(p, -0.2);
        return Quaternion(std::exp(-pi * (q.x * q.x / (1.44) + q.y * q.y / 0.36)));
    });
    l.clear();
    r.clear();
    for (double a : {0.5, 1.0})
        for (Vec2 b : probes) {
            l.push_back(cqwt_coefficient(fr, dg, a, pi / 8, b));
            r.push_back(cqwt_coefficient(fa, dg, a, pi / 8 + om, rotate(b, om)));
        }
    double rot = rel_to_peak(l, r);

    bool ok = lin <= kTolExact && anti <= kTolExact && tr <= kTolExact && off <= kTolCovariance &&
              sc <= kTolCovariance && rot <= kTolCovariance;
    verdict(11, ok, "CQWT covariance",
            fmt("linearity %.1e, anti-linearity %.1e, grid translation %.1e (tol %.0e); off-grid translation %.2e, "
                "scaling %.2e, rotation %.2e (tol %.0e); directional wavelet",
                lin, anti, tr, kTolExact, off, sc, rot, kTolCovariance));
}

void criterion_lp(const Corpus& c) {
    double worst = -INFINITY;
    std::string detail;
    for (const auto& name : c.names)
        for (double p : {2.0, 4.0, double(INFINITY)}) {
            auto b = lp_bound_check(c.T.at(name), c.logw, p);
            worst = std::max(worst, b.lhs / b.rhs);
        }
    verdict(12, worst <= 1.0 + kTolLp, "L^p bound",
            fmt("p in {2, 4, inf} on %zu corpus members, max lhs/rhs %.4f (limit %.2f)", c.names.size(), worst,
                1.0 + kTolLp));
    for (double p : {2.0, 4.0, double(INFINITY)}) {
        auto b = lp_bound_check(c.T.at("gaussian"), c.logw, p);
        info(12, fmt("gaussian p=%s lhs %.5g rhs %.5g", std::isinf(p) ? "inf" : std::to_string(int(p)).c_str(),
                     b.lhs, b.rhs));
    }
}

void criterion_heisenberg(const Corpus& c) {
    bool ok = true;
    std::string lemma;
    for (const char* name : {"gaussian", "mexican_hat"})
        for (int axis : {1, 2}) {
            auto u = heisenberg_lemma_check(c.T.at(name), c.f.at(name), c.logw, axis);
            ok &= std::fabs(u.ratio - 1.0) <= kTolLemma;
            lemma += fmt("%.3f ", u.ratio);
        }
    // ||x f||^2 ||xi f^||^2 = (2 pi int r^3 e^{-2 pi r^2} dr)^2 and ||f||^4 = (pi int ... )^2 for the unit Gaussian
    double m2 = oracle::simpson([](double r) { return 2 * pi * r * r * r * std::exp(-2 * pi * r * r); }, 0.0, 8.0);
    double n2 = oracle::simpson([](double r) { return 2 * pi * r * std::exp(-2 * pi * r * r); }, 0.0, 8.0);
    double expect = m2 * m2 / (n2 * n2 / (16 * pi * pi));
    auto gq = heisenberg_qft_ratio(c.f.at("gaussian"));
    ok &= std::fabs(gq.ratio / expect - 1.0) <= kTolGaussRatio;
    double worst = INFINITY;
    std::string per_member;
    for (const auto& name : c.names) {
        auto u = heisenberg_cqwt_ratio(c.T.at(name), c.f.at(name), c.logw);
        ok &= u.ratio >= 1.0 - kTolHeisenberg && u.hypotheses_ok;
        worst = std::min(worst, u.ratio);
        per_member += fmt("%.2f ", u.ratio);
    }
    verdict(13, ok, "Heisenberg",
            fmt("lemma ratios (gauss x1 x2, hat x1 x2) %s(band 1 +- %.2f); QFT Gaussian ratio %.4f vs %.4f "
                "(tol %.0f%%); CQWT min ratio %.3f (limit %.2f)",
                lemma.c_str(), kTolLemma, gq.ratio, expect, 100 * kTolGaussRatio, worst, 1.0 - kTolHeisenberg));
    info(13, "CQWT ratios per corpus member: " + per_member);
}

void criterion_log_up(const Corpus& c) {
    double A = -std::log(pi) + oracle::digamma(1.0);
    bool ok = std::fabs(log_up_constant() - A) <= 1e-12;
    std::string detail = fmt("A = %.6f (library %.6f); margins / (C ||f||^2): ", A, log_up_constant());
    for (const char* name : {"gaussian", "mexican_hat"}) {
        auto u = log_up_check(c.T.at(name), c.f.at(name), c.logw, A);
        ok &= u.margin >= -kTolLogUp;
        detail += fmt("%s %+.4f ", name, u.margin);
    }
    detail += fmt("(limit %+.2f)", -kTolLogUp);
    verdict(14, ok, "logarithmic uncertainty", detail);

    // QFT-only form for the Gaussian: both integrals equal 2 pi int r ln r e^{-2 pi r^2} dr
    double half = oracle::simpson(
        [](double r) { return r > 0 ? 2 * pi * r * std::log(r) * std::exp(-2 * pi * r * r) : 0.0; }, 0.0, 8.0, 200000);
    auto q = log_up_qft(c.f.at("gaussian"), A);
    info(14, fmt("QFT form on the Gaussian: lhs %.5f vs quadrature %.5f, margin %+.4f", q.lhs, 2 * half, q.margin));
    double A2 = oracle::digamma(0.5) - std::log(pi);
    for (const char* name : {"gaussian", "mexican_hat"}) {
        auto u = log_up_check(c.T.at(name), c.f.at(name), c.logw, A2);
        info(14, fmt("with psi(1/2) - ln pi = %.5f: %s margin %+.4f", A2, name, u.margin));
    }
}

void criterion_hardy(const Corpus& c) {
    const auto& f = c.f.at("gaussian");
    auto u = hardy_classify(c.T.at("gaussian"), qft_forward(f), 1.0, 0.0);
    double beta = u.details.count("beta") ? u.details.at("beta") : NAN;
    double alpha = u.details.count("alpha") ? u.details.at("alpha") : NAN;
    double r2 = u.details.count("slice_r2") ? u.details.at("slice_r2") : NAN;
    HardyCase hc = hardy_case(u);
    static const char* names[] = {"unclassifiable", "alpha beta > pi^2", "alpha beta = pi^2", "alpha beta < pi^2"};
    bool ok = std::fabs(beta / pi - 1.0) <= kTolHardyBeta && r2 >= kHardyR2 && hc == HardyCase::Gaussian;
    verdict(15, ok, "Hardy classification",
            fmt("Gaussian, slice a=1 theta=0: beta %.4f (pi +- %.0f%%), slice R^2 %.4f (min %.3f), alpha %.4f, "
                "alpha beta / pi^2 %.4f, class %s",
                beta, 100 * kTolHardyBeta, r2, kHardyR2, alpha, alpha * beta / (pi * pi), names[int(hc)]));
    if (!u.note.empty()) info(15, u.note);
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    criterion_algebra();
    criterion_eigen();
    criterion_oracle();
    criterion_plancherel();
    criterion_derivative();

    Corpus c;
    c.logw = log_gaussian_wavelet();
    admissibility_constant(c.logw, default_probes(8), default_scale_quadrature());
    QWavelet dg = directional_wavelet();
    admissibility_constant(dg, default_probes(8), default_scale_quadrature());
    criterion_admissibility(c.logw);
    criterion_fast(c.logw);

    c.names = {"gaussian", "mexican_hat", "mexican_hat_shift2", "mexican_hat_e2", "mexican_hat_wide"};
    c.f.emplace("gaussian", gaussian(kRef));
    c.f.emplace("mexican_hat", mexican_hat(kRef));
    c.f.emplace("mexican_hat_shift2", mexican_hat(kRef, 1.0, {0.0, 0.75}));
    c.f.emplace("mexican_hat_e2", right_mul(mexican_hat(kRef), Quaternion(1.0, 0.0, 0.5, 0.0)));
    c.f.emplace("mexican_hat_wide", mexican_hat(kRef, 1.3));
    SimGrid sim = reference_simgrid(kRef);
    {
        auto t0 = std::chrono::steady_clock::now();
        c.T.emplace("gaussian", cqwt_fast(c.f.at("gaussian"), c.logw, sim));
        c.seconds_gaussian = seconds_since(t0);
    }
    std::vector<Scalogram> rest(c.names.size() - 1);
    parallel_for(rest.size(), [&](std::size_t i) { rest[i] = cqwt_fast(c.f.at(c.names[i + 1]), c.logw, sim); });
    for (std::size_t i = 0; i < rest.size(); ++i) c.T.emplace(c.names[i + 1], std::move(rest[i]));

    criterion_cqwt_plancherel(c);
    criterion_inversion(c);
    criterion_kernel(c);
    criterion_covariance(dg);
    criterion_lp(c);
    criterion_heisenberg(c);
    criterion_log_up(c);
    criterion_hardy(c);

    std::printf("%d/15 criteria passed, %.1f s\n", 15 - g_failed, seconds_since(start));
    return g_failed == 0 ? 0 : 1;
}
