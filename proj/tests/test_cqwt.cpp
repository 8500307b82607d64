// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include <doctest.h>

#include "oracles.hpp"
#include "qcwt/corpus.hpp"
#include "qcwt/cqwt.hpp"
#include "wavelets.hpp"

using namespace qcwt;
using oracle::pi;

namespace {

double rel_max(const Scalogram& a, const Scalogram& b) {
    double m = 0.0, p = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        m = std::max(m, quat_modulus(a.coeffs[i] - b.coeffs[i]));
        p = std::max(p, quat_modulus(b.coeffs[i]));
    }
    return p == 0.0 ? m : m / p;
}

double rel(const Quaternion& a, const Quaternion& b) {
    return quat_modulus(a - b) / std::max(quat_modulus(b), 1e-300);
}

// max |lhs - rhs| over max |rhs|
double rel_to_peak(const std::vector<Quaternion>& lhs, const std::vector<Quaternion>& rhs) {
    double m = 0.0, p = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        m = std::max(m, quat_modulus(lhs[i] - rhs[i]));
        p = std::max(p, quat_modulus(rhs[i]));
    }
    return m / p;
}

const Vec2 kProbeB[] = {{0.0, 0.0}, {0.2, 0.1}, {-0.4, 0.3}, {0.6, 0.0}, {0.1, -0.7}, {-0.5, -0.5}};

// 16 x 16 grid, 4 scales, 4 angles
const Grid2D kSmall = Grid2D::square(16, 2.0);
SimGrid small_sim() { return SimGrid::log_uniform(4, 0.25, 1.0, 4, kSmall); }

const Grid2D kMid = Grid2D::square(64, 4.0);

}  // namespace

TEST_CASE("self coefficient of the mother") {
    const auto& w = test_log_wavelet();
    auto phi = QSignal2D::from_function(kMid, [](double x, double y) {
        double r2 = x * x + y * y;
        return Quaternion((1.0 / pi - r2) * std::exp(-pi * r2));
    });
    Quaternion t = cqwt_coefficient(phi, w, 1.0, 0.0, {});
    double n2 = l2_norm(phi) * l2_norm(phi);
    CHECK(t.q0 == doctest::Approx(n2).epsilon(1e-3));
    CHECK(std::fabs(t.q1) + std::fabs(t.q2) + std::fabs(t.q3) < 1e-15);
}

TEST_CASE("zero signal") {
    const auto& w = test_log_wavelet();
    auto S = cqwt_direct(QSignal2D(kSmall), w, small_sim());
    for (const auto& q : S.coeffs) CHECK(q == Quaternion{});
    CHECK(cqwt_inverse(S, w).max_modulus() == 0.0);
    auto rk = reproducing_kernel_check(S, w, {{1, 1, 8, 8}});
    CHECK(rk.max_residual == 0.0);
}

TEST_CASE("fast path equals the direct sums") {
    const auto& w = test_log_wavelet();
    auto sim = small_sim();
    for (double width : {0.5, 0.8}) {
        auto f = gaussian(kSmall, width);
        auto a = cqwt_fast(f, w, sim);
        CHECK(a.method == "fast");
        CHECK_FALSE(a.fallback);
        CHECK(rel_max(a, cqwt_direct(f, w, sim)) <= 1e-6);
    }
    // f^ in R + R e2 also for quaternion-valued f = G q with q in R + R e2
    auto f = left_mul(Quaternion(0.3, 0, -1.2, 0), gaussian(kSmall, 0.6, {0.0, 0.4}));
    auto a = cqwt_fast(f, w, sim);
    CHECK(a.method == "fast");
    CHECK(rel_max(a, cqwt_direct(f, w, sim)) <= 1e-6);
}

TEST_CASE("fast path falls back when its hypotheses fail") {
    const auto& w = test_log_wavelet();
    auto sim = small_sim();
    auto shifted = gaussian(kSmall, 0.6, {0.5, 0.0});  // e1 part in f^
    auto a = cqwt_fast(shifted, w, sim);
    CHECK(a.fallback);
    CHECK(a.method == "direct");
    auto g = gaussian(kSmall, 0.6);
    auto b = cqwt_fast(g, test_directional_wavelet(), sim);
    CHECK(b.fallback);
}

TEST_CASE("lattice correlation equals the direct sums") {
    std::mt19937_64 rng(4);
    auto f = random_bandlimited(kSmall, 17, 4, 0.5, 1.0);
    SimGrid sim = SimGrid::log_uniform(3, 0.3, 1.2, 3, strided(kSmall, 2));
    for (const QWavelet* w : {&test_log_wavelet(), &test_directional_wavelet()}) {
        auto d = cqwt_direct(f, *w, sim);
        auto l = cqwt_lattice(f, *w, sim);
        CHECK(rel_max(l, d) <= 1e-12);
    }
    // off-lattice translations take the explicit path
    SimGrid off = SimGrid::log_uniform(2, 0.5, 1.0, 2, Grid2D{5, 5, -1.03, -0.97, 0.41, 0.39});
    CHECK_THROWS_AS(cqwt_lattice(f, test_log_wavelet(), off), Error);
    auto d = cqwt_direct(f, test_log_wavelet(), off);
    CHECK(quat_modulus(d.at(1, 1, 2, 3) - cqwt_coefficient(f, test_log_wavelet(), off.scales[1], off.angles[1],
                                                           off.translations.point(2, 3))) < 1e-14);
}

TEST_CASE("direct guard") {
    SimGrid big = SimGrid::log_uniform(32, 0.25, 4.0, 8, Grid2D::square(64, 8.0));
    CHECK_THROWS_AS(cqwt_direct(QSignal2D(Grid2D::square(64, 8.0)), test_log_wavelet(), big), Error);
}

TEST_CASE("left linearity and anti-linearity") {
    auto sim = small_sim();
    auto f = random_bandlimited(kSmall, 1, 3, 0.5, 1.0), g = random_bandlimited(kSmall, 2, 3, 0.5, 1.0);
    Quaternion lam(0.5, -1, 2, 0.25), mu(-1.5, 0.5, 0.5, 1);
    const auto& w = test_log_wavelet();
    auto lhs = cqwt_direct(left_mul(lam, f) + left_mul(mu, g), w, sim);
    auto Tf = cqwt_direct(f, w, sim), Tg = cqwt_direct(g, w, sim);
    double worst = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < lhs.coeffs.size(); ++i) {
        worst = std::max(worst, quat_modulus(lhs.coeffs[i] - (lam * Tf.coeffs[i] + mu * Tg.coeffs[i])));
        peak = std::max(peak, quat_modulus(lhs.coeffs[i]));
    }
    CHECK(worst <= 1e-12 * peak);

    const auto& v = test_directional_wavelet();
    QWavelet mix = make_wavelet(left_mul(lam, w.mother) + left_mul(mu, v.mother), "mix");
    auto Tm = cqwt_direct(f, mix, sim), Tw = cqwt_direct(f, w, sim), Tv = cqwt_direct(f, v, sim);
    worst = peak = 0.0;
    for (std::size_t i = 0; i < Tm.coeffs.size(); ++i) {
        Quaternion want = Tw.coeffs[i] * quat_conj(lam) + Tv.coeffs[i] * quat_conj(mu);
        worst = std::max(worst, quat_modulus(Tm.coeffs[i] - want));
        peak = std::max(peak, quat_modulus(Tm.coeffs[i]));
    }
    CHECK(worst <= 1e-12 * peak);
}

TEST_CASE("translation covariance") {
    Grid2D g = Grid2D::square(32, 4.0);
    auto f = gaussian(g, 0.7, {0.1, -0.2});
    SimGrid sim = SimGrid::log_uniform(3, 0.3, 1.0, 2, g);
    const auto& w = test_directional_wavelet();
    // grid-aligned shift by 3 samples along x, 2 along y
    QSignal2D shifted(g);
    for (std::size_t i1 = 3; i1 < g.n1; ++i1)
        for (std::size_t i2 = 2; i2 < g.n2; ++i2) shifted(i1, i2) = f(i1 - 3, i2 - 2);
    auto Ts = cqwt_direct(shifted, w, sim), Tf = cqwt_direct(f, w, sim);
    double worst = 0.0, peak = 0.0;
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t i1 = 3; i1 < g.n1; ++i1)
                for (std::size_t i2 = 2; i2 < g.n2; ++i2) {
                    worst = std::max(worst, quat_modulus(Ts.at(j, k, i1, i2) - Tf.at(j, k, i1 - 3, i2 - 2)));
                    peak = std::max(peak, quat_modulus(Tf.at(j, k, i1 - 3, i2 - 2)));
                }
    CHECK(worst <= 1e-12 * peak);

    // off-grid shift of the sampled function
    Grid2D fine = Grid2D::square(64, 4.0);
    Vec2 c{0.31, -0.17};
    auto f0 = gaussian(fine, 0.7, {0.1, -0.2}), f1 = gaussian(fine, 0.7, Vec2{0.1, -0.2} + c);
    std::vector<Quaternion> lhs, rhs;
    for (Vec2 b : kProbeB) {
        lhs.push_back(cqwt_coefficient(f1, w, 0.7, 0.5, b));
        rhs.push_back(cqwt_coefficient(f0, w, 0.7, 0.5, b - c));
    }
    CHECK(rel_to_peak(lhs, rhs) <= 1e-2);
}

TEST_CASE("scaling covariance at c = 2") {
    Grid2D g = Grid2D::square(64, 4.0);
    auto f = gaussian(g, 1.0);
    // f(2x): 2x lands on grid nodes, so the resampling is exact
    auto f2 = right_mul(resample_similitude(f, 0.5, 0.0, {}), Quaternion(0.5));
    const auto& w = test_directional_wavelet();
    for (double a : {0.4, 0.7}) {
        std::vector<Quaternion> lhs, rhs;
        for (Vec2 b : kProbeB) {
            lhs.push_back(cqwt_coefficient(f2, w, a, 0.3, 0.5 * b));
            rhs.push_back(cqwt_coefficient(f, w, 2 * a, 0.3, b) * 0.5);
        }
        CHECK(rel_to_peak(lhs, rhs) <= 1e-2);
    }
}

TEST_CASE("rotation covariance with the directional wavelet") {
    Grid2D g = Grid2D::square(64, 4.0);
    double om = pi / 4;
    Vec2 c{0.3, 0.1};
    auto f = anisotropic_gaussian(g, 1.2, 0.6, 0.2, c);
    auto fr = anisotropic_gaussian(g, 1.2, 0.6, 0.2 - om, rotate(c, -om));  // f(r_om x)
    const auto& w = test_directional_wavelet();
    for (double a : {0.5, 1.0}) {
        std::vector<Quaternion> lhs, rhs;
        for (Vec2 b : kProbeB) {
            lhs.push_back(cqwt_coefficient(fr, w, a, pi / 8, b));
            rhs.push_back(cqwt_coefficient(f, w, a, pi / 8 + om, rotate(b, om)));
        }
        CHECK(rel_to_peak(lhs, rhs) <= 1e-2);
    }
}

TEST_CASE("L^p bounds, inversion and kernel on a mid-size grid") {
    const auto& w = test_log_wavelet();
    auto f = mexican_hat(kMid, 1.0);
    SimGrid sim = SimGrid::log_uniform(24, 0.25, 4.0, 4, strided(kMid, 2));
    auto S = cqwt_fast(f, w, sim);
    REQUIRE(S.method == "fast");
    double ratio = scalogram_norm2(S) / (*w.c_phi * l2_norm(f) * l2_norm(f));
    CHECK(ratio == doctest::Approx(1.0 - S.energy_deficit).epsilon(2e-3));
    for (double p : {2.0, 3.0, 4.0, double(INFINITY)}) {
        auto r = lp_bound_check(S, w, p);
        CHECK(r.lhs <= r.rhs * 1.01);
    }
    auto p2 = lp_bound_check(S, w, 2.0);
    CHECK(p2.lhs * p2.lhs / (p2.rhs * p2.rhs) == doctest::Approx(ratio).epsilon(1e-12));
    CHECK_THROWS_AS(lp_bound_check(S, w, 1.5), Error);

    auto rec = cqwt_inverse(S, w);
    CHECK(oracle::rel_l2(rec.data(), f.data()) <= 0.05);
    auto rk = reproducing_kernel_check(S, w, {{8, 0, 16, 16}, {12, 1, 16, 16}});
    CHECK(rk.max_residual <= 0.05);

    auto pc = parseval_check(f, QSignal2D(kMid), w, sim);
    CHECK(pc.lhs == Quaternion{});
    CHECK(pc.rhs == Quaternion{});
}

TEST_CASE("inverse needs an admissibility constant") {
    QWavelet raw = log_gaussian_wavelet(Grid2D::symmetric(97, 6.0));
    auto S = cqwt_direct(gaussian(kSmall), raw, small_sim());
    CHECK_THROWS_AS(cqwt_inverse(S, raw), Error);
}
