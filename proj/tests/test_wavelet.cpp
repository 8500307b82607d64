// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include <doctest.h>

#include "oracles.hpp"
#include "qcwt/corpus.hpp"
#include "qcwt/wavelet.hpp"
#include "wavelets.hpp"

using namespace qcwt;
using oracle::pi;

namespace {

const QWavelet& logw() { return test_log_wavelet(); }

double rel_to_peak(const QSpectrum2D& a, const QSpectrum2D& b) {
    return oracle::max_abs_diff(a.data, b.data) / b.max_modulus();
}

}  // namespace

TEST_CASE("LoG closed form agrees with a finite-difference Laplacian") {
    Grid2D g = Grid2D::symmetric(769, 6.0);
    auto G = gaussian(g);
    auto lap = oracle::central_difference(oracle::central_difference(G, 1), 1) +
               oracle::central_difference(oracle::central_difference(G, 2), 2);
    const auto& phi = logw().mother;
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        worst = std::max(worst, quat_modulus(phi.data()[i] + lap.data()[i] / (4 * pi * pi)));
    CHECK(worst < 1e-6);
}

TEST_CASE("LoG spectrum and zero mean") {
    const auto& w = logw();
    double err = 0.0;
    for (std::size_t m1 = 0; m1 < w.spectrum.grid.n1; ++m1)
        for (std::size_t m2 = 0; m2 < w.spectrum.grid.n2; ++m2) {
            Vec2 u = w.spectrum.grid.point(m1, m2);
            double r2 = u.x * u.x + u.y * u.y;
            err = std::max(err, quat_modulus(w.spectrum(m1, m2) - Quaternion(r2 * std::exp(-pi * r2))));
        }
    CHECK(err < 1e-10);
    Quaternion mean;
    for (const auto& q : w.mother.data()) mean += q;
    mean = mean * w.mother.grid().cell_area();
    CHECK(quat_modulus(mean) < 1e-12);
}

TEST_CASE("LoG is radial") {
    const auto& w = logw();
    auto r = resample_similitude(w.mother, 1.0, 0.9, {});
    // bilinear resampling error only
    CHECK(oracle::max_abs_diff(r.data(), w.mother.data()) < 2e-3);
    auto d0 = daughter(w, 1.5, 0.0, {0.5, 0.25}), d1 = daughter(w, 1.5, 1.2, {0.5, 0.25});
    CHECK(oracle::max_abs_diff(d0.data(), d1.data()) < 2e-3);
}

TEST_CASE("LoG admissibility constant") {
    const auto& w = logw();
    REQUIRE(w.c_phi.has_value());
    CHECK(*w.c_phi == doctest::Approx(1.0 / (4 * pi)).epsilon(0.02));
    CHECK(w.admissibility->spread <= 0.02);
    CHECK(w.commutes_with_e2);
    CHECK(w.admissibility->commute_residual <= 1e-8);
    // C equals (w, w) in the AQW inner product
    Quaternion self = aqw_inner_product(w, w);
    CHECK(self.q0 == doctest::Approx(*w.c_phi).epsilon(0.01));
    CHECK(std::fabs(self.q1) + std::fabs(self.q2) + std::fabs(self.q3) < 1e-12);
}

TEST_CASE("plain Gaussian is rejected as divergent") {
    QWavelet g = make_wavelet(gaussian(Grid2D::symmetric(193, 6.0)), "gauss");
    auto r = admissibility_report(g, default_probes(8), default_scale_quadrature());
    CHECK(r.divergent);
    CHECK_THROWS_AS(admissibility_constant(g, default_probes(8), default_scale_quadrature()), Error);
    CHECK_FALSE(g.c_phi.has_value());
}

TEST_CASE("zero wavelet and bad probes are rejected") {
    CHECK_THROWS_AS(make_wavelet(QSignal2D(Grid2D::symmetric(33, 6.0)), "zero"), Error);
    CHECK_THROWS_AS(log_gaussian_wavelet(Grid2D::symmetric(65, 4.0)), Error);
    CHECK_THROWS_AS(admissibility_report(logw(), default_probes(3), default_scale_quadrature()), Error);
}

TEST_CASE("directional wavelet") {
    QWavelet w = directional_wavelet();
    double c = admissibility_constant(w, default_probes(8), default_scale_quadrature());
    // |phi^|^2 = xi1^2 exp(-2 pi |xi|^2), so C = int cos^2 exp(-2 pi r^2) r dr dpsi = 1/4
    CHECK(c == doctest::Approx(0.25).epsilon(0.02));
    CHECK(w.admissibility->spread <= 0.02);
    CHECK_FALSE(w.commutes_with_e2);
    Quaternion x = aqw_inner_product(logw(), w);
    CHECK(quat_modulus(x) < 1e-10);  // orthogonal: even vs odd in t1
}

TEST_CASE("AQW inner product is quaternion-valued in general") {
    const auto& w = logw();
    Grid2D g = w.mother.grid();
    auto m = QSignal2D::from_function(g, [](double x, double y) {
        double r2 = pi * (x * x + y * y) / (1.5 * 1.5);
        // wider LoG times a quaternion constant
        return Quaternion(0.5, 1.0, -0.25, 0.75) * ((1.0 - r2) * std::exp(-r2));
    });
    QWavelet v = make_wavelet(m, "scaled");
    Quaternion ip = aqw_inner_product(w, v);
    CHECK(std::fabs(ip.q1) + std::fabs(ip.q2) + std::fabs(ip.q3) > 1e-3);

    QWavelet padded = make_wavelet(zero_pad(w.mother, g.n1 + 63, g.n2 + 63), "padded");
    Quaternion a = aqw_inner_product(w, w), b = aqw_inner_product(w, padded);
    CHECK(quat_modulus(a - b) <= 1e-3 * quat_modulus(a));
}

TEST_CASE("daughters") {
    const auto& w = logw();
    auto d = daughter(w, 1.0, 0.0, {});
    CHECK(oracle::max_abs_diff(d.data(), w.mother.data()) == 0.0);
    double n0 = l2_norm(w.mother);
    for (double a : {0.5, 1.0, 2.0})
        CHECK(l2_norm(daughter(w, a, 0.4, {0.5, -0.5})) == doctest::Approx(n0).epsilon(5e-3));
    CHECK_THROWS_AS(daughter(w, 0.0, 0.0, {}), Error);
}

TEST_CASE("daughter spectrum agrees with the transform of the daughter") {
    const auto& w = logw();
    const QWavelet dg = directional_wavelet();
    for (const QWavelet* wp : {&w, &dg})
        for (double a : {0.5, 1.0, 2.0})
            for (double th : {0.0, pi / 3})
                for (Vec2 b : {Vec2{0, 0}, Vec2{1, 0.5}}) {
                    auto s = daughter_spectrum(*wp, a, th, b);
                    auto t = qft_forward(daughter(*wp, a, th, b));
                    CHECK(rel_to_peak(s, t) <= 1e-3);
                }
    // b = 0, theta = 0, a = 2: 8 |xi|^2 exp(-4 pi |xi|^2)
    auto s = daughter_spectrum(w, 2.0, 0.0, {});
    double err = 0.0;
    for (std::size_t m1 = 0; m1 < s.grid.n1; ++m1)
        for (std::size_t m2 = 0; m2 < s.grid.n2; ++m2) {
            Vec2 u = s.grid.point(m1, m2);
            double r2 = u.x * u.x + u.y * u.y;
            err = std::max(err, quat_modulus(s(m1, m2) - Quaternion(8 * r2 * std::exp(-4 * pi * r2))));
        }
    CHECK(err < 1e-4);
}
