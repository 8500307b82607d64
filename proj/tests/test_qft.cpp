// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#include <doctest.h>

#include "oracles.hpp"
#include "qcwt/corpus.hpp"
#include "qcwt/qft.hpp"

using namespace qcwt;

namespace {
const Grid2D kRef = Grid2D::square(128, 8.0);
}

TEST_CASE("fast transform matches the direct sum on every small grid") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (std::size_t n1 = 2; n1 <= 16; ++n1)
        for (std::size_t n2 = 2; n2 <= 16; ++n2) {
            Grid2D g{n1, n2, u(rng), u(rng), 0.3 + 0.2 * std::fabs(u(rng)), 0.3 + 0.2 * std::fabs(u(rng))};
            auto f = oracle::random_signal(g, rng);
            auto a = qft_forward(f), b = qft_direct_oracle(f);
            REQUIRE(a.grid.same_as(b.grid));
            worst = std::max(worst, oracle::max_abs_diff(a.data, b.data));
        }
    CHECK(worst <= 1e-10);
}

TEST_CASE("direct oracle guard") {
    CHECK_THROWS_AS(qft_direct_oracle(QSignal2D(Grid2D::square(65, 1.0))), Error);
}

TEST_CASE("impulse at the origin has a constant spectrum") {
    Grid2D g = Grid2D::square(8, 2.0);
    auto f = impulse(g, {0, 0}, Quaternion::e3());
    auto F = qft_direct_oracle(f);
    for (const auto& q : F.data) CHECK(quat_modulus(q - Quaternion::e3() * g.cell_area()) < 1e-14);
    auto G = qft_forward(f);
    CHECK(oracle::max_abs_diff(F.data, G.data) < 1e-14);
}

TEST_CASE("Gaussian is a fixed point") {
    auto F = qft_forward(gaussian(kRef));
    double err = 0.0;
    for (std::size_t m1 = 0; m1 < kRef.n1; ++m1)
        for (std::size_t m2 = 0; m2 < kRef.n2; ++m2) {
            Vec2 u = F.grid.point(m1, m2);
            err = std::max(err, quat_modulus(F(m1, m2) - Quaternion(std::exp(-oracle::pi * (u.x * u.x + u.y * u.y)))));
        }
    CHECK(err <= 1e-6);
    CHECK(F.grid.dx == doctest::Approx(1.0 / 16.0));
    CHECK(F.grid.x0 == doctest::Approx(-4.0));

    auto back = qft_inverse(F);
    CHECK(oracle::max_abs_diff(back.data(), gaussian(kRef).data()) < 1e-12);
}

TEST_CASE("linearity and zero") {
    std::mt19937_64 rng(3);
    Grid2D g = Grid2D::square(16, 2.0);
    auto f = oracle::random_signal(g, rng);
    auto F = qft_forward(f), F2 = qft_forward(f + f);
    for (std::size_t i = 0; i < F.data.size(); ++i) CHECK(quat_modulus(F2.data[i] - 2.0 * F.data[i]) < 1e-12);
    auto Z = qft_forward(QSignal2D(g));
    CHECK(Z.max_modulus() == 0.0);
    CHECK(qft_inverse(Z).max_modulus() == 0.0);
}

TEST_CASE("inverse undoes forward") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto f = random_bandlimited(kRef, seed);
        auto back = qft_inverse(qft_forward(f));
        CHECK(oracle::rel_l2(back.data(), f.data()) <= 1e-10);
    }
    Grid2D odd{37, 20, -3.1, 0.7, 0.2, 0.25};
    std::mt19937_64 rng(9);
    auto f = oracle::random_signal(odd, rng);
    CHECK(oracle::rel_l2(qft_inverse(qft_forward(f)).data(), f.data()) <= 1e-12);
}

TEST_CASE("Parseval holds for quaternion-valued signals") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        auto f = random_bandlimited(kRef, seed);
        double a = l2_norm(f), b = l2_norm(qft_forward(f));
        CHECK(std::fabs(a * a - b * b) <= 1e-8 * a * a);
    }
}

TEST_CASE("inner products: real pairs and the scalar part are preserved") {
    auto f = random_bandlimited(kRef, 21, 6, 0.8, 2.0, false);
    auto g = random_bandlimited(kRef, 22, 6, 0.8, 2.0, false);
    auto d = inner_product(f, g) - inner_product(qft_forward(f), qft_forward(g));
    CHECK(quat_modulus(d) <= 1e-8 * l2_norm(f) * l2_norm(g));

    auto p = random_bandlimited(kRef, 23), q = random_bandlimited(kRef, 24);
    Quaternion s = inner_product(p, q), t = inner_product(qft_forward(p), qft_forward(q));
    double scale = l2_norm(p) * l2_norm(q);
    CHECK(std::fabs(s.q0 - t.q0) <= 1e-8 * scale);
    // Full quaternion equality fails for general quaternion pairs: the e2/e3
    // parts of (f, g) are not invariant under the two-sided transform.
    CHECK(quat_modulus(s - t) > 1e-3 * scale);
}

TEST_CASE("derivative theorem") {
    auto f = gaussian(kRef);
    auto F = qft_forward(f);
    auto D0 = spectral_derivative(F, 0, 0);
    CHECK(oracle::max_abs_diff(D0.data, F.data) == 0.0);

    auto D = spectral_derivative(F, 1, 0);
    double err = 0.0;
    for (std::size_t m1 = 0; m1 < kRef.n1; ++m1)
        for (std::size_t m2 = 0; m2 < kRef.n2; ++m2) {
            Vec2 u = F.grid.point(m1, m2);
            Quaternion want(0, 2 * oracle::pi * u.x * std::exp(-oracle::pi * (u.x * u.x + u.y * u.y)), 0, 0);
            err = std::max(err, quat_modulus(D(m1, m2) - want));
        }
    CHECK(err <= 1e-5);

    for (std::uint64_t seed : {31u, 32u}) {
        auto h = random_bandlimited(kRef, seed, 6, 1.0);
        auto H = qft_forward(h);
        for (int axis : {1, 2}) {
            auto spec = spectral_derivative(H, axis == 1, axis == 2);
            auto fd = qft_forward(oracle::central_difference(h, axis));
            CHECK(oracle::rel_l2(spec.data, fd.data) <= 1e-4);
        }
        // mixed order keeps left/right placement
        auto mixed = spectral_derivative(H, 1, 1);
        auto fd = qft_forward(oracle::central_difference(oracle::central_difference(h, 1), 2));
        CHECK(oracle::rel_l2(mixed.data, fd.data) <= 1e-4);
    }
}

TEST_CASE("Laplacian lemma") {
    auto F = qft_forward(random_bandlimited(kRef, 41));
    auto L = spectral_laplacian(F);
    auto a = spectral_derivative(F, 2, 0), b = spectral_derivative(F, 0, 2);
    double worst = 0.0, peak = L.max_modulus();
    for (std::size_t i = 0; i < L.data.size(); ++i)
        worst = std::max(worst, quat_modulus(L.data[i] - (a.data[i] + b.data[i])));
    CHECK(worst <= 1e-12 * peak);

    auto G = spectral_laplacian(qft_forward(gaussian(kRef)));
    double err = 0.0;
    for (std::size_t m1 = 0; m1 < kRef.n1; ++m1)
        for (std::size_t m2 = 0; m2 < kRef.n2; ++m2) {
            Vec2 u = G.grid.point(m1, m2);
            double r2 = u.x * u.x + u.y * u.y;
            err = std::max(err, quat_modulus(G(m1, m2) - Quaternion(-4 * oracle::pi * oracle::pi * r2 * std::exp(-oracle::pi * r2))));
        }
    CHECK(err <= 1e-4);
    CHECK(spectral_laplacian(qft_forward(QSignal2D(kRef))).max_modulus() == 0.0);
}

TEST_CASE("exact evaluation at arbitrary frequencies") {
    std::mt19937_64 rng(5);
    Grid2D g{9, 7, -1.0, -0.5, 0.25, 0.2};
    auto f = oracle::random_signal(g, rng);
    auto F = qft_direct_oracle(f);
    CHECK(quat_modulus(qft_eval(f, F.grid.point(3, 4)) - F(3, 4)) < 1e-12);
}

TEST_CASE("rotation identity") {
    auto radial = gaussian(kRef);
    CHECK(check_rotation_identity(radial, 0.0) <= 1e-10);
    CHECK(check_rotation_identity(radial, 0.7) <= 1e-3);
    auto aniso = anisotropic_gaussian(kRef, 1.4, 0.7, 0.3);
    auto r = rotation_identity_residuals(aniso, oracle::pi / 4);
    CHECK(r.corrected <= 1e-3);
    // with the e1[...]e2 term reversed the identity does not hold
    CHECK(r.opposite_sign > 0.1);
    auto q = random_bandlimited(kRef, 51, 4, 0.9, 1.5);
    CHECK(check_rotation_identity(q, 1.1) <= 1e-3);
}
