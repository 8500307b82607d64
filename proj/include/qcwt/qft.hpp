// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <utility>
#include <vector>

#include "qcwt/signal.hpp"

namespace qcwt {

// Samples of the two-sided transform on the dual frequency grid.
// grid.dx = du1 = 1/(n1 dx) and grid.x0 = -floor(n1/2) du1, likewise for axis 2.
// (x0, y0) keep the spatial origin the inverse transform maps back onto.
struct QSpectrum2D {
    Grid2D grid;
    double x0 = 0.0, y0 = 0.0;
    std::vector<Quaternion> data;

    QSpectrum2D() = default;
    explicit QSpectrum2D(const Grid2D& spatial);

    Grid2D spatial_grid() const;
    Quaternion& operator()(std::size_t m1, std::size_t m2) { return data[grid.index(m1, m2)]; }
    const Quaternion& operator()(std::size_t m1, std::size_t m2) const {
        return data[grid.index(m1, m2)];
    }
    double max_modulus() const;

    static Grid2D frequency_grid(const Grid2D& spatial);
};

// Sum over the frequency grid of F conj(G), times du1 du2.
Quaternion inner_product(const QSpectrum2D& F, const QSpectrum2D& G);
double l2_norm(const QSpectrum2D& F);

// Direct O(N^4) evaluation of the double sum; guarded to n1*n2 <= 4096.
QSpectrum2D qft_direct_oracle(const QSignal2D& f);
// Separable evaluation: e1-complex DFTs along axis 1, e2-complex DFTs along axis 2.
QSpectrum2D qft_forward(const QSignal2D& f);
QSignal2D qft_inverse(const QSpectrum2D& F);

// Exact transform value at an arbitrary frequency (O(N^2)).
Quaternion qft_eval(const QSignal2D& f, Vec2 u);

// (2 pi)^(m+n) (e1 xi1)^m F(xi) (e2 xi2)^n.
QSpectrum2D spectral_derivative(const QSpectrum2D& F, int m, int n);
// -(2 pi)^2 |xi|^2 F(xi).
QSpectrum2D spectral_laplacian(const QSpectrum2D& F);

// F = F+ + F-, F+- = (F +- e1 F e2)/2. On F+ the transform acts as a complex
// transform at (u1, -u2); on F- as one at (u1, u2).
std::pair<QSpectrum2D, QSpectrum2D> split_pm(const QSpectrum2D& F);

Quaternion sample_cubic(const QSpectrum2D& F, Vec2 u);

// Transform of x -> f(A x), A = r_theta, from f's spectrum alone:
// F+(A^-1 xi) + F-(A xi), evaluated by cubic interpolation.
QSpectrum2D rotated_spectrum(const QSpectrum2D& F, double theta);

struct RotationResiduals {
    double corrected = 0.0;  // against F+(A^-1 xi) + F-(A xi)
    double opposite_sign = 0.0; // against the form with the e1[...]e2 term reversed
};

// Max pointwise residual, relative to max|f^|, between the transform of the
// rotated signal (cubic resampling) and the spectral rotation identity.
RotationResiduals rotation_identity_residuals(const QSignal2D& f, double theta);
double check_rotation_identity(const QSignal2D& f, double theta);

}  // namespace qcwt
