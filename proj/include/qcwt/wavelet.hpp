// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcwt/qft.hpp"

namespace qcwt {

struct AdmissibilityReport {
    std::vector<Vec2> probes;
    std::vector<double> values;  // C(xi) per probe
    double mean = 0.0;
    double spread = 0.0;         // (max - min) / mean
    double tail_ratio = 0.0;     // integrand at the scale-window edges relative to its peak
    bool divergent = false;
    double commute_residual = 0.0;  // max |e1|,|e3| part relative to peak
    bool commutes_with_e2 = false;
};

struct QWavelet {
    std::string name;
    QSignal2D mother;
    QSpectrum2D spectrum;
    std::optional<double> c_phi;
    bool commutes_with_e2 = false;
    std::optional<AdmissibilityReport> admissibility;

    // Split spectra of the 2x zero-padded mother, cropped to the band that
    // carries energy; used for off-grid evaluation.
    std::shared_ptr<const QSpectrum2D> fine_plus, fine_minus;
};

QWavelet make_wavelet(QSignal2D mother, std::string name);

// -(1/4 pi^2) Laplacian of exp(-pi|t|^2) = (1/pi - |t|^2) exp(-pi|t|^2). The default grid is 769^2 samples on [-6, 6]^2.
QWavelet log_gaussian_wavelet(const Grid2D& grid);
QWavelet log_gaussian_wavelet();

// -lambda t1 exp(-pi|t|^2) with lambda = (1 + e1 + e2 + e3)/2.
QWavelet directional_wavelet(const Grid2D& grid);
QWavelet directional_wavelet();

// Transform of t -> phi(r_{-theta} t) at eta, from the cached split spectra.
Quaternion rotated_mother_spectrum(const QWavelet& w, double theta, Vec2 eta);

// Same quantity evaluated exactly from the samples (O(N^2) per call).
Quaternion rotated_mother_spectrum_exact(const QWavelet& w, double theta, Vec2 eta);

// `count` probes on circles of radius 0.6, 1 and 1.5, at staggered directions.
std::vector<Vec2> default_probes(std::size_t count = 8);

// 256 log scales on [1e-2, 1e2] and 64 angles; translations unused.
SimGrid default_scale_quadrature();

AdmissibilityReport admissibility_report(const QWavelet& w, const std::vector<Vec2>& probes,
                                         const SimGrid& scale_quad);

// Runs the report, throws on divergence or spread > spread_tol, and stores
// c_phi, commutes_with_e2 and the report on w. Returns c_phi.
double admissibility_constant(QWavelet& w, const std::vector<Vec2>& probes,
                              const SimGrid& scale_quad, double spread_tol = 0.02);

QSignal2D daughter(const QWavelet& w, double a, double theta, Vec2 b);
QSignal2D daughter(const QWavelet& w, double a, double theta, Vec2 b, const Grid2D& target);

// a e^{-e1 2 pi xi1 b1} F{phi(r_{-theta}.)}(a xi) e^{-e2 2 pi xi2 b2} on the
// mother's frequency grid.
QSpectrum2D daughter_spectrum(const QWavelet& w, double a, double theta, Vec2 b);

// Sum over xi != 0 of phi1^(xi) conj(phi2^(xi)) |xi|^-2 du1 du2 on w1's
// frequency grid; w2's spectrum is interpolated when its grid differs.
Quaternion aqw_inner_product(const QWavelet& w1, const QWavelet& w2);

}  // namespace qcwt
