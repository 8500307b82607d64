// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qcwt/wavelet.hpp"

namespace qcwt {

struct Scalogram {
    SimGrid sim;
    Grid2D signal_grid;
    std::vector<Quaternion> coeffs;  // ((j * n_angles + k) * nb1 + i1) * nb2 + i2
    double source_norm = 0.0;
    std::optional<double> c_phi;
    std::string wavelet_name;
    std::string method;            // "direct", "fast" or "lattice"
    bool fallback = false;         // fast path requested but its hypotheses failed
    double energy_deficit = NAN;   // 1 - predicted ||T||^2 / (C ||f||^2)

    std::size_t slice_size() const { return sim.translations.size(); }
    Quaternion* slice(std::size_t j, std::size_t k) {
        return coeffs.data() + (j * sim.n_angles() + k) * slice_size();
    }
    const Quaternion* slice(std::size_t j, std::size_t k) const {
        return coeffs.data() + (j * sim.n_angles() + k) * slice_size();
    }
    Quaternion& at(std::size_t j, std::size_t k, std::size_t i1, std::size_t i2) {
        return slice(j, k)[sim.translations.index(i1, i2)];
    }
    const Quaternion& at(std::size_t j, std::size_t k, std::size_t i1, std::size_t i2) const {
        return slice(j, k)[sim.translations.index(i1, i2)];
    }
};

constexpr std::size_t kDirectGuard = 100000;

// Reference SimGrid: 32 log scales in [0.25, 4], 8 angles, translations on
// every `stride`-th sample of the signal grid.
SimGrid reference_simgrid(const Grid2D& signal, std::size_t stride = 2);

// (f, phi_{a,theta,b}) for one point of SIM(2).
Quaternion cqwt_coefficient(const QSignal2D& f, const QWavelet& w, double a, double theta, Vec2 b);

// Explicit inner products with every daughter; at most kDirectGuard coefficients.
Scalogram cqwt_direct(const QSignal2D& f, const QWavelet& w, const SimGrid& sim);

// The same sums evaluated as lattice correlations with FFTs. Needs the
// translation grid to be a sub-lattice of the signal grid; no other hypotheses.
Scalogram cqwt_lattice(const QSignal2D& f, const QWavelet& w, const SimGrid& sim);

// Spectral representation: per (a, theta) one product of spectra and one
// inverse transform. Requires w.commutes_with_e2 and f^ in R + R e2. When the
// hypotheses fail it sets `fallback` and computes cqwt_direct (or cqwt_lattice
// when the direct guard would be exceeded).
Scalogram cqwt_fast(const QSignal2D& f, const QWavelet& w, const SimGrid& sim);

// True when f^ has e1, e3 parts <= 1e-8 of its peak.
bool spectrum_in_c2(const QSpectrum2D& F);

// (1/C) sum_jk w_jk sum_b T(b) phi_{a,theta,b} dA_b on the source grid.
QSignal2D cqwt_inverse(const Scalogram& S, const QWavelet& w);

// <S1, S2> = sum_jk w_jk dA_b sum_b S1 conj(S2).
Quaternion scalogram_inner_product(const Scalogram& S1, const Scalogram& S2);
double scalogram_norm2(const Scalogram& S);

struct RkPoint {
    std::size_t j, k, i1, i2;  // SimGrid node
};

struct RkResult {
    double max_residual = 0.0;
    std::vector<Quaternion> lhs, rhs;
};

// Compares T at each node with (f_rec, phi_{a',theta',b'}), f_rec = cqwt_inverse(S, w);
// by linearity of the inner product this equals the kernel integral.
RkResult reproducing_kernel_check(const Scalogram& S, const QWavelet& w,
                                  const std::vector<RkPoint>& points);

struct QuatPair {
    Quaternion lhs, rhs;
};
QuatPair parseval_check(const QSignal2D& f, const QSignal2D& g, const QWavelet& w,
                        const SimGrid& sim);

struct RealPair {
    double lhs = 0.0, rhs = 0.0;
};
// p >= 2 or p = +inf.
RealPair lp_bound_check(const Scalogram& S, const QWavelet& w, double p);

// Predicted fraction sum_jk dln(a) dtheta int |F{phi(r_-theta .)}(a xi)|^2 |f^|^2 / (C ||f^||^2).
double predicted_capture(const QSpectrum2D& F, const QWavelet& w, const SimGrid& sim);

}  // namespace qcwt
