// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <cmath>
#include <map>
#include <string>

#include "qcwt/cqwt.hpp"

namespace qcwt {

constexpr double kEulerGamma = 0.57721566490153286061;

// -ln(pi) + Gamma'(1)/Gamma(1) = -ln(pi) - gamma.
double log_up_constant();
// psi(1/2) - ln(pi), Beckner's constant for R^2.
double log_up_constant_2d();

// margin conventions:
//   identities and Heisenberg inequalities: lhs / rhs - 1
//   logarithmic inequalities: (lhs - rhs) / scale, scale = C ||f||^2 (or ||f||^2)
struct UPReport {
    std::string name;
    double lhs = 0.0, rhs = 0.0;
    double ratio = NAN;
    double margin = NAN;
    bool hypotheses_ok = false;
    bool trivial = false;  // zero input, 0 >= 0
    std::map<std::string, double> details;
    std::string note;
};

// axis 1 or 2 weights by xi_l^2, axis 0 by |xi|^2. Compares
// sum_jk w_jk ||xi_l F{T(a_j, theta_k, .)}||^2 with C ||xi_l f^||^2.
UPReport heisenberg_lemma_check(const Scalogram& S, const QSignal2D& f, const QWavelet& w, int axis);
UPReport heisenberg_lemma_check(const QSignal2D& f, const QWavelet& w, const SimGrid& sim, int axis);

// ||t f||^2 ||xi f^||^2 against ||f||^4 / (16 pi^2).
UPReport heisenberg_qft_ratio(const QSignal2D& f);

// ||b T||_{L^2(SIM(2))} ||xi f^|| against ||T||^2 / (4 pi sqrt(C)).
UPReport heisenberg_cqwt_ratio(const Scalogram& S, const QSignal2D& f, const QWavelet& w);
UPReport heisenberg_cqwt_ratio(const QSignal2D& f, const QWavelet& w, const SimGrid& sim);

// C int ln|y| |f^|^2 + int_SIM(2) ln|b| |T|^2 against A C ||f||^2.
UPReport log_up_check(const Scalogram& S, const QSignal2D& f, const QWavelet& w, double A);
UPReport log_up_check(const Scalogram& S, const QSignal2D& f, const QWavelet& w);
UPReport log_up_check(const QSignal2D& f, const QWavelet& w, const SimGrid& sim);

// int ln|y| |f^|^2 + int ln|t| |f|^2 against A ||f||^2.
UPReport log_up_qft(const QSignal2D& f, double A);
UPReport log_up_qft(const QSignal2D& f);

// ln|x| quadrature on a grid: point values, except the node at the origin,
// which gets the mean of ln|x| over its cell.
double log_weight(const Grid2D& g, std::size_t i1, std::size_t i2);

enum class HardyCase { Unclassifiable = 0, Vanishing = 1, Gaussian = 2, Many = 3 };

struct LogQuadFit {
    double slope = NAN;  // ln|v| ~ c + slope r^2
    double intercept = NAN;
    double r2 = NAN;
    std::size_t points = 0;
};

// Least squares of ln|v| against r^2 = |x|^2 over samples with modulus in
// [lo, hi] * peak.
LogQuadFit log_quadratic_fit(const Grid2D& g, const std::vector<Quaternion>& v, double lo = 1e-6,
                             double hi = 1e-1);

// Decay exponents of the (a, theta) slice of S (nearest SimGrid node) and of
// f^; alpha beta is compared with pi^2 inside a +-5% dead zone.
// details: alpha, beta, alpha_beta, case, slice_r2 (R^2 of the best quaternion
// multiple of exp(-alpha |b|^2) to the slice), beta_slice (decay of the
// slice's own spectrum), j, k.
UPReport hardy_classify(const Scalogram& S, const QSpectrum2D& F, double a, double theta);
HardyCase hardy_case(const UPReport& r);

}  // namespace qcwt
