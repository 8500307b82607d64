// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "qcwt/cqwt.hpp"

namespace qcwt {

// QSF1: "QSF1", u32 n1, u32 n2, f64 x0, y0, dx, dy, then the e0, e1, e2, e3
// planes (n1*n2 f64 each, row-major). All little-endian. A spectrum stores
// -du1, -du2 in dx, dy and the spatial origin in x0, y0.
void write_qsf(const std::string& path, const QSignal2D& f);
void write_qsf(const std::string& path, const QSpectrum2D& F);
QSignal2D read_qsf(const std::string& path);
QSpectrum2D read_qsf_spectrum(const std::string& path);
bool qsf_is_spectrum(const std::string& path);

// QCW1: "QCW1", u32 ns, na, nb1, nb2; f64 smin, smax, bx0, by0, bdx, bdy;
// u32 sn1, sn2; f64 sx0, sy0, sdx, sdy (signal grid); u32 wavelet kind
// (0 log, 1 dgauss, 255 other), u32 flags; f64 c_phi, source_norm,
// energy_deficit; then ns*na*nb1*nb2 quadruples (q0..q3), slice-major.
// flags: bit 0 fallback, bit 1 c_phi present, bits 2-3 method (0 direct, 1 fast, 2 lattice).
void write_qcw(const std::string& path, const Scalogram& S);
Scalogram read_qcw(const std::string& path);

// Rows a,theta,b1,b2,q0,q1,q2,q3,modulus for every slice, or for the
// selected scale and/or angle index. Returns the number of rows written.
std::size_t export_csv(const Scalogram& S, std::ostream& out, std::optional<std::size_t> a_index = {},
                       std::optional<std::size_t> theta_index = {});

}  // namespace qcwt
