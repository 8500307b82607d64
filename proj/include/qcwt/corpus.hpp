// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <cstdint>

#include "qcwt/signal.hpp"

namespace qcwt {

// exp(-pi |x - c|^2 / w^2), real.
QSignal2D gaussian(const Grid2D& g, double width = 1.0, Vec2 center = {});

// exp(-pi ((x'/s1)^2 + (y'/s2)^2)) with (x', y') = r_{-angle}(x - c).
QSignal2D anisotropic_gaussian(const Grid2D& g, double s1, double s2, double angle,
                               Vec2 center = {});

// (1 - pi |x - c|^2 / w^2) exp(-pi |x - c|^2 / w^2): a band-pass, zero-mean bump.
QSignal2D mexican_hat(const Grid2D& g, double width = 1.0, Vec2 center = {});

// Sum of `atoms` Gaussian bumps of width `width` with random centres in
// [-spread, spread]^2 and random quaternion amplitudes (real ones if !quaternion).
QSignal2D random_bandlimited(const Grid2D& g, std::uint64_t seed, int atoms = 6,
                             double width = 0.8, double spread = 2.0, bool quaternion = true);

// Single nonzero sample at the grid point nearest `at`.
QSignal2D impulse(const Grid2D& g, Vec2 at, const Quaternion& value);

}  // namespace qcwt
