// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <complex>
#include <cstddef>

namespace qcwt::detail {

using cplx = std::complex<double>;

// In-place unnormalised DFTs of `howmany` lines of length n; element k of line
// l lives at data[l*dist + k*stride]. sign = -1 forward, +1 backward.
void dft_lines(cplx* data, std::size_t n, std::size_t howmany, std::size_t stride,
               std::size_t dist, int sign);

}  // namespace qcwt::detail
