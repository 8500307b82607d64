// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <cstddef>
#include <functional>

namespace qcwt {

// Worker count: hardware concurrency, capped by QCWT_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads.
// The first exception thrown by any worker is rethrown on the caller.
// Calls made from inside a worker run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace qcwt
