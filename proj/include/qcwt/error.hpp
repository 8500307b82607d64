// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <stdexcept>
#include <string>

namespace qcwt {

enum class Status : int {
    Ok = 0,
    InvalidArgument = 1,
    Domain = 2,
    GridMismatch = 3,
    Format = 4,
    Io = 5,
    GuardExceeded = 6,
    Admissibility = 7,
    Internal = 99,
};

class Error : public std::runtime_error {
public:
    Error(Status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
    Status status() const noexcept { return status_; }

private:
    Status status_;
};

}  // namespace qcwt
