// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qcwt Authors

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace qcwt {

struct CheckRow {
    std::string suite, name;
    double lhs = 0.0, rhs = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
    bool hypotheses_ok = true;
    bool passed = false;
    std::string note;
};

struct VerifyOptions {
    std::vector<std::string> suites{"all"};      // qft, wavelet, cqwt, up, all
    std::string corpus = "default";
    std::map<std::string, double> tolerances;    // overrides by name
};

struct VerifyReport {
    std::vector<CheckRow> rows;
    bool all_passed() const;
    std::size_t failures() const;
};

// Tolerance names and their defaults.
const std::map<std::string, double>& default_tolerances();

// Throws Error(InvalidArgument) for unknown suites, corpora or tolerance names.
VerifyReport run_verify(const VerifyOptions& opts);

void write_report_csv(const VerifyReport& r, std::ostream& out);
void write_report_text(const VerifyReport& r, std::ostream& out);

}  // namespace qcwt
