#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qclone {

struct SuiteResult {
    std::string name;
    long passed = 0;
    long failed = 0;
    double worst_residual = 0.0;
    // Detail lines in print order: cross-validation CSV, informational lines
    // (prefixed '#'), failure lines (prefixed '# FAIL').
    std::vector<std::string> lines;

    std::string summary_line() const;
};

// Closed-form fidelity against the density-matrix pipeline, phi independence,
// equatorial temperature invariance, the classical threshold predicate, and
// the slope/crossover claims of the low-temperature limit.
SuiteResult run_closedform_suite(long samples, std::uint64_t seed);

// Channel-oracle equivalence for scenarios (i)/(ii) and the compact Werner
// form, including the recorded empirical verdict for scenario (i).
SuiteResult run_oracles_suite(long samples, std::uint64_t seed);

// Table classifiers against the numeric PPT verdict, plus the closed-form
// boundary identities (gamma_c, eps2 limit, alpha0(0) = alpha_c, bisection).
SuiteResult run_tables_suite(long samples, std::uint64_t seed);

}  // namespace qclone
