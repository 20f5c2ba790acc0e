#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qclone/broadcast.hpp"

namespace qclone {

struct EntanglementVerdict {
    bool entangled;
    double negativity;
    double min_pt_eigenvalue;
};

// Peres-Horodecki test; exact (up to tol) for two qubits.
EntanglementVerdict is_entangled(const DensityMatrix& rho, double tolerance = tol::PPT);

// Closed-form separability boundary quantities. Square roots of radicands in
// [-1e-12, 0) clamp to 0; radicands negative beyond that mark the field NaN
// (not applicable). eps1 takes the upper signs of the stacked formula, eps2
// the lower signs.
struct BoundaryParams {
    double alpha1_inf;
    double alpha2_inf;
    double alpha_c;
    double gamma_c;
    double eps1;
    double eps2;
    double alpha0;
    double delta;
};

BoundaryParams boundary_params(double M, const AlphaParam& a, const XXThermalParam& g,
                               const DilutionParam& eps);

// Finite-temperature inseparability table. Throws NotCoveredError at alpha=0
// (the rows cover 0<|alpha|<=1 only); callers fall back to the numeric test.
bool classify_table1(double M, const AlphaParam& a, const XXThermalParam& g,
                     const DilutionParam& eps);

enum class GammaLimit { Infinite, Zero };

// Temperature-limit inseparability table, including the overlap rule for the
// window (1-M)/2M < eps < (3M-1)/4M at alpha <= 0.
bool classify_table2(double M, const AlphaParam& a, GammaLimit limit, const DilutionParam& eps);

// All epsilon in [0,1) where the min partial-transpose eigenvalue of the
// X-state output crosses zero: 1024-point scan, then bisection to 1e-10.
std::vector<double> find_eps_boundary(double M, const AlphaParam& a, const XXThermalParam& g);

struct CrossValidationReport {
    std::string scenario;
    long samples = 0;
    long mismatches = 0;
    // Smallest |min PT eigenvalue| seen among compared samples: how close the
    // numeric verdict ever came to the decision threshold.
    double worst_margin = 0.0;
    std::vector<std::string> mismatch_details;

    std::string csv_line() const;
};

enum class TableCase { FiniteGamma, InfiniteLimit, ZeroLimit };

// Samples (alpha, eps, gamma) points, skips the 1e-6 guard band around every
// predicted boundary, and compares the table verdict with the numeric PPT
// verdict on the scenario output. Limit proxies: gamma = 1e3 and 1e-6.
CrossValidationReport cross_validate(BroadcastScenario s, TableCase table, long samples,
                                     std::uint64_t seed);

}  // namespace qclone
