#pragma once

#include "qclone/states.hpp"

namespace qclone {

// (i) two local universal cloners, (ii) one universal cloner over the 4-level
// pair, (iii) the optimal entanglement cloner.
enum class BroadcastScenario { LocalUC, GlobalUC4, OptimalEntangler };

struct ScenarioConstants {
    double M;
    double L;
    // Intermediates of the OptimalEntangler constant; NaN for the others.
    double A;
    double C;
};

// L(M) = 3(1+2M+sqrt(1+4M-9M^2))/26; a discriminant within 1e-12 below zero
// clamps to zero (it vanishes identically at M = (2+sqrt(13))/9).
double scenario_L(double M);

ScenarioConstants scenario_constants(BroadcastScenario s);

// X-structured clone output for arbitrary Werner weight M and skew L:
//   diag(M e/Z + (1-M)/4,  core + l,  core - l,  M e/Z + (1-M)/4),
//   core = M((1-e)/2 + e cosh(g)/Z) + (1-M)/4,  l = L(1-e)(2 a^2 - 1),
//   <01|rho|10> = -M((1-e) a sqrt(1-a^2) + e sinh(g)/Z),  Z = 2(1+cosh g).
DensityMatrix x_state_output(double M, double L, const AlphaParam& a, const DilutionParam& eps,
                             const XXThermalParam& g);

DensityMatrix broadcast_output(const AlphaParam& a, const DilutionParam& eps,
                               const XXThermalParam& g, BroadcastScenario s);

// The channel two local universal cloners induce on a nonlocal copy pair:
// s^2 rho + s(1-s)(rho_A x I/2 + I/2 x rho_B) + (1-s)^2 I/4 with s = 2/3.
DensityMatrix local_uc_oracle(const DensityMatrix& rho_in);

// M rho + (1-M) I/4
DensityMatrix global_depolarize_oracle(const DensityMatrix& rho_in, double M);

struct CompactFormResult {
    bool holds;
    double max_residual;
};

// Does the scenario output equal M rho_in + (1-M) I/4 for the diluted input?
CompactFormResult compact_form_check(const AlphaParam& a, const DilutionParam& eps,
                                     const XXThermalParam& g, BroadcastScenario s);

}  // namespace qclone
