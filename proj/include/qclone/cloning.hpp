#pragma once

#include "qclone/states.hpp"

namespace qclone {

enum class Machine { UC, PCC };

// A 1->2 symmetric cloner: the universal machine, or the phase-covariant
// machine tuned to the orbit theta.
struct ClonerKind {
    Machine machine;
    double theta;  // PCC design orbit; unused by UC

    static ClonerKind uc();
    static ClonerKind pcc(double theta);
};

// mu^2 + 2 nu^2 = 1; both roots taken non-negative.
struct ShrinkParams {
    double mu;
    double nu;
};

// UC: nu^2 = 1/6. PCC: nu^2 = (1 - cos^2(t)/sqrt(cos^4 t + 2 sin^4 t))/4,
// algebraically the tan^4 form but finite at t = pi/2.
ShrinkParams shrink_params(const ClonerKind& kind);

// rho00 -> mu^2 rho00 + nu^2, off-diagonal scaled by 2 mu nu; trace stays 1.
DensityMatrix clone_single(const DensityMatrix& rho_in, const ShrinkParams& p);

// F(theta, eps, eta) = mu^2 [1-eps+eps(p0 cos^2(t/2)+p1 sin^2(t/2))]
//                      + (mu nu - mu^2/2)(1-eps) sin^2 t + nu^2,
// with p0 = 1/(1+e^{2 eta}), p1 = 1/(1+e^{-2 eta}).
double fidelity_closed_form(const ClonerKind& kind, double theta, const DilutionParam& eps,
                            const ThermalQubitParam& eta);

// Full density-matrix pipeline: dilute the Bloch state, apply the clone map,
// project back; must match the closed form to tol::CLOSED_VS_NUMERIC.
double fidelity_numeric(const ClonerKind& kind, double theta, double phi,
                        const DilutionParam& eps, const ThermalQubitParam& eta);

// Largest epsilon (possibly > 1, possibly +inf) below which the universal
// cloner still beats the classical fidelity 1/2.
double classical_threshold(double theta, const ThermalQubitParam& eta);

bool beats_classical(double fidelity_value);

}  // namespace qclone
