#include "qclone/cloning.hpp"

#include <cmath>

#include "qclone/format.hpp"

namespace qclone {

namespace {

void require_theta(double theta) {
    if (!(theta >= 0.0 && theta <= 3.1415926535897932385)) {
        throw DomainError("theta must lie in [0, pi], got " + format_g17(theta));
    }
}

// Excited/ground thermal populations; exact for any eta including +inf.
void thermal_populations(double eta, double& p0, double& p1) {
    p0 = 1.0 / (1.0 + std::exp(2.0 * eta));
    p1 = 1.0 / (1.0 + std::exp(-2.0 * eta));
}

}  // namespace

ClonerKind ClonerKind::uc() { return {Machine::UC, 0.0}; }

ClonerKind ClonerKind::pcc(double theta) {
    require_theta(theta);
    return {Machine::PCC, theta};
}

ShrinkParams shrink_params(const ClonerKind& kind) {
    double nu2;
    if (kind.machine == Machine::UC) {
        nu2 = 1.0 / 6.0;
    } else {
        const double c2 = std::cos(kind.theta) * std::cos(kind.theta);
        const double s2 = std::sin(kind.theta) * std::sin(kind.theta);
        nu2 = (1.0 - c2 / std::sqrt(c2 * c2 + 2.0 * s2 * s2)) / 4.0;
    }
    return {std::sqrt(1.0 - 2.0 * nu2), std::sqrt(nu2)};
}

DensityMatrix clone_single(const DensityMatrix& rho_in, const ShrinkParams& p) {
    if (rho_in.dim() != 2) throw InvalidDimensionError("clone_single expects a 2x2 state");
    const double mu2 = p.mu * p.mu;
    const double nu2 = p.nu * p.nu;
    CMat m(2);
    m(0, 0) = mu2 * rho_in(0, 0).real() + nu2;
    m(1, 1) = mu2 * rho_in(1, 1).real() + nu2;
    m(0, 1) = 2.0 * p.mu * p.nu * rho_in(0, 1);
    m(1, 0) = std::conj(m(0, 1));
    return DensityMatrix(m);
}

double fidelity_closed_form(const ClonerKind& kind, double theta, const DilutionParam& eps,
                            const ThermalQubitParam& eta) {
    require_theta(theta);
    const ShrinkParams p = shrink_params(kind);
    const double mu2 = p.mu * p.mu;
    const double nu2 = p.nu * p.nu;
    double p0, p1;
    thermal_populations(eta.eta, p0, p1);
    const double ch = std::cos(theta / 2.0);
    const double sh = std::sin(theta / 2.0);
    const double thermal_overlap = p0 * ch * ch + p1 * sh * sh;
    const double e = eps.value();
    const double s = std::sin(theta);
    return mu2 * (1.0 - e + e * thermal_overlap) + (p.mu * p.nu - mu2 / 2.0) * (1.0 - e) * s * s +
           nu2;
}

double fidelity_numeric(const ClonerKind& kind, double theta, double phi,
                        const DilutionParam& eps, const ThermalQubitParam& eta) {
    const StateVector psi = pure_qubit(BlochAngles(theta, phi));
    const DensityMatrix rho_in = dilute(DensityMatrix(psi.projector()), thermal_qubit(eta), eps);
    const DensityMatrix out = clone_single(rho_in, shrink_params(kind));
    return fidelity_pure(psi, out);
}

double classical_threshold(double theta, const ThermalQubitParam& eta) {
    require_theta(theta);
    // cosh(eta) / (e^{-eta} sin^2(t/2) + e^{eta} cos^2(t/2)), scaled by
    // e^{-eta}/e^{-eta} so eta = +inf flows through without overflow. The
    // half-angle squares come from cos(theta) so theta = pi lands on an
    // exact zero denominator (threshold +inf) instead of rounding noise.
    const double em2 = std::exp(-2.0 * eta.eta);
    const double s2 = 0.5 * (1.0 - std::cos(theta));
    const double c2 = 0.5 * (1.0 + std::cos(theta));
    return 0.5 * (1.0 + em2) / (em2 * s2 + c2);
}

bool beats_classical(double fidelity_value) { return fidelity_value > 0.5; }

}  // namespace qclone
