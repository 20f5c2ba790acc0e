#include "qclone/states.hpp"

#include <cmath>

#include "qclone/format.hpp"

namespace qclone {

namespace {

constexpr double TWO_PI = 6.283185307179586476925286766559;

void require_nonnegative(double v, const char* name) {
    if (std::isnan(v) || v < 0.0) {
        throw DomainError(std::string(name) + " must be >= 0 (or +inf), got " + format_g17(v));
    }
}

}  // namespace

BlochAngles::BlochAngles(double theta_, double phi_) : theta(theta_), phi(phi_) {
    if (!(theta >= 0.0 && theta <= 3.1415926535897932385)) {
        throw DomainError("theta must lie in [0, pi], got " + format_g17(theta));
    }
    if (!(phi >= 0.0 && phi < TWO_PI)) {
        throw DomainError("phi must lie in [0, 2*pi), got " + format_g17(phi));
    }
}

ThermalQubitParam::ThermalQubitParam(double eta_) : eta(eta_) {
    require_nonnegative(eta, "eta");
}

XXThermalParam::XXThermalParam(double gamma_) : gamma(gamma_) {
    require_nonnegative(gamma, "gamma");
}

DilutionParam::DilutionParam(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
        throw DomainError("epsilon must lie in [0, 1), got " + format_g17(epsilon));
    }
}

DilutionParam DilutionParam::probe(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw DomainError("probe epsilon must lie in [0, 1], got " + format_g17(epsilon));
    }
    DilutionParam p;
    p.epsilon_ = epsilon;
    return p;
}

AlphaParam::AlphaParam(double alpha_) : alpha(alpha_) {
    if (!(alpha >= -1.0 && alpha <= 1.0)) {
        throw DomainError("alpha must lie in [-1, 1], got " + format_g17(alpha));
    }
}

double AlphaParam::delta() const { return alpha * std::sqrt(1.0 - alpha * alpha); }

StateVector pure_qubit(const BlochAngles& angles) {
    const cplx phase(std::cos(angles.phi), std::sin(angles.phi));
    return StateVector(2, {std::cos(angles.theta / 2.0), phase * std::sin(angles.theta / 2.0),
                           0.0, 0.0});
}

DensityMatrix thermal_qubit(const ThermalQubitParam& p) {
    const double p0 = 1.0 / (1.0 + std::exp(2.0 * p.eta));
    const double p1 = 1.0 / (1.0 + std::exp(-2.0 * p.eta));
    CMat m(2);
    m(0, 0) = p0;
    m(1, 1) = p1;
    return DensityMatrix(m);
}

DensityMatrix thermal_xx(const XXThermalParam& p) {
    const double g = p.gamma;
    const double inv_z = 1.0 / (2.0 * (1.0 + std::cosh(g)));    // 0 at overflow, as it should be
    const double cosh_z = 1.0 / (2.0 * (1.0 + 1.0 / std::cosh(g)));
    const double sinh_z = std::tanh(g) * cosh_z;
    CMat m(4);
    m(0, 0) = inv_z;
    m(3, 3) = inv_z;
    m(1, 1) = cosh_z;
    m(2, 2) = cosh_z;
    m(1, 2) = -sinh_z;
    m(2, 1) = -sinh_z;
    return DensityMatrix(m);
}

StateVector alpha_singlet(const AlphaParam& a) {
    return StateVector(4, {0.0, a.alpha, -std::sqrt(1.0 - a.alpha * a.alpha), 0.0});
}

DensityMatrix dilute(const DensityMatrix& pure_part, const DensityMatrix& thermal_part,
                     const DilutionParam& e) {
    if (pure_part.dim() != thermal_part.dim()) {
        throw InvalidDimensionError("dilute operands have different dims");
    }
    const double eps = e.value();
    CMat m(pure_part.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            m(i, j) = (1.0 - eps) * pure_part(i, j) + eps * thermal_part(i, j);
    return DensityMatrix(m);
}

}  // namespace qclone
