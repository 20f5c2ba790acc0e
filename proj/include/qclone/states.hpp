#pragma once

#include "qclone/matrix.hpp"

namespace qclone {

struct BlochAngles {
    double theta;  // [0, pi]
    double phi;    // [0, 2*pi)
    BlochAngles(double theta, double phi);
};

// Dimensionless inverse temperature of a single qubit, eta = omega0*beta/2;
// +infinity encodes the zero-temperature limit.
struct ThermalQubitParam {
    double eta;
    explicit ThermalQubitParam(double eta);
};

// Dimensionless inverse temperature of the XX pair, gamma = 2*beta*J (J > 0);
// +infinity allowed.
struct XXThermalParam {
    double gamma;
    explicit XXThermalParam(double gamma);
};

// Thermal mixing weight, 0 <= epsilon < 1. probe() additionally admits
// epsilon = 1, used internally to evaluate the fully thermal endpoint.
class DilutionParam {
public:
    explicit DilutionParam(double epsilon);
    static DilutionParam probe(double epsilon);
    double value() const { return epsilon_; }

private:
    DilutionParam() = default;
    double epsilon_ = 0.0;
};

struct AlphaParam {
    double alpha;  // [-1, 1]
    explicit AlphaParam(double alpha);
    double delta() const;  // alpha*sqrt(1-alpha^2), in [-1/2, 1/2]
};

// (cos(theta/2), e^{i phi} sin(theta/2))
StateVector pure_qubit(const BlochAngles& angles);

// diag(e^{-eta}, e^{eta}) / (2 cosh eta), evaluated in logistic form so any
// eta up to and including +infinity is exact.
DensityMatrix thermal_qubit(const ThermalQubitParam& p);

// Gibbs state of H = J(sx sx + sy sy): diagonal (1, cosh g, cosh g, 1)/Z and
// -sinh(g)/Z on |01><10|, Z = 2(1+cosh g); sech/tanh forms keep every gamma
// finite-safe and send gamma=+infinity to the singlet projector.
DensityMatrix thermal_xx(const XXThermalParam& p);

// alpha|01> - sqrt(1-alpha^2)|10>
StateVector alpha_singlet(const AlphaParam& a);

// (1-eps)*pure_part + eps*thermal_part
DensityMatrix dilute(const DensityMatrix& pure_part, const DensityMatrix& thermal_part,
                     const DilutionParam& e);

}  // namespace qclone
