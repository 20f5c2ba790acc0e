#include "qclone/broadcast.hpp"

#include <cmath>
#include <limits>

#include "qclone/format.hpp"

namespace qclone {

namespace {

constexpr double NAN_MARK = std::numeric_limits<double>::quiet_NaN();

// Thermal XX weights 1/Z, cosh(g)/Z, sinh(g)/Z in overflow-safe form.
void xx_weights(double g, double& inv_z, double& cosh_z, double& sinh_z) {
    inv_z = 1.0 / (2.0 * (1.0 + std::cosh(g)));
    cosh_z = 1.0 / (2.0 * (1.0 + 1.0 / std::cosh(g)));
    sinh_z = std::tanh(g) * cosh_z;
}

}  // namespace

double scenario_L(double M) {
    double disc = 1.0 + 4.0 * M - 9.0 * M * M;
    if (disc < 0.0) {
        if (disc < -1e-12) {
            throw DomainError("L(M) discriminant " + format_g17(disc) +
                              " is negative beyond clamping tolerance");
        }
        disc = 0.0;
    }
    return 3.0 * (1.0 + 2.0 * M + std::sqrt(disc)) / 26.0;
}

ScenarioConstants scenario_constants(BroadcastScenario s) {
    switch (s) {
        case BroadcastScenario::LocalUC:
            return {4.0 / 9.0, scenario_L(4.0 / 9.0), NAN_MARK, NAN_MARK};
        case BroadcastScenario::GlobalUC4:
            return {3.0 / 5.0, scenario_L(3.0 / 5.0), NAN_MARK, NAN_MARK};
        case BroadcastScenario::OptimalEntangler: {
            const double a = std::sqrt(0.5 + 1.0 / std::sqrt(13.0)) / 3.0;
            const double c = a * (std::sqrt(13.0) - 3.0) / 2.0;
            const double m = 6.0 * a * a + 4.0 * a * c;
            return {m, scenario_L(m), a, c};
        }
    }
    throw DomainError("unknown broadcast scenario");
}

DensityMatrix x_state_output(double M, double L, const AlphaParam& a, const DilutionParam& eps,
                             const XXThermalParam& g) {
    if (!(M >= 0.0 && M <= 1.0)) {
        throw DomainError("Werner weight M must lie in [0, 1], got " + format_g17(M));
    }
    double inv_z, cosh_z, sinh_z;
    xx_weights(g.gamma, inv_z, cosh_z, sinh_z);
    const double e = eps.value();
    const double outer = M * e * inv_z + (1.0 - M) / 4.0;
    const double core = M * ((1.0 - e) / 2.0 + e * cosh_z) + (1.0 - M) / 4.0;
    const double skew = L * (1.0 - e) * (2.0 * a.alpha * a.alpha - 1.0);
    const double off = -M * ((1.0 - e) * a.delta() + e * sinh_z);
    CMat m(4);
    m(0, 0) = outer;
    m(3, 3) = outer;
    m(1, 1) = core + skew;
    m(2, 2) = core - skew;
    m(1, 2) = off;
    m(2, 1) = off;
    return DensityMatrix(m);
}

DensityMatrix broadcast_output(const AlphaParam& a, const DilutionParam& eps,
                               const XXThermalParam& g, BroadcastScenario s) {
    const ScenarioConstants k = scenario_constants(s);
    return x_state_output(k.M, k.L, a, eps, g);
}

DensityMatrix local_uc_oracle(const DensityMatrix& rho_in) {
    if (rho_in.dim() != 4) throw InvalidDimensionError("local_uc_oracle expects a 4x4 state");
    const double s = 2.0 / 3.0;
    const CMat half = 0.5 * CMat::identity(2);
    const CMat rho_a = partial_trace(rho_in, Subsystem::A).mat();
    const CMat rho_b = partial_trace(rho_in, Subsystem::B).mat();
    CMat out = (s * s) * rho_in.mat();
    out += (s * (1.0 - s)) * (tensor(rho_a, half) + tensor(half, rho_b));
    out += ((1.0 - s) * (1.0 - s) * 0.25) * CMat::identity(4);
    return DensityMatrix(out);
}

DensityMatrix global_depolarize_oracle(const DensityMatrix& rho_in, double M) {
    if (!(M >= 0.0 && M <= 1.0)) {
        throw DomainError("Werner weight M must lie in [0, 1], got " + format_g17(M));
    }
    CMat out = M * rho_in.mat();
    out += ((1.0 - M) * 0.25) * CMat::identity(rho_in.dim());
    return DensityMatrix(out);
}

CompactFormResult compact_form_check(const AlphaParam& a, const DilutionParam& eps,
                                     const XXThermalParam& g, BroadcastScenario s) {
    const ScenarioConstants k = scenario_constants(s);
    const DensityMatrix in =
        dilute(DensityMatrix(alpha_singlet(a).projector()), thermal_xx(g), eps);
    const DensityMatrix lhs = broadcast_output(a, eps, g, s);
    const DensityMatrix rhs = global_depolarize_oracle(in, k.M);
    const double residual = lhs.mat().max_abs_diff(rhs.mat());
    return {residual <= tol::COMPACT_FORM, residual};
}

}  // namespace qclone
