#include <cmath>
#include <limits>

#include "doctest.h"
#include "helpers.hpp"
#include "qclone/states.hpp"

using namespace qclone;

namespace {
constexpr double INF = std::numeric_limits<double>::infinity();
}

TEST_CASE("pure_qubit matches the Bloch parameterization") {
    const StateVector up = pure_qubit(BlochAngles(0.0, 0.0));
    CHECK(up.amp(0) == cplx(1.0));
    CHECK(up.amp(1) == cplx(0.0));

    const StateVector v = pure_qubit(BlochAngles(1.1, 2.3));
    CHECK(std::fabs(v.amp(0).real() - std::cos(0.55)) <= 1e-15);
    CHECK(std::fabs(std::abs(v.amp(1)) - std::sin(0.55)) <= 1e-15);
    CHECK(std::fabs(std::arg(v.amp(1)) - 2.3) <= 1e-15);
}

TEST_CASE("angle ranges are enforced") {
    CHECK_THROWS_AS(BlochAngles(-0.1, 0.0), DomainError);
    CHECK_THROWS_AS(BlochAngles(3.2, 0.0), DomainError);
    CHECK_THROWS_AS(BlochAngles(0.5, -1.0), DomainError);
    CHECK_THROWS_AS(BlochAngles(0.5, 6.2831853071795865), DomainError);
    CHECK_NOTHROW(BlochAngles(3.1415926535897931, 0.0));
    CHECK_THROWS_AS(BlochAngles(0.5, 6.2831853071795862), DomainError);
    CHECK_NOTHROW(BlochAngles(0.0, 6.283185307179585));
}

TEST_CASE("thermal_qubit endpoints are exact") {
    const DensityMatrix hot = thermal_qubit(ThermalQubitParam(0.0));
    CHECK(hot(0, 0) == cplx(0.5));
    CHECK(hot(1, 1) == cplx(0.5));
    CHECK(hot(0, 1) == cplx(0.0));

    const DensityMatrix cold = thermal_qubit(ThermalQubitParam(INF));
    CHECK(cold(0, 0) == cplx(0.0));
    CHECK(cold(1, 1) == cplx(1.0));

    const DensityMatrix mid = thermal_qubit(ThermalQubitParam(1.0));
    CHECK(std::fabs(mid(0, 0).real() - 0.11920292202211755) <= 1e-16);
}

TEST_CASE("thermal_qubit ground population grows with eta") {
    double last = 0.0;
    for (double eta : {0.0, 0.3, 1.0, 2.5, 6.0, 20.0}) {
        const double p1 = thermal_qubit(ThermalQubitParam(eta))(1, 1).real();
        CHECK(p1 >= last);
        last = p1;
    }
    CHECK_THROWS_AS(thermal_qubit(ThermalQubitParam(-0.5)), DomainError);
    CHECK_THROWS_AS(ThermalQubitParam(std::nan("")), DomainError);
}

TEST_CASE("thermal_xx hits its exact endpoints and known digits") {
    const DensityMatrix hot = thermal_xx(XXThermalParam(0.0));
    for (int i = 0; i < 4; ++i) CHECK(hot(i, i) == cplx(0.25));
    CHECK(hot(1, 2) == cplx(0.0));

    const DensityMatrix mid = thermal_xx(XXThermalParam(1.0));
    CHECK(std::fabs(mid(1, 1).real() - 0.30338806675851815) <= 1e-16);
    CHECK(std::fabs(mid(1, 2).real() + 0.23105857863000488) <= 1e-16);
    CHECK(mid(1, 2).imag() == 0.0);
    CHECK(std::fabs(mid(0, 0).real() -
                    (0.5 - mid(1, 1).real())) <= 1e-16);

    // gamma = +inf lands exactly on the singlet projector.
    const DensityMatrix cold = thermal_xx(XXThermalParam(INF));
    CHECK(cold(0, 0) == cplx(0.0));
    CHECK(cold(1, 1) == cplx(0.5));
    CHECK(cold(2, 2) == cplx(0.5));
    CHECK(cold(1, 2) == cplx(-0.5));
    CHECK(cold(3, 3) == cplx(0.0));
}

TEST_CASE("thermal_xx reduced states are maximally mixed") {
    for (double g : {0.0, 0.7, 3.0, 25.0, INF}) {
        const DensityMatrix rho = thermal_xx(XXThermalParam(g));
        for (Subsystem s : {Subsystem::A, Subsystem::B}) {
            const DensityMatrix red = partial_trace(rho, s);
            CHECK(std::fabs(red(0, 0).real() - 0.5) <= 1e-16);
            CHECK(std::abs(red(0, 1)) == 0.0);
        }
    }
    CHECK_THROWS_AS(XXThermalParam(-1.0), DomainError);
}

TEST_CASE("alpha_singlet amplitudes and domain") {
    const StateVector v = alpha_singlet(AlphaParam(0.6));
    CHECK(v.amp(0) == cplx(0.0));
    CHECK(v.amp(1) == cplx(0.6));
    CHECK(std::fabs(v.amp(2).real() + 0.8) <= 1e-15);
    CHECK(v.amp(3) == cplx(0.0));

    CHECK(std::fabs(AlphaParam(0.6).delta() - 0.48) <= 1e-16);
    CHECK(std::fabs(AlphaParam(-0.6).delta() + 0.48) <= 1e-16);
    CHECK_THROWS_AS(AlphaParam(1.2), DomainError);
    CHECK_THROWS_AS(AlphaParam(-1.0001), DomainError);
    CHECK_NOTHROW(AlphaParam(1.0));
}

TEST_CASE("dilute mixes entrywise") {
    SplitMix64 rng(21);
    for (int rep = 0; rep < 50; ++rep) {
        const DensityMatrix a = qclone::testing::rand_density(rng, 4);
        const DensityMatrix b = qclone::testing::rand_density(rng, 4);
        const double e = rng.uniform();
        const DensityMatrix mix = dilute(a, b, DilutionParam(e));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(std::abs(mix(i, j) -
                               ((1.0 - e) * a(i, j) + e * b(i, j))) <= 1e-15);
    }
}

TEST_CASE("dilution weight domain") {
    CHECK_THROWS_AS(DilutionParam(1.0), DomainError);
    CHECK_THROWS_AS(DilutionParam(-0.1), DomainError);
    CHECK_NOTHROW(DilutionParam(0.0));
    CHECK_NOTHROW(DilutionParam::probe(1.0));
    CHECK_THROWS_AS(DilutionParam::probe(1.1), DomainError);
}
