#include <cmath>
#include <limits>

#include "doctest.h"
#include "helpers.hpp"
#include "qclone/broadcast.hpp"

using namespace qclone;

namespace {

constexpr double INF = std::numeric_limits<double>::infinity();

DensityMatrix diluted_input(double alpha, double eps, double gamma) {
    return dilute(DensityMatrix(alpha_singlet(AlphaParam(alpha)).projector()),
                  thermal_xx(XXThermalParam(gamma)), DilutionParam(eps));
}

}  // namespace

TEST_CASE("scenario constants") {
    const ScenarioConstants i = scenario_constants(BroadcastScenario::LocalUC);
    CHECK(i.M == 4.0 / 9.0);
    CHECK(std::fabs(i.L - 1.0 / 3.0) <= 1e-14);
    CHECK(std::isnan(i.A));
    CHECK(std::isnan(i.C));

    const ScenarioConstants ii = scenario_constants(BroadcastScenario::GlobalUC4);
    CHECK(ii.M == 3.0 / 5.0);
    CHECK(std::fabs(ii.L - 0.3) <= 1e-14);

    const ScenarioConstants iii =
        scenario_constants(BroadcastScenario::OptimalEntangler);
    CHECK(std::fabs(iii.A - 0.29389153292264791) <= 1e-15);
    CHECK(std::fabs(iii.C - 0.088983196304688221) <= 1e-15);
    CHECK(std::fabs(iii.M - 0.62283903060710992) <= 1e-15);
    CHECK(std::fabs(iii.M - (2.0 + std::sqrt(13.0)) / 9.0) <= 1e-14);
    // The L discriminant vanishes exactly at this M, so the square root
    // amplifies the last ulp of M to ~sqrt(ulp).  5e-9 is the honest bound.
    CHECK(std::fabs(iii.L - 0.25911669937087152) <= 5e-9);
}

TEST_CASE("scenario_L clamps the vanishing discriminant") {
    const double m_iii = (2.0 + std::sqrt(13.0)) / 9.0;
    CHECK_NOTHROW(scenario_L(m_iii));
    CHECK(scenario_L(m_iii) >= 0.0);
    // Well beyond the clamp band the discriminant is genuinely negative.
    CHECK_THROWS_AS(scenario_L(1.0), DomainError);
}

TEST_CASE("local universal cloners act as the known two-sided channel") {
    CMat e00(4);
    e00(0, 0) = 1.0;
    const DensityMatrix out = local_uc_oracle(DensityMatrix(e00));
    CHECK(std::fabs(out(0, 0).real() - 25.0 / 36.0) <= 1e-15);
    CHECK(std::fabs(out(3, 3).real() - 1.0 / 36.0) <= 1e-15);
    CHECK(std::fabs(out(1, 1).real() - 5.0 / 36.0) <= 1e-15);
    CHECK(std::fabs(out(2, 2).real() - 5.0 / 36.0) <= 1e-15);
}

TEST_CASE("broadcast_output matches the channel oracles") {
    SplitMix64 rng(41);
    for (int rep = 0; rep < 300; ++rep) {
        const double alpha = rng.uniform(-1.0, 1.0);
        const double eps = rng.uniform();
        const double gamma = rep % 8 == 7 ? INF : rng.uniform() * 8.0;
        const DensityMatrix in = diluted_input(alpha, eps, gamma);

        const DensityMatrix via_i =
            broadcast_output(AlphaParam(alpha), DilutionParam(eps),
                             XXThermalParam(gamma), BroadcastScenario::LocalUC);
        CHECK(via_i.mat().max_abs_diff(local_uc_oracle(in).mat()) <= 1e-12);

        const DensityMatrix via_ii =
            broadcast_output(AlphaParam(alpha), DilutionParam(eps),
                             XXThermalParam(gamma), BroadcastScenario::GlobalUC4);
        CHECK(via_ii.mat().max_abs_diff(
                  global_depolarize_oracle(in, 3.0 / 5.0).mat()) <= 1e-12);
    }
}

TEST_CASE("broadcast_output stays a valid state across the whole domain") {
    for (double alpha : {-1.0, -0.5, 0.0, 0.3, 1.0}) {
        for (double eps : {0.0, 0.5, 0.999}) {
            for (double gamma : {0.0, 1.0, 30.0, INF}) {
                for (BroadcastScenario s :
                     {BroadcastScenario::LocalUC, BroadcastScenario::GlobalUC4,
                      BroadcastScenario::OptimalEntangler}) {
                    CHECK_NOTHROW(broadcast_output(AlphaParam(alpha),
                                                   DilutionParam(eps),
                                                   XXThermalParam(gamma), s));
                }
            }
        }
    }
}

TEST_CASE("x_state_output validates the Werner weight") {
    CHECK_THROWS_AS(x_state_output(1.2, 0.3, AlphaParam(0.5), DilutionParam(0.1),
                                   XXThermalParam(1.0)),
                    DomainError);
    CHECK_THROWS_AS(x_state_output(-0.1, 0.3, AlphaParam(0.5), DilutionParam(0.1),
                                   XXThermalParam(1.0)),
                    DomainError);
}

TEST_CASE("compact Werner form: always for (ii), special points for (iii)") {
    SplitMix64 rng(42);
    const double r = std::sqrt(0.5);
    for (int rep = 0; rep < 200; ++rep) {
        const double alpha = rng.uniform(-1.0, 1.0);
        const double eps = rng.uniform();
        const double gamma = rng.uniform() * 6.0;

        CHECK(compact_form_check(AlphaParam(alpha), DilutionParam(eps),
                                 XXThermalParam(gamma),
                                 BroadcastScenario::GlobalUC4)
                  .holds);
        CHECK(compact_form_check(AlphaParam(rep % 2 ? r : -r), DilutionParam(eps),
                                 XXThermalParam(gamma),
                                 BroadcastScenario::OptimalEntangler)
                  .holds);
        CHECK(compact_form_check(AlphaParam(alpha), DilutionParam::probe(1.0),
                                 XXThermalParam(gamma),
                                 BroadcastScenario::OptimalEntangler)
                  .holds);
    }
}

TEST_CASE("compact Werner form fails off the special points with known residual") {
    const CompactFormResult iii =
        compact_form_check(AlphaParam(0.9), DilutionParam(0.2),
                           XXThermalParam(1.0), BroadcastScenario::OptimalEntangler);
    CHECK_FALSE(iii.holds);
    // Tolerance tracks the sqrt(ulp) wobble of L at the vanishing
    // discriminant, scaled by (1-eps)|2 alpha^2 - 1| here.
    CHECK(std::fabs(iii.max_residual - 0.025942196702610986) <= 5e-9);

    // Scenario (i) deviates by exactly (1-eps)|2 alpha^2 - 1| (L - M/2) with
    // L - M/2 = 1/9.
    const CompactFormResult i =
        compact_form_check(AlphaParam(0.9), DilutionParam(0.2),
                           XXThermalParam(1.0), BroadcastScenario::LocalUC);
    CHECK_FALSE(i.holds);
    CHECK(std::fabs(i.max_residual - 0.8 * 0.62 / 9.0) <= 1e-14);
}

TEST_CASE("diagonal of the output is even in alpha") {
    SplitMix64 rng(43);
    for (int rep = 0; rep < 100; ++rep) {
        const double alpha = rng.uniform();
        const double eps = rng.uniform();
        const double gamma = rng.uniform() * 5.0;
        for (BroadcastScenario s :
             {BroadcastScenario::LocalUC, BroadcastScenario::GlobalUC4,
              BroadcastScenario::OptimalEntangler}) {
            const DensityMatrix plus = broadcast_output(
                AlphaParam(alpha), DilutionParam(eps), XXThermalParam(gamma), s);
            const DensityMatrix minus = broadcast_output(
                AlphaParam(-alpha), DilutionParam(eps), XXThermalParam(gamma), s);
            for (int d = 0; d < 4; ++d)
                CHECK(std::abs(plus(d, d) - minus(d, d)) == 0.0);
        }
    }
}
