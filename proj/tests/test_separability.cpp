#include <cmath>
#include <limits>

#include "doctest.h"
#include "helpers.hpp"
#include "qclone/separability.hpp"

using namespace qclone;

namespace {

constexpr double INF = std::numeric_limits<double>::infinity();
const double ROOT_HALF = std::sqrt(0.5);

DensityMatrix werner(double m) {
    return global_depolarize_oracle(
        DensityMatrix(alpha_singlet(AlphaParam(ROOT_HALF)).projector()), m);
}

}  // namespace

TEST_CASE("singlet and Werner verdicts") {
    const DensityMatrix singlet =
        DensityMatrix(alpha_singlet(AlphaParam(ROOT_HALF)).projector());
    const EntanglementVerdict v = is_entangled(singlet);
    CHECK(v.entangled);
    CHECK(std::fabs(v.negativity - 0.5) <= 1e-14);
    CHECK(std::fabs(v.min_pt_eigenvalue + 0.5) <= 1e-14);

    CHECK_FALSE(is_entangled(werner(0.2)).entangled);
    CHECK_FALSE(is_entangled(werner(1.0 / 3.0)).entangled);
    CHECK(is_entangled(werner(1.0 / 3.0 + 1e-6)).entangled);
    CHECK(std::fabs(is_entangled(werner(0.6)).negativity - 0.2) <= 1e-14);
}

TEST_CASE("boundary parameters reproduce the closed-form digits") {
    const BoundaryParams i = boundary_params(4.0 / 9.0, AlphaParam(ROOT_HALF),
                                             XXThermalParam(1.0), DilutionParam(0.0));
    CHECK(std::fabs(i.alpha_c - 0.39031237489989989) <= 1e-15);
    CHECK(std::fabs(i.gamma_c - 2.2127408017021691) <= 1e-14);

    const BoundaryParams ii = boundary_params(3.0 / 5.0, AlphaParam(ROOT_HALF),
                                              XXThermalParam(1.0), DilutionParam(0.0));
    CHECK(std::fabs(ii.alpha_c - 0.47140452079103168) <= 1e-15);
    CHECK(std::fabs(ii.gamma_c - 1.4927894250605615) <= 1e-14);

    const double m_iii = (2.0 + std::sqrt(13.0)) / 9.0;
    const BoundaryParams iii = boundary_params(m_iii, AlphaParam(ROOT_HALF),
                                               XXThermalParam(1.0), DilutionParam(0.0));
    CHECK(std::fabs(iii.alpha_c - 0.47653093110415822) <= 1e-15);
    CHECK(std::fabs(iii.gamma_c - 1.4311857661061001) <= 1e-14);

    CHECK(i.gamma_c > ii.gamma_c);
    CHECK(ii.gamma_c > iii.gamma_c);

    // eps roots at specific couplings.
    const BoundaryParams r1 = boundary_params(0.6, AlphaParam(1.0),
                                              XXThermalParam(2.0), DilutionParam(0.0));
    CHECK(std::fabs(r1.eps2 - 0.60429498231144287) <= 1e-14);

    const BoundaryParams r2 = boundary_params(0.6, AlphaParam(-0.6),
                                              XXThermalParam(3.0), DilutionParam(0.0));
    CHECK(std::fabs(r2.eps1 - 0.32046339173794988) <= 1e-14);
    CHECK(std::fabs(r2.eps2 - 0.72872268701210207) <= 1e-14);

    const BoundaryParams r3 = boundary_params(0.6, AlphaParam(ROOT_HALF),
                                              XXThermalParam(0.5), DilutionParam(0.0));
    CHECK(std::fabs(r3.eps2 - 0.54417825658492958) <= 1e-14);
    const BoundaryParams r4 = boundary_params(0.6, AlphaParam(ROOT_HALF),
                                              XXThermalParam(0.1), DilutionParam(0.0));
    CHECK(std::fabs(r4.eps2 - 0.46015292872201250) <= 1e-14);

    // Limit widths.
    const BoundaryParams w0 = boundary_params(0.6, AlphaParam(ROOT_HALF),
                                              XXThermalParam(1.0), DilutionParam(0.0));
    CHECK(std::fabs(w0.alpha1_inf - 0.47140452079103168) <= 1e-14);
    CHECK(std::fabs(w0.alpha0 - w0.alpha_c) <= 1e-12);
    const BoundaryParams w5 = boundary_params(0.6, AlphaParam(ROOT_HALF),
                                              XXThermalParam(1.0), DilutionParam(0.5));
    CHECK(std::fabs(w5.alpha1_inf - 0.47140452079103168) <= 1e-14);
    const BoundaryParams w3 = boundary_params(0.6, AlphaParam(ROOT_HALF),
                                              XXThermalParam(1.0), DilutionParam(0.3));
    CHECK(std::fabs(w3.alpha0 - 0.36167756026103124) <= 1e-14);

    CHECK(std::fabs(r2.delta + 0.48) <= 1e-15);
    CHECK_THROWS_AS(boundary_params(0.2, AlphaParam(0.5), XXThermalParam(1.0),
                                    DilutionParam(0.0)),
                    DomainError);
}

TEST_CASE("finite-coupling classifier matches its own eps roots") {
    // alpha = -0.6, gamma = 3, M = 3/5: entangled below eps1 and above eps2.
    CHECK(classify_table1(0.6, AlphaParam(-0.6), XXThermalParam(3.0),
                          DilutionParam(0.2)));
    CHECK_FALSE(classify_table1(0.6, AlphaParam(-0.6), XXThermalParam(3.0),
                                DilutionParam(0.5)));
    CHECK(classify_table1(0.6, AlphaParam(-0.6), XXThermalParam(3.0),
                          DilutionParam(0.9)));

    // Same point mirrored to alpha > 0 is entangled for every dilution.
    CHECK(classify_table1(0.6, AlphaParam(0.6), XXThermalParam(3.0),
                          DilutionParam(0.5)));

    // Wide alpha: entangled only above eps2.
    CHECK_FALSE(classify_table1(0.6, AlphaParam(1.0), XXThermalParam(2.0),
                                DilutionParam(0.5)));
    CHECK(classify_table1(0.6, AlphaParam(1.0), XXThermalParam(2.0),
                          DilutionParam(0.7)));

    // Below the critical coupling nothing survives large dilution.
    CHECK(classify_table1(0.6, AlphaParam(ROOT_HALF), XXThermalParam(0.5),
                          DilutionParam(0.3)));
    CHECK_FALSE(classify_table1(0.6, AlphaParam(ROOT_HALF), XXThermalParam(0.5),
                                DilutionParam(0.6)));

    CHECK_THROWS_AS(classify_table1(0.6, AlphaParam(0.0), XXThermalParam(1.0),
                                    DilutionParam(0.5)),
                    NotCoveredError);
    CHECK_THROWS_AS(classify_table1(0.6, AlphaParam(0.5), XXThermalParam(0.0),
                                    DilutionParam(0.5)),
                    DomainError);
    CHECK_THROWS_AS(classify_table1(0.6, AlphaParam(0.5), XXThermalParam(INF),
                                    DilutionParam(0.5)),
                    DomainError);
}

TEST_CASE("limit classifier covers the table rows") {
    // gamma -> inf, C1 rows.
    CHECK(classify_table2(0.6, AlphaParam(0.3), GammaLimit::Infinite,
                          DilutionParam(0.5)));
    CHECK(classify_table2(0.6, AlphaParam(0.9), GammaLimit::Infinite,
                          DilutionParam(0.2)));
    CHECK_FALSE(classify_table2(0.6, AlphaParam(0.9995), GammaLimit::Infinite,
                                DilutionParam(0.2)));

    // gamma -> inf, C2: the overlap window and the high-dilution row.
    CHECK(classify_table2(0.6, AlphaParam(-0.7), GammaLimit::Infinite,
                          DilutionParam(0.1)));
    CHECK(classify_table2(0.6, AlphaParam(-0.9), GammaLimit::Infinite,
                          DilutionParam(0.7)));
    CHECK(classify_table2(0.6, AlphaParam(0.0), GammaLimit::Infinite,
                          DilutionParam(0.7)));

    // gamma -> 0: a single low-dilution window.
    CHECK(classify_table2(0.6, AlphaParam(0.5), GammaLimit::Zero,
                          DilutionParam(0.3)));
    CHECK_FALSE(classify_table2(0.6, AlphaParam(0.5), GammaLimit::Zero,
                                DilutionParam(0.5)));
    CHECK_FALSE(classify_table2(0.6, AlphaParam(0.99), GammaLimit::Zero,
                                DilutionParam(0.1)));
}

TEST_CASE("scan-and-bisect boundary finder") {
    const auto one = find_eps_boundary(0.6, AlphaParam(1.0), XXThermalParam(2.0));
    REQUIRE(one.size() == 1);
    CHECK(std::fabs(one[0] - 0.60429498231144287) <= 1e-8);

    const auto two = find_eps_boundary(0.6, AlphaParam(-0.6), XXThermalParam(3.0));
    REQUIRE(two.size() == 2);
    CHECK(std::fabs(two[0] - 0.32046339173794988) <= 1e-8);
    CHECK(std::fabs(two[1] - 0.72872268701210207) <= 1e-8);

    // Entangled for every dilution: no crossing at all.
    const auto none = find_eps_boundary(0.6, AlphaParam(ROOT_HALF),
                                        XXThermalParam(3.0));
    CHECK(none.empty());
}

TEST_CASE("classifiers agree with the numeric verdict on sampled points") {
    for (BroadcastScenario s :
         {BroadcastScenario::LocalUC, BroadcastScenario::GlobalUC4,
          BroadcastScenario::OptimalEntangler}) {
        for (TableCase t : {TableCase::FiniteGamma, TableCase::InfiniteLimit,
                            TableCase::ZeroLimit}) {
            const CrossValidationReport rep = cross_validate(s, t, 500, 97);
            INFO(rep.csv_line());
            CHECK(rep.mismatches == 0);
            CHECK(rep.samples == 500);
            CHECK(rep.worst_margin > 0.0);
        }
    }
}

TEST_CASE("cross-validation report line shape") {
    const CrossValidationReport rep =
        cross_validate(BroadcastScenario::GlobalUC4, TableCase::FiniteGamma, 50, 7);
    const std::string line = rep.csv_line();
    CHECK(line.rfind("global-uc:table1,50,", 0) == 0);
}
