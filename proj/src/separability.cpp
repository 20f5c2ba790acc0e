#include "qclone/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qclone/format.hpp"
#include "qclone/parallel.hpp"
#include "qclone/rng.hpp"

namespace qclone {

namespace {

constexpr double NAN_MARK = std::numeric_limits<double>::quiet_NaN();

void require_M(double M) {
    if (!(M > 1.0 / 3.0 && M <= 1.0)) {
        throw DomainError("Werner weight M must lie in (1/3, 1], got " + format_g17(M));
    }
}

// sqrt with the boundary-tolerance clamp; NaN marks a not-applicable field.
double clamped_sqrt(double x) {
    if (x < 0.0) {
        if (x < -1e-12) return NAN_MARK;
        x = 0.0;
    }
    return std::sqrt(x);
}

double alpha1_inf_of(double M, double e) {
    return clamped_sqrt((3.0 * M - 1.0) * (M + 1.0 - 4.0 * M * e)) / (4.0 * M * (1.0 - e));
}

double alpha2_inf_of(double M, double e) {
    return clamped_sqrt((M + 1.0) * (3.0 * M - 1.0 - 4.0 * M * e)) / (4.0 * M * (1.0 - e));
}

double alpha0_of(double M, double e) {
    const double x = M * (1.0 - e);
    return clamped_sqrt((3.0 * x - 1.0) * (x + 1.0)) / (4.0 * x);
}

// eps_{1(2)} with numerator and denominator divided by (1+cosh g), so large
// and infinite gamma flow through: q = 1/(2 cosh^2(g/2)) and tanh(g/2)
// replace the raw hyperbolic weights.
void eps_roots(double M, double delta, double g, double& eps1, double& eps2) {
    const double ch_half = std::cosh(0.5 * g);
    const double q = 1.0 / (2.0 * ch_half * ch_half);
    const double th = std::tanh(0.5 * g);
    eps1 = (M - 1.0 - 4.0 * M * delta) / (2.0 * M * (q + th - 2.0 * delta));
    eps2 = (M - 1.0 + 4.0 * M * delta) / (2.0 * M * (q - th + 2.0 * delta));
}

}  // namespace

EntanglementVerdict is_entangled(const DensityMatrix& rho, double tolerance) {
    const HermitianEig e = hermitian_eig(partial_transpose(rho, Subsystem::A));
    double neg = 0.0;
    for (int c = 0; c < rho.dim(); ++c)
        neg += std::max(0.0, -e.values[static_cast<std::size_t>(c)]);
    const double lo = e.values[0];
    return {lo < -tolerance, neg, lo};
}

BoundaryParams boundary_params(double M, const AlphaParam& a, const XXThermalParam& g,
                               const DilutionParam& eps) {
    require_M(M);
    BoundaryParams b{};
    const double e = eps.value();
    b.delta = a.delta();
    b.alpha1_inf = alpha1_inf_of(M, e);
    b.alpha2_inf = alpha2_inf_of(M, e);
    b.alpha_c = clamped_sqrt(3.0 * M * M + 2.0 * M - 1.0) / (4.0 * M);
    b.gamma_c = std::log((M + 1.0 + 2.0 * std::sqrt(M * M + M)) / (3.0 * M - 1.0));
    eps_roots(M, b.delta, g.gamma, b.eps1, b.eps2);
    b.alpha0 = alpha0_of(M, e);
    return b;
}

bool classify_table1(double M, const AlphaParam& a, const XXThermalParam& g,
                     const DilutionParam& eps) {
    require_M(M);
    if (!(std::isfinite(g.gamma) && g.gamma > 0.0)) {
        throw DomainError("table 1 covers finite gamma > 0 only, got " + format_g17(g.gamma));
    }
    if (a.alpha == 0.0) {
        throw NotCoveredError("table 1 rows cover 0<alpha<1 and -1<alpha<0, not alpha=0");
    }
    const BoundaryParams b = boundary_params(M, a, g, eps);
    const double x = std::abs(a.alpha * a.alpha - 0.5);
    const double e = eps.value();
    if (g.gamma > b.gamma_c) {
        if (x < b.alpha_c) {
            return a.alpha > 0.0 ? true : (e < b.eps1 || e > b.eps2);
        }
        return e > b.eps2;
    }
    if (x < b.alpha_c) {
        return a.alpha > 0.0 ? e < b.eps2 : e < b.eps1;
    }
    return false;
}

bool classify_table2(double M, const AlphaParam& a, GammaLimit limit, const DilutionParam& eps) {
    require_M(M);
    const double e = eps.value();
    const double x = std::abs(a.alpha * a.alpha - 0.5);
    if (limit == GammaLimit::Zero) {
        return e < 1.0 - 1.0 / (3.0 * M) && x < alpha0_of(M, e);
    }
    if (a.alpha > 0.0) {  // C1
        if (e <= (1.0 - M) / (2.0 * M)) return x < alpha1_inf_of(M, e);
        return true;
    }
    // C2; the union of the three rows also encodes the overlap rule for
    // (1-M)/2M < eps < (3M-1)/4M, where either bound may grant entanglement.
    bool verdict = false;
    if (e < (3.0 * M - 1.0) / (4.0 * M)) verdict = x < alpha2_inf_of(M, e);
    if (!verdict && e > (1.0 - M) / (2.0 * M) && e <= (M + 1.0) / (4.0 * M)) {
        verdict = x > alpha1_inf_of(M, e);
    }
    if (!verdict) verdict = e > (M + 1.0) / (4.0 * M);
    return verdict;
}

std::vector<double> find_eps_boundary(double M, const AlphaParam& a, const XXThermalParam& g) {
    require_M(M);
    if (!std::isfinite(g.gamma)) {
        throw DomainError("find_eps_boundary expects finite gamma");
    }
    const double L = scenario_L(M);
    const auto margin = [&](double e) {
        return min_eigenvalue(
            partial_transpose(x_state_output(M, L, a, DilutionParam::probe(e), g), Subsystem::A));
    };
    constexpr int SCAN = 1024;
    constexpr double EPS_TOP = 1.0 - 1e-9;
    std::vector<double> crossings;
    double prev_e = 0.0;
    double prev_f = margin(0.0);
    if (prev_f == 0.0) crossings.push_back(0.0);
    for (int k = 1; k < SCAN; ++k) {
        const double e = EPS_TOP * static_cast<double>(k) / (SCAN - 1);
        const double f = margin(e);
        if (f == 0.0) {
            crossings.push_back(e);
        } else if (prev_f != 0.0 && std::signbit(f) != std::signbit(prev_f)) {
            double lo = prev_e, hi = e, flo = prev_f;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                const double fm = margin(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(flo)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            crossings.push_back(0.5 * (lo + hi));
        }
        prev_e = e;
        prev_f = f;
    }
    return crossings;
}

std::string CrossValidationReport::csv_line() const {
    return scenario + "," + std::to_string(samples) + "," + std::to_string(mismatches) + "," +
           format_g17(worst_margin);
}

namespace {

const char* scenario_name(BroadcastScenario s) {
    switch (s) {
        case BroadcastScenario::LocalUC: return "local-uc";
        case BroadcastScenario::GlobalUC4: return "global-uc";
        case BroadcastScenario::OptimalEntangler: return "ent-cloner";
    }
    return "?";
}

bool near(double v, double target) {
    return std::isfinite(target) && std::abs(v - target) < tol::GUARD_BAND;
}

struct SamplePoint {
    double alpha, eps, gamma;
};

}  // namespace

CrossValidationReport cross_validate(BroadcastScenario s, TableCase table, long samples,
                                     std::uint64_t seed) {
    const ScenarioConstants k = scenario_constants(s);
    const double gamma_proxy = table == TableCase::InfiniteLimit ? 1e3 : 1e-6;
    SplitMix64 rng(seed);

    std::vector<SamplePoint> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    while (pts.size() < static_cast<std::size_t>(samples)) {
        const double alpha = rng.uniform(-1.0, 1.0);
        const double e = rng.uniform();
        const double gamma =
            table == TableCase::FiniteGamma ? rng.uniform(0.0, 6.0) : gamma_proxy;
        const double x = std::abs(alpha * alpha - 0.5);
        if (table == TableCase::FiniteGamma) {
            if (gamma <= 0.0 || std::abs(alpha) < tol::GUARD_BAND) continue;
            const BoundaryParams b =
                boundary_params(k.M, AlphaParam(alpha), XXThermalParam(gamma), DilutionParam(e));
            if (near(gamma, b.gamma_c) || near(x, b.alpha_c) || near(e, b.eps1) ||
                near(e, b.eps2)) {
                continue;
            }
        } else if (table == TableCase::InfiniteLimit) {
            if (near(e, (1.0 - k.M) / (2.0 * k.M)) || near(e, (3.0 * k.M - 1.0) / (4.0 * k.M)) ||
                near(e, (k.M + 1.0) / (4.0 * k.M)) || near(x, alpha1_inf_of(k.M, e)) ||
                near(x, alpha2_inf_of(k.M, e))) {
                continue;
            }
        } else {
            double eps1p, eps2p;
            eps_roots(k.M, AlphaParam(alpha).delta(), gamma_proxy, eps1p, eps2p);
            if (near(e, 1.0 - 1.0 / (3.0 * k.M)) || near(x, alpha0_of(k.M, e)) ||
                near(e, eps1p) || near(e, eps2p)) {
                continue;
            }
        }
        pts.push_back({alpha, e, gamma});
    }

    // char, not bool: vector<bool> packs bits and would race across threads
    std::vector<char> expected(pts.size());
    std::vector<char> got(pts.size());
    std::vector<double> margins(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        const SamplePoint& p = pts[i];
        const AlphaParam a(p.alpha);
        const DilutionParam e(p.eps);
        const XXThermalParam g(p.gamma);
        const bool predicted =
            table == TableCase::FiniteGamma
                ? classify_table1(k.M, a, g, e)
                : classify_table2(k.M, a,
                                  table == TableCase::InfiniteLimit ? GammaLimit::Infinite
                                                                    : GammaLimit::Zero,
                                  e);
        expected[i] = predicted ? 1 : 0;
        const EntanglementVerdict v = is_entangled(broadcast_output(a, e, g, s));
        got[i] = v.entangled ? 1 : 0;
        margins[i] = std::abs(v.min_pt_eigenvalue);
    });

    CrossValidationReport report;
    report.scenario = std::string(scenario_name(s)) + ":" +
                      (table == TableCase::FiniteGamma
                           ? "table1"
                           : table == TableCase::InfiniteLimit ? "table2-inf" : "table2-zero");
    report.samples = samples;
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        report.worst_margin = std::min(report.worst_margin, margins[i]);
        if (expected[i] != got[i]) {
            ++report.mismatches;
            if (report.mismatch_details.size() < 20) {
                report.mismatch_details.push_back(
                    "table/PPT mismatch at alpha=" + format_g17(pts[i].alpha) +
                    " eps=" + format_g17(pts[i].eps) + " gamma=" + format_g17(pts[i].gamma) +
                    ": table=" + (expected[i] ? "entangled" : "separable") +
                    " ppt=" + (got[i] ? "entangled" : "separable") +
                    " min_pt_eig=" + format_g17(margins[i]));
            }
        }
    }
    return report;
}

}  // namespace qclone
