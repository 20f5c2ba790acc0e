#include "qclone/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "qclone/format.hpp"
#include "qclone/parallel.hpp"

namespace qclone {

std::vector<double> GridAxis::points() const {
    if (count < 1) throw UsageError("axis " + name + ": count must be >= 1");
    if (std::isnan(start) || std::isnan(stop)) throw UsageError("axis " + name + ": NaN endpoint");
    if (std::isinf(start) || std::isinf(stop)) {
        const bool inf_ok = (name == "eta" || name == "gamma") && start == stop &&
                            start > 0.0 && count == 1;
        if (!inf_ok) {
            throw UsageError("axis " + name +
                             ": infinity is only legal as the single point of an eta/gamma axis");
        }
        return {start};
    }
    if (start > stop) throw UsageError("axis " + name + ": start exceeds stop");
    if (count == 1) return {start};
    std::vector<double> pts(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        pts[static_cast<std::size_t>(k)] =
            start + static_cast<double>(k) * (stop - start) / (count - 1);
    }
    return pts;
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

}  // namespace

std::vector<std::string> sweep_fidelity(Machine machine, const GridSpec& grid) {
    std::vector<double> theta{0.0}, phi{0.0}, epsilon{0.0}, eta{0.0};
    std::vector<std::string> seen;
    for (const GridAxis& axis : grid.axes) {
        if (std::find(seen.begin(), seen.end(), axis.name) != seen.end()) {
            throw UsageError("duplicate axis " + axis.name);
        }
        seen.push_back(axis.name);
        if (axis.name == "theta") theta = axis.points();
        else if (axis.name == "phi") phi = axis.points();
        else if (axis.name == "epsilon") epsilon = axis.points();
        else if (axis.name == "eta") eta = axis.points();
        else throw UsageError("fidelity sweep accepts theta/phi/epsilon/eta axes, not " +
                              axis.name);
    }
    const char* name = machine == Machine::UC ? "uc" : "pcc";
    const std::size_t n = theta.size() * phi.size() * epsilon.size() * eta.size();
    std::vector<std::string> rows(n + 1);
    rows[0] = "machine,theta,epsilon,eta,F_closed,F_numeric,beats_classical";
    parallel_for(n, [&](std::size_t i) {
        std::size_t rest = i;
        const double h = eta[rest % eta.size()];
        rest /= eta.size();
        const double e = epsilon[rest % epsilon.size()];
        rest /= epsilon.size();
        const double p = phi[rest % phi.size()];
        rest /= phi.size();
        const double t = theta[rest];
        const ClonerKind kind =
            machine == Machine::UC ? ClonerKind::uc() : ClonerKind::pcc(t);
        const DilutionParam eps(e);
        const ThermalQubitParam eta_p(h);
        const double f_closed = fidelity_closed_form(kind, t, eps, eta_p);
        const double f_numeric = fidelity_numeric(kind, t, p, eps, eta_p);
        if (std::abs(f_closed - f_numeric) > tol::CLOSED_VS_NUMERIC) {
            throw NumericalFailureError(
                "closed-form/numeric fidelity disagreement " +
                format_g17(std::abs(f_closed - f_numeric)) + " at theta=" + format_g17(t) +
                " phi=" + format_g17(p) + " eps=" + format_g17(e) + " eta=" + format_g17(h));
        }
        rows[i + 1] = std::string(name) + "," + format_g17(t) + "," + format_g17(e) + "," +
                      format_g17(h) + "," + format_g17(f_closed) + "," + format_g17(f_numeric) +
                      "," + (beats_classical(f_closed) ? "1" : "0");
    });
    return rows;
}

std::vector<std::string> phase_diagram(const PhaseDiagramSpec& spec) {
    if (spec.epsilon_axis.name != "epsilon" || spec.gamma_axis.name != "gamma") {
        throw UsageError("phase diagram requires an epsilon axis and a gamma axis");
    }
    const std::vector<double> eps_pts = spec.epsilon_axis.points();
    const std::vector<double> gam_pts = spec.gamma_axis.points();
    const AlphaParam alpha(spec.alpha);
    const std::string prefix = std::string(scenario_name(spec.scenario)) + "," +
                               format_g17(spec.alpha) + ",";
    const std::size_t n = eps_pts.size() * gam_pts.size();
    std::vector<std::string> rows(n + 1);
    rows[0] = "scenario,alpha,epsilon,gamma,entangled,negativity,min_pt_eig";
    parallel_for(n, [&](std::size_t i) {
        const double e = eps_pts[i / gam_pts.size()];
        const double g = gam_pts[i % gam_pts.size()];
        const DensityMatrix out =
            broadcast_output(alpha, DilutionParam(e), XXThermalParam(g), spec.scenario);
        const EntanglementVerdict v = is_entangled(out);
        rows[i + 1] = prefix + format_g17(e) + "," + format_g17(g) + "," +
                      (v.entangled ? "1" : "0") + "," + format_g17(v.negativity) + "," +
                      format_g17(v.min_pt_eigenvalue);
    });
    return rows;
}

double region_fraction(const std::vector<std::string>& rows) {
    long total = 0;
    long entangled = 0;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        // entangled sits in the fifth comma-separated field
        const std::string& row = rows[r];
        std::size_t pos = 0;
        for (int field = 0; field < 4; ++field) pos = row.find(',', pos) + 1;
        ++total;
        if (row[pos] == '1') ++entangled;
    }
    return total == 0 ? 0.0 : static_cast<double>(entangled) / static_cast<double>(total);
}

}  // namespace qclone
