#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qclone/broadcast.hpp"
#include "qclone/cloning.hpp"
#include "qclone/format.hpp"
#include "qclone/separability.hpp"
#include "qclone/states.hpp"
#include "qclone/sweep.hpp"
#include "qclone/verify.hpp"

namespace {

using namespace qclone;

// std::stod grammar, so "inf" is a legal eta/gamma; the whole token must
// parse.
double parse_real(const std::string& text, const std::string& flag) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size())
            throw UsageError(flag + ": trailing characters in '" + text + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + ": cannot parse '" + text + "' as a number");
    } catch (const std::out_of_range&) {
        throw UsageError(flag + ": '" + text + "' is out of range");
    }
}

GridAxis parse_range(const std::string& axis, const std::string& text,
                     const std::string& flag) {
    const std::size_t c1 = text.find(':');
    const std::size_t c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
        throw UsageError(flag + ": expected start:stop:count, got '" + text + "'");
    GridAxis ax;
    ax.name = axis;
    ax.start = parse_real(text.substr(0, c1), flag);
    ax.stop = parse_real(text.substr(c1 + 1, c2 - c1 - 1), flag);
    const std::string count_text = text.substr(c2 + 1);
    try {
        std::size_t used = 0;
        const long n = std::stol(count_text, &used);
        if (used != count_text.size() || n < 1 || n > 1000000)
            throw UsageError(flag + ": count must be an integer in [1, 1000000]");
        ax.count = static_cast<int>(n);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError(flag + ": cannot parse count '" + count_text + "'");
    }
    return ax;
}

BroadcastScenario parse_scenario(const std::string& name) {
    if (name == "local-uc") return BroadcastScenario::LocalUC;
    if (name == "global-uc") return BroadcastScenario::GlobalUC4;
    if (name == "ent-cloner") return BroadcastScenario::OptimalEntangler;
    throw UsageError("--scenario: expected local-uc, global-uc or ent-cloner");
}

void write_rows(const std::vector<std::string>& rows, const std::string& out) {
    if (out.empty()) {
        for (const auto& r : rows) std::cout << r << '\n';
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot open output file " + out);
    for (const auto& r : rows) f << r << '\n';
    f.flush();
    if (!f) throw UsageError("failed writing output file " + out);
}

void print_kv(const char* key, double v) {
    std::cout << key << '=' << format_g17(v) << '\n';
}

struct PointFlags {
    std::string machine = "uc";
    double theta = 0.0;
    double phi = 0.0;
    double epsilon = 0.0;
    std::string eta = "0";
    bool emit_matrix = false;

    ClonerKind kind() const {
        return machine == "uc" ? ClonerKind::uc() : ClonerKind::pcc(theta);
    }
};

struct PairFlags {
    std::string scenario = "global-uc";
    double alpha = 0.0;
    double epsilon = 0.0;
    std::string gamma = "0";
    bool emit_matrix = false;
};

int run_fidelity(const PointFlags& f) {
    const BlochAngles angles(f.theta, f.phi);  // range check up front
    (void)angles;
    const DilutionParam eps(f.epsilon);
    const ThermalQubitParam eta(parse_real(f.eta, "--eta"));
    const ClonerKind kind = f.kind();
    const double closed = fidelity_closed_form(kind, f.theta, eps, eta);
    const double numeric = fidelity_numeric(kind, f.theta, f.phi, eps, eta);
    print_kv("F_closed", closed);
    print_kv("F_numeric", numeric);
    return 0;
}

int run_clone(const PointFlags& f) {
    const BlochAngles angles(f.theta, f.phi);
    const DilutionParam eps(f.epsilon);
    const ThermalQubitParam eta(parse_real(f.eta, "--eta"));
    const ClonerKind kind = f.kind();
    const ShrinkParams p = shrink_params(kind);
    const DensityMatrix rho_in =
        dilute(DensityMatrix(pure_qubit(angles).projector()), thermal_qubit(eta), eps);
    const DensityMatrix clone = clone_single(rho_in, p);
    const double closed = fidelity_closed_form(kind, f.theta, eps, eta);
    const double numeric = fidelity_numeric(kind, f.theta, f.phi, eps, eta);
    if (f.emit_matrix)
        for (const auto& line : matrix_dump_lines(clone.mat())) std::cout << line << '\n';
    print_kv("mu", p.mu);
    print_kv("nu", p.nu);
    print_kv("F_closed", closed);
    print_kv("F_numeric", numeric);
    return 0;
}

int run_broadcast(const PairFlags& f) {
    const BroadcastScenario sc = parse_scenario(f.scenario);
    const AlphaParam alpha(f.alpha);
    const DilutionParam eps(f.epsilon);
    const XXThermalParam gamma(parse_real(f.gamma, "--gamma"));
    const DensityMatrix out = broadcast_output(alpha, eps, gamma, sc);
    const EntanglementVerdict v = is_entangled(out);
    if (f.emit_matrix)
        for (const auto& line : matrix_dump_lines(out.mat())) std::cout << line << '\n';
    std::cout << "entangled=" << (v.entangled ? "true" : "false") << '\n';
    print_kv("negativity", v.negativity);
    print_kv("min_pt_eig", v.min_pt_eigenvalue);
    return 0;
}

int run_boundaries(const PairFlags& f) {
    const BroadcastScenario sc = parse_scenario(f.scenario);
    const AlphaParam alpha(f.alpha);
    const DilutionParam eps(f.epsilon);
    const XXThermalParam gamma(parse_real(f.gamma, "--gamma"));
    const double M = scenario_constants(sc).M;
    const BoundaryParams bp = boundary_params(M, alpha, gamma, eps);
    print_kv("M", M);
    print_kv("alpha1_inf", bp.alpha1_inf);
    print_kv("alpha2_inf", bp.alpha2_inf);
    print_kv("alpha_c", bp.alpha_c);
    print_kv("gamma_c", bp.gamma_c);
    print_kv("eps1", bp.eps1);
    print_kv("eps2", bp.eps2);
    print_kv("alpha0", bp.alpha0);
    print_kv("delta", bp.delta);
    return 0;
}

struct SweepFlags {
    std::string machine = "uc";
    std::string theta_range, phi_range, epsilon_range, eta_range;
    std::string out;
};

int run_sweep_fidelity(const SweepFlags& f) {
    GridSpec grid;
    if (!f.theta_range.empty())
        grid.axes.push_back(parse_range("theta", f.theta_range, "--theta-range"));
    if (!f.phi_range.empty())
        grid.axes.push_back(parse_range("phi", f.phi_range, "--phi-range"));
    if (!f.epsilon_range.empty())
        grid.axes.push_back(parse_range("epsilon", f.epsilon_range, "--epsilon-range"));
    if (!f.eta_range.empty())
        grid.axes.push_back(parse_range("eta", f.eta_range, "--eta-range"));
    const Machine m = f.machine == "uc" ? Machine::UC : Machine::PCC;
    write_rows(sweep_fidelity(m, grid), f.out);
    return 0;
}

struct PhaseFlags {
    std::string scenario = "global-uc";
    double alpha = 0.0;
    std::string epsilon_range = "0:0:1";
    std::string gamma_range = "0:0:1";
    std::string out;
};

int run_phase_diagram(const PhaseFlags& f) {
    PhaseDiagramSpec spec;
    spec.scenario = parse_scenario(f.scenario);
    spec.alpha = f.alpha;
    spec.epsilon_axis = parse_range("epsilon", f.epsilon_range, "--epsilon-range");
    spec.gamma_axis = parse_range("gamma", f.gamma_range, "--gamma-range");
    write_rows(phase_diagram(spec), f.out);
    return 0;
}

struct VerifyFlags {
    std::string suite = "all";
    long long samples = 10000;
    std::uint64_t seed = 42;
};

int run_verify(const VerifyFlags& f) {
    if (f.samples < 1) throw UsageError("--samples must be >= 1");
    std::vector<std::string> names;
    if (f.suite == "all")
        names = {"closedform", "oracles", "tables"};
    else
        names = {f.suite};
    bool any_failed = false;
    for (const std::string& n : names) {
        SuiteResult r;
        if (n == "closedform")
            r = run_closedform_suite(f.samples, f.seed);
        else if (n == "oracles")
            r = run_oracles_suite(f.samples, f.seed);
        else
            r = run_tables_suite(f.samples, f.seed);
        for (const auto& line : r.lines) std::cout << line << '\n';
        std::cout << r.summary_line() << '\n';
        if (r.failed > 0) any_failed = true;
    }
    return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qubit cloning and entanglement broadcasting under thermal noise"};
    app.require_subcommand(1);

    PointFlags point;
    PairFlags pair;
    SweepFlags sweep;
    PhaseFlags phase;
    VerifyFlags verify;

    const auto add_point_flags = [&](CLI::App* cmd, bool with_matrix) {
        cmd->add_option("--machine", point.machine, "Cloner: uc or pcc")
            ->check(CLI::IsMember({"uc", "pcc"}));
        cmd->add_option("--theta", point.theta, "Bloch polar angle, [0, pi]");
        cmd->add_option("--phi", point.phi, "Bloch azimuth, [0, 2*pi)");
        cmd->add_option("--epsilon", point.epsilon, "Thermal dilution weight, [0, 1)");
        cmd->add_option("--eta", point.eta, "Qubit inverse temperature, >= 0 or inf");
        if (with_matrix)
            cmd->add_flag("--emit-matrix", point.emit_matrix,
                          "Print the clone state as i,j,re,im lines first");
    };

    CLI::App* fidelity_cmd = app.add_subcommand(
        "fidelity", "Single-clone fidelity, closed form and matrix pipeline");
    add_point_flags(fidelity_cmd, false);

    CLI::App* clone_cmd =
        app.add_subcommand("clone", "Output state of the single-clone map");
    add_point_flags(clone_cmd, true);

    const auto add_pair_flags = [&](CLI::App* cmd, bool with_matrix) {
        cmd->add_option("--scenario", pair.scenario,
                        "Broadcast scheme: local-uc, global-uc or ent-cloner")
            ->check(CLI::IsMember({"local-uc", "global-uc", "ent-cloner"}));
        cmd->add_option("--alpha", pair.alpha, "Input amplitude, [-1, 1]");
        cmd->add_option("--epsilon", pair.epsilon, "Thermal dilution weight, [0, 1)");
        cmd->add_option("--gamma", pair.gamma, "Pair inverse temperature, >= 0 or inf");
        if (with_matrix)
            cmd->add_flag("--emit-matrix", pair.emit_matrix,
                          "Print the output state as i,j,re,im lines first");
    };

    CLI::App* broadcast_cmd = app.add_subcommand(
        "broadcast", "Nonlocal output of a broadcast scheme, with PPT verdict");
    add_pair_flags(broadcast_cmd, true);

    CLI::App* boundaries_cmd = app.add_subcommand(
        "boundaries", "Closed-form separability boundary parameters");
    add_pair_flags(boundaries_cmd, false);

    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep-fidelity", "Fidelity CSV over a theta/phi/epsilon/eta grid");
    sweep_cmd->add_option("--machine", sweep.machine, "Cloner: uc or pcc")
        ->check(CLI::IsMember({"uc", "pcc"}));
    sweep_cmd->add_option("--theta-range", sweep.theta_range, "start:stop:count");
    sweep_cmd->add_option("--phi-range", sweep.phi_range, "start:stop:count");
    sweep_cmd->add_option("--epsilon-range", sweep.epsilon_range, "start:stop:count");
    sweep_cmd->add_option("--eta-range", sweep.eta_range, "start:stop:count");
    sweep_cmd->add_option("--out", sweep.out, "Write CSV here instead of stdout");

    CLI::App* phase_cmd = app.add_subcommand(
        "phase-diagram", "Entanglement CSV over an epsilon/gamma grid");
    phase_cmd->add_option("--scenario", phase.scenario,
                          "Broadcast scheme: local-uc, global-uc or ent-cloner")
        ->check(CLI::IsMember({"local-uc", "global-uc", "ent-cloner"}));
    phase_cmd->add_option("--alpha", phase.alpha, "Input amplitude, [-1, 1]");
    phase_cmd->add_option("--epsilon-range", phase.epsilon_range, "start:stop:count");
    phase_cmd->add_option("--gamma-range", phase.gamma_range, "start:stop:count");
    phase_cmd->add_option("--out", phase.out, "Write CSV here instead of stdout");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Property suites; exit 0 if every check passes");
    verify_cmd
        ->add_option("--suite", verify.suite,
                     "closedform, oracles, tables or all")
        ->check(CLI::IsMember({"closedform", "oracles", "tables", "all"}));
    verify_cmd->add_option("--samples", verify.samples, "Random samples per suite");
    verify_cmd->add_option("--seed", verify.seed, "Generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    try {
        if (fidelity_cmd->parsed()) return run_fidelity(point);
        if (clone_cmd->parsed()) return run_clone(point);
        if (broadcast_cmd->parsed()) return run_broadcast(pair);
        if (boundaries_cmd->parsed()) return run_boundaries(pair);
        if (sweep_cmd->parsed()) return run_sweep_fidelity(sweep);
        if (phase_cmd->parsed()) return run_phase_diagram(phase);
        if (verify_cmd->parsed()) return run_verify(verify);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
