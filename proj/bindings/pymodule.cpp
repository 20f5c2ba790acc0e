#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>
#include <vector>

#include "qclone/broadcast.hpp"
#include "qclone/cloning.hpp"
#include "qclone/matrix.hpp"
#include "qclone/separability.hpp"
#include "qclone/states.hpp"

namespace py = pybind11;

namespace {

using namespace qclone;

using PyMat = std::vector<std::vector<std::complex<double>>>;

ClonerKind parse_kind(const std::string& machine, double theta) {
    if (machine == "uc") return ClonerKind::uc();
    if (machine == "pcc") return ClonerKind::pcc(theta);
    throw UsageError("machine must be 'uc' or 'pcc'");
}

BroadcastScenario parse_scenario(const std::string& name) {
    if (name == "local-uc") return BroadcastScenario::LocalUC;
    if (name == "global-uc") return BroadcastScenario::GlobalUC4;
    if (name == "ent-cloner") return BroadcastScenario::OptimalEntangler;
    throw UsageError("scenario must be 'local-uc', 'global-uc' or 'ent-cloner'");
}

Subsystem parse_subsystem(const std::string& name) {
    if (name == "A" || name == "a") return Subsystem::A;
    if (name == "B" || name == "b") return Subsystem::B;
    throw UsageError("subsystem must be 'A' or 'B'");
}

CMat to_cmat(const PyMat& rows) {
    const std::size_t n = rows.size();
    if (n != 2 && n != 4) throw InvalidDimensionError("matrix must be 2x2 or 4x4");
    CMat m(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw InvalidDimensionError("matrix rows must all have length " +
                                        std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

PyMat from_cmat(const CMat& m) {
    const int n = m.dim();
    PyMat rows(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    }
    return rows;
}

DensityMatrix to_density(const PyMat& rows) { return DensityMatrix(to_cmat(rows)); }

py::dict verdict_dict(const EntanglementVerdict& v) {
    py::dict d;
    d["entangled"] = v.entangled;
    d["negativity"] = v.negativity;
    d["min_pt_eig"] = v.min_pt_eigenvalue;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qclone, m) {
    m.doc() =
        "Qubit cloning and entanglement broadcasting under thermal noise. "
        "Matrices are nested lists of complex numbers, basis order "
        "|00>, |01>, |10>, |11> with the first qubit slower-varying.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const NotCoveredError& e) {
            PyErr_SetString(PyExc_LookupError, e.what());
        } catch (const NumericalFailureError& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "shrink_params",
        [](const std::string& machine, double theta) {
            const ShrinkParams p = shrink_params(parse_kind(machine, theta));
            return py::make_tuple(p.mu, p.nu);
        },
        py::arg("machine"), py::arg("theta") = 0.0,
        "(mu, nu) of the single-clone map; mu^2 + 2 nu^2 = 1.");

    m.def(
        "fidelity_closed_form",
        [](const std::string& machine, double theta, double epsilon, double eta) {
            return fidelity_closed_form(parse_kind(machine, theta), theta,
                                        DilutionParam(epsilon), ThermalQubitParam(eta));
        },
        py::arg("machine"), py::arg("theta"), py::arg("epsilon"), py::arg("eta"),
        "Closed-form single-clone fidelity for the thermally diluted input.");

    m.def(
        "fidelity_numeric",
        [](const std::string& machine, double theta, double phi, double epsilon,
           double eta) {
            return fidelity_numeric(parse_kind(machine, theta), theta, phi,
                                    DilutionParam(epsilon), ThermalQubitParam(eta));
        },
        py::arg("machine"), py::arg("theta"), py::arg("phi"), py::arg("epsilon"),
        py::arg("eta"),
        "Same fidelity via the density-matrix pipeline; agrees to 1e-12.");

    m.def(
        "classical_threshold",
        [](double theta, double eta) {
            return classical_threshold(theta, ThermalQubitParam(eta));
        },
        py::arg("theta"), py::arg("eta"),
        "Largest dilution at which the universal cloner still beats 1/2.");

    m.def(
        "pure_qubit",
        [](double theta, double phi) {
            const StateVector v = pure_qubit(BlochAngles(theta, phi));
            return std::vector<std::complex<double>>{v.amp(0), v.amp(1)};
        },
        py::arg("theta"), py::arg("phi") = 0.0, "Bloch state amplitudes.");

    m.def(
        "thermal_qubit",
        [](double eta) { return from_cmat(thermal_qubit(ThermalQubitParam(eta)).mat()); },
        py::arg("eta"), "Single-qubit Gibbs state, eta = omega0*beta/2.");

    m.def(
        "thermal_xx",
        [](double gamma) { return from_cmat(thermal_xx(XXThermalParam(gamma)).mat()); },
        py::arg("gamma"), "Two-qubit XX Gibbs state, gamma = 2*beta*J.");

    m.def(
        "alpha_singlet",
        [](double alpha) {
            const StateVector v = alpha_singlet(AlphaParam(alpha));
            return std::vector<std::complex<double>>{v.amp(0), v.amp(1), v.amp(2),
                                                     v.amp(3)};
        },
        py::arg("alpha"), "alpha|01> - sqrt(1-alpha^2)|10> amplitudes.");

    m.def(
        "clone_single",
        [](const PyMat& rho, const std::string& machine, double theta) {
            const DensityMatrix out =
                clone_single(to_density(rho), shrink_params(parse_kind(machine, theta)));
            return from_cmat(out.mat());
        },
        py::arg("rho"), py::arg("machine"), py::arg("theta") = 0.0,
        "Single-clone output state of a 2x2 input.");

    m.def(
        "broadcast_output",
        [](const std::string& scenario, double alpha, double epsilon, double gamma) {
            const DensityMatrix out =
                broadcast_output(AlphaParam(alpha), DilutionParam(epsilon),
                                 XXThermalParam(gamma), parse_scenario(scenario));
            return from_cmat(out.mat());
        },
        py::arg("scenario"), py::arg("alpha"), py::arg("epsilon"), py::arg("gamma"),
        "Nonlocal X-state output of the broadcast scheme.");

    m.def(
        "scenario_constants",
        [](const std::string& scenario) {
            const ScenarioConstants k = scenario_constants(parse_scenario(scenario));
            py::dict d;
            d["M"] = k.M;
            d["L"] = k.L;
            d["A"] = k.A;
            d["C"] = k.C;
            return d;
        },
        py::arg("scenario"), "Werner weight M, skew L, and (iii) intermediates.");

    m.def(
        "compact_form_check",
        [](const std::string& scenario, double alpha, double epsilon, double gamma) {
            const CompactFormResult r =
                compact_form_check(AlphaParam(alpha), DilutionParam(epsilon),
                                   XXThermalParam(gamma), parse_scenario(scenario));
            py::dict d;
            d["holds"] = r.holds;
            d["max_residual"] = r.max_residual;
            return d;
        },
        py::arg("scenario"), py::arg("alpha"), py::arg("epsilon"), py::arg("gamma"),
        "Does the output equal M rho_in + (1-M) I/4 for the diluted input?");

    m.def(
        "is_entangled",
        [](const PyMat& rho, double tolerance) {
            return verdict_dict(is_entangled(to_density(rho), tolerance));
        },
        py::arg("rho"), py::arg("tolerance") = tol::PPT,
        "PPT verdict with negativity and the minimum PT eigenvalue.");

    m.def(
        "negativity", [](const PyMat& rho) { return negativity(to_density(rho)); },
        py::arg("rho"), "Sum of |negative PT eigenvalues|.");

    m.def(
        "fidelity",
        [](const PyMat& rho, const PyMat& sigma) {
            return fidelity(to_density(rho), to_density(sigma));
        },
        py::arg("rho"), py::arg("sigma"), "Uhlmann fidelity, clamped to [0, 1].");

    m.def(
        "min_eigenvalue", [](const PyMat& mat) { return min_eigenvalue(to_cmat(mat)); },
        py::arg("mat"), "Smallest eigenvalue of a Hermitian 2x2 or 4x4 matrix.");

    m.def(
        "partial_trace",
        [](const PyMat& rho, const std::string& keep) {
            return from_cmat(partial_trace(to_density(rho), parse_subsystem(keep)).mat());
        },
        py::arg("rho"), py::arg("keep"), "Reduced state of the kept qubit.");

    m.def(
        "partial_transpose",
        [](const PyMat& mat, const std::string& on) {
            return from_cmat(partial_transpose(to_cmat(mat), parse_subsystem(on)));
        },
        py::arg("mat"), py::arg("on"), "Partial transpose over one qubit.");

    m.def(
        "boundary_params",
        [](double M, double alpha, double gamma, double epsilon) {
            const BoundaryParams b = boundary_params(M, AlphaParam(alpha),
                                                     XXThermalParam(gamma),
                                                     DilutionParam(epsilon));
            py::dict d;
            d["alpha1_inf"] = b.alpha1_inf;
            d["alpha2_inf"] = b.alpha2_inf;
            d["alpha_c"] = b.alpha_c;
            d["gamma_c"] = b.gamma_c;
            d["eps1"] = b.eps1;
            d["eps2"] = b.eps2;
            d["alpha0"] = b.alpha0;
            d["delta"] = b.delta;
            return d;
        },
        py::arg("M"), py::arg("alpha"), py::arg("gamma"), py::arg("epsilon") = 0.0,
        "Closed-form separability boundary parameters; NaN marks "
        "not-applicable fields.");

    m.def(
        "classify_table1",
        [](double M, double alpha, double gamma, double epsilon) {
            return classify_table1(M, AlphaParam(alpha), XXThermalParam(gamma),
                                   DilutionParam(epsilon));
        },
        py::arg("M"), py::arg("alpha"), py::arg("gamma"), py::arg("epsilon"),
        "Finite-coupling entanglement verdict; raises LookupError at alpha=0.");

    m.def(
        "classify_table2",
        [](double M, double alpha, const std::string& limit, double epsilon) {
            GammaLimit l;
            if (limit == "inf")
                l = GammaLimit::Infinite;
            else if (limit == "zero")
                l = GammaLimit::Zero;
            else
                throw UsageError("limit must be 'inf' or 'zero'");
            return classify_table2(M, AlphaParam(alpha), l, DilutionParam(epsilon));
        },
        py::arg("M"), py::arg("alpha"), py::arg("limit"), py::arg("epsilon"),
        "Entanglement verdict in the gamma limits.");

    m.def(
        "find_eps_boundary",
        [](double M, double alpha, double gamma) {
            return find_eps_boundary(M, AlphaParam(alpha), XXThermalParam(gamma));
        },
        py::arg("M"), py::arg("alpha"), py::arg("gamma"),
        "Dilutions where the minimum PT eigenvalue crosses zero.");
}
