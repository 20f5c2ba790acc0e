#pragma once

#include <string>
#include <vector>

#include "qclone/cloning.hpp"
#include "qclone/separability.hpp"

namespace qclone {

// Inclusive affine grid: start + k (stop-start)/(count-1); count = 1 yields
// just start. An infinite endpoint is only legal as a single dedicated point
// (start = stop = inf, count = 1) on the eta/gamma axes.
struct GridAxis {
    std::string name;  // theta | phi | epsilon | eta | alpha | gamma
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    std::vector<double> points() const;
};

struct GridSpec {
    std::vector<GridAxis> axes;
};

struct PhaseDiagramSpec {
    BroadcastScenario scenario = BroadcastScenario::GlobalUC4;
    double alpha = 0.0;
    GridAxis epsilon_axis;
    GridAxis gamma_axis;
};

// CSV rows (header first): machine,theta,epsilon,eta,F_closed,F_numeric,
// beats_classical. Axes may cover theta/phi/epsilon/eta; omitted axes take
// theta=0, phi=0, epsilon=0, eta=0. Rows follow row-major order over
// (theta, phi, epsilon, eta). Every row re-checks closed-vs-numeric
// agreement to tol::CLOSED_VS_NUMERIC.
std::vector<std::string> sweep_fidelity(Machine machine, const GridSpec& grid);

// CSV rows (header first): scenario,alpha,epsilon,gamma,entangled,negativity,
// min_pt_eig; epsilon is the outer (slower) axis.
std::vector<std::string> phase_diagram(const PhaseDiagramSpec& spec);

// Fraction of data rows with entangled=1.
double region_fraction(const std::vector<std::string>& rows);

}  // namespace qclone
