#pragma once

#include <cmath>

#include "qclone/matrix.hpp"
#include "qclone/rng.hpp"

namespace qclone::testing {

inline CMat rand_hermitian(SplitMix64& rng, int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = rng.uniform(-1.0, 1.0);
        for (int j = i + 1; j < dim; ++j) {
            m(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

// G G^dagger / tr(G G^dagger) for a random G: a generic full-rank state.
inline DensityMatrix rand_density(SplitMix64& rng, int dim) {
    CMat g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            g(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    CMat p = g * g.adjoint();
    const double tr = p.trace().real();
    p *= 1.0 / tr;
    // Chop rounding noise off the Hermitian structure.
    for (int i = 0; i < dim; ++i) {
        p(i, i) = p(i, i).real();
        for (int j = i + 1; j < dim; ++j) p(j, i) = std::conj(p(i, j));
    }
    return DensityMatrix(p);
}

}  // namespace qclone::testing
