#pragma once

#include <array>
#include <complex>

#include "qclone/errors.hpp"
#include "qclone/tolerances.hpp"

namespace qclone {

using cplx = std::complex<double>;

// Dense row-major complex matrix; only dims 2 and 4 are admitted.
class CMat {
public:
    explicit CMat(int dim);
    static CMat identity(int dim);

    int dim() const { return dim_; }

    cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * dim_ + j)]; }
    const cplx& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i * dim_ + j)];
    }

    CMat adjoint() const;
    cplx trace() const;

    // max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;
    double max_abs_diff(const CMat& other) const;

    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    CMat& operator*=(double s);

private:
    int dim_;
    std::array<cplx, 16> a_{};
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(const CMat& a, const CMat& b);
CMat operator*(double s, CMat a);

// Unit-norm complex amplitude vector, dim 2 or 4.
class StateVector {
public:
    StateVector(int dim, const std::array<cplx, 4>& amps);

    int dim() const { return dim_; }
    const cplx& amp(int i) const { return amps_[static_cast<std::size_t>(i)]; }

    CMat projector() const;

private:
    int dim_;
    std::array<cplx, 4> amps_;
};

// Hermitian, unit-trace, PSD matrix; the constructor enforces all three.
class DensityMatrix {
public:
    explicit DensityMatrix(const CMat& m);

    int dim() const { return m_.dim(); }
    const CMat& mat() const { return m_; }
    const cplx& operator()(int i, int j) const { return m_(i, j); }

private:
    CMat m_;
};

enum class Subsystem { A, B };

struct HermitianEig {
    std::array<double, 4> values{};  // ascending; first dim() entries used
    CMat vectors;                    // orthonormal columns, paired with values
};

// Kronecker product of two 2x2 matrices; |q_a q_b> ordering with q_a the
// slower-varying index.
CMat tensor(const CMat& a, const CMat& b);

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// Hermitian and trace-preserving but in general not PSD, hence a raw CMat.
CMat partial_transpose(const DensityMatrix& rho, Subsystem on);
CMat partial_transpose(const CMat& m, Subsystem on);

// Closed form at dim 2, cyclic complex Jacobi at dim 4. Inputs are
// symmetrized first and must be Hermitian within tol::EIG_INPUT_HERMITICITY.
HermitianEig hermitian_eig(const CMat& m);

double min_eigenvalue(const CMat& m);

CMat psd_sqrt(const DensityMatrix& rho);

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0,1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// <psi|rho|psi>; equals fidelity(|psi><psi|, rho) for unit psi.
double fidelity_pure(const StateVector& psi, const DensityMatrix& rho);

// Sum of |negative eigenvalues| of the partial transpose over subsystem A.
double negativity(const DensityMatrix& rho);

}  // namespace qclone
