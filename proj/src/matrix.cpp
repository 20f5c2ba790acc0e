#include "qclone/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace qclone {

namespace {

void require_dim(int dim) {
    if (dim != 2 && dim != 4) {
        throw InvalidDimensionError("matrix dim must be 2 or 4, got " + std::to_string(dim));
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

CMat::CMat(int dim) : dim_(dim) { require_dim(dim); }

CMat CMat::identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::adjoint() const {
    CMat out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
    return out;
}

cplx CMat::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double CMat::hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

double CMat::max_abs_diff(const CMat& other) const {
    if (other.dim_ != dim_) throw InvalidDimensionError("dim mismatch in max_abs_diff");
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - other(i, j)));
    return worst;
}

CMat& CMat::operator+=(const CMat& o) {
    if (o.dim_ != dim_) throw InvalidDimensionError("dim mismatch in operator+=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    if (o.dim_ != dim_) throw InvalidDimensionError("dim mismatch in operator-=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

CMat& CMat::operator*=(double s) {
    for (auto& v : a_) v *= s;
    return *this;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }

CMat operator*(const CMat& a, const CMat& b) {
    if (a.dim() != b.dim()) throw InvalidDimensionError("dim mismatch in operator*");
    CMat out(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            cplx s = 0.0;
            for (int k = 0; k < a.dim(); ++k) s += a(i, k) * b(k, j);
            out(i, j) = s;
        }
    return out;
}

CMat operator*(double s, CMat a) { return a *= s; }

StateVector::StateVector(int dim, const std::array<cplx, 4>& amps) : dim_(dim), amps_(amps) {
    require_dim(dim);
    double norm2 = 0.0;
    for (int i = 0; i < dim_; ++i) {
        if (!std::isfinite(amps_[static_cast<std::size_t>(i)].real()) ||
            !std::isfinite(amps_[static_cast<std::size_t>(i)].imag())) {
            throw DomainError("state vector amplitude not finite");
        }
        norm2 += std::norm(amps_[static_cast<std::size_t>(i)]);
    }
    for (int i = dim_; i < 4; ++i) amps_[static_cast<std::size_t>(i)] = 0.0;
    if (std::abs(norm2 - 1.0) > tol::TRACE) {
        throw DomainError("state vector norm deviates from 1 by " + fmt(std::abs(norm2 - 1.0)) +
                          " (tolerance " + fmt(tol::TRACE) + ")");
    }
}

CMat StateVector::projector() const {
    CMat p(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) p(i, j) = amp(i) * std::conj(amp(j));
    return p;
}

DensityMatrix::DensityMatrix(const CMat& m) : m_(m) {
    for (int i = 0; i < m_.dim(); ++i)
        for (int j = 0; j < m_.dim(); ++j) {
            if (!std::isfinite(m_(i, j).real()) || !std::isfinite(m_(i, j).imag())) {
                throw DomainError("density matrix entry not finite");
            }
        }
    const double herm = m_.hermiticity_defect();
    if (herm > tol::HERMITICITY) {
        throw DomainError("density matrix hermiticity defect " + fmt(herm) + " exceeds " +
                          fmt(tol::HERMITICITY));
    }
    const double tr_err = std::abs(m_.trace() - 1.0);
    if (tr_err > tol::TRACE) {
        throw DomainError("density matrix trace deviates from 1 by " + fmt(tr_err) +
                          " (tolerance " + fmt(tol::TRACE) + ")");
    }
    const double lo = min_eigenvalue(m_);
    if (lo < tol::PSD_FLOOR) {
        throw NotPsdError("density matrix min eigenvalue " + fmt(lo) + " below PSD floor " +
                          fmt(tol::PSD_FLOOR));
    }
}

CMat tensor(const CMat& a, const CMat& b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw InvalidDimensionError("tensor expects two 2x2 factors");
    }
    CMat out(4);
    for (int ia = 0; ia < 2; ++ia)
        for (int ib = 0; ib < 2; ++ib)
            for (int ja = 0; ja < 2; ++ja)
                for (int jb = 0; jb < 2; ++jb)
                    out(2 * ia + ib, 2 * ja + jb) = a(ia, ja) * b(ib, jb);
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    if (rho.dim() != 4) throw InvalidDimensionError("partial_trace expects a 4x4 state");
    CMat out(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 2; ++k) {
                s += keep == Subsystem::A ? rho(2 * i + k, 2 * j + k)
                                          : rho(2 * k + i, 2 * k + j);
            }
            out(i, j) = s;
        }
    return DensityMatrix(out);
}

CMat partial_transpose(const CMat& m, Subsystem on) {
    if (m.dim() != 4) throw InvalidDimensionError("partial_transpose expects a 4x4 matrix");
    CMat out(4);
    for (int ia = 0; ia < 2; ++ia)
        for (int ib = 0; ib < 2; ++ib)
            for (int ja = 0; ja < 2; ++ja)
                for (int jb = 0; jb < 2; ++jb) {
                    if (on == Subsystem::A) {
                        out(2 * ia + ib, 2 * ja + jb) = m(2 * ja + ib, 2 * ia + jb);
                    } else {
                        out(2 * ia + ib, 2 * ja + jb) = m(2 * ia + jb, 2 * ja + ib);
                    }
                }
    return out;
}

CMat partial_transpose(const DensityMatrix& rho, Subsystem on) {
    return partial_transpose(rho.mat(), on);
}

namespace {

HermitianEig eig2(const CMat& a) {
    HermitianEig r{{}, CMat(2)};
    const double p = a(0, 0).real();
    const double q = a(1, 1).real();
    const cplx w = a(0, 1);
    const double aw = std::abs(w);
    const double mean = 0.5 * (p + q);
    const double half = 0.5 * (p - q);
    const double rad = std::hypot(half, aw);
    const double lo = mean - rad;
    const double hi = mean + rad;
    r.values[0] = lo;
    r.values[1] = hi;
    if (aw == 0.0) {
        if (p <= q) {
            r.vectors(0, 0) = 1.0;
            r.vectors(1, 1) = 1.0;
        } else {
            r.vectors(1, 0) = 1.0;
            r.vectors(0, 1) = 1.0;
        }
        return r;
    }
    // (w, lambda - p) solves the eigenproblem; pick the eigenvalue farther
    // from p for a well-conditioned vector, then take the orthogonal
    // complement for the other one.
    const double lam = std::abs(lo - p) >= std::abs(hi - p) ? lo : hi;
    cplx v0 = w;
    cplx v1 = lam - p;
    const double n = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= n;
    v1 /= n;
    const int col = lam == lo ? 0 : 1;
    r.vectors(0, col) = v0;
    r.vectors(1, col) = v1;
    r.vectors(0, 1 - col) = -std::conj(v1);
    r.vectors(1, 1 - col) = std::conj(v0);
    return r;
}

double off_diag_frobenius(const CMat& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

HermitianEig eig4_jacobi(CMat a) {
    CMat v = CMat::identity(4);
    int sweep = 0;
    for (; sweep < tol::JACOBI_MAX_SWEEPS; ++sweep) {
        if (off_diag_frobenius(a) <= tol::JACOBI_OFF) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq == 0.0) continue;
                const cplx e = a(p, q) / apq;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * apq);
                const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Plane rotation G: G(p,p)=e*c, G(p,q)=e*s, G(q,p)=-s, G(q,q)=c.
                for (int k = 0; k < 4; ++k) {  // A <- A G on columns p, q
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = akp * (e * c) - akq * s;
                    a(k, q) = akp * (e * s) + akq * c;
                }
                for (int k = 0; k < 4; ++k) {  // A <- G^dagger A on rows p, q
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = std::conj(e) * c * apk - s * aqk;
                    a(q, k) = std::conj(e) * s * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {  // V <- V G
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = vkp * (e * c) - vkq * s;
                    v(k, q) = vkp * (e * s) + vkq * c;
                }
                // Re-impose exact Hermitian structure to stop roundoff drift.
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (int k = 0; k < 4; ++k) {
                    if (k == p || k == q) continue;
                    a(k, p) = std::conj(a(p, k));
                    a(k, q) = std::conj(a(q, k));
                }
            }
    }
    if (off_diag_frobenius(a) > tol::JACOBI_OFF) {
        throw NumericalFailureError("jacobi eigensolver failed to converge in " +
                                    std::to_string(tol::JACOBI_MAX_SWEEPS) + " sweeps");
    }
    HermitianEig r{{}, CMat(4)};
    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&a](int x, int y) { return a(x, x).real() < a(y, y).real(); });
    for (int c = 0; c < 4; ++c) {
        r.values[static_cast<std::size_t>(c)] = a(order[static_cast<std::size_t>(c)],
                                                  order[static_cast<std::size_t>(c)])
                                                    .real();
        for (int k = 0; k < 4; ++k) r.vectors(k, c) = v(k, order[static_cast<std::size_t>(c)]);
    }
    return r;
}

}  // namespace

HermitianEig hermitian_eig(const CMat& m) {
    const double defect = m.hermiticity_defect();
    if (defect > tol::EIG_INPUT_HERMITICITY) {
        throw DomainError("hermitian_eig input hermiticity defect " + fmt(defect) + " exceeds " +
                          fmt(tol::EIG_INPUT_HERMITICITY));
    }
    CMat a(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        a(i, i) = a(i, i).real();
    }
    return m.dim() == 2 ? eig2(a) : eig4_jacobi(a);
}

double min_eigenvalue(const CMat& m) { return hermitian_eig(m).values[0]; }

CMat psd_sqrt(const DensityMatrix& rho) {
    const HermitianEig e = hermitian_eig(rho.mat());
    CMat out(rho.dim());
    for (int c = 0; c < rho.dim(); ++c) {
        const double lam = e.values[static_cast<std::size_t>(c)];
        if (lam < tol::PSD_FLOOR) {
            throw NotPsdError("psd_sqrt eigenvalue " + fmt(lam) + " below PSD floor " +
                              fmt(tol::PSD_FLOOR));
        }
        const double root = std::sqrt(std::max(lam, 0.0));
        for (int i = 0; i < rho.dim(); ++i)
            for (int j = 0; j < rho.dim(); ++j)
                out(i, j) += root * e.vectors(i, c) * std::conj(e.vectors(j, c));
    }
    // the spectral recomposition is Hermitian up to roundoff; make it exact
    for (int i = 0; i < rho.dim(); ++i) {
        out(i, i) = out(i, i).real();
        for (int j = i + 1; j < rho.dim(); ++j) {
            const cplx avg = 0.5 * (out(i, j) + std::conj(out(j, i)));
            out(i, j) = avg;
            out(j, i) = std::conj(avg);
        }
    }
    return out;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw InvalidDimensionError("fidelity dim mismatch");
    const CMat s = psd_sqrt(rho);
    CMat x = s * sigma.mat() * s;
    for (int i = 0; i < x.dim(); ++i) {
        x(i, i) = x(i, i).real();
        for (int j = i + 1; j < x.dim(); ++j) {
            const cplx avg = 0.5 * (x(i, j) + std::conj(x(j, i)));
            x(i, j) = avg;
            x(j, i) = std::conj(avg);
        }
    }
    const HermitianEig e = hermitian_eig(x);
    double sum = 0.0;
    for (int c = 0; c < x.dim(); ++c)
        sum += std::sqrt(std::max(e.values[static_cast<std::size_t>(c)], 0.0));
    return std::clamp(sum * sum, 0.0, 1.0);
}

double fidelity_pure(const StateVector& psi, const DensityMatrix& rho) {
    if (psi.dim() != rho.dim()) throw InvalidDimensionError("fidelity_pure dim mismatch");
    cplx s = 0.0;
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j) s += std::conj(psi.amp(i)) * rho(i, j) * psi.amp(j);
    return s.real();
}

double negativity(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw InvalidDimensionError("negativity expects a 4x4 state");
    const HermitianEig e = hermitian_eig(partial_transpose(rho, Subsystem::A));
    double s = 0.0;
    for (int c = 0; c < 4; ++c)
        s += std::max(0.0, -e.values[static_cast<std::size_t>(c)]);
    return s;
}

}  // namespace qclone
