#pragma once

// Central tolerance constants; every validation and acceptance check reads
// from here so the numbers exist in exactly one place.

namespace qclone::tol {

inline constexpr double HERMITICITY = 1e-12;
inline constexpr double TRACE = 1e-12;
inline constexpr double PSD_FLOOR = -1e-10;
inline constexpr double EIG_RESIDUAL = 1e-11;

// hermitian_eig accepts inputs that are Hermitian only to this level and
// symmetrizes them first.
inline constexpr double EIG_INPUT_HERMITICITY = 1e-10;

// Cyclic Jacobi stops once the off-diagonal Frobenius norm drops below this.
inline constexpr double JACOBI_OFF = 1e-13;
inline constexpr int JACOBI_MAX_SWEEPS = 100;

// PPT verdict: entangled iff min partial-transpose eigenvalue < -PPT.
inline constexpr double PPT = 1e-10;

// Werner compact form holds iff the max entrywise residual stays below this.
inline constexpr double COMPACT_FORM = 1e-10;

// Closed-form expressions must match the density-matrix pipeline this tightly.
inline constexpr double CLOSED_VS_NUMERIC = 1e-12;

// Classifier-vs-PPT cross-validation skips points this close (in parameter
// space) to a predicted boundary.
inline constexpr double GUARD_BAND = 1e-6;

}  // namespace qclone::tol
