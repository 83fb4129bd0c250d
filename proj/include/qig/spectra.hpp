#pragma once

#include "qig/errors.hpp"
#include "qig/types.hpp"

#include <functional>

namespace qig {

/// Relative tolerance below which an input must agree with its adjoint.
inline constexpr double kHermitianTol = 1e-10;
/// Looser bound accepted by hermitize() before symmetrizing.
inline constexpr double kHermitizeTol = 1e-8;
/// A spectrum counts as positive definite iff min > kPositivityFloor * max.
inline constexpr double kPositivityFloor = 1e-12;

/// Eigensystem of a Hermitian matrix. Eigenvalues are in non-decreasing
/// order; columns of `eigenvectors` are the corresponding unit eigenvectors.
struct SpectralDecomposition {
    RealVector eigenvalues;
    Matrix eigenvectors;

    Eigen::Index dim() const { return eigenvalues.size(); }

    /// U diag(f(lambda)) U^dagger, exactly symmetrized.
    Matrix apply(const std::function<double(double)>& f) const;

    Matrix reconstruct() const;

    double min_eigenvalue() const { return eigenvalues(0); }
    double max_eigenvalue() const { return eigenvalues(eigenvalues.size() - 1); }
};

double hermiticity_defect(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kHermitianTol);

/// (M + M^dagger)/2. Throws NotHermitian when the asymmetry exceeds
/// kHermitizeTol relative to the matrix scale.
Matrix hermitize(const Matrix& m);

/// Unchecked symmetrization for round-off cleanup of results that are
/// Hermitian by construction.
inline Matrix symmetrize(const Matrix& m) { return ((m + m.adjoint()) / 2.0).eval(); }

SpectralDecomposition spectral_decompose(const Matrix& h, double tol = kHermitianTol);

Matrix matrix_exp(const Matrix& h);

/// Requires a positive-definite input (relative floor kPositivityFloor).
Matrix matrix_log(const Matrix& p);

/// p^u for positive-definite p.
Matrix frac_power(const Matrix& p, double u);

/// Logarithmic mean (a - b)/(log a - log b), continuously extended to a = b.
/// Evaluated as sqrt(ab) * sinhc(delta/2) with delta = log(a/b); a Taylor
/// branch takes over for |delta| < 1e-4 where the sinh quotient cancels.
double log_mean(double a, double b);

/// Kubo transform with respect to an explicit positive spectrum:
/// entries of A in the eigenbasis are scaled by the logarithmic mean of the
/// eigenvalue pair. Defined for any positive-definite spectrum, normalized
/// or not.
Matrix kubo_apply(const SpectralDecomposition& s, const Matrix& a);

/// Inverse of kubo_apply: entries divided by the logarithmic mean.
Matrix kubo_solve(const SpectralDecomposition& s, const Matrix& v);

} // namespace qig
