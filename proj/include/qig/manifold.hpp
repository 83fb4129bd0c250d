#pragma once

#include "qig/spectra.hpp"

#include <cstdint>

namespace qig {

/// Default tolerance for hermiticity and unit-trace validation of states.
inline constexpr double kValidationTol = 1e-10;
/// Practical cap on the matrix dimension accepted by the library.
inline constexpr Eigen::Index kMaxDimension = 64;
/// Absolute bound accepted as round-off when a centered observable is built;
/// larger expectations are rejected instead of silently shifted.
inline constexpr double kCenteringTol = 1e-8;
/// Tolerance on the trace of a tangent vector.
inline constexpr double kTracelessTol = 1e-12;

class DensityMatrix;
struct TiltedState;
TiltedState exponential_tilt(const DensityMatrix& rho, const Matrix& a);

/// A non-degenerate density matrix: Hermitian, strictly positive definite,
/// unit trace. Immutable; the eigensystem and the matrix logarithm are
/// computed once at construction.
class DensityMatrix {
public:
    /// Validating constructor. Throws NotHermitian, TraceNotOne or
    /// Degenerate; `tol` governs the hermiticity and trace checks.
    static DensityMatrix validate(const Matrix& m, double tol = kValidationTol);

    const Matrix& matrix() const { return matrix_; }
    const SpectralDecomposition& spectrum() const { return spectrum_; }
    /// Matrix logarithm, cached.
    const Matrix& log() const { return log_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    DensityMatrix(Matrix m, SpectralDecomposition s);

    friend TiltedState exponential_tilt(const DensityMatrix&, const Matrix&);

    Matrix matrix_;
    SpectralDecomposition spectrum_;
    Matrix log_;
};

/// Traceless Hermitian matrix: an element of the common tangent space.
class TangentVector {
public:
    explicit TangentVector(Matrix m);

    const Matrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    double norm() const { return matrix_.norm(); }

private:
    Matrix matrix_;
};

/// Hermitian matrix with vanishing expectation in a given state, tagged
/// with that base point. Expectations up to kCenteringTol are treated as
/// round-off and subtracted exactly; anything larger throws NotCentered.
class CenteredObservable {
public:
    CenteredObservable(DensityMatrix base, const Matrix& m);

    const Matrix& matrix() const { return matrix_; }
    const DensityMatrix& base() const { return base_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    DensityMatrix base_;
    Matrix matrix_;
};

/// A normalized exponential tilt exp(log rho + a - c)/1 together with its
/// normalization constant c = log Tr exp(log rho + a).
struct TiltedState {
    DensityMatrix state;
    double log_partition;
};

/// Full validation pipeline for raw input.
DensityMatrix validate_density(const Matrix& m, double tol = kValidationTol);

/// Seeded Ginibre state mixed with epsilon/n of the identity, so the result
/// is non-degenerate by construction. Deterministic per (n, seed).
DensityMatrix random_density(int n, std::uint64_t seed, double regularization = 1e-3);

/// Umegaki relative entropy Tr rho (log rho - log sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Exact centering helper: a - Tr(rho a) * Id as an observable at rho.
CenteredObservable center(const DensityMatrix& rho, const Matrix& a);

/// The exponential curve sigma_t = exp((1-t) log rho + t log sigma - alpha(t))
/// through two states; defined for all real t.
class ExponentialArc {
public:
    ExponentialArc(DensityMatrix start, DensityMatrix end);

    const DensityMatrix& start() const { return start_; }
    const DensityMatrix& end() const { return end_; }
    /// log(end) - log(start), cached.
    const Matrix& direction() const { return direction_; }

    /// Normalization alpha(t) = log Tr exp((1-t) log rho + t log sigma).
    double alpha(double t) const;
    DensityMatrix point(double t) const;
    /// Analytic derivative of point(t): the Kubo transform, at sigma_t, of
    /// the direction centered at sigma_t.
    TangentVector velocity(double t) const;

private:
    DensityMatrix start_;
    DensityMatrix end_;
    Matrix direction_;
};

/// Chart value c_rho(sigma) = log sigma - log rho + D(rho||sigma) * Id.
CenteredObservable chart(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Inverse of the chart: exp(log rho + a) normalized, with rho = a.base().
DensityMatrix chart_inverse(const CenteredObservable& a);

/// Kubo transform of a Hermitian matrix with respect to rho.
Matrix kubo(const DensityMatrix& rho, const Matrix& a);

/// Inverse Kubo transform; maps traceless input to observables with
/// vanishing expectation at rho.
Matrix kubo_inverse(const DensityMatrix& rho, const Matrix& v);

/// Tangent vector of the arc from rho towards sigma at t = 0.
TangentVector tangent(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Re-expresses a chart value centered at a1.base() in the chart centered
/// at rho2.
CenteredObservable transition_chart(const DensityMatrix& rho2, const CenteredObservable& a1);

} // namespace qig
