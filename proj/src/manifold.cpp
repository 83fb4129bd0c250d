#include "qig/manifold.hpp"

#include "qig/random.hpp"

#include <cmath>
#include <sstream>

namespace qig {

namespace {

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* who) {
    if (a != b) {
        std::ostringstream os;
        os << who << ": dimensions " << a << " and " << b << " differ";
        throw DimensionMismatch(os.str());
    }
}

double real_expectation(const DensityMatrix& rho, const Matrix& a) {
    return trace_product(rho.matrix(), a).real();
}

double log_sum_exp(const RealVector& mu) {
    const double top = mu.maxCoeff();
    double s = 0.0;
    for (Eigen::Index i = 0; i < mu.size(); ++i) s += std::exp(mu(i) - top);
    return top + std::log(s);
}

} // namespace

DensityMatrix::DensityMatrix(Matrix m, SpectralDecomposition s)
    : matrix_(std::move(m)),
      spectrum_(std::move(s)),
      log_(spectrum_.apply([](double x) { return std::log(x); })) {}

DensityMatrix DensityMatrix::validate(const Matrix& m, double tol) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("validate_density: matrix is not square");
    if (m.rows() < 2)
        throw OutOfRange("validate_density: dimension must be at least 2");
    if (m.rows() > kMaxDimension)
        throw OutOfRange("validate_density: dimension exceeds the practical cap");
    const double defect = hermiticity_defect(m);
    if (defect > tol * (1.0 + max_abs(m))) {
        std::ostringstream os;
        os << "validate_density: asymmetry " << defect << " exceeds tolerance " << tol;
        throw NotHermitian(os.str());
    }
    Matrix h = symmetrize(m);
    const double trace = h.trace().real();
    if (std::abs(trace - 1.0) > tol) {
        std::ostringstream os;
        os << "validate_density: trace " << trace << " is not 1 within " << tol;
        throw TraceNotOne(os.str());
    }
    SpectralDecomposition s = spectral_decompose(h, kHermitizeTol);
    if (s.min_eigenvalue() <= kPositivityFloor * s.max_eigenvalue()) {
        std::ostringstream os;
        os << "validate_density: eigenvalue " << s.min_eigenvalue()
           << " is below the positivity floor";
        throw Degenerate(os.str());
    }
    return DensityMatrix(std::move(h), std::move(s));
}

DensityMatrix validate_density(const Matrix& m, double tol) {
    return DensityMatrix::validate(m, tol);
}

DensityMatrix random_density(int n, std::uint64_t seed, double regularization) {
    if (n < 2) throw OutOfRange("random_density: dimension must be at least 2");
    if (!(regularization > 0.0) || regularization >= 1.0)
        throw OutOfRange("random_density: regularization must lie in (0, 1)");
    Prng prng(seed);
    Matrix g = prng.ginibre(n);
    Matrix w = g * g.adjoint();
    Matrix rho = (1.0 - regularization) * w / w.trace().real()
               + (regularization / n) * Matrix::Identity(n, n);
    return DensityMatrix::validate(rho);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho.dim(), sigma.dim(), "relative_entropy");
    const RealVector& lam = rho.spectrum().eigenvalues;
    double entropy_term = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) entropy_term += lam(i) * std::log(lam(i));
    return entropy_term - trace_product(rho.matrix(), sigma.log()).real();
}

TangentVector::TangentVector(Matrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols())
        throw DimensionMismatch("TangentVector: matrix is not square");
    const double trace = std::abs(matrix_.trace());
    if (trace > kTracelessTol * (1.0 + max_abs(matrix_))) {
        std::ostringstream os;
        os << "TangentVector: trace magnitude " << trace << " is not zero";
        throw NotTraceless(os.str());
    }
}

CenteredObservable::CenteredObservable(DensityMatrix base, const Matrix& m)
    : base_(std::move(base)) {
    require_same_dim(base_.dim(), m.rows(), "CenteredObservable");
    Matrix h = hermitize(m);
    const double expectation = real_expectation(base_, h);
    if (std::abs(expectation) > kCenteringTol) {
        std::ostringstream os;
        os << "CenteredObservable: expectation " << expectation
           << " exceeds the round-off bound " << kCenteringTol;
        throw NotCentered(os.str());
    }
    matrix_ = h - expectation * Matrix::Identity(h.rows(), h.cols());
}

CenteredObservable center(const DensityMatrix& rho, const Matrix& a) {
    Matrix h = hermitize(a);
    require_same_dim(rho.dim(), h.rows(), "center");
    const double expectation = real_expectation(rho, h);
    return CenteredObservable(rho, h - expectation * Matrix::Identity(h.rows(), h.cols()));
}

TiltedState exponential_tilt(const DensityMatrix& rho, const Matrix& a) {
    require_same_dim(rho.dim(), a.rows(), "exponential_tilt");
    Matrix h = rho.log() + hermitize(a);
    SpectralDecomposition s = spectral_decompose(h, kHermitizeTol);
    const double log_partition = log_sum_exp(s.eigenvalues);
    RealVector lam(s.eigenvalues.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        lam(i) = std::exp(s.eigenvalues(i) - log_partition);
    SpectralDecomposition tilted{std::move(lam), s.eigenvectors};
    Matrix state = tilted.reconstruct();
    return TiltedState{DensityMatrix(std::move(state), std::move(tilted)), log_partition};
}

ExponentialArc::ExponentialArc(DensityMatrix start, DensityMatrix end)
    : start_(std::move(start)), end_(std::move(end)) {
    require_same_dim(start_.dim(), end_.dim(), "ExponentialArc");
    direction_ = end_.log() - start_.log();
}

double ExponentialArc::alpha(double t) const {
    return exponential_tilt(start_, (t * direction_).eval()).log_partition;
}

DensityMatrix ExponentialArc::point(double t) const {
    return exponential_tilt(start_, (t * direction_).eval()).state;
}

TangentVector ExponentialArc::velocity(double t) const {
    DensityMatrix sigma_t = point(t);
    const double drift = real_expectation(sigma_t, direction_);
    Matrix centered = direction_ - drift * Matrix::Identity(start_.dim(), start_.dim());
    return TangentVector(kubo_apply(sigma_t.spectrum(), centered));
}

CenteredObservable chart(const DensityMatrix& rho, const DensityMatrix& sigma) {
    require_same_dim(rho.dim(), sigma.dim(), "chart");
    const double divergence = relative_entropy(rho, sigma);
    Matrix a = sigma.log() - rho.log()
             + divergence * Matrix::Identity(rho.dim(), rho.dim());
    return CenteredObservable(rho, a);
}

DensityMatrix chart_inverse(const CenteredObservable& a) {
    return exponential_tilt(a.base(), a.matrix()).state;
}

Matrix kubo(const DensityMatrix& rho, const Matrix& a) {
    require_same_dim(rho.dim(), a.rows(), "kubo");
    return kubo_apply(rho.spectrum(), hermitize(a));
}

Matrix kubo_inverse(const DensityMatrix& rho, const Matrix& v) {
    require_same_dim(rho.dim(), v.rows(), "kubo_inverse");
    return kubo_solve(rho.spectrum(), hermitize(v));
}

TangentVector tangent(const DensityMatrix& rho, const DensityMatrix& sigma) {
    return TangentVector(kubo(rho, chart(rho, sigma).matrix()));
}

CenteredObservable transition_chart(const DensityMatrix& rho2, const CenteredObservable& a1) {
    const DensityMatrix& rho1 = a1.base();
    require_same_dim(rho1.dim(), rho2.dim(), "transition_chart");
    DensityMatrix sigma = chart_inverse(a1);
    const double shift = relative_entropy(rho2, sigma) - relative_entropy(rho1, sigma);
    Matrix a2 = a1.matrix() + rho1.log() - rho2.log()
              + shift * Matrix::Identity(rho2.dim(), rho2.dim());
    return CenteredObservable(rho2, a2);
}

} // namespace qig
