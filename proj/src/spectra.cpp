#include "qig/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <utility>

namespace qig {

namespace {

void require_square(const Matrix& m, const char* who) {
    if (m.rows() != m.cols()) {
        std::ostringstream os;
        os << who << ": matrix is " << m.rows() << "x" << m.cols();
        throw DimensionMismatch(os.str());
    }
}

void require_positive_spectrum(const SpectralDecomposition& s, const char* who) {
    const double max = s.max_eigenvalue();
    if (max <= 0.0 || s.min_eigenvalue() <= kPositivityFloor * max) {
        std::ostringstream os;
        os << who << ": eigenvalue " << s.min_eigenvalue()
           << " is below the positivity floor " << kPositivityFloor * max;
        throw NotPositiveDefinite(os.str());
    }
}

} // namespace

Matrix SpectralDecomposition::apply(const std::function<double(double)>& f) const {
    RealVector mapped(eigenvalues.size());
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) mapped(i) = f(eigenvalues(i));
    Matrix out = eigenvectors * mapped.asDiagonal() * eigenvectors.adjoint();
    return symmetrize(out);
}

Matrix SpectralDecomposition::reconstruct() const {
    Matrix out = eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
    return symmetrize(out);
}

double hermiticity_defect(const Matrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return hermiticity_defect(m) <= tol * (1.0 + max_abs(m));
}

Matrix hermitize(const Matrix& m) {
    require_square(m, "hermitize");
    const double defect = hermiticity_defect(m);
    if (defect > kHermitizeTol * (1.0 + max_abs(m))) {
        std::ostringstream os;
        os << "hermitize: asymmetry " << defect << " exceeds tolerance";
        throw NotHermitian(os.str());
    }
    return symmetrize(m);
}

SpectralDecomposition spectral_decompose(const Matrix& h, double tol) {
    require_square(h, "spectral_decompose");
    if (!is_hermitian(h, tol)) {
        std::ostringstream os;
        os << "spectral_decompose: asymmetry " << hermiticity_defect(h) << " exceeds tolerance";
        throw NotHermitian(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrize(h));
    if (solver.info() != Eigen::Success)
        throw Error("spectral_decompose: eigensolver did not converge");
    return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix matrix_exp(const Matrix& h) {
    return spectral_decompose(h).apply([](double x) { return std::exp(x); });
}

Matrix matrix_log(const Matrix& p) {
    SpectralDecomposition s = spectral_decompose(p);
    require_positive_spectrum(s, "matrix_log");
    return s.apply([](double x) { return std::log(x); });
}

Matrix frac_power(const Matrix& p, double u) {
    SpectralDecomposition s = spectral_decompose(p);
    require_positive_spectrum(s, "frac_power");
    return s.apply([u](double x) { return std::pow(x, u); });
}

double log_mean(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        std::ostringstream os;
        os << "log_mean: arguments (" << a << ", " << b << ") must be positive";
        throw NonPositiveArgument(os.str());
    }
    if (a == b) return a;
    if (a < b) std::swap(a, b); // exact symmetry under argument exchange
    const double root = std::sqrt(a * b);
    const double delta = std::log(a / b);
    if (std::abs(delta) < 1e-4) {
        const double d2 = delta * delta;
        return root * (1.0 + d2 / 24.0 + d2 * d2 / 1920.0);
    }
    return root * std::sinh(delta / 2.0) / (delta / 2.0);
}

namespace {

Matrix scale_in_eigenbasis(const SpectralDecomposition& s, const Matrix& m, bool invert) {
    const Matrix& u = s.eigenvectors;
    Matrix tilde = u.adjoint() * m * u;
    for (Eigen::Index i = 0; i < s.dim(); ++i) {
        for (Eigen::Index j = 0; j < s.dim(); ++j) {
            const double mean = log_mean(s.eigenvalues(i), s.eigenvalues(j));
            tilde(i, j) = invert ? tilde(i, j) / mean : tilde(i, j) * mean;
        }
    }
    Matrix out = u * tilde * u.adjoint();
    return symmetrize(out);
}

} // namespace

Matrix kubo_apply(const SpectralDecomposition& s, const Matrix& a) {
    require_positive_spectrum(s, "kubo_apply");
    if (a.rows() != s.dim() || a.cols() != s.dim())
        throw DimensionMismatch("kubo_apply: operand does not match the spectrum dimension");
    return scale_in_eigenbasis(s, a, false);
}

Matrix kubo_solve(const SpectralDecomposition& s, const Matrix& v) {
    require_positive_spectrum(s, "kubo_solve");
    if (v.rows() != s.dim() || v.cols() != s.dim())
        throw DimensionMismatch("kubo_solve: operand does not match the spectrum dimension");
    return scale_in_eigenbasis(s, v, true);
}

} // namespace qig
