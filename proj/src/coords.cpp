#include "qig/coords.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace qig {

namespace {

constexpr double kBasisTraceTol = 1e-14;
constexpr double kBasisGramTol = 1e-12;

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* who) {
    if (a != b) {
        std::ostringstream os;
        os << who << ": dimensions " << a << " and " << b << " differ";
        throw DimensionMismatch(os.str());
    }
}

Matrix centered_element(const DensityMatrix& rho, const Matrix& f) {
    const double expectation = trace_product(rho.matrix(), f).real();
    return f - expectation * Matrix::Identity(f.rows(), f.cols());
}

} // namespace

TracelessBasis::TracelessBasis(Eigen::Index dim, std::vector<Matrix> elements)
    : dim_(dim), elements_(std::move(elements)) {
    const auto count = static_cast<Eigen::Index>(elements_.size());
    if (count != dim_ * dim_ - 1) {
        std::ostringstream os;
        os << "TracelessBasis: expected " << dim_ * dim_ - 1 << " elements, got " << count;
        throw DimensionMismatch(os.str());
    }
    for (const Matrix& f : elements_) {
        if (f.rows() != dim_ || f.cols() != dim_)
            throw DimensionMismatch("TracelessBasis: element dimension differs");
        if (std::abs(f.trace()) > kBasisTraceTol)
            throw NotTraceless("TracelessBasis: element has nonzero trace");
    }
    for (Eigen::Index i = 0; i < count; ++i) {
        for (Eigen::Index j = i; j < count; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            const Complex overlap = trace_product(elements_[i], elements_[j]);
            if (std::abs(overlap - expected) > kBasisGramTol)
                throw Error("TracelessBasis: elements are not orthonormal");
        }
    }
}

const Matrix& TracelessBasis::operator[](Eigen::Index i) const {
    if (i < 0 || i >= size())
        throw IndexOutOfRange("TracelessBasis: index out of range");
    return elements_[static_cast<std::size_t>(i)];
}

TracelessBasis gellmann_basis(Eigen::Index n) {
    if (n < 2) throw OutOfRange("gellmann_basis: dimension must be at least 2");
    if (n > kMaxDimension)
        throw OutOfRange("gellmann_basis: dimension exceeds the practical cap");
    std::vector<Matrix> fs;
    fs.reserve(static_cast<std::size_t>(n * n - 1));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            Matrix f = Matrix::Zero(n, n);
            f(j, k) = inv_sqrt2;
            f(k, j) = inv_sqrt2;
            fs.push_back(std::move(f));
        }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            Matrix f = Matrix::Zero(n, n);
            f(j, k) = Complex(0.0, -inv_sqrt2);
            f(k, j) = Complex(0.0, inv_sqrt2);
            fs.push_back(std::move(f));
        }
    }
    for (Eigen::Index k = 1; k < n; ++k) {
        Matrix f = Matrix::Zero(n, n);
        const double scale = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
        for (Eigen::Index i = 0; i < k; ++i) f(i, i) = scale;
        f(k, k) = -static_cast<double>(k) * scale;
        fs.push_back(std::move(f));
    }
    return TracelessBasis(n, std::move(fs));
}

RealVector affine_coords(const DensityMatrix& sigma, const TracelessBasis& basis) {
    require_same_dim(sigma.dim(), basis.dim(), "affine_coords");
    RealVector x(basis.size());
    for (Eigen::Index i = 0; i < basis.size(); ++i)
        x(i) = trace_product(sigma.log(), basis[i]).real();
    return x;
}

TangentVector basis_field(const DensityMatrix& rho, Eigen::Index i,
                          const TracelessBasis& basis) {
    require_same_dim(rho.dim(), basis.dim(), "basis_field");
    if (i < 0 || i >= basis.size())
        throw IndexOutOfRange("basis_field: index out of range");
    return TangentVector(kubo(rho, centered_element(rho, basis[i])));
}

MetricTensor::MetricTensor(DensityMatrix base, RealMatrix entries)
    : base_(std::move(base)), entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        throw DimensionMismatch("MetricTensor: entries are not square");
    if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw Error("MetricTensor: entries are not symmetric");
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    min_eigenvalue_ = solver.eigenvalues().minCoeff();
    if (min_eigenvalue_ <= 0.0)
        throw NotPositiveDefinite("MetricTensor: minimum eigenvalue is not positive");
}

MetricTensor metric_tensor(const DensityMatrix& rho, const TracelessBasis& basis) {
    require_same_dim(rho.dim(), basis.dim(), "metric_tensor");
    const Eigen::Index d = basis.size();
    std::vector<Matrix> centered;
    std::vector<Matrix> transformed;
    centered.reserve(static_cast<std::size_t>(d));
    transformed.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) {
        centered.push_back(centered_element(rho, basis[i]));
        transformed.push_back(kubo_apply(rho.spectrum(), centered.back()));
    }
    RealMatrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            const double value = trace_product(transformed[static_cast<std::size_t>(i)],
                                               centered[static_cast<std::size_t>(j)])
                                     .real();
            g(i, j) = value;
            g(j, i) = value;
        }
    }
    return MetricTensor(rho, std::move(g));
}

} // namespace qig
