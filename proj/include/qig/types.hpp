#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qig {

using Complex    = std::complex<double>;
using Matrix     = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Tr(A B) without forming the product.
inline Complex trace_product(const Matrix& a, const Matrix& b) {
    return a.transpose().cwiseProduct(b).sum();
}

inline double frobenius_norm(const Matrix& m) { return m.norm(); }

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

} // namespace qig
