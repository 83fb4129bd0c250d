#pragma once

#include "qig/manifold.hpp"

#include <vector>

namespace qig {

/// Orthonormal basis of the n^2 - 1 dimensional real space of traceless
/// Hermitian n-by-n matrices, under the Hilbert-Schmidt inner product.
class TracelessBasis {
public:
    /// Validates tracelessness and orthonormality of the given elements.
    TracelessBasis(Eigen::Index dim, std::vector<Matrix> elements);

    Eigen::Index dim() const { return dim_; }
    Eigen::Index size() const { return static_cast<Eigen::Index>(elements_.size()); }
    const Matrix& operator[](Eigen::Index i) const;
    const std::vector<Matrix>& elements() const { return elements_; }

private:
    Eigen::Index dim_;
    std::vector<Matrix> elements_;
};

/// Generalized Gell-Mann basis in the canonical order: symmetric
/// off-diagonal pairs, antisymmetric off-diagonal pairs, then diagonal
/// generators; pairs (j, k) with j < k in lexicographic order.
TracelessBasis gellmann_basis(Eigen::Index n);

/// Coordinates x^i = Tr(log(sigma) f_i) of a state in the given basis.
RealVector affine_coords(const DensityMatrix& sigma, const TracelessBasis& basis);

/// Basis vector field e_i at rho: the Kubo transform of the centered basis
/// element f_i - Tr(rho f_i) Id.
TangentVector basis_field(const DensityMatrix& rho, Eigen::Index i,
                          const TracelessBasis& basis);

/// Bogoliubov metric expressed in basis coordinates. Symmetric positive
/// definite (n^2 - 1)-by-(n^2 - 1).
class MetricTensor {
public:
    MetricTensor(DensityMatrix base, RealMatrix entries);

    const DensityMatrix& base() const { return base_; }
    const RealMatrix& entries() const { return entries_; }
    double min_eigenvalue() const { return min_eigenvalue_; }

private:
    DensityMatrix base_;
    RealMatrix entries_;
    double min_eigenvalue_;
};

MetricTensor metric_tensor(const DensityMatrix& rho, const TracelessBasis& basis);

} // namespace qig
