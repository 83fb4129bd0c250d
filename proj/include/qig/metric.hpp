#pragma once

#include "qig/manifold.hpp"

namespace qig {

enum class TransportKind { Mixture, Exponential };

/// Bogoliubov (Kubo-Mori) inner product Tr(kubo(rho, x) y) of two Hermitian
/// matrices; bilinear, symmetric and positive definite.
double bogoliubov(const DensityMatrix& rho, const Matrix& x, const Matrix& y);

/// Metric pairing of the tangent vectors pointing from rho towards sigma
/// and tau: Tr(Y_rho(sigma) c_rho(tau)).
double inner_tangent(const DensityMatrix& rho, const DensityMatrix& sigma,
                     const DensityMatrix& tau);

/// Inner product directly on tangent vectors: Tr(v kubo_inverse(rho, w)).
/// Equals the Bogoliubov product of the chart representatives.
double tangent_pairing(const DensityMatrix& rho, const TangentVector& v,
                       const TangentVector& w);

/// Mixture transport: the identity on traceless matrices.
TangentVector m_transport(const DensityMatrix& from, const DensityMatrix& to,
                          const TangentVector& v);

/// Exponential transport, dual to m_transport under the Bogoliubov metric:
/// the centered representative at `from` is re-centered at `to`.
TangentVector e_transport(const DensityMatrix& from, const DensityMatrix& to,
                          const TangentVector& w);

TangentVector transport(TransportKind kind, const DensityMatrix& from,
                        const DensityMatrix& to, const TangentVector& v);

/// Mixture geodesic (1-t) rho + t sigma; defined for t in [0, 1].
DensityMatrix m_geodesic(const DensityMatrix& rho, const DensityMatrix& sigma, double t);

} // namespace qig
