#pragma once

#include "qig/manifold.hpp"

namespace qig {

/// Value of the potential at a centered observable together with the contact
/// state tau_A that realizes the Legendre supremum.
struct PotentialEvaluation {
    double value;
    DensityMatrix contact;
    DensityMatrix base;
};

/// Potential Phi(a) = log Tr exp(log rho + a) at rho = a.base(). The value
/// equals the relative entropy D(rho || tau_a), hence is nonnegative.
PotentialEvaluation potential(const CenteredObservable& a);

/// Slack of the Legendre inequality at sigma:
/// Phi(a) - Tr(sigma a) + D(sigma || rho). Nonnegative; equals
/// D(sigma || tau_a), with zero exactly at sigma = tau_a.
double legendre_gap(const CenteredObservable& a, const DensityMatrix& sigma);

/// Directional derivative of the potential: Tr(tau_a b). The direction may
/// be any Hermitian matrix.
double potential_derivative(const CenteredObservable& a, const Matrix& b);

/// Directional derivative of the contact state:
/// kubo(tau_a, b - Tr(tau_a b) Id).
TangentVector tau_derivative(const CenteredObservable& a, const Matrix& b);

/// Height of the supporting plane of the potential at contact point tau_a,
/// evaluated at b: Phi(a) + Tr tau_a (b - a). Never exceeds Phi(b).
double tangent_plane_value(const CenteredObservable& a, const CenteredObservable& b);

} // namespace qig
