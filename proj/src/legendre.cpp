#include "qig/legendre.hpp"

#include <sstream>

namespace qig {

namespace {

void require_same_base(const CenteredObservable& a, const CenteredObservable& b,
                       const char* who) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << who << ": dimensions " << a.dim() << " and " << b.dim() << " differ";
        throw DimensionMismatch(os.str());
    }
    if ((a.base().matrix() - b.base().matrix()).norm() > 1e-12) {
        std::ostringstream os;
        os << who << ": operands are centered at different base points";
        throw NotCentered(os.str());
    }
}

} // namespace

PotentialEvaluation potential(const CenteredObservable& a) {
    TiltedState tilt = exponential_tilt(a.base(), a.matrix());
    return PotentialEvaluation{tilt.log_partition, std::move(tilt.state), a.base()};
}

double legendre_gap(const CenteredObservable& a, const DensityMatrix& sigma) {
    if (a.dim() != sigma.dim())
        throw DimensionMismatch("legendre_gap: observable and state dimensions differ");
    TiltedState tilt = exponential_tilt(a.base(), a.matrix());
    const double pairing = trace_product(sigma.matrix(), a.matrix()).real();
    return tilt.log_partition - pairing + relative_entropy(sigma, a.base());
}

double potential_derivative(const CenteredObservable& a, const Matrix& b) {
    Matrix direction = hermitize(b);
    if (a.dim() != direction.rows())
        throw DimensionMismatch("potential_derivative: direction dimension differs");
    DensityMatrix tau = chart_inverse(a);
    return trace_product(tau.matrix(), direction).real();
}

TangentVector tau_derivative(const CenteredObservable& a, const Matrix& b) {
    Matrix direction = hermitize(b);
    if (a.dim() != direction.rows())
        throw DimensionMismatch("tau_derivative: direction dimension differs");
    DensityMatrix tau = chart_inverse(a);
    const double expectation = trace_product(tau.matrix(), direction).real();
    Matrix centered = direction
                    - expectation * Matrix::Identity(direction.rows(), direction.cols());
    return TangentVector(kubo(tau, centered));
}

double tangent_plane_value(const CenteredObservable& a, const CenteredObservable& b) {
    require_same_base(a, b, "tangent_plane_value");
    TiltedState tilt = exponential_tilt(a.base(), a.matrix());
    const double slope =
        trace_product(tilt.state.matrix(), (b.matrix() - a.matrix()).eval()).real();
    return tilt.log_partition + slope;
}

} // namespace qig
