#include "qig/metric.hpp"

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

} // namespace

double bogoliubov(const DensityMatrix& rho, const Matrix& x, const Matrix& y) {
    require_same_dim(rho.dim(), x.rows(), "bogoliubov");
    require_same_dim(rho.dim(), y.rows(), "bogoliubov");
    return trace_product(kubo(rho, x), hermitize(y)).real();
}

double inner_tangent(const DensityMatrix& rho, const DensityMatrix& sigma,
                     const DensityMatrix& tau) {
    require_same_dim(rho.dim(), sigma.dim(), "inner_tangent");
    require_same_dim(rho.dim(), tau.dim(), "inner_tangent");
    return trace_product(tangent(rho, sigma).matrix(), chart(rho, tau).matrix()).real();
}

double tangent_pairing(const DensityMatrix& rho, const TangentVector& v,
                       const TangentVector& w) {
    require_same_dim(rho.dim(), v.dim(), "tangent_pairing");
    require_same_dim(rho.dim(), w.dim(), "tangent_pairing");
    return trace_product(v.matrix(), kubo_inverse(rho, w.matrix())).real();
}

TangentVector m_transport(const DensityMatrix& from, const DensityMatrix& to,
                          const TangentVector& v) {
    require_same_dim(from.dim(), to.dim(), "m_transport");
    require_same_dim(from.dim(), v.dim(), "m_transport");
    return v;
}

TangentVector e_transport(const DensityMatrix& from, const DensityMatrix& to,
                          const TangentVector& w) {
    require_same_dim(from.dim(), to.dim(), "e_transport");
    require_same_dim(from.dim(), w.dim(), "e_transport");
    // Coinciding endpoints: the transport is the identity, exactly.
    if ((from.matrix().array() == to.matrix().array()).all()) return w;
    Matrix a = kubo_inverse(from, w.matrix());
    const double expectation = trace_product(to.matrix(), a).real();
    Matrix recentered = a - expectation * Matrix::Identity(a.rows(), a.cols());
    return TangentVector(kubo(to, recentered));
}

TangentVector transport(TransportKind kind, const DensityMatrix& from,
                        const DensityMatrix& to, const TangentVector& v) {
    return kind == TransportKind::Mixture ? m_transport(from, to, v)
                                          : e_transport(from, to, v);
}

DensityMatrix m_geodesic(const DensityMatrix& rho, const DensityMatrix& sigma, double t) {
    require_same_dim(rho.dim(), sigma.dim(), "m_geodesic");
    if (!(t >= 0.0 && t <= 1.0)) {
        std::ostringstream os;
        os << "m_geodesic: t = " << t << " lies outside [0, 1]";
        throw OutOfRange(os.str());
    }
    return validate_density((1.0 - t) * rho.matrix() + t * sigma.matrix());
}

} // namespace qig
