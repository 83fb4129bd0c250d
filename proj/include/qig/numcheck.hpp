#pragma once

#include "qig/coords.hpp"
#include "qig/legendre.hpp"
#include "qig/metric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

namespace qig {

/// Finite-difference configuration. Only second-order central stencils are
/// provided; `richardson` combines steps h and h/2 into a fourth-order
/// estimate.
struct FdConfig {
    enum class Scheme { Central2 };

    double step = 1e-5;
    Scheme scheme = Scheme::Central2;
    bool richardson = false;

    static FdConfig central(double step, bool richardson = false);

    /// The step must lie in [1e-8, 1e-2].
    void require_valid() const {
        if (!(step >= 1e-8 && step <= 1e-2))
            throw OutOfRange("FdConfig: step lies outside [1e-8, 1e-2]");
    }
};

/// Outcome of one named verification. `passed` holds exactly when
/// `residual <= tolerance`.
struct CheckReport {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::map<std::string, std::string> metadata;
};

CheckReport make_report(std::string name, double residual, double tolerance,
                        std::map<std::string, std::string> metadata = {});

/// One line of the form "PASS <name> residual=... tolerance=... [k=v ...]".
std::string to_text_line(const CheckReport& report);

/// Gauss-Legendre nodes and weights on [0, 1].
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Quadrature gauss_legendre_unit(int points);

/// Quadrature oracle for the Kubo transform: sum of w_k rho^{u_k} A
/// rho^{1-u_k} over 64 Gauss-Legendre nodes, assembled from matrix products
/// rather than the logarithmic-mean kernel.
Matrix kubo_quadrature(const DensityMatrix& rho, const Matrix& a, int points = 64);

/// Scalar quadrature of the logarithmic-mean integral of a^u b^(1-u).
double log_mean_quadrature(double a, double b, int points = 64);

/// Negative mixed second difference of the divergence along the arcs from
/// rho towards sigma (in s) and towards tau (in t); converges to
/// inner_tangent(rho, sigma, tau) as the step goes to zero.
double eguchi_fd(const DensityMatrix& rho, const DensityMatrix& sigma,
                 const DensityMatrix& tau, const FdConfig& cfg);

/// Central difference of an arbitrary scalar- or matrix-valued map of a
/// Hermitian argument.
template <typename Map>
auto frechet_fd(Map&& map, const Matrix& at, const Matrix& direction, const FdConfig& cfg)
    -> std::decay_t<decltype(map(at))> {
    using Result = std::decay_t<decltype(map(at))>;
    cfg.require_valid();
    auto central = [&](double h) -> Result {
        Result plus = map((at + h * direction).eval());
        Result minus = map((at - h * direction).eval());
        return (plus - minus) / (2.0 * h);
    };
    Result estimate = central(cfg.step);
    if (!cfg.richardson) return estimate;
    Result refined = central(cfg.step / 2.0);
    return (4.0 * refined - estimate) / 3.0;
}

/// Frobenius deviation of the transported arc velocity from the local one;
/// zero when exponential arcs are geodesics of the e-connection.
double e_geodesic_residual(const DensityMatrix& rho, const DensityMatrix& sigma,
                           double t, double s);

/// Deviation of the m-transported constant velocity from sigma - rho along
/// the mixture line; identically zero.
double m_geodesic_residual(const DensityMatrix& rho, const DensityMatrix& sigma,
                           double t, double s);

/// |(m_transport V, e_transport W)_rho2 - (V, W)_rho1| under the tangent
/// pairing; zero exactly when the two transports are metric duals.
double duality_residual(const DensityMatrix& rho1, const DensityMatrix& rho2,
                        const TangentVector& v, const TangentVector& w);

/// Runs every library invariant on seeded random instances of the requested
/// dimensions and reports the worst residual per check, sorted by name.
/// Deterministic for fixed arguments.
std::vector<CheckReport> run_suite(const std::vector<int>& n_list, int samples,
                                   std::uint64_t seed);

} // namespace qig
