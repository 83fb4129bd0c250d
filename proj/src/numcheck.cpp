#include "qig/numcheck.hpp"

#include "qig/random.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <utility>

namespace qig {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

FdConfig FdConfig::central(double step, bool richardson) {
    FdConfig cfg{step, Scheme::Central2, richardson};
    cfg.require_valid();
    return cfg;
}

CheckReport make_report(std::string name, double residual, double tolerance,
                        std::map<std::string, std::string> metadata) {
    CheckReport report;
    report.name = std::move(name);
    report.residual = residual;
    report.tolerance = tolerance;
    report.passed = residual <= tolerance;
    report.metadata = std::move(metadata);
    return report;
}

std::string to_text_line(const CheckReport& report) {
    std::ostringstream os;
    os << (report.passed ? "PASS" : "FAIL") << ' ' << report.name
       << " residual=" << fmt(report.residual) << " tolerance=" << fmt(report.tolerance);
    for (const auto& [key, value] : report.metadata) os << ' ' << key << '=' << value;
    return os.str();
}

Quadrature gauss_legendre_unit(int points) {
    if (points < 1) throw OutOfRange("gauss_legendre_unit: need at least one node");
    std::vector<double> node(points), weight(points);
    const int half = (points + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < points; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = points * (z * p1 - p2) / (z * z - 1.0);
            const double z_prev = z;
            z = z_prev - p1 / pp;
            if (std::abs(z - z_prev) < 1e-15) break;
        }
        node[i] = -z;
        node[points - 1 - i] = z;
        weight[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        weight[points - 1 - i] = weight[i];
    }
    for (int i = 0; i < points; ++i) {
        node[i] = 0.5 * (node[i] + 1.0);
        weight[i] *= 0.5;
    }
    return Quadrature{std::move(node), std::move(weight)};
}

Matrix kubo_quadrature(const DensityMatrix& rho, const Matrix& a, int points) {
    if (rho.dim() != a.rows() || rho.dim() != a.cols())
        throw DimensionMismatch("kubo_quadrature: operand dimension differs");
    const Quadrature q = gauss_legendre_unit(points);
    const Matrix h = hermitize(a);
    Matrix sum = Matrix::Zero(rho.dim(), rho.dim());
    for (int k = 0; k < points; ++k) {
        const double u = q.nodes[static_cast<std::size_t>(k)];
        Matrix left = rho.spectrum().apply([u](double x) { return std::pow(x, u); });
        Matrix right = rho.spectrum().apply([u](double x) { return std::pow(x, 1.0 - u); });
        sum += q.weights[static_cast<std::size_t>(k)] * (left * h * right);
    }
    return symmetrize(sum);
}

double log_mean_quadrature(double a, double b, int points) {
    if (!(a > 0.0) || !(b > 0.0))
        throw NonPositiveArgument("log_mean_quadrature: arguments must be positive");
    const Quadrature q = gauss_legendre_unit(points);
    double sum = 0.0;
    for (int k = 0; k < points; ++k) {
        const double u = q.nodes[static_cast<std::size_t>(k)];
        sum += q.weights[static_cast<std::size_t>(k)] * std::pow(a, u) * std::pow(b, 1.0 - u);
    }
    return sum;
}

double eguchi_fd(const DensityMatrix& rho, const DensityMatrix& sigma,
                 const DensityMatrix& tau, const FdConfig& cfg) {
    cfg.require_valid();
    const double h = cfg.step;
    ExponentialArc arc_sigma(rho, sigma);
    ExponentialArc arc_tau(rho, tau);
    DensityMatrix sigma_plus = arc_sigma.point(h);
    DensityMatrix sigma_minus = arc_sigma.point(-h);
    DensityMatrix tau_plus = arc_tau.point(h);
    DensityMatrix tau_minus = arc_tau.point(-h);
    const double mixed = relative_entropy(sigma_plus, tau_plus)
                       - relative_entropy(sigma_plus, tau_minus)
                       - relative_entropy(sigma_minus, tau_plus)
                       + relative_entropy(sigma_minus, tau_minus);
    return -mixed / (4.0 * h * h);
}

double e_geodesic_residual(const DensityMatrix& rho, const DensityMatrix& sigma,
                           double t, double s) {
    ExponentialArc arc(rho, sigma);
    TangentVector far = arc.velocity(t + s);
    TangentVector transported = e_transport(arc.point(t + s), arc.point(t), far);
    return (transported.matrix() - arc.velocity(t).matrix()).norm();
}

double m_geodesic_residual(const DensityMatrix& rho, const DensityMatrix& sigma,
                           double t, double s) {
    DensityMatrix from = m_geodesic(rho, sigma, t + s);
    DensityMatrix to = m_geodesic(rho, sigma, t);
    TangentVector velocity(sigma.matrix() - rho.matrix());
    TangentVector transported = m_transport(from, to, velocity);
    return (transported.matrix() - velocity.matrix()).norm();
}

double duality_residual(const DensityMatrix& rho1, const DensityMatrix& rho2,
                        const TangentVector& v, const TangentVector& w) {
    const double before = tangent_pairing(rho1, v, w);
    const double after = tangent_pairing(rho2, m_transport(rho1, rho2, v),
                                         e_transport(rho1, rho2, w));
    return std::abs(after - before);
}

// ---------------------------------------------------------------------------
// run_suite
// ---------------------------------------------------------------------------

namespace {

struct CheckContext {
    int n;
    int sample;
    std::uint64_t seed;
    Prng rng;

    CheckContext(int n_, int sample_, std::uint64_t seed_)
        : n(n_), sample(sample_), seed(seed_), rng(seed_) {}

    DensityMatrix density(int k, double regularization = 1e-3) {
        return random_density(n, mix_seed(seed, 0xD0 + k), regularization);
    }
    Matrix hermitian_unit() {
        Matrix h = rng.hermitian(n);
        return (h / h.norm()).eval();
    }
};

using Metadata = std::map<std::string, std::string>;
using CheckBody = std::function<double(CheckContext&, Metadata&)>;

struct CheckDef {
    std::string name;
    double tolerance;
    std::vector<int> allowed_n; // empty: every requested dimension
    CheckBody body;
};

double phi_at(const DensityMatrix& rho, const Matrix& a) {
    return exponential_tilt(rho, a).log_partition;
}

// Observed vs predicted scaling of the transported Y-field along an arc;
// reported, never asserted.
void y_field_metadata(CheckContext& ctx, Metadata& meta) {
    DensityMatrix rho = ctx.density(0);
    DensityMatrix sigma = ctx.density(1);
    ExponentialArc arc(rho, sigma);
    const double t = 0.5;
    const double s = 0.1;
    TangentVector y_far = tangent(arc.point(t + s), sigma);
    TangentVector y_here = tangent(arc.point(t), sigma);
    TangentVector transported = e_transport(arc.point(t + s), arc.point(t), y_far);
    const double observed = transported.norm() / y_here.norm();
    const double predicted = (1.0 - t - s) / (1.0 - t);
    meta["observed_scaling"] = fmt(observed);
    meta["predicted_scaling"] = fmt(predicted);
    meta["deviation"] = fmt(std::abs(observed - predicted));
}

std::vector<CheckDef> make_checks() {
    std::vector<CheckDef> defs;

    // -- spectra ------------------------------------------------------------

    defs.push_back({"spectra.reconstruction", 1e-12, {},
        [](CheckContext& ctx, Metadata&) {
            Matrix h = ctx.rng.hermitian(ctx.n);
            SpectralDecomposition s = spectral_decompose(h);
            return (s.reconstruct() - h).norm() / h.norm();
        }});

    defs.push_back({"spectra.decompose_idempotent", 1e-12, {},
        [](CheckContext& ctx, Metadata&) {
            SpectralDecomposition s = spectral_decompose(ctx.rng.hermitian(ctx.n));
            SpectralDecomposition again = spectral_decompose(s.reconstruct());
            return (again.eigenvalues - s.eigenvalues).cwiseAbs().maxCoeff();
        }});

    defs.push_back({"spectra.exp_log_roundtrip", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix p = ctx.density(0);
            return (matrix_exp(matrix_log(p.matrix())) - p.matrix()).norm()
                 / p.matrix().norm();
        }});

    defs.push_back({"spectra.log_mean_bounds", 0.0, {},
        [](CheckContext& ctx, Metadata&) {
            double violation = 0.0;
            for (int k = 0; k < 8; ++k) {
                const double a = std::exp(ctx.rng.uniform(std::log(1e-6), std::log(1e3)));
                const double b = std::exp(ctx.rng.uniform(std::log(1e-6), std::log(1e3)));
                if (a == b) continue;
                const double mean = log_mean(a, b);
                if (!(mean > std::min(a, b) && mean < std::max(a, b))) violation = 1.0;
            }
            return violation;
        }});

    defs.push_back({"spectra.log_mean_quadrature", 1e-12, {},
        [](CheckContext& ctx, Metadata&) {
            double worst = 0.0;
            for (int k = 0; k < 4; ++k) {
                const double a = std::exp(ctx.rng.uniform(std::log(1e-6), std::log(1e3)));
                const double b = k == 0 ? a * (1.0 + ctx.rng.uniform(-1e-5, 1e-5))
                                        : std::exp(ctx.rng.uniform(std::log(1e-6), std::log(1e3)));
                const double oracle = log_mean_quadrature(a, b);
                worst = std::max(worst, std::abs(log_mean(a, b) - oracle) / oracle);
            }
            return worst;
        }});

    // -- manifold -----------------------------------------------------------

    defs.push_back({"manifold.arc_endpoints", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            ExponentialArc arc(rho, sigma);
            double worst = (arc.point(0.0).matrix() - rho.matrix()).norm();
            worst = std::max(worst, (arc.point(1.0).matrix() - sigma.matrix()).norm());
            worst = std::max(worst, std::abs(arc.alpha(0.0)));
            return std::max(worst, std::abs(arc.alpha(1.0)));
        }});

    defs.push_back({"manifold.alpha_nonpositive", 1e-12, {},
        [](CheckContext& ctx, Metadata&) {
            ExponentialArc arc(ctx.density(0), ctx.density(1));
            double worst = 0.0;
            for (int k = 0; k <= 20; ++k)
                worst = std::max(worst, arc.alpha(k / 20.0));
            return worst;
        }});

    defs.push_back({"manifold.alpha_convex", 1e-9, {},
        [](CheckContext& ctx, Metadata&) {
            ExponentialArc arc(ctx.density(0), ctx.density(1));
            const double h = 1.0 / 20.0;
            std::vector<double> alpha(21);
            for (int k = 0; k <= 20; ++k) alpha[static_cast<std::size_t>(k)] = arc.alpha(k * h);
            double worst = 0.0;
            for (int k = 1; k < 20; ++k) {
                const double second = alpha[static_cast<std::size_t>(k + 1)]
                                    - 2.0 * alpha[static_cast<std::size_t>(k)]
                                    + alpha[static_cast<std::size_t>(k - 1)];
                worst = std::max(worst, -second);
            }
            return worst;
        }});

    defs.push_back({"manifold.divergence_nonneg", 1e-12, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            double worst = std::max(0.0, -relative_entropy(rho, sigma));
            return std::max(worst, std::abs(relative_entropy(rho, rho)));
        }});

    defs.push_back({"manifold.divergence_faithful", 0.0, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            const bool same_zero = relative_entropy(rho, rho) < 1e-10;
            const bool distinct_positive = relative_entropy(rho, sigma) > 1e-10
                                        && (rho.matrix() - sigma.matrix()).norm() >= 1e-8;
            return same_zero && distinct_positive ? 0.0 : 1.0;
        }});

    defs.push_back({"manifold.divergence_tilt_relation", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            DensityMatrix sigma = chart_inverse(a);
            const double direct = relative_entropy(rho, sigma);
            const double pairing = trace_product(rho.matrix(), a.matrix()).real();
            const double via_partition = -pairing + phi_at(rho, a.matrix());
            return std::abs(direct - via_partition);
        }});

    defs.push_back({"manifold.velocity_at_zero", 1e-12, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            ExponentialArc arc(rho, sigma);
            return (arc.velocity(0.0).matrix() - tangent(rho, sigma).matrix()).norm();
        }});

    defs.push_back({"manifold.arc_velocity_fd", 1e-8, {},
        [](CheckContext& ctx, Metadata&) {
            ExponentialArc arc(ctx.density(0), ctx.density(1));
            const double h = 1e-5;
            double worst = 0.0;
            for (double t : {0.0, 0.5}) {
                Matrix fd = (arc.point(t + h).matrix() - arc.point(t - h).matrix()) / (2.0 * h);
                worst = std::max(worst, (arc.velocity(t).matrix() - fd).norm());
            }
            return worst;
        }});

    defs.push_back({"manifold.bogo_identity_fd", 5e-7, {2, 3, 4},
        [](CheckContext& ctx, Metadata&) {
            Matrix h = ctx.rng.hermitian(ctx.n);
            Matrix a = ctx.hermitian_unit();
            const double step = 1e-4;
            Matrix fd = (matrix_exp(h + step * a) - matrix_exp(h - step * a)) / (2.0 * step);
            Matrix analytic = kubo_apply(spectral_decompose(matrix_exp(h)), a);
            return (fd - analytic).norm();
        }});

    defs.push_back({"manifold.kubo_roundtrip", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            Matrix a = ctx.hermitian_unit();
            Matrix v = ctx.rng.traceless_unit(ctx.n);
            const double there = (kubo_inverse(rho, kubo(rho, a)) - a).norm();
            const double back = (kubo(rho, kubo_inverse(rho, v)) - v).norm();
            return std::max(there, back);
        }});

    defs.push_back({"manifold.kubo_centering", 1e-12, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            Matrix v = ctx.rng.traceless_unit(ctx.n);
            return std::abs(trace_product(rho.matrix(), kubo_inverse(rho, v)).real());
        }});

    defs.push_back({"manifold.kubo_quadrature", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            Matrix a = ctx.hermitian_unit();
            return (kubo(rho, a) - kubo_quadrature(rho, a)).norm();
        }});

    defs.push_back({"manifold.chart_roundtrip", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            CenteredObservable a = chart(rho, sigma);
            const double recover_state = (chart_inverse(a).matrix() - sigma.matrix()).norm();
            CenteredObservable fresh = center(rho, ctx.rng.traceless_unit(ctx.n));
            const double recover_chart =
                (chart(rho, chart_inverse(fresh)).matrix() - fresh.matrix()).norm();
            return std::max(recover_state, recover_chart);
        }});

    defs.push_back({"manifold.chart_centered", 1e-12, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            // Raw defect of the chart formula, before the exact re-centering
            // applied by CenteredObservable.
            Matrix raw = sigma.log() - rho.log()
                       + relative_entropy(rho, sigma) * Matrix::Identity(ctx.n, ctx.n);
            return std::abs(trace_product(rho.matrix(), raw).real());
        }});

    defs.push_back({"manifold.arc_uniqueness", 0.0, {},
        [](CheckContext& ctx, Metadata& meta) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            DensityMatrix tau = ctx.density(2);
            const double separation =
                (tangent(rho, sigma).matrix() - tangent(rho, tau).matrix()).norm();
            meta["tangent_separation"] = fmt(separation);
            return separation > 1e-10 ? 0.0 : 1.0;
        }});

    defs.push_back({"manifold.exp_map_roundtrip", 1e-9, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            TangentVector v = tangent(rho, sigma);
            CenteredObservable a(rho, kubo_inverse(rho, v.matrix()));
            return (chart_inverse(a).matrix() - sigma.matrix()).norm();
        }});

    defs.push_back({"manifold.transition_consistency", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho1 = ctx.density(0);
            DensityMatrix rho2 = ctx.density(1);
            DensityMatrix sigma = ctx.density(2);
            CenteredObservable a1 = chart(rho1, sigma);
            CenteredObservable moved = transition_chart(rho2, a1);
            const double agreement = (moved.matrix() - chart(rho2, sigma).matrix()).norm();
            CenteredObservable back = transition_chart(rho1, moved);
            const double roundtrip = (back.matrix() - a1.matrix()).norm();
            return std::max(agreement, roundtrip);
        }});

    // -- metric ---------------------------------------------------------------

    defs.push_back({"metric.bogoliubov_symmetry", 1e-12, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            Matrix x = ctx.hermitian_unit();
            Matrix y = ctx.hermitian_unit();
            return std::abs(bogoliubov(rho, x, y) - bogoliubov(rho, y, x));
        }});

    defs.push_back({"metric.bogoliubov_bilinear", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            Matrix x1 = ctx.hermitian_unit();
            Matrix x2 = ctx.hermitian_unit();
            Matrix y = ctx.hermitian_unit();
            const double a = ctx.rng.uniform(-2.0, 2.0);
            const double b = ctx.rng.uniform(-2.0, 2.0);
            const double combined = bogoliubov(rho, a * x1 + b * x2, y);
            return std::abs(combined - a * bogoliubov(rho, x1, y) - b * bogoliubov(rho, x2, y));
        }});

    defs.push_back({"metric.bogoliubov_nonneg", 1e-13, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            Matrix x = ctx.hermitian_unit();
            return std::max(0.0, -bogoliubov(rho, x, x));
        }});

    defs.push_back({"metric.bogoliubov_nondegenerate", 0.0, {},
        [](CheckContext& ctx, Metadata& meta) {
            DensityMatrix rho = ctx.density(0);
            Matrix x = ctx.hermitian_unit();
            const double value = bogoliubov(rho, x, x);
            meta["unit_norm_value"] = fmt(value);
            return value > 1e-12 ? 0.0 : 1.0;
        }});

    // The two Eguchi stencil checks draw states with a larger mixing weight:
    // the truncation of the h = 1e-3 stencil scales with fourth derivatives
    // of the divergence, which blow up on nearly degenerate spectra.
    constexpr double kFdRegularization = 3e-2;

    defs.push_back({"metric.eguchi_match", 1e-5, {2, 3},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0, kFdRegularization);
            DensityMatrix sigma = ctx.density(1, kFdRegularization);
            DensityMatrix tau = ctx.density(2, kFdRegularization);
            const double fd = eguchi_fd(rho, sigma, tau, FdConfig::central(1e-3));
            return std::abs(fd - inner_tangent(rho, sigma, tau));
        }});

    defs.push_back({"metric.eguchi_order", 0.0, {2, 3},
        [](CheckContext& ctx, Metadata& meta) {
            DensityMatrix rho = ctx.density(0, kFdRegularization);
            DensityMatrix sigma = ctx.density(1, kFdRegularization);
            DensityMatrix tau = ctx.density(2, kFdRegularization);
            const double exact = inner_tangent(rho, sigma, tau);
            const double coarse = std::abs(eguchi_fd(rho, sigma, tau, FdConfig::central(1e-2)) - exact);
            const double fine = std::abs(eguchi_fd(rho, sigma, tau, FdConfig::central(1e-3)) - exact);
            if (fine <= 1e-9) {
                meta["skipped"] = "residual_below_floor";
                return 0.0;
            }
            const double ratio = coarse / fine;
            meta["ratio"] = fmt(ratio);
            return ratio >= 50.0 && ratio <= 200.0 ? 0.0 : 1.0;
        }});

    defs.push_back({"metric.transport_duality", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho1 = ctx.density(0);
            DensityMatrix rho2 = ctx.density(1);
            TangentVector v(ctx.rng.traceless_unit(ctx.n));
            TangentVector w(ctx.rng.traceless_unit(ctx.n));
            return duality_residual(rho1, rho2, v, w);
        }});

    defs.push_back({"metric.e_transport_flat", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho1 = ctx.density(0);
            DensityMatrix rho2 = ctx.density(1);
            DensityMatrix rho3 = ctx.density(2);
            TangentVector w(ctx.rng.traceless_unit(ctx.n));
            TangentVector two_steps = e_transport(rho2, rho3, e_transport(rho1, rho2, w));
            TangentVector direct = e_transport(rho1, rho3, w);
            return (two_steps.matrix() - direct.matrix()).norm();
        }});

    defs.push_back({"metric.e_geodesic", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            double worst = 0.0;
            for (double t : {0.25, 0.5, 0.75})
                for (double s : {-0.1, -0.01, 0.01, 0.1})
                    worst = std::max(worst, e_geodesic_residual(rho, sigma, t, s));
            return worst;
        }});

    defs.push_back({"metric.e_geodesic_y_field", 0.0, {},
        [](CheckContext& ctx, Metadata& meta) {
            y_field_metadata(ctx, meta);
            return 0.0;
        }});

    defs.push_back({"metric.m_geodesic", 0.0, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            double worst = m_geodesic_residual(rho, sigma, 0.2, 0.3);
            worst = std::max(worst, m_geodesic_residual(rho, sigma, 0.5, -0.25));
            return std::max(worst, m_geodesic_residual(rho, rho, 0.1, 0.6));
        }});

    // -- legendre -------------------------------------------------------------

    defs.push_back({"legendre.potential_equals_divergence", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            PotentialEvaluation eval = potential(a);
            return std::abs(eval.value - relative_entropy(rho, eval.contact));
        }});

    defs.push_back({"legendre.gap_nonneg", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            double worst = 0.0;
            for (int k = 0; k < 4; ++k)
                worst = std::max(worst, -legendre_gap(a, ctx.density(10 + k)));
            worst = std::max(worst, -legendre_gap(a, chart_inverse(a)));
            return worst;
        }});

    defs.push_back({"legendre.gap_equals_divergence", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            DensityMatrix tau = chart_inverse(a);
            DensityMatrix sigma = ctx.density(1);
            return std::abs(legendre_gap(a, sigma) - relative_entropy(sigma, tau));
        }});

    defs.push_back({"legendre.convexity", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a1 = center(rho, ctx.rng.traceless_unit(ctx.n));
            CenteredObservable a2 = center(rho, ctx.rng.traceless_unit(ctx.n));
            const double phi1 = phi_at(rho, a1.matrix());
            const double phi2 = phi_at(rho, a2.matrix());
            double worst = 0.0;
            for (int k = 1; k <= 9; ++k) {
                const double lam = k / 10.0;
                const Matrix blend = lam * a1.matrix() + (1.0 - lam) * a2.matrix();
                const double phi = phi_at(rho, blend);
                worst = std::max(worst, phi - lam * phi1 - (1.0 - lam) * phi2);
            }
            return worst;
        }});

    defs.push_back({"legendre.supremum_attained", 0.0, {},
        [](CheckContext& ctx, Metadata& meta) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            DensityMatrix tau = chart_inverse(a);
            if (std::abs(legendre_gap(a, tau)) > 1e-11) return 1.0;
            double min_gap = std::numeric_limits<double>::infinity();
            for (int k = 0; k < 200; ++k) {
                DensityMatrix sigma = ctx.density(100 + k);
                const double gap = legendre_gap(a, sigma);
                if (gap < -1e-11) return 1.0;
                min_gap = std::min(min_gap, gap);
                if (gap < 1e-6 && (sigma.matrix() - tau.matrix()).norm() > 1e-3) return 1.0;
            }
            meta["sweep_min_gap"] = fmt(min_gap);
            return 0.0;
        }});

    defs.push_back({"legendre.derivative_order", 0.0, {},
        [](CheckContext& ctx, Metadata& meta) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            Matrix b = center(rho, ctx.rng.hermitian(ctx.n)).matrix();
            const double exact = potential_derivative(a, b);
            auto map = [&](const Matrix& m) { return phi_at(rho, m); };
            const double coarse =
                std::abs(frechet_fd(map, a.matrix(), b, FdConfig::central(1e-3)) - exact);
            const double fine =
                std::abs(frechet_fd(map, a.matrix(), b, FdConfig::central(1e-4)) - exact);
            if (fine <= 1e-10) {
                meta["skipped"] = "residual_below_floor";
                return 0.0;
            }
            const double ratio = coarse / fine;
            meta["ratio"] = fmt(ratio);
            return ratio >= 80.0 && ratio <= 120.0 ? 0.0 : 1.0;
        }});

    defs.push_back({"legendre.potential_derivative_fd", 1e-8, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            Matrix b = ctx.rng.hermitian(ctx.n);
            const double expectation = trace_product(rho.matrix(), b).real();
            Matrix centered = b - expectation * Matrix::Identity(ctx.n, ctx.n);
            auto map = [&](const Matrix& m) { return phi_at(rho, m); };
            const double fd = frechet_fd(map, a.matrix(), centered, FdConfig::central(1e-5, true))
                            + expectation;
            return std::abs(fd - potential_derivative(a, b));
        }});

    defs.push_back({"legendre.tau_derivative_fd", 1e-8, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            Matrix b = center(rho, ctx.rng.hermitian(ctx.n)).matrix();
            auto map = [&](const Matrix& m) { return exponential_tilt(rho, m).state.matrix(); };
            Matrix fd = frechet_fd(map, a.matrix(), b, FdConfig::central(1e-5, true));
            return (fd - tau_derivative(a, b).matrix()).norm();
        }});

    defs.push_back({"legendre.tangent_plane_below", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            CenteredObservable b = center(rho, ctx.rng.traceless_unit(ctx.n));
            return std::max(0.0, tangent_plane_value(a, b) - phi_at(rho, b.matrix()));
        }});

    defs.push_back({"legendre.tangent_plane_remainder", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            CenteredObservable b = center(rho, ctx.rng.traceless_unit(ctx.n));
            const double gap = phi_at(rho, b.matrix()) - tangent_plane_value(a, b);
            const double divergence = relative_entropy(chart_inverse(a), chart_inverse(b));
            return std::abs(gap - divergence);
        }});

    defs.push_back({"legendre.mixed_identity", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            DensityMatrix tau = chart_inverse(a);
            Matrix c = chart(tau, rho).matrix();
            Matrix b = c - c.trace() * Matrix::Identity(ctx.n, ctx.n);
            const double lhs = inner_tangent(tau, rho, sigma);
            const double rhs =
                trace_product(chart(tau, sigma).matrix(), tau_derivative(a, b).matrix()).real();
            return std::abs(lhs - rhs);
        }});

    // -- coords ---------------------------------------------------------------

    defs.push_back({"coords.gram_identity", 1e-12, {},
        [](CheckContext& ctx, Metadata&) {
            TracelessBasis basis = gellmann_basis(ctx.n);
            double worst = 0.0;
            for (Eigen::Index i = 0; i < basis.size(); ++i) {
                for (Eigen::Index j = i; j < basis.size(); ++j) {
                    const double expected = i == j ? 1.0 : 0.0;
                    worst = std::max(worst,
                                     std::abs(trace_product(basis[i], basis[j]) - expected));
                }
            }
            return worst;
        }});

    defs.push_back({"coords.reconstruction", 1e-11, {},
        [](CheckContext& ctx, Metadata&) {
            TracelessBasis basis = gellmann_basis(ctx.n);
            DensityMatrix sigma = ctx.density(0);
            RealVector x = affine_coords(sigma, basis);
            Matrix rebuilt = (sigma.log().trace() / static_cast<double>(ctx.n))
                           * Matrix::Identity(ctx.n, ctx.n);
            for (Eigen::Index i = 0; i < basis.size(); ++i) rebuilt += x(i) * basis[i];
            return (rebuilt - sigma.log()).norm();
        }});

    defs.push_back({"coords.chart_expansion", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            TracelessBasis basis = gellmann_basis(ctx.n);
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            RealVector dx = affine_coords(sigma, basis) - affine_coords(rho, basis);
            Matrix expansion = Matrix::Zero(ctx.n, ctx.n);
            for (Eigen::Index i = 0; i < basis.size(); ++i) {
                const double expectation = trace_product(rho.matrix(), basis[i]).real();
                expansion += dx(i) * (basis[i] - expectation * Matrix::Identity(ctx.n, ctx.n));
            }
            return (chart(rho, sigma).matrix() - expansion).norm();
        }});

    defs.push_back({"coords.tangent_expansion", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            TracelessBasis basis = gellmann_basis(ctx.n);
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            RealVector dx = affine_coords(sigma, basis) - affine_coords(rho, basis);
            Matrix expansion = Matrix::Zero(ctx.n, ctx.n);
            for (Eigen::Index i = 0; i < basis.size(); ++i)
                expansion += dx(i) * basis_field(rho, i, basis).matrix();
            return (tangent(rho, sigma).matrix() - expansion).norm();
        }});

    defs.push_back({"coords.metric_mixed_state", 1e-12, {2},
        [](CheckContext&, Metadata&) {
            DensityMatrix mixed = validate_density(Matrix::Identity(2, 2) / 2.0);
            MetricTensor g = metric_tensor(mixed, gellmann_basis(2));
            return (g.entries() - 0.5 * RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff();
        }});

    defs.push_back({"coords.quadratic_form", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            TracelessBasis basis = gellmann_basis(ctx.n);
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            DensityMatrix tau = ctx.density(2);
            MetricTensor g = metric_tensor(rho, basis);
            RealVector dx_sigma = affine_coords(sigma, basis) - affine_coords(rho, basis);
            RealVector dx_tau = affine_coords(tau, basis) - affine_coords(rho, basis);
            const double through_coords = dx_sigma.dot(g.entries() * dx_tau);
            return std::abs(inner_tangent(rho, sigma, tau) - through_coords);
        }});

    defs.push_back({"coords.dual_pairing", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            TracelessBasis basis = gellmann_basis(ctx.n);
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            Matrix b = center(rho, ctx.rng.hermitian(ctx.n)).matrix();
            DensityMatrix tau = chart_inverse(a);
            MetricTensor g = metric_tensor(tau, basis);
            TangentVector derivative = tau_derivative(a, b);
            RealVector components(basis.size());
            for (Eigen::Index i = 0; i < basis.size(); ++i)
                components(i) = trace_product(b, basis[i]).real();
            RealVector expected = g.entries() * components;
            double worst = 0.0;
            for (Eigen::Index i = 0; i < basis.size(); ++i) {
                const double pairing =
                    tangent_pairing(tau, basis_field(tau, i, basis), derivative);
                worst = std::max(worst, std::abs(pairing - expected(i)));
            }
            return worst;
        }});

    defs.push_back({"coords.metric_positive", 0.0, {2, 3, 4},
        [](CheckContext& ctx, Metadata& meta) {
            MetricTensor g = metric_tensor(ctx.density(0), gellmann_basis(ctx.n));
            meta["min_eigenvalue"] = fmt(g.min_eigenvalue());
            return g.min_eigenvalue() > 0.0 ? 0.0 : 1.0;
        }});

    defs.push_back({"coords.coordinate_consistency", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            TracelessBasis basis = gellmann_basis(ctx.n);
            DensityMatrix rho = ctx.density(0);
            CenteredObservable a = center(rho, ctx.rng.traceless_unit(ctx.n));
            RealVector dx = affine_coords(chart_inverse(a), basis) - affine_coords(rho, basis);
            double worst = 0.0;
            for (Eigen::Index i = 0; i < basis.size(); ++i)
                worst = std::max(worst,
                                 std::abs(dx(i) - trace_product(a.matrix(), basis[i]).real()));
            return worst;
        }});

    defs.push_back({"coords.basis_independence", 1e-10, {},
        [](CheckContext& ctx, Metadata&) {
            TracelessBasis basis = gellmann_basis(ctx.n);
            const Eigen::Index d = basis.size();
            RealMatrix gauss(d, d);
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = 0; j < d; ++j) gauss(i, j) = ctx.rng.normal();
            RealMatrix rotation = Eigen::HouseholderQR<RealMatrix>(gauss).householderQ();
            std::vector<Matrix> rotated(static_cast<std::size_t>(d));
            for (Eigen::Index j = 0; j < d; ++j) {
                Matrix f = Matrix::Zero(ctx.n, ctx.n);
                for (Eigen::Index i = 0; i < d; ++i) f += rotation(i, j) * basis[i];
                rotated[static_cast<std::size_t>(j)] = std::move(f);
            }
            TracelessBasis other(ctx.n, std::move(rotated));
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            DensityMatrix tau = ctx.density(2);
            MetricTensor g = metric_tensor(rho, other);
            RealVector dx_sigma = affine_coords(sigma, other) - affine_coords(rho, other);
            RealVector dx_tau = affine_coords(tau, other) - affine_coords(rho, other);
            const double through_coords = dx_sigma.dot(g.entries() * dx_tau);
            return std::abs(inner_tangent(rho, sigma, tau) - through_coords);
        }});

    // -- numcheck -------------------------------------------------------------

    defs.push_back({"numcheck.trivial_cases", 1e-8, {},
        [](CheckContext& ctx, Metadata&) {
            DensityMatrix rho = ctx.density(0);
            DensityMatrix sigma = ctx.density(1);
            TangentVector v(ctx.rng.traceless_unit(ctx.n));
            TangentVector w(ctx.rng.traceless_unit(ctx.n));
            double worst = m_geodesic_residual(rho, sigma, 0.3, 0.2);
            worst = std::max(worst, e_geodesic_residual(rho, sigma, 0.5, 0.0));
            worst = std::max(worst, duality_residual(rho, rho, v, w));
            worst = std::max(worst, std::abs(eguchi_fd(rho, rho, sigma, FdConfig::central(1e-3))));
            TangentVector zero(Matrix::Zero(ctx.n, ctx.n));
            worst = std::max(worst, duality_residual(rho, sigma, zero, w));
            return worst;
        }});

    return defs;
}

} // namespace

std::vector<CheckReport> run_suite(const std::vector<int>& n_list, int samples,
                                   std::uint64_t seed) {
    std::vector<CheckReport> reports;
    if (n_list.empty() || samples < 1) return reports;
    for (int n : n_list)
        if (n < 2) throw OutOfRange("run_suite: dimensions must be at least 2");

    std::vector<CheckDef> defs = make_checks();
    std::sort(defs.begin(), defs.end(),
              [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; });

    for (const CheckDef& def : defs) {
        double worst = 0.0;
        bool ran = false;
        Metadata worst_meta;
        for (int n : n_list) {
            if (!def.allowed_n.empty()
                && std::find(def.allowed_n.begin(), def.allowed_n.end(), n)
                       == def.allowed_n.end())
                continue;
            for (int sample = 0; sample < samples; ++sample) {
                const std::uint64_t check_seed =
                    mix_seed(mix_seed(seed, hash_name(def.name)),
                             (static_cast<std::uint64_t>(n) << 32)
                                 ^ static_cast<std::uint64_t>(sample));
                CheckContext ctx(n, sample, check_seed);
                Metadata meta;
                const double residual = def.body(ctx, meta);
                if (!ran || residual > worst) {
                    worst = residual;
                    worst_meta = std::move(meta);
                    worst_meta["worst_n"] = std::to_string(n);
                    worst_meta["worst_sample"] = std::to_string(sample);
                    ran = true;
                }
            }
        }
        if (!ran) {
            worst = 0.0;
            worst_meta = {{"skipped", "no_applicable_dimension"}};
        }
        reports.push_back(make_report(def.name, worst, def.tolerance, std::move(worst_meta)));
    }
    return reports;
}

} // namespace qig
