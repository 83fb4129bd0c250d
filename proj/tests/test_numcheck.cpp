#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "qig/numcheck.hpp"

#include <algorithm>

using namespace qig;
using namespace qig::test;

TEST_CASE("finite-difference configuration bounds the step") {
    CHECK_NOTHROW(FdConfig::central(1e-5));
    CHECK_THROWS_AS(FdConfig::central(1e-9), OutOfRange);
    CHECK_THROWS_AS(FdConfig::central(0.1), OutOfRange);
}

TEST_CASE("gauss-legendre nodes integrate polynomials and exponentials") {
    Quadrature q = gauss_legendre_unit(64);
    REQUIRE(q.nodes.size() == 64);

    double weight_sum = 0.0;
    for (double w : q.weights) weight_sum += w;
    CHECK(weight_sum == doctest::Approx(1.0).epsilon(1e-15));

    for (std::size_t i = 0; i < 32; ++i)
        CHECK(q.nodes[i] == doctest::Approx(1.0 - q.nodes[63 - i]).epsilon(1e-14));

    for (int p : {1, 2, 5, 10}) {
        double integral = 0.0;
        for (std::size_t i = 0; i < 64; ++i)
            integral += q.weights[i] * std::pow(q.nodes[i], p);
        CHECK(integral == doctest::Approx(1.0 / (p + 1)).epsilon(1e-14));
    }

    const double c = 20.0;
    double integral = 0.0;
    for (std::size_t i = 0; i < 64; ++i) integral += q.weights[i] * std::exp(c * q.nodes[i]);
    CHECK(integral == doctest::Approx((std::exp(c) - 1.0) / c).epsilon(1e-13));
}

TEST_CASE("frechet difference of the identity map is the direction") {
    Prng rng(1);
    Matrix at = rng.hermitian(3);
    Matrix dir = rng.hermitian(3);
    auto ident = [](const Matrix& m) { return m; };
    // Exact up to cancellation round-off of order eps/h.
    CHECK(distance(frechet_fd(ident, at, dir, FdConfig::central(1e-5)), dir) / dir.norm()
          < 1e-10);
    CHECK(distance(frechet_fd(ident, at, dir, FdConfig::central(1e-5, true)), dir)
              / dir.norm()
          < 1e-10);
    CHECK(distance(frechet_fd(ident, Matrix::Zero(3, 3), dir, FdConfig::central(1e-4)), dir)
              / dir.norm()
          < 1e-15);
}

TEST_CASE("eguchi difference vanishes on constant arcs and is positive on diagonals") {
    DensityMatrix rho = random_density(3, 11, 3e-2);
    DensityMatrix sigma = random_density(3, 12, 3e-2);
    FdConfig cfg = FdConfig::central(1e-3);
    CHECK(std::abs(eguchi_fd(rho, rho, sigma, cfg)) < 1e-8);
    const double diagonal = eguchi_fd(rho, sigma, sigma, cfg);
    CHECK(diagonal > 0.0);
    CHECK(std::abs(diagonal - inner_tangent(rho, sigma, sigma)) < 1e-5);
}

TEST_CASE("eguchi difference converges at second order") {
    DensityMatrix rho = random_density(2, 21, 3e-2);
    DensityMatrix sigma = random_density(2, 22, 3e-2);
    DensityMatrix tau = random_density(2, 23, 3e-2);
    const double exact = inner_tangent(rho, sigma, tau);
    const double coarse = std::abs(eguchi_fd(rho, sigma, tau, FdConfig::central(1e-2)) - exact);
    const double fine = std::abs(eguchi_fd(rho, sigma, tau, FdConfig::central(1e-3)) - exact);
    REQUIRE(fine > 1e-9);
    CHECK(coarse / fine > 50.0);
    CHECK(coarse / fine < 200.0);
}

TEST_CASE("geodesic and duality residuals vanish on trivial cases") {
    DensityMatrix rho = random_density(3, 31);
    DensityMatrix sigma = random_density(3, 32);
    Prng rng(33);
    TangentVector v(rng.traceless_unit(3));
    TangentVector w(rng.traceless_unit(3));
    TangentVector zero(Matrix::Zero(3, 3));

    CHECK(e_geodesic_residual(rho, sigma, 0.5, 0.0) == 0.0);
    CHECK(e_geodesic_residual(rho, rho, 0.5, 0.1) < 1e-13);
    CHECK(m_geodesic_residual(rho, sigma, 0.2, 0.3) == 0.0);
    CHECK(m_geodesic_residual(rho, rho, 0.1, 0.6) == 0.0);
    CHECK(duality_residual(rho, rho, v, w) == 0.0);
    CHECK(duality_residual(rho, sigma, zero, w) == 0.0);
    CHECK_THROWS_AS(m_geodesic_residual(rho, sigma, 0.9, 0.3), OutOfRange);
}

TEST_CASE("duality residual is small on random instances") {
    Prng rng(41);
    for (int n : {2, 3, 4}) {
        DensityMatrix rho1 = random_density(n, 42 + static_cast<std::uint64_t>(n));
        DensityMatrix rho2 = random_density(n, 52 + static_cast<std::uint64_t>(n));
        TangentVector v(rng.traceless_unit(n));
        TangentVector w(rng.traceless_unit(n));
        CHECK(duality_residual(rho1, rho2, v, w) < 1e-11);
    }
}

TEST_CASE("reports pair residuals with tolerances") {
    CheckReport pass = make_report("demo", 1e-13, 1e-12);
    CHECK(pass.passed);
    CheckReport fail = make_report("demo", 2e-12, 1e-12, {{"note", "x"}});
    CHECK_FALSE(fail.passed);
    CHECK(to_text_line(fail).find("FAIL demo") == 0);
    CHECK(to_text_line(fail).find("note=x") != std::string::npos);
    CheckReport edge = make_report("demo", 1e-12, 1e-12);
    CHECK(edge.passed);
}

TEST_CASE("run_suite reports every check exactly once") {
    std::vector<CheckReport> reports = run_suite({2}, 1, 1);
    CHECK(reports.size() >= 50);
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const CheckReport& a, const CheckReport& b) {
                             return a.name < b.name;
                         }));
    for (const char* name : {"manifold.arc_endpoints", "metric.transport_duality",
                             "legendre.potential_equals_divergence", "coords.quadratic_form",
                             "spectra.exp_log_roundtrip", "numcheck.trivial_cases"}) {
        CHECK(std::any_of(reports.begin(), reports.end(),
                          [&](const CheckReport& r) { return r.name == name; }));
    }
}

TEST_CASE("run_suite is empty for empty inputs") {
    CHECK(run_suite({}, 10, 1).empty());
    CHECK(run_suite({2, 3}, 0, 1).empty());
}

TEST_CASE("run_suite is deterministic for a fixed seed") {
    std::vector<CheckReport> first = run_suite({2, 3}, 2, 9);
    std::vector<CheckReport> second = run_suite({2, 3}, 2, 9);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].name == second[i].name);
        CHECK(first[i].residual == second[i].residual);
        CHECK(first[i].passed == second[i].passed);
        CHECK(first[i].metadata == second[i].metadata);
    }
}

TEST_CASE("run_suite passes on a small deterministic run") {
    for (const CheckReport& r : run_suite({2, 3}, 3, 42)) {
        INFO(to_text_line(r));
        CHECK(r.passed);
    }
}
