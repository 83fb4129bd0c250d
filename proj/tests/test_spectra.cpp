#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "qig/numcheck.hpp"
#include "qig/spectra.hpp"

using namespace qig;
using namespace qig::test;

TEST_CASE("spectral decomposition of diagonal and Pauli matrices") {
    SpectralDecomposition d = spectral_decompose(diag2(1.0, 2.0));
    CHECK(d.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.eigenvalues(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(distance(d.eigenvectors.adjoint() * d.eigenvectors, Matrix::Identity(2, 2)) < 1e-12);

    SpectralDecomposition x = spectral_decompose(pauli_x());
    CHECK(x.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(x.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("spectral decomposition reconstructs random Hermitian input") {
    Prng rng(42);
    Matrix h = rng.hermitian(4);
    SpectralDecomposition d = spectral_decompose(h);
    CHECK(distance(d.reconstruct(), h) / h.norm() < 1e-12);
    CHECK(distance(d.eigenvectors.adjoint() * d.eigenvectors, Matrix::Identity(4, 4)) < 1e-12);
    for (Eigen::Index i = 1; i < 4; ++i) CHECK(d.eigenvalues(i - 1) <= d.eigenvalues(i));
}

TEST_CASE("spectral decomposition is idempotent on reconstructions") {
    Prng rng(5);
    for (int n : {2, 3, 4, 8}) {
        SpectralDecomposition d = spectral_decompose(rng.hermitian(n));
        SpectralDecomposition again = spectral_decompose(d.reconstruct());
        CHECK((again.eigenvalues - d.eigenvalues).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("spectral decomposition rejects non-Hermitian input") {
    Matrix m(2, 2);
    m << 1, 1, 0, 1;
    CHECK_THROWS_AS(spectral_decompose(m), NotHermitian);
}

TEST_CASE("matrix exponential of simple inputs") {
    CHECK(distance(matrix_exp(Matrix::Zero(2, 2)), Matrix::Identity(2, 2)) < 1e-15);
    Matrix e = matrix_exp(diag2(1.0, 2.0));
    CHECK(e(0, 0).real() == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(e(1, 1).real() == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
}

TEST_CASE("matrix log of simple inputs and failure on singular input") {
    CHECK(matrix_log(Matrix::Identity(3, 3)).norm() < 1e-14);
    Matrix l = matrix_log(diag2(std::exp(1.0), std::exp(2.0)));
    CHECK(l(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(l(1, 1).real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(matrix_log(diag2(1.0, 0.0)), NotPositiveDefinite);
    CHECK_THROWS_AS(matrix_log(diag2(1.0, -0.5)), NotPositiveDefinite);
}

TEST_CASE("exp and log are mutually inverse on random densities") {
    for (int n : {2, 3, 4, 8}) {
        DensityMatrix p = random_density(n, 100 + static_cast<std::uint64_t>(n));
        CHECK(distance(matrix_exp(matrix_log(p.matrix())), p.matrix()) / p.matrix().norm()
              < 1e-11);
    }
    Prng rng(9);
    Matrix h = rng.hermitian(3);
    CHECK(distance(matrix_log(matrix_exp(h)), h) < 1e-12);
}

TEST_CASE("fractional powers") {
    DensityMatrix p = random_density(3, 17);
    CHECK(distance(frac_power(p.matrix(), 0.0), Matrix::Identity(3, 3)) < 1e-14);
    CHECK(distance(frac_power(p.matrix(), 1.0), p.matrix()) < 1e-14);

    Matrix root = frac_power(diag2(4.0, 9.0), 0.5);
    CHECK(root(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(root(1, 1).real() == doctest::Approx(3.0).epsilon(1e-14));

    Prng rng(3);
    const double u = rng.uniform();
    CHECK(distance(frac_power(p.matrix(), u) * frac_power(p.matrix(), 1.0 - u), p.matrix())
          < 1e-13);
    CHECK_THROWS_AS(frac_power(diag2(1.0, 0.0), 0.5), NotPositiveDefinite);
}

TEST_CASE("logarithmic mean on fixed values") {
    CHECK(log_mean(0.3, 0.3) == 0.3);
    // 64-node Gauss-Legendre quadrature of the defining integral gives
    // 0.45511961331341838; the closed form is 0.5/log(3).
    CHECK(log_mean(0.75, 0.25) == doctest::Approx(0.45511961331341866).epsilon(1e-14));
    CHECK(std::abs(log_mean(0.75, 0.25) - log_mean_quadrature(0.75, 0.25))
          / log_mean(0.75, 0.25) < 1e-12);
    CHECK_THROWS_AS(log_mean(0.0, 1.0), NonPositiveArgument);
    CHECK_THROWS_AS(log_mean(1.0, -2.0), NonPositiveArgument);
}

TEST_CASE("logarithmic mean properties over random pairs") {
    Prng rng(11);
    for (int k = 0; k < 200; ++k) {
        const double a = std::exp(rng.uniform(std::log(1e-6), std::log(1e3)));
        const double b = k % 5 == 0 ? a * (1.0 + rng.uniform(-1e-5, 1e-5))
                                    : std::exp(rng.uniform(std::log(1e-6), std::log(1e3)));
        const double mean = log_mean(a, b);
        CHECK(mean == log_mean(b, a));
        if (a != b) {
            CHECK(mean > std::min(a, b));
            CHECK(mean < std::max(a, b));
        }
        const double oracle = log_mean_quadrature(a, b);
        CHECK(std::abs(mean - oracle) / oracle < 1e-12);
    }
}

TEST_CASE("hermitize symmetrizes round-off and rejects gross asymmetry") {
    Matrix x = pauli_x();
    CHECK(distance(hermitize(x), x) == 0.0);

    Matrix noisy = x;
    noisy(0, 1) += Complex(0, 1e-15);
    Matrix fixed = hermitize(noisy);
    CHECK(hermiticity_defect(fixed) == 0.0);

    Matrix drift = x + Complex(0, 1e-12) * Matrix::Identity(2, 2);
    CHECK(distance(hermitize(drift), x) < 1e-12);

    Matrix gross(2, 2);
    gross << 0, 1, 0, 0;
    CHECK_THROWS_AS(hermitize(gross), NotHermitian);
}

TEST_CASE("kubo transform in an explicit eigenbasis matches its inverse") {
    Prng rng(23);
    for (int n : {2, 3, 4, 8}) {
        DensityMatrix rho = random_density(n, 900 + static_cast<std::uint64_t>(n));
        Matrix a = rng.hermitian(n);
        Matrix v = kubo_apply(rho.spectrum(), a);
        CHECK(distance(kubo_solve(rho.spectrum(), v), a) < 1e-11);
        CHECK(hermiticity_defect(v) == 0.0);
    }
}
