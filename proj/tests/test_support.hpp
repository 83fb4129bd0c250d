#pragma once

#include "qig/manifold.hpp"
#include "qig/random.hpp"

#include <doctest.h>

namespace qig::test {

inline Matrix diag2(double a, double b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Matrix pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

inline Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline DensityMatrix maximally_mixed(Eigen::Index n) {
    return validate_density(Matrix::Identity(n, n) / static_cast<double>(n));
}

inline double distance(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

} // namespace qig::test
