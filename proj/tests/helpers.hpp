#pragma once

#include <cstdint>
#include <random>

#include "qlin/complex_matrix.hpp"
#include "qlin/qmat.hpp"

namespace qtest {

using namespace qlin;

struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo = -1.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

    Quaternion quat() { return {uniform(), uniform(), uniform(), uniform()}; }

    Quaternion unit_quat() {
        for (;;) {
            Quaternion q = quat();
            const double m = modulus(q);
            if (m > 0.1) return q / m;
        }
    }

    PureUnitQuaternion puq() {
        for (;;) {
            const double x = uniform(), y = uniform(), z = uniform();
            if (x * x + y * y + z * z > 0.01) return {x, y, z};
        }
    }

    Quaternion cmu_scalar(const PureUnitQuaternion& mu) {
        return Quaternion::real(uniform()) + uniform() * mu.axis();
    }

    QuatMatrix qmatrix(std::size_t rows, std::size_t cols) {
        QuatMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = quat();
        return m;
    }

    // integer-component entries: products and small sums stay exact in doubles
    QuatMatrix int_qmatrix(std::size_t rows, std::size_t cols, int range = 2) {
        QuatMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = Quaternion{double(integer(-range, range)), double(integer(-range, range)),
                                     double(integer(-range, range)), double(integer(-range, range))};
        return m;
    }

    QuatMatrix cmu_matrix(std::size_t rows, std::size_t cols, const PureUnitQuaternion& mu) {
        QuatMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = cmu_scalar(mu);
        return m;
    }

    ComplexMatrix cmatrix(std::size_t rows, std::size_t cols) {
        ComplexMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex{uniform(), uniform()};
        return m;
    }
};

inline bool approx_quat(const Quaternion& a, const Quaternion& b, double tol) {
    return modulus(a - b) <= tol;
}

}  // namespace qtest
