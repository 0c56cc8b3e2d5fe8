#include "qlin/complex_matrix.hpp"

#include <cmath>

namespace qlin {

namespace {

void check_shape(bool ok, const char* what) {
    if (!ok) throw ShapeMismatchError(what);
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_shape(a.rows() == b.rows() && a.cols() == b.cols(), "addition shape mismatch");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(m, n) = a(m, n) + b(m, n);
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_shape(a.rows() == b.rows() && a.cols() == b.cols(), "subtraction shape mismatch");
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(m, n) = a(m, n) - b(m, n);
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_shape(a.cols() == b.rows(), "multiplication: inner dimensions differ");
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex amk = a(m, k);
            if (amk == Complex{}) continue;
            for (std::size_t n = 0; n < b.cols(); ++n) r(m, n) += amk * b(k, n);
        }
    return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(m, n) = s * a(m, n);
    return r;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix r(a.cols(), a.rows());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(n, m) = a(m, n);
    return r;
}

ComplexMatrix conj(const ComplexMatrix& a) {
    ComplexMatrix r(a.rows(), a.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(m, n) = std::conj(a(m, n));
    return r;
}

ComplexMatrix herm(const ComplexMatrix& a) { return conj(transpose(a)); }

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& c : a.data()) s += std::norm(c);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& c : a.data()) s = std::max(s, std::abs(c));
    return s;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) { return frobenius_norm(a - b); }

}  // namespace qlin
