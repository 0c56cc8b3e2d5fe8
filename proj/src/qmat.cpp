#include "qlin/qmat.hpp"

#include <cmath>
#include <string>

namespace qlin {

namespace {

void check_shape(bool ok, const char* what) {
    if (!ok) throw ShapeMismatchError(what);
}

}  // namespace

QuatMatrix::QuatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    check_shape(rows >= 1 && cols >= 1, "matrix dimensions must be at least 1x1");
}

QuatMatrix::QuatMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    check_shape(rows >= 1 && cols >= 1, "matrix dimensions must be at least 1x1");
    check_shape(data_.size() == rows * cols, "data length must equal rows*cols");
}

QuatMatrix::QuatMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    check_shape(rows_ >= 1 && cols_ >= 1, "matrix dimensions must be at least 1x1");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        check_shape(r.size() == cols_, "ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QuatMatrix QuatMatrix::identity(std::size_t n) {
    QuatMatrix m(n, n);
    for (std::size_t d = 0; d < n; ++d) m(d, d) = Quaternion::real(1.0);
    return m;
}

QuatMatrix operator+(const QuatMatrix& a, const QuatMatrix& b) {
    check_shape(a.rows() == b.rows() && a.cols() == b.cols(), "addition shape mismatch");
    QuatMatrix r(a.rows(), a.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(m, n) = a(m, n) + b(m, n);
    return r;
}

QuatMatrix operator-(const QuatMatrix& a, const QuatMatrix& b) {
    check_shape(a.rows() == b.rows() && a.cols() == b.cols(), "subtraction shape mismatch");
    QuatMatrix r(a.rows(), a.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(m, n) = a(m, n) - b(m, n);
    return r;
}

QuatMatrix operator-(const QuatMatrix& a) {
    QuatMatrix r(a.rows(), a.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(m, n) = -a(m, n);
    return r;
}

QuatMatrix operator*(double s, const QuatMatrix& a) {
    QuatMatrix r(a.rows(), a.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(m, n) = s * a(m, n);
    return r;
}

// Each output entry accumulates over k in increasing index order; this order
// is part of the determinism contract shared with the test oracles. The
// (m, k, n) loop nesting keeps that per-entry order while walking B and the
// result with unit stride.
QuatMatrix mul_left(const QuatMatrix& a, const QuatMatrix& b) {
    check_shape(a.cols() == b.rows(), "mul_left: inner dimensions differ");
    QuatMatrix r(a.rows(), b.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Quaternion& amk = a(m, k);
            for (std::size_t n = 0; n < b.cols(); ++n) r(m, n) += amk * b(k, n);
        }
    return r;
}

QuatMatrix mul_right(const QuatMatrix& a, const QuatMatrix& b) {
    check_shape(a.cols() == b.rows(), "mul_right: inner dimensions differ");
    QuatMatrix r(a.rows(), b.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Quaternion& amk = a(m, k);
            for (std::size_t n = 0; n < b.cols(); ++n) r(m, n) += b(k, n) * amk;
        }
    return r;
}

QuatMatrix transpose(const QuatMatrix& a) {
    QuatMatrix r(a.cols(), a.rows());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(n, m) = a(m, n);
    return r;
}

QuatMatrix conj(const QuatMatrix& a) {
    QuatMatrix r(a.rows(), a.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n) r(m, n) = conjugate(a(m, n));
    return r;
}

QuatMatrix herm(const QuatMatrix& a) { return conj(transpose(a)); }

QuatMatrix triple_product(const QuatMatrix& a, const QuatMatrix& b, const QuatMatrix& c,
                          TripleOrder order) {
    check_shape(a.cols() == b.rows() && b.cols() == c.rows(),
                "triple_product: inner dimensions differ");
    switch (order) {
        case TripleOrder::LL:
            return mul_left(mul_left(a, b), c);
        case TripleOrder::RR:
            return mul_right(mul_right(a, b), c);
        case TripleOrder::L_of_R:
            return mul_left(a, mul_right(b, c));
        case TripleOrder::LB_then_R:
            return mul_right(mul_left(a, b), c);
        case TripleOrder::RB_then_L:
            return mul_left(mul_right(a, b), c);
        case TripleOrder::R_of_L:
            return mul_right(a, mul_left(b, c));
    }
    throw Error("unknown triple order");
}

QuatMatrix vec(const QuatMatrix& a) {
    QuatMatrix r(a.rows() * a.cols(), 1);
    for (std::size_t n = 0; n < a.cols(); ++n)
        for (std::size_t m = 0; m < a.rows(); ++m) r(n * a.rows() + m, 0) = a(m, n);
    return r;
}

QuatMatrix unvec(const QuatMatrix& v, std::size_t rows, std::size_t cols) {
    check_shape(v.cols() == 1, "unvec expects a column vector");
    check_shape(v.rows() == rows * cols, "unvec: length must equal rows*cols");
    QuatMatrix r(rows, cols);
    for (std::size_t n = 0; n < cols; ++n)
        for (std::size_t m = 0; m < rows; ++m) r(m, n) = v(n * rows + m, 0);
    return r;
}

QuatMatrix diag(const QuatMatrix& v) {
    check_shape(v.cols() == 1, "diag expects a column vector");
    QuatMatrix r(v.rows(), v.rows());
    for (std::size_t d = 0; d < v.rows(); ++d) r(d, d) = v(d, 0);
    return r;
}

QuatMatrix scalar_mul(ProductOrder side, const Quaternion& s, const QuatMatrix& a) {
    QuatMatrix r(a.rows(), a.cols());
    for (std::size_t m = 0; m < a.rows(); ++m)
        for (std::size_t n = 0; n < a.cols(); ++n)
            r(m, n) = side == ProductOrder::Left ? s * a(m, n) : a(m, n) * s;
    return r;
}

QuatMatrix hcat(const QuatMatrix& a, const QuatMatrix& b) {
    check_shape(a.rows() == b.rows(), "hcat: row counts differ");
    QuatMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t m = 0; m < a.rows(); ++m) {
        for (std::size_t n = 0; n < a.cols(); ++n) r(m, n) = a(m, n);
        for (std::size_t n = 0; n < b.cols(); ++n) r(m, a.cols() + n) = b(m, n);
    }
    return r;
}

QuatMatrix vcat(const QuatMatrix& a, const QuatMatrix& b) {
    check_shape(a.cols() == b.cols(), "vcat: column counts differ");
    QuatMatrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t n = 0; n < a.cols(); ++n) {
        for (std::size_t m = 0; m < a.rows(); ++m) r(m, n) = a(m, n);
        for (std::size_t m = 0; m < b.rows(); ++m) r(a.rows() + m, n) = b(m, n);
    }
    return r;
}

double frobenius_norm(const QuatMatrix& a) {
    double s = 0.0;
    for (const Quaternion& q : a.data()) s += norm_sq(q);
    return std::sqrt(s);
}

double max_abs_component(const QuatMatrix& a) {
    double s = 0.0;
    for (const Quaternion& q : a.data()) {
        s = std::max(s, std::fabs(q.w));
        s = std::max(s, std::fabs(q.x));
        s = std::max(s, std::fabs(q.y));
        s = std::max(s, std::fabs(q.z));
    }
    return s;
}

double distance(const QuatMatrix& a, const QuatMatrix& b) { return frobenius_norm(a - b); }

}  // namespace qlin
