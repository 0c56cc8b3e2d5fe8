#include "qlin/tensor.hpp"

namespace qlin {

QuatMatrix kron(const QuatMatrix& a, const QuatMatrix& b, ProductOrder side) {
    QuatMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = 0; q < a.cols(); ++q) {
            const Quaternion& s = a(p, q);
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    r(p * b.rows() + i, q * b.cols() + j) =
                        side == ProductOrder::Left ? s * b(i, j) : b(i, j) * s;
        }
    return r;
}

QuatMatrix khatri_rao(const QuatMatrix& c, const QuatMatrix& d, ProductOrder side) {
    if (c.cols() != d.cols()) throw ShapeMismatchError("khatri_rao: column counts differ");
    QuatMatrix r(c.rows() * d.rows(), c.cols());
    for (std::size_t n = 0; n < c.cols(); ++n)
        for (std::size_t p = 0; p < c.rows(); ++p) {
            const Quaternion& s = c(p, n);
            for (std::size_t i = 0; i < d.rows(); ++i)
                r(p * d.rows() + i, n) =
                    side == ProductOrder::Left ? s * d(i, n) : d(i, n) * s;
        }
    return r;
}

VecIdentitySides vec_identity_kron(const QuatMatrix& a, const QuatMatrix& b, const QuatMatrix& c,
                                   VecIdentityForm form) {
    if (a.cols() != b.rows() || b.cols() != c.rows())
        throw ShapeMismatchError("vec_identity_kron: shapes must chain MxK, KxL, LxN");
    const QuatMatrix ct = transpose(c);
    const QuatMatrix vb = vec(b);
    switch (form) {
        case VecIdentityForm::L_R:
            return {vec(mul_left(a, mul_right(b, c))),
                    mul_left(kron(ct, a, ProductOrder::Right), vb)};
        case VecIdentityForm::R_L:
            return {vec(mul_right(a, mul_left(b, c))),
                    mul_right(kron(ct, a, ProductOrder::Left), vb)};
        case VecIdentityForm::LB_R:
            return {vec(mul_right(mul_left(a, b), c)),
                    mul_left(kron(ct, a, ProductOrder::Left), vb)};
        case VecIdentityForm::RB_L:
            return {vec(mul_left(mul_right(a, b), c)),
                    mul_right(kron(ct, a, ProductOrder::Right), vb)};
    }
    throw Error("unknown vec identity form");
}

VecIdentitySides vec_identity_kr(const QuatMatrix& a, const QuatMatrix& b_diag,
                                 const QuatMatrix& c, VecIdentityForm form) {
    if (b_diag.cols() != 1) throw ShapeMismatchError("vec_identity_kr: b must be a column vector");
    if (a.cols() != b_diag.rows() || c.rows() != b_diag.rows())
        throw ShapeMismatchError("vec_identity_kr: shapes must chain MxK, Kx1, KxN");
    const QuatMatrix b = diag(b_diag);
    const QuatMatrix ct = transpose(c);
    switch (form) {
        case VecIdentityForm::L_R:
            return {vec(mul_left(a, mul_right(b, c))),
                    mul_left(khatri_rao(ct, a, ProductOrder::Right), b_diag)};
        case VecIdentityForm::R_L:
            return {vec(mul_right(a, mul_left(b, c))),
                    mul_right(khatri_rao(ct, a, ProductOrder::Left), b_diag)};
        case VecIdentityForm::LB_R:
            return {vec(mul_right(mul_left(a, b), c)),
                    mul_left(khatri_rao(ct, a, ProductOrder::Left), b_diag)};
        case VecIdentityForm::RB_L:
            return {vec(mul_left(mul_right(a, b), c)),
                    mul_right(khatri_rao(ct, a, ProductOrder::Right), b_diag)};
    }
    throw Error("unknown vec identity form");
}

}  // namespace qlin
