#include "qlin/adjoint.hpp"

#include <cmath>

namespace qlin {

namespace {

void require_orthogonal(const PureUnitQuaternion& mu, const PureUnitQuaternion& mu_perp) {
    if (!are_orthogonal(mu, mu_perp))
        throw InvalidAxesError("adjoint axes must be orthogonal pure unit quaternions");
}

// Quaternion from its coordinates in the orthonormal basis {1, mu, mu_perp, mu*mu_perp}.
struct Lifter {
    Quaternion m, p, mp;
    Lifter(const PureUnitQuaternion& mu, const PureUnitQuaternion& mu_perp)
        : m(mu.axis()), p(mu_perp.axis()), mp(mu.axis() * mu_perp.axis()) {}
    Quaternion operator()(Complex z1, Complex z2) const {
        return Quaternion::real(z1.real()) + z1.imag() * m + z2.real() * p + z2.imag() * mp;
    }
};

}  // namespace

SymplecticSplit matrix_symplectic_split(const QuatMatrix& a, const PureUnitQuaternion& mu,
                                        const PureUnitQuaternion& mu_perp) {
    require_orthogonal(mu, mu_perp);
    const Quaternion& m = mu.axis();
    const Quaternion& p = mu_perp.axis();
    const Quaternion mp = m * p;
    ComplexMatrix a0(a.rows(), a.cols());
    ComplexMatrix a1(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const Quaternion& q = a(r, c);
            a0(r, c) = Complex{q.w, q.x * m.x + q.y * m.y + q.z * m.z};
            a1(r, c) = Complex{q.x * p.x + q.y * p.y + q.z * p.z,
                               q.x * mp.x + q.y * mp.y + q.z * mp.z};
        }
    return {std::move(a0), std::move(a1)};
}

ComplexMatrix adjoint(const QuatMatrix& a, AdjointSide side, const PureUnitQuaternion& mu,
                      const PureUnitQuaternion& mu_perp) {
    const auto [a0, a1] = matrix_symplectic_split(a, mu, mu_perp);
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ComplexMatrix x(2 * m, 2 * n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            x(r, c) = a0(r, c);
            x(m + r, n + c) = std::conj(a0(r, c));
            if (side == AdjointSide::LeftAdjoint) {
                x(r, n + c) = a1(r, c);
                x(m + r, c) = -std::conj(a1(r, c));
            } else {
                x(m + r, c) = a1(r, c);
                x(r, n + c) = -std::conj(a1(r, c));
            }
        }
    return x;
}

namespace {

// Block extraction shared by the checked and unchecked paths; averaging the two
// redundant copies of each block.
QuatMatrix from_adjoint_impl(const ComplexMatrix& x, AdjointSide side,
                             const PureUnitQuaternion& mu, const PureUnitQuaternion& mu_perp,
                             bool check) {
    require_orthogonal(mu, mu_perp);
    if (x.rows() % 2 != 0 || x.cols() % 2 != 0 || x.rows() == 0 || x.cols() == 0)
        throw ShapeMismatchError("adjoint image must have even, nonzero dimensions");
    const std::size_t m = x.rows() / 2;
    const std::size_t n = x.cols() / 2;
    if (check) {
        // X11 == conj(X22) and X12 == -conj(X21) regardless of side
        double dev = 0.0;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                dev = std::max(dev, std::abs(x(r, c) - std::conj(x(m + r, n + c))));
                dev = std::max(dev, std::abs(x(r, n + c) + std::conj(x(m + r, c))));
            }
        if (dev > 1e-9 * std::max(1.0, max_abs(x)))
            throw NotInEmbeddingImageError("block structure deviates from the adjoint embedding");
    }
    const Lifter lift(mu, mu_perp);
    QuatMatrix a(m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Complex z1 = 0.5 * (x(r, c) + std::conj(x(m + r, n + c)));
            const Complex z2 = side == AdjointSide::LeftAdjoint
                                   ? 0.5 * (x(r, n + c) - std::conj(x(m + r, c)))
                                   : 0.5 * (x(m + r, c) - std::conj(x(r, n + c)));
            a(r, c) = lift(z1, z2);
        }
    return a;
}

}  // namespace

QuatMatrix from_adjoint(const ComplexMatrix& x, AdjointSide side, const PureUnitQuaternion& mu,
                        const PureUnitQuaternion& mu_perp) {
    return from_adjoint_impl(x, side, mu, mu_perp, true);
}

QuatMatrix inv_left(const QuatMatrix& a, const PureUnitQuaternion& mu,
                    const PureUnitQuaternion& mu_perp) {
    if (a.rows() != a.cols()) throw ShapeMismatchError("inv_left needs a square matrix");
    const ComplexMatrix chi_inv = inverse(adjoint(a, AdjointSide::LeftAdjoint, mu, mu_perp));
    return from_adjoint_impl(chi_inv, AdjointSide::LeftAdjoint, mu, mu_perp, false);
}

QuatMatrix inv_right(const QuatMatrix& a, const PureUnitQuaternion& mu,
                     const PureUnitQuaternion& mu_perp) {
    if (a.rows() != a.cols()) throw ShapeMismatchError("inv_right needs a square matrix");
    const ComplexMatrix chi_inv = inverse(adjoint(a, AdjointSide::RightAdjoint, mu, mu_perp));
    return from_adjoint_impl(chi_inv, AdjointSide::RightAdjoint, mu, mu_perp, false);
}

ComplexMatrix embed_vector(const QuatMatrix& v, AdjointSide side, const PureUnitQuaternion& mu,
                           const PureUnitQuaternion& mu_perp) {
    if (v.cols() != 1) throw ShapeMismatchError("embed_vector expects a column vector");
    const auto [v0, v1] = matrix_symplectic_split(v, mu, mu_perp);
    const std::size_t m = v.rows();
    ComplexMatrix c(2 * m, 1);
    for (std::size_t r = 0; r < m; ++r) {
        c(r, 0) = v0(r, 0);
        c(m + r, 0) = side == AdjointSide::LeftAdjoint ? -std::conj(v1(r, 0)) : v1(r, 0);
    }
    return c;
}

QuatMatrix unembed_vector(const ComplexMatrix& c, AdjointSide side, const PureUnitQuaternion& mu,
                          const PureUnitQuaternion& mu_perp) {
    require_orthogonal(mu, mu_perp);
    if (c.cols() != 1 || c.rows() % 2 != 0 || c.rows() == 0)
        throw ShapeMismatchError("unembed_vector expects a 2Mx1 column");
    const std::size_t m = c.rows() / 2;
    const Lifter lift(mu, mu_perp);
    QuatMatrix v(m, 1);
    for (std::size_t r = 0; r < m; ++r) {
        const Complex z2 =
            side == AdjointSide::LeftAdjoint ? -std::conj(c(m + r, 0)) : c(m + r, 0);
        v(r, 0) = lift(c(r, 0), z2);
    }
    return v;
}

QuatMatrix lift_complex(const ComplexMatrix& z, const PureUnitQuaternion& mu) {
    if (z.rows() == 0 || z.cols() == 0)
        throw ShapeMismatchError("cannot lift an empty complex matrix");
    const Quaternion& m = mu.axis();
    QuatMatrix a(z.rows(), z.cols());
    for (std::size_t r = 0; r < z.rows(); ++r)
        for (std::size_t c = 0; c < z.cols(); ++c)
            a(r, c) = Quaternion::real(z(r, c).real()) + z(r, c).imag() * m;
    return a;
}

ComplexMatrix complex_representative(const QuatMatrix& a, const PureUnitQuaternion& mu,
                                     double tol) {
    const Quaternion& m = mu.axis();
    const double scale = std::max(1.0, max_abs_component(a));
    ComplexMatrix z(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const Quaternion& q = a(r, c);
            if (!in_complex_subfield(q, mu, tol * scale))
                throw EntriesOutsideSubfieldError("matrix entry lies outside C_mu");
            z(r, c) = Complex{q.w, q.x * m.x + q.y * m.y + q.z * m.z};
        }
    return z;
}

}  // namespace qlin
