#include "qlin/widely_linear.hpp"

#include <cmath>

namespace qlin {

namespace {

void require_in_subfield(const QuatMatrix& m, const PureUnitQuaternion& mu, const char* name) {
    const double tol = 1e-12 * std::max(1.0, max_abs_component(m));
    for (const Quaternion& q : m.data())
        if (!in_complex_subfield(q, mu, tol))
            throw EntriesOutsideSubfieldError(std::string(name) + " has entries outside C_mu");
}

}  // namespace

WidelyLinearSystem::WidelyLinearSystem(QuatMatrix a_, QuatMatrix b_, QuatMatrix c_,
                                       PureUnitQuaternion mu_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), mu(mu_) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() ||
        c.rows() != a.rows())
        throw ShapeMismatchError("widely linear system needs square MxM A, B and MxP C");
    require_in_subfield(a, mu, "A");
    require_in_subfield(b, mu, "B");
    require_in_subfield(c, mu, "C");
}

WidelyLinearSystem WidelyLinearSystem::from_complex(const ComplexMatrix& a, const ComplexMatrix& b,
                                                    const ComplexMatrix& c,
                                                    PureUnitQuaternion mu) {
    return {lift_complex(a, mu), lift_complex(b, mu), lift_complex(c, mu), mu};
}

QuatMatrix conj_via_sandwich(const QuatMatrix& x, const PureUnitQuaternion& mu,
                             const PureUnitQuaternion& mu_perp) {
    if (!are_orthogonal(mu, mu_perp))
        throw InvalidAxesError("conj_via_sandwich needs orthogonal axes");
    require_in_subfield(x, mu, "X");
    const Quaternion p = mu_perp.axis();
    QuatMatrix r(x.rows(), x.cols());
    for (std::size_t m = 0; m < x.rows(); ++m)
        for (std::size_t n = 0; n < x.cols(); ++n) r(m, n) = -(p * (x(m, n) * p));
    return r;
}

QuatMatrix solve_widely_linear(const WidelyLinearSystem& sys) {
    const std::size_t m = sys.a.rows();
    const PureUnitQuaternion mu_perp = orthogonal_complement(sys.mu);
    const Quaternion p = mu_perp.axis();

    const QuatMatrix f1 = hcat(sys.a, -scalar_mul(ProductOrder::Right, p, sys.b));
    const QuatMatrix f2 = hcat(conj(sys.b), -scalar_mul(ProductOrder::Right, p, conj(sys.a)));
    const QuatMatrix f = vcat(f1, f2);
    const QuatMatrix g =
        vcat(QuatMatrix::identity(m), scalar_mul(ProductOrder::Left, p, QuatMatrix::identity(m)));
    const QuatMatrix ca = vcat(sys.c, conj(sys.c));

    const QuatMatrix y = mul_left(inv_left(f, sys.mu, mu_perp), ca);
    return 0.5 * mul_right(herm(g), y);
}

}  // namespace qlin
