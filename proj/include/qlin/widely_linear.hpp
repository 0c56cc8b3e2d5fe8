#pragma once

#include "qlin/adjoint.hpp"
#include "qlin/qmat.hpp"

namespace qlin {

/// The system A X + B X* = C with A, B square and all entries of A, B, C in
/// the complex subfield C_mu. Validated on construction.
struct WidelyLinearSystem {
    QuatMatrix a;
    QuatMatrix b;
    QuatMatrix c;
    PureUnitQuaternion mu;

    WidelyLinearSystem(QuatMatrix a_, QuatMatrix b_, QuatMatrix c_,
                       PureUnitQuaternion mu_ = PureUnitQuaternion::i());

    /// Lifts ordinary complex coefficient matrices into C_mu.
    static WidelyLinearSystem from_complex(const ComplexMatrix& a, const ComplexMatrix& b,
                                           const ComplexMatrix& c,
                                           PureUnitQuaternion mu = PureUnitQuaternion::i());
};

/// Conjugation as a scalar sandwich: for X with entries in C_mu,
/// -mu_perp X mu_perp = conj(X). Throws EntriesOutsideSubfieldError if the
/// premise fails.
QuatMatrix conj_via_sandwich(const QuatMatrix& x, const PureUnitQuaternion& mu,
                             const PureUnitQuaternion& mu_perp);

/// Solves the system through the quaternion lifting: stacks
/// F = [[A, -B mu_perp], [B*, -A* mu_perp]], G = [I; mu_perp I], Ca = [C; C*]
/// and returns X = 0.5 G^H .R (F^-L .L Ca). Throws SingularMatrixError when F
/// is not invertible.
QuatMatrix solve_widely_linear(const WidelyLinearSystem& sys);

}  // namespace qlin
