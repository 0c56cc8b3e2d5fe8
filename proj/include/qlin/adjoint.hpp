#pragma once

#include "qlin/complex_engine.hpp"
#include "qlin/qmat.hpp"

namespace qlin {

/// Which complex embedding: the left adjoint chi represents the left matrix
/// product, the right adjoint chi' represents the right matrix product.
enum class AdjointSide { LeftAdjoint, RightAdjoint };

/// A = A0 + A1 * mu_perp with A0, A1 in C_mu, stored as ordinary complex
/// matrices through the C_mu ~ C isomorphism (a + b*mu <-> a + b*i).
struct SymplecticSplit {
    ComplexMatrix a0;
    ComplexMatrix a1;
};

SymplecticSplit matrix_symplectic_split(const QuatMatrix& a, const PureUnitQuaternion& mu,
                                        const PureUnitQuaternion& mu_perp);

/// Left adjoint  chi  {A} = [[A0, A1], [-A1*, A0*]]   (2M x 2N)
/// Right adjoint chi' {A} = [[A0, -A1*], [A1, A0*]]
ComplexMatrix adjoint(const QuatMatrix& a, AdjointSide side,
                      const PureUnitQuaternion& mu = PureUnitQuaternion::i(),
                      const PureUnitQuaternion& mu_perp = PureUnitQuaternion::j());

/// Inverse of the embedding. Requires even dimensions and block consistency
/// (the two redundant blocks must match their conjugate partners to 1e-9,
/// relative to the largest entry); throws NotInEmbeddingImageError otherwise.
QuatMatrix from_adjoint(const ComplexMatrix& x, AdjointSide side,
                        const PureUnitQuaternion& mu = PureUnitQuaternion::i(),
                        const PureUnitQuaternion& mu_perp = PureUnitQuaternion::j());

/// Inverses with respect to the left / right product, computed through the
/// matching adjoint embedding. Throws SingularMatrixError when the adjoint is
/// singular (equivalently, when the quaternion matrix is not invertible).
QuatMatrix inv_left(const QuatMatrix& a,
                    const PureUnitQuaternion& mu = PureUnitQuaternion::i(),
                    const PureUnitQuaternion& mu_perp = PureUnitQuaternion::j());
QuatMatrix inv_right(const QuatMatrix& a,
                     const PureUnitQuaternion& mu = PureUnitQuaternion::i(),
                     const PureUnitQuaternion& mu_perp = PureUnitQuaternion::j());

/// First adjoint column of a quaternion column vector:
/// Left -> [v0; -v1*], Right -> [v0; v1].
ComplexMatrix embed_vector(const QuatMatrix& v, AdjointSide side,
                           const PureUnitQuaternion& mu = PureUnitQuaternion::i(),
                           const PureUnitQuaternion& mu_perp = PureUnitQuaternion::j());

/// Inverse of embed_vector; input is a 2M x 1 complex column.
QuatMatrix unembed_vector(const ComplexMatrix& c, AdjointSide side,
                          const PureUnitQuaternion& mu = PureUnitQuaternion::i(),
                          const PureUnitQuaternion& mu_perp = PureUnitQuaternion::j());

/// Lifts a complex matrix into C_mu: a + b*i  ->  a + b*mu.
QuatMatrix lift_complex(const ComplexMatrix& z, const PureUnitQuaternion& mu);

/// Extracts the complex representative of a matrix whose entries all lie in
/// C_mu; throws EntriesOutsideSubfieldError otherwise.
ComplexMatrix complex_representative(const QuatMatrix& a, const PureUnitQuaternion& mu,
                                     double tol = 1e-9);

}  // namespace qlin
