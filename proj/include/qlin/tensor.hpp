#pragma once

#include "qlin/qmat.hpp"

namespace qlin {

/// Left Kronecker product: block (p,q) = A[p,q] * B (scalar from the left).
/// Right: block (p,q) = B * A[p,q].
QuatMatrix kron(const QuatMatrix& a, const QuatMatrix& b, ProductOrder side);

/// Column n of the result is kron of the n-th columns; operands need equal
/// column counts.
QuatMatrix khatri_rao(const QuatMatrix& c, const QuatMatrix& d, ProductOrder side);

/// Selects one of the four vectorization identities; L_R names the identity
/// whose left-hand side is vec(A .L [B .R C]), and so on.
enum class VecIdentityForm { L_R, R_L, LB_R, RB_L };

/// Both sides of an identity, evaluated independently so callers can inspect
/// the residual.
struct VecIdentitySides {
    QuatMatrix lhs;
    QuatMatrix rhs;
};

/// Kronecker identities for A (M x K), B (K x L), C (L x N):
///   L_R : vec(A .L [B .R C]) = (C^T kronR A) .L vec(B)
///   R_L : vec(A .R [B .L C]) = (C^T kronL A) .R vec(B)
///   LB_R: vec([A .L B] .R C) = (C^T kronL A) .L vec(B)
///   RB_L: vec([A .R B] .L C) = (C^T kronR A) .R vec(B)
VecIdentitySides vec_identity_kron(const QuatMatrix& a, const QuatMatrix& b, const QuatMatrix& c,
                                   VecIdentityForm form);

/// Khatri-Rao identities for A (M x K), b (K x 1), C (K x N), with B = Diag(b):
///   L_R : vec(A .L [B .R C]) = (C^T krR A) .L b
///   R_L : vec(A .R [B .L C]) = (C^T krL A) .R b
///   LB_R: vec([A .L B] .R C) = (C^T krL A) .L b
///   RB_L: vec([A .R B] .L C) = (C^T krR A) .R b
VecIdentitySides vec_identity_kr(const QuatMatrix& a, const QuatMatrix& b_diag,
                                 const QuatMatrix& c, VecIdentityForm form);

}  // namespace qlin
