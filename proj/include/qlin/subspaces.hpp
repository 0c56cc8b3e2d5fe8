#pragma once

#include <vector>

#include "qlin/adjoint.hpp"
#include "qlin/qmat.hpp"

namespace qlin {

/// The eight fundamental subspaces of a quaternion matrix: left/right row
/// spaces, column spaces, and the corresponding null spaces.
enum class SubspaceKind { LR, RR, LC, RC, LRN, RRN, LCN, RCN };

/// Which scalar action the subspace is closed under. A .L (x q) = (A .L x) q,
/// so the L-kind spaces LR and LRN form right modules, LC/LCN left modules;
/// the R family mirrors this.
enum class ScalarSide { LeftScalars, RightScalars };

struct SubspaceBasis {
    SubspaceKind kind;
    std::vector<QuatMatrix> vectors;  // nonzero column vectors, one per dimension
    ScalarSide scalar_side;
};

ScalarSide scalar_side_of(SubspaceKind kind);

/// Basis of the requested subspace. Computation runs through the matching
/// adjoint embedding (L kinds -> chi, R kinds -> chi'); the embedded dimension
/// is checked to be even at runtime. tol <= 0 selects the complex-engine
/// default rank tolerance.
SubspaceBasis basis(const QuatMatrix& a, SubspaceKind kind, double tol = 0.0);

/// Membership test. Range kinds: projection residual of the embedded vector
/// against the embedded column space <= tol * |v|. Null kinds: direct product
/// residual <= tol * |A|_F * |v|.
bool contains(const QuatMatrix& a, SubspaceKind kind, const QuatMatrix& v, double tol = 1e-9);

/// dim LR(A) = rank(chi{A}) / 2 and dim RR(A) = rank(chi'{A}) / 2.
std::size_t rank_left(const QuatMatrix& a);
std::size_t rank_right(const QuatMatrix& a);

}  // namespace qlin
