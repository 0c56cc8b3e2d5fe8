#pragma once

#include "qlin/qmat.hpp"

namespace qlin {

/// The three transform variants: two-side F1 .L A .L F2, left-side
/// F1 .L (A .R F2), right-side (F1 .R A) .L F2.
enum class QdftKind { TwoSide = 1, LeftSide = 2, RightSide = 3 };

/// Quaternion Fourier matrix: [F]_{m,u} = exp(-mu 2 pi u m / size) / sqrt(size),
/// entries in C_mu, unitary within its subfield.
struct FourierMatrix {
    QuatMatrix f;
    PureUnitQuaternion mu;
    std::size_t size;
};

FourierMatrix fourier_matrix(std::size_t size, const PureUnitQuaternion& mu);

QuatMatrix dqft(const QuatMatrix& a, QdftKind kind,
                const PureUnitQuaternion& mu1 = PureUnitQuaternion::i(),
                const PureUnitQuaternion& mu2 = PureUnitQuaternion::j());

/// Inverse transform, realized with the Hermitian transposes of the Fourier
/// matrices and the bracketing that undoes the forward variant.
QuatMatrix idqft(const QuatMatrix& a, QdftKind kind,
                 const PureUnitQuaternion& mu1 = PureUnitQuaternion::i(),
                 const PureUnitQuaternion& mu2 = PureUnitQuaternion::j());

}  // namespace qlin
