#pragma once

#include <vector>

#include "qlin/adjoint.hpp"
#include "qlin/qmat.hpp"

namespace qlin {

/// A = Q .L Diag(lambda) .L Q^-L. Eigenvalues are the standard ones: each lies
/// in C_i with nonnegative i part (zero j, k components exactly), sorted by
/// (real part, imaginary part) ascending.
struct RightEigenDecomposition {
    QuatMatrix q;                    // columns are right eigenvectors, unit Frobenius norm
    std::vector<Quaternion> lambda;  // M standard eigenvalues
};

/// One pair of the (verification-only) left eigenproblem A .L q = lambda * q.
struct LeftEigenPair {
    Quaternion lambda;
    QuatMatrix q;
};

/// Right eigendecomposition via the standard eigenvalues of the left adjoint.
/// The 2M adjoint eigenvalues are matched into conjugate pairs (greedy nearest
/// match, tolerance 1e-7 |A|_F); failure to pair or a numerically singular
/// eigenvector matrix raises DefectiveOrAmbiguousError, an unconverged complex
/// eigensolve raises NoConvergenceError. Eigenvector columns are scaled by a
/// C_i unit so their entry of largest modulus has a nonnegative real C_i part,
/// which keeps the output deterministic without disturbing the eigenvalues.
RightEigenDecomposition right_eig(const QuatMatrix& a);

QuatMatrix reconstruct_right(const RightEigenDecomposition& d);

/// |A .L q - q*lambda| <= tol * |A|_F * |q|.
bool verify_right_pair(const QuatMatrix& a, const QuatMatrix& q, const Quaternion& lambda,
                       double tol = 1e-8);

/// |A .L q - lambda*q| <= tol * |A|_F * |q|.
bool verify_left_pair(const QuatMatrix& a, const QuatMatrix& q, const Quaternion& lambda,
                      double tol = 1e-8);

/// (Q_L .R Diag(Lambda_L)) .L Q_L^-L for a user-supplied left eigensystem.
QuatMatrix reconstruct_left(const QuatMatrix& q_l, const std::vector<Quaternion>& lambda_l);

/// Representative of S(lambda) in C_i with nonnegative i part.
Quaternion standardize_right_eigenvalue(const Quaternion& lambda);

}  // namespace qlin
