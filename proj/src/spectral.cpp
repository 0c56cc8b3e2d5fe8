#include "qlin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace qlin {

namespace {

// Deterministic column phase: scale by a C_i unit so the dominant symplectic
// part of the largest entry becomes real nonnegative. C_i units commute with
// the standard eigenvalues, so the pair property is untouched.
QuatMatrix canonicalize_column(const QuatMatrix& v) {
    std::size_t best = 0;
    double best_mod = -1.0;
    for (std::size_t r = 0; r < v.rows(); ++r) {
        const double m = norm_sq(v(r, 0));
        if (m > best_mod) {
            best_mod = m;
            best = r;
        }
    }
    const Quaternion& e = v(best, 0);
    const Complex z1{e.w, e.x};
    const Complex z2{e.y, e.z};
    const Complex zsel = std::abs(z1) >= std::abs(z2) ? std::conj(z1) : z2;
    const double za = std::abs(zsel);
    if (za == 0.0) return v;
    const Quaternion s{zsel.real() / za, zsel.imag() / za, 0.0, 0.0};
    return scalar_mul(ProductOrder::Right, s, v);
}

}  // namespace

RightEigenDecomposition right_eig(const QuatMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeMismatchError("right_eig needs a square matrix");
    const std::size_t m = a.rows();
    const double anorm = frobenius_norm(a);

    const ComplexMatrix chi = adjoint(a, AdjointSide::LeftAdjoint);
    const EigenResult er = eigen(chi);
    for (bool ok : er.converged)
        if (!ok) throw NoConvergenceError("adjoint eigensolve did not converge");

    // match the 2M adjoint eigenvalues into conjugate pairs
    const double pair_tol = 1e-7 * anorm;
    const std::size_t n2 = 2 * m;
    std::vector<bool> used(n2, false);
    std::vector<Quaternion> lambdas;
    std::vector<QuatMatrix> columns;
    for (std::size_t i = 0; i < n2; ++i) {
        if (used[i]) continue;
        std::size_t mate = n2;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < n2; ++j) {
            if (used[j]) continue;
            const double d = std::abs(er.values[i] - std::conj(er.values[j]));
            if (d < best) {
                best = d;
                mate = j;
            }
        }
        if (mate == n2 || best > pair_tol)
            throw DefectiveOrAmbiguousError(
                "adjoint spectrum does not split into conjugate pairs");
        used[i] = used[mate] = true;

        const Complex avg = 0.5 * (er.values[i] + std::conj(er.values[mate]));
        const std::size_t pick = avg.imag() >= 0.0 ? i : mate;
        const Complex lam = avg.imag() >= 0.0 ? avg : std::conj(avg);

        ComplexMatrix col(n2, 1);
        for (std::size_t r = 0; r < n2; ++r) col(r, 0) = er.vectors(r, pick);
        columns.push_back(canonicalize_column(unembed_vector(col, AdjointSide::LeftAdjoint)));
        lambdas.push_back(Quaternion{lam.real(), lam.imag(), 0.0, 0.0});
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        if (lambdas[l].w != lambdas[r].w) return lambdas[l].w < lambdas[r].w;
        return lambdas[l].x < lambdas[r].x;
    });

    RightEigenDecomposition d{QuatMatrix(m, m), {}};
    d.lambda.reserve(m);
    for (std::size_t c = 0; c < m; ++c) {
        d.lambda.push_back(lambdas[order[c]]);
        for (std::size_t r = 0; r < m; ++r) d.q(r, c) = columns[order[c]](r, 0);
    }

    try {
        (void)inverse(adjoint(d.q, AdjointSide::LeftAdjoint));
    } catch (const SingularMatrixError&) {
        throw DefectiveOrAmbiguousError("eigenvector matrix is numerically singular");
    }
    return d;
}

QuatMatrix reconstruct_right(const RightEigenDecomposition& d) {
    QuatMatrix lam(d.lambda.size(), 1);
    for (std::size_t i = 0; i < d.lambda.size(); ++i) lam(i, 0) = d.lambda[i];
    return mul_left(mul_left(d.q, diag(lam)), inv_left(d.q));
}

bool verify_right_pair(const QuatMatrix& a, const QuatMatrix& q, const Quaternion& lambda,
                       double tol) {
    if (a.rows() != a.cols() || q.cols() != 1 || q.rows() != a.cols())
        throw ShapeMismatchError("verify_right_pair expects square A and a matching column");
    const double res = distance(mul_left(a, q), scalar_mul(ProductOrder::Right, lambda, q));
    return res <= tol * frobenius_norm(a) * frobenius_norm(q);
}

bool verify_left_pair(const QuatMatrix& a, const QuatMatrix& q, const Quaternion& lambda,
                      double tol) {
    if (a.rows() != a.cols() || q.cols() != 1 || q.rows() != a.cols())
        throw ShapeMismatchError("verify_left_pair expects square A and a matching column");
    const double res = distance(mul_left(a, q), scalar_mul(ProductOrder::Left, lambda, q));
    return res <= tol * frobenius_norm(a) * frobenius_norm(q);
}

QuatMatrix reconstruct_left(const QuatMatrix& q_l, const std::vector<Quaternion>& lambda_l) {
    if (q_l.rows() != q_l.cols() || lambda_l.size() != q_l.cols())
        throw ShapeMismatchError("reconstruct_left expects square Q_L and matching eigenvalues");
    QuatMatrix lam(lambda_l.size(), 1);
    for (std::size_t i = 0; i < lambda_l.size(); ++i) lam(i, 0) = lambda_l[i];
    return mul_left(mul_right(q_l, diag(lam)), inv_left(q_l));
}

Quaternion standardize_right_eigenvalue(const Quaternion& lambda) {
    return canonical_representative(lambda);
}

}  // namespace qlin
