#pragma once

#include <vector>

#include "qlin/complex_matrix.hpp"

namespace qlin {

/// Solves M X = B by LU decomposition with partial pivoting (max modulus).
/// Throws SingularMatrixError when a pivot modulus drops to <= 1e-13 * |M|_F.
ComplexMatrix lu_solve(const ComplexMatrix& m, const ComplexMatrix& b);

ComplexMatrix inverse(const ComplexMatrix& m);

struct RankResult {
    std::size_t rank;
    ComplexMatrix nullbasis;  // cols x nullity, columns span the right null space
};

/// Default elimination tolerance: 1e-10 * max(rows, cols) * max|entry|.
double default_rank_tol(const ComplexMatrix& m);

/// Rank and right null-space basis via fully pivoted Gauss-Jordan elimination.
/// tol <= 0 selects the default tolerance.
RankResult rank_and_nullbasis(const ComplexMatrix& m, double tol = 0.0);

/// Leftmost-greedy independent column indices (Gaussian elimination processing
/// columns in order). tol <= 0 selects the default tolerance.
std::vector<std::size_t> independent_columns(const ComplexMatrix& m, double tol = 0.0);

/// Orthonormal basis of the column space (modified Gram-Schmidt, two passes).
ComplexMatrix orthonormal_colspace_basis(const ComplexMatrix& m, double tol = 0.0);

struct EigenResult {
    std::vector<Complex> values;
    ComplexMatrix vectors;        // columns, unit 2-norm
    std::vector<bool> converged;  // per value: QR deflated and |M v - lambda v| <= 1e-8 |M|_F
};

/// Dense eigensolver: Hessenberg reduction, Wilkinson-shifted QR iteration for
/// the values, inverse iteration on the original matrix for the vectors.
///
/// Non-convergence (iteration budget 100*n exhausted) is reported through the
/// per-value converged flags rather than by throwing; callers that need a full
/// decomposition inspect the flags.
EigenResult eigen(const ComplexMatrix& m, std::size_t size_limit = 128);

}  // namespace qlin
