#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qlin/quaternion.hpp"

namespace qlin {

/// Scalar order of a product: Left multiplies matrix entries from the left,
/// Right from the right.
enum class ProductOrder { Left, Right };

/// The six scalar orderings of a three-matrix product. Each value names the
/// bracketed left/right composition that realizes the corresponding double sum.
enum class TripleOrder {
    LL,         // sum a*b*c  = (A .L B) .L C
    RR,         // sum c*b*a  = (A .R B) .R C
    L_of_R,     // sum a*c*b  =  A .L (B .R C)
    LB_then_R,  // sum c*a*b  = (A .L B) .R C
    RB_then_L,  // sum b*a*c  = (A .R B) .L C
    R_of_L,     // sum b*c*a  =  A .R (B .L C)
};

/// Dense quaternion matrix, row-major. Immutable by convention: all operations
/// return new values, so instances can be shared freely across threads.
class QuatMatrix {
public:
    QuatMatrix(std::size_t rows, std::size_t cols);
    QuatMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> data);
    QuatMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Quaternion>& data() const { return data_; }

    bool operator==(const QuatMatrix&) const = default;

    static QuatMatrix identity(std::size_t n);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Quaternion> data_;
};

QuatMatrix operator+(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix operator-(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix operator-(const QuatMatrix& a);
QuatMatrix operator*(double s, const QuatMatrix& a);

/// [A .L B]_{m,n} = sum_k A[m,k] * B[k,n]; scalars of A multiply from the left.
QuatMatrix mul_left(const QuatMatrix& a, const QuatMatrix& b);

/// [A .R B]_{m,n} = sum_k B[k,n] * A[m,k]; scalars of A multiply from the right.
QuatMatrix mul_right(const QuatMatrix& a, const QuatMatrix& b);

QuatMatrix transpose(const QuatMatrix& a);
QuatMatrix conj(const QuatMatrix& a);
QuatMatrix herm(const QuatMatrix& a);

QuatMatrix triple_product(const QuatMatrix& a, const QuatMatrix& b, const QuatMatrix& c,
                          TripleOrder order);

/// Column-major vectorization: columns stacked top to bottom.
QuatMatrix vec(const QuatMatrix& a);
QuatMatrix unvec(const QuatMatrix& v, std::size_t rows, std::size_t cols);

/// Square matrix with the entries of a column vector on the main diagonal.
QuatMatrix diag(const QuatMatrix& v);

/// Left: s*A[m,n]; Right: A[m,n]*s.
QuatMatrix scalar_mul(ProductOrder side, const Quaternion& s, const QuatMatrix& a);

QuatMatrix hcat(const QuatMatrix& a, const QuatMatrix& b);
QuatMatrix vcat(const QuatMatrix& a, const QuatMatrix& b);

double frobenius_norm(const QuatMatrix& a);
double max_abs_component(const QuatMatrix& a);

/// Frobenius norm of a - b.
double distance(const QuatMatrix& a, const QuatMatrix& b);

}  // namespace qlin
