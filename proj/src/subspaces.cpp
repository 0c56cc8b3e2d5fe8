#include "qlin/subspaces.hpp"

#include <cmath>

namespace qlin {

namespace {

bool is_left_kind(SubspaceKind k) {
    return k == SubspaceKind::LR || k == SubspaceKind::LC || k == SubspaceKind::LRN ||
           k == SubspaceKind::LCN;
}

bool is_row_kind(SubspaceKind k) {
    return k == SubspaceKind::LC || k == SubspaceKind::RC || k == SubspaceKind::LCN ||
           k == SubspaceKind::RCN;
}

bool is_null_kind(SubspaceKind k) {
    return k == SubspaceKind::LRN || k == SubspaceKind::RRN || k == SubspaceKind::LCN ||
           k == SubspaceKind::RCN;
}

// The embedded matrix whose column space / null space realizes the kind:
// column kinds use chi or chi' directly, row kinds its plain transpose
// (rows of chi are the embedded quaternion rows of A).
ComplexMatrix embedded_matrix(const QuatMatrix& a, SubspaceKind kind) {
    const ComplexMatrix chi = adjoint(
        a, is_left_kind(kind) ? AdjointSide::LeftAdjoint : AdjointSide::RightAdjoint);
    return is_row_kind(kind) ? transpose(chi) : chi;
}

// Side convention of the embedded vectors living in this kind's ambient space.
// Row embeddings as columns coincide with the opposite side's column embedding.
AdjointSide vector_side(SubspaceKind kind) {
    const bool left = is_left_kind(kind);
    const bool row = is_row_kind(kind);
    return (left != row) ? AdjointSide::LeftAdjoint : AdjointSide::RightAdjoint;
}

// Antilinear structure map pairing the two embedded copies of a quaternion
// vector: J([top; bottom]) = [-conj(bottom); conj(top)], J^2 = -1.
std::vector<Complex> structure_partner(const std::vector<Complex>& v) {
    const std::size_t m = v.size() / 2;
    std::vector<Complex> j(v.size());
    for (std::size_t r = 0; r < m; ++r) {
        j[r] = -std::conj(v[m + r]);
        j[m + r] = std::conj(v[r]);
    }
    return j;
}

double vec_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return std::sqrt(s);
}

// Greedy selection of J-pair representatives from the candidate vectors:
// candidates whose residual against the span of the already selected pairs
// exceeds tol are kept together with their structure partners. Throws if a
// partner unexpectedly collapses into the span (violated embedding structure).
std::vector<std::size_t> select_pair_representatives(
    const std::vector<std::vector<Complex>>& candidates, double tol) {
    std::vector<std::vector<Complex>> basis;
    std::vector<std::size_t> selected;
    auto project_out = [&](std::vector<Complex> v) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) {
                Complex d{};
                for (std::size_t i = 0; i < v.size(); ++i) d += std::conj(q[i]) * v[i];
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= d * q[i];
            }
        return v;
    };
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        std::vector<Complex> r = project_out(candidates[idx]);
        const double rn = vec_norm(r);
        if (rn <= tol) continue;
        for (Complex& e : r) e /= rn;
        basis.push_back(std::move(r));
        std::vector<Complex> rp = project_out(structure_partner(candidates[idx]));
        const double rpn = vec_norm(rp);
        if (rpn <= tol)
            throw Error("subspace dimension is not even: embedding structure violated");
        for (Complex& e : rp) e /= rpn;
        basis.push_back(std::move(rp));
        selected.push_back(idx);
    }
    return selected;
}

std::vector<Complex> column_of(const ComplexMatrix& m, std::size_t j) {
    std::vector<Complex> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

QuatMatrix unembed(const std::vector<Complex>& v, AdjointSide side) {
    ComplexMatrix c(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
    return unembed_vector(c, side);
}

std::size_t even_rank(const ComplexMatrix& work, double tol) {
    const std::size_t r = rank_and_nullbasis(work, tol).rank;
    if (r % 2 != 0) throw Error("adjoint rank must be even");
    return r;
}

}  // namespace

ScalarSide scalar_side_of(SubspaceKind kind) {
    switch (kind) {
        case SubspaceKind::LR:
        case SubspaceKind::LRN:
        case SubspaceKind::RC:
        case SubspaceKind::RCN:
            return ScalarSide::RightScalars;
        case SubspaceKind::RR:
        case SubspaceKind::RRN:
        case SubspaceKind::LC:
        case SubspaceKind::LCN:
            return ScalarSide::LeftScalars;
    }
    throw Error("unknown subspace kind");
}

SubspaceBasis basis(const QuatMatrix& a, SubspaceKind kind, double tol) {
    const ComplexMatrix work = embedded_matrix(a, kind);
    if (tol <= 0.0) tol = default_rank_tol(work);
    const AdjointSide vside = vector_side(kind);

    std::vector<std::vector<Complex>> candidates;
    if (is_null_kind(kind)) {
        const RankResult rr = rank_and_nullbasis(work, tol);
        if (rr.nullbasis.cols() % 2 != 0) throw Error("embedded nullity must be even");
        for (std::size_t j = 0; j < rr.nullbasis.cols(); ++j)
            candidates.push_back(column_of(rr.nullbasis, j));
    } else {
        // first half of the embedded columns: one candidate per quaternion column
        const std::size_t half = work.cols() / 2;
        for (std::size_t j = 0; j < half; ++j) candidates.push_back(column_of(work, j));
    }

    const std::vector<std::size_t> picks = select_pair_representatives(candidates, tol);
    SubspaceBasis out{kind, {}, scalar_side_of(kind)};
    for (std::size_t idx : picks) out.vectors.push_back(unembed(candidates[idx], vside));

    // dimension consistency against the elimination rank
    if (!is_null_kind(kind)) {
        if (2 * out.vectors.size() != even_rank(work, tol))
            throw Error("selected range basis does not match the adjoint rank");
    }
    return out;
}

bool contains(const QuatMatrix& a, SubspaceKind kind, const QuatMatrix& v, double tol) {
    if (v.cols() != 1) throw ShapeMismatchError("subspace membership expects a column vector");
    // LR/RR vectors live in H^M, LC/RC and LRN/RRN in H^N, LCN/RCN in H^M
    std::size_t want = 0;
    switch (kind) {
        case SubspaceKind::LR:
        case SubspaceKind::RR:
        case SubspaceKind::LCN:
        case SubspaceKind::RCN:
            want = a.rows();
            break;
        case SubspaceKind::LC:
        case SubspaceKind::RC:
        case SubspaceKind::LRN:
        case SubspaceKind::RRN:
            want = a.cols();
            break;
    }
    if (v.rows() != want) throw ShapeMismatchError("vector length does not match the subspace");

    if (is_null_kind(kind)) {
        double res = 0.0;
        switch (kind) {
            case SubspaceKind::LRN:
                res = frobenius_norm(mul_left(a, v));
                break;
            case SubspaceKind::RRN:
                res = frobenius_norm(mul_right(a, v));
                break;
            case SubspaceKind::LCN:
                res = frobenius_norm(mul_left(transpose(v), a));
                break;
            case SubspaceKind::RCN:
                res = frobenius_norm(mul_right(transpose(v), a));
                break;
            default:
                break;
        }
        return res <= tol * frobenius_norm(a) * frobenius_norm(v);
    }

    const ComplexMatrix work = embedded_matrix(a, kind);
    const ComplexMatrix q = orthonormal_colspace_basis(work);
    ComplexMatrix e = embed_vector(v, vector_side(kind));
    const ComplexMatrix proj = q * (herm(q) * e);
    return distance(e, proj) <= tol * frobenius_norm(e);
}

std::size_t rank_left(const QuatMatrix& a) {
    const ComplexMatrix chi = adjoint(a, AdjointSide::LeftAdjoint);
    return even_rank(chi, default_rank_tol(chi)) / 2;
}

std::size_t rank_right(const QuatMatrix& a) {
    const ComplexMatrix chi = adjoint(a, AdjointSide::RightAdjoint);
    return even_rank(chi, default_rank_tol(chi)) / 2;
}

}  // namespace qlin
