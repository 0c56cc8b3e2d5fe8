#include "qlin/complex_engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace qlin {

namespace {

double vec_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return std::sqrt(s);
}

void swap_rows(ComplexMatrix& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

// ---------------------------------------------------------------------------
// Hessenberg reduction (Householder, no transform accumulation)
// ---------------------------------------------------------------------------

void hessenberg_inplace(ComplexMatrix& h) {
    const std::size_t n = h.rows();
    if (n < 3) return;
    std::vector<Complex> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;
        const Complex alpha = h(k + 1, k);
        const Complex phase = alpha == Complex{} ? Complex{1.0} : alpha / std::abs(alpha);
        for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
        v[k + 1] += phase * xnorm;
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0) continue;
        const double tau = 2.0 / vnorm2;
        // H <- P H with P = I - tau v v^H acting on rows k+1..n-1
        for (std::size_t col = k; col < n; ++col) {
            Complex s{};
            for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, col);
            s *= tau;
            for (std::size_t i = k + 1; i < n; ++i) h(i, col) -= v[i] * s;
        }
        // H <- H P on columns k+1..n-1
        for (std::size_t row = 0; row < n; ++row) {
            Complex s{};
            for (std::size_t i = k + 1; i < n; ++i) s += h(row, i) * v[i];
            s *= tau;
            for (std::size_t i = k + 1; i < n; ++i) h(row, i) -= s * std::conj(v[i]);
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

// ---------------------------------------------------------------------------
// Shifted QR iteration on the Hessenberg form (values only)
// ---------------------------------------------------------------------------

struct Givens {
    double c = 1.0;
    Complex s{};
};

Givens make_givens(Complex f, Complex g) {
    const double af = std::abs(f);
    const double ag = std::abs(g);
    if (ag == 0.0) return {1.0, Complex{}};
    const double d = std::hypot(af, ag);
    if (af == 0.0) return {0.0, std::conj(g) / ag};
    return {af / d, (f / af) * std::conj(g) / static_cast<Complex>(d)};
}

void rotate_rows(ComplexMatrix& h, std::size_t i, const Givens& g, std::size_t c0, std::size_t c1) {
    for (std::size_t j = c0; j < c1; ++j) {
        const Complex a = h(i, j);
        const Complex b = h(i + 1, j);
        h(i, j) = g.c * a + g.s * b;
        h(i + 1, j) = -std::conj(g.s) * a + g.c * b;
    }
}

void rotate_cols(ComplexMatrix& h, std::size_t j, const Givens& g, std::size_t r0, std::size_t r1) {
    for (std::size_t r = r0; r < r1; ++r) {
        const Complex a = h(r, j);
        const Complex b = h(r, j + 1);
        h(r, j) = g.c * a + std::conj(g.s) * b;
        h(r, j + 1) = -g.s * a + g.c * b;
    }
}

Complex wilkinson_shift(const ComplexMatrix& h, std::size_t hi) {
    const Complex a = h(hi - 1, hi - 1);
    const Complex b = h(hi - 1, hi);
    const Complex c = h(hi, hi - 1);
    const Complex d = h(hi, hi);
    const Complex tr = a + d;
    const Complex disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
    const Complex l1 = 0.5 * (tr + disc);
    const Complex l2 = 0.5 * (tr - disc);
    return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

void qr_step(ComplexMatrix& h, std::size_t lo, std::size_t hi, Complex sigma) {
    const std::size_t n = h.rows();
    std::vector<Givens> rots(hi - lo);
    for (std::size_t d = lo; d <= hi; ++d) h(d, d) -= sigma;
    for (std::size_t i = lo; i < hi; ++i) {
        const Givens g = make_givens(h(i, i), h(i + 1, i));
        rots[i - lo] = g;
        rotate_rows(h, i, g, i, n);
        h(i + 1, i) = 0.0;
    }
    for (std::size_t i = lo; i < hi; ++i) rotate_cols(h, i, rots[i - lo], 0, i + 2);
    for (std::size_t d = lo; d <= hi; ++d) h(d, d) += sigma;
}

// Deflation criterion: |h(i, i-1)| <= 1e-14 * (|h(i-1,i-1)| + |h(i,i)|).
bool subdiag_negligible(const ComplexMatrix& h, std::size_t i) {
    return std::abs(h(i, i - 1)) <= 1e-14 * (std::abs(h(i - 1, i - 1)) + std::abs(h(i, i)));
}

std::vector<bool> qr_eigenvalues(ComplexMatrix& h) {
    const std::size_t n = h.rows();
    std::vector<bool> ok(n, true);
    if (n < 2) return ok;
    const std::size_t max_iter = 100 * n;
    std::size_t iter = 0;
    std::size_t stag = 0;
    std::size_t hi = n - 1;
    while (true) {
        while (hi > 0 && subdiag_negligible(h, hi)) {
            h(hi, hi - 1) = 0.0;
            --hi;
            stag = 0;
        }
        if (hi == 0) break;
        std::size_t lo = hi;
        while (lo > 0) {
            if (subdiag_negligible(h, lo)) {
                h(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (iter >= max_iter) {
            for (std::size_t i = 0; i <= hi; ++i) ok[i] = false;
            break;
        }
        Complex sigma;
        if (stag > 0 && stag % 12 == 0)
            sigma = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));  // exceptional shift
        else
            sigma = wilkinson_shift(h, hi);
        qr_step(h, lo, hi, sigma);
        ++iter;
        ++stag;
    }
    return ok;
}

// ---------------------------------------------------------------------------
// Inverse iteration for eigenvectors
// ---------------------------------------------------------------------------

struct FlooredLU {
    ComplexMatrix lu;
    std::vector<std::size_t> piv;
};

// LU with partial pivoting; pivots below floor_val are replaced, never rejected.
FlooredLU floored_lu(ComplexMatrix a, double floor_val) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> piv(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                p = i;
            }
        piv[k] = p;
        swap_rows(a, k, p);
        Complex pivot = a(k, k);
        if (std::abs(pivot) < floor_val) {
            pivot = pivot == Complex{} ? Complex{floor_val} : pivot * (floor_val / std::abs(pivot));
            a(k, k) = pivot;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            a(i, k) /= pivot;
            const Complex lik = a(i, k);
            if (lik == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= lik * a(k, j);
        }
    }
    return {std::move(a), std::move(piv)};
}

std::vector<Complex> lu_apply(const FlooredLU& f, std::vector<Complex> b) {
    const std::size_t n = f.lu.rows();
    for (std::size_t k = 0; k < n; ++k)
        if (f.piv[k] != k) std::swap(b[k], b[f.piv[k]]);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0; k < i; ++k) b[i] -= f.lu(i, k) * b[k];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) b[i] -= f.lu(i, k) * b[k];
        b[i] /= f.lu(i, i);
    }
    return b;
}

double pair_residual(const ComplexMatrix& m, const std::vector<Complex>& v, Complex lambda) {
    const std::size_t n = m.rows();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex acc = -lambda * v[i];
        for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * v[j];
        s += std::norm(acc);
    }
    return std::sqrt(s);
}

std::vector<Complex> inverse_iteration(const ComplexMatrix& m, Complex lambda, std::size_t index,
                                       double nrm, double& best_res) {
    const std::size_t n = m.rows();
    ComplexMatrix shifted = m;
    for (std::size_t d = 0; d < n; ++d) shifted(d, d) -= lambda;
    const double floor_val = std::max(2.220446049250313e-16 * nrm, 1e-290);
    const FlooredLU f = floored_lu(std::move(shifted), floor_val);

    // deterministic start vector, distinct per eigenvalue index so repeated
    // eigenvalues still receive independent vectors
    std::mt19937_64 rng(0x9E3779B97F4A7C15ULL + 0x10001ULL * (index + 1));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> b(n);
    auto randomize = [&] {
        for (Complex& e : b) e = Complex{u(rng), u(rng)};
        const double bn = vec_norm(b);
        for (Complex& e : b) e /= bn;
    };
    randomize();

    std::vector<Complex> best = b;
    best_res = pair_residual(m, best, lambda);
    for (int t = 0; t < 4; ++t) {
        std::vector<Complex> x = lu_apply(f, b);
        const double xn = vec_norm(x);
        if (!(xn > 0.0) || !std::isfinite(xn)) {
            randomize();
            continue;
        }
        for (Complex& e : x) e /= xn;
        const double res = pair_residual(m, x, lambda);
        if (res < best_res) {
            best = x;
            best_res = res;
        }
        if (best_res <= 1e-13 * std::max(1.0, nrm)) break;
        b = std::move(x);
    }
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// public interface
// ---------------------------------------------------------------------------

ComplexMatrix lu_solve(const ComplexMatrix& m, const ComplexMatrix& b) {
    if (m.rows() != m.cols()) throw ShapeMismatchError("lu_solve needs a square matrix");
    if (b.rows() != m.rows()) throw ShapeMismatchError("lu_solve: right-hand side row count mismatch");
    const std::size_t n = m.rows();
    const double thresh = 1e-13 * frobenius_norm(m);
    ComplexMatrix a = m;
    ComplexMatrix x = b;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                p = i;
            }
        if (best <= thresh) throw SingularMatrixError("matrix is singular to working precision");
        swap_rows(a, k, p);
        swap_rows(x, k, p);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex lik = a(i, k) / a(k, k);
            if (lik == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= lik * a(k, j);
            for (std::size_t c = 0; c < x.cols(); ++c) x(i, c) -= lik * x(k, c);
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            Complex acc = x(i, c);
            for (std::size_t k = i + 1; k < n; ++k) acc -= a(i, k) * x(k, c);
            x(i, c) = acc / a(i, i);
        }
    }
    return x;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatchError("inverse needs a square matrix");
    return lu_solve(m, ComplexMatrix::identity(m.rows()));
}

double default_rank_tol(const ComplexMatrix& m) {
    return 1e-10 * static_cast<double>(std::max(m.rows(), m.cols())) * max_abs(m);
}

RankResult rank_and_nullbasis(const ComplexMatrix& m, double tol) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (tol <= 0.0) tol = default_rank_tol(m);
    ComplexMatrix r = m;
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> used(cols, false);
    std::size_t s = 0;
    while (s < rows && pivot_cols.size() < cols) {
        std::size_t bi = 0, bj = 0;
        double best = 0.0;
        for (std::size_t i = s; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!used[j] && std::abs(r(i, j)) > best) {
                    best = std::abs(r(i, j));
                    bi = i;
                    bj = j;
                }
        if (best <= tol) break;
        used[bj] = true;
        pivot_cols.push_back(bj);
        swap_rows(r, s, bi);
        const Complex pv = r(s, bj);
        for (std::size_t j = 0; j < cols; ++j) r(s, j) /= pv;
        r(s, bj) = 1.0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == s) continue;
            const Complex fct = r(i, bj);
            if (fct == Complex{}) continue;
            for (std::size_t j = 0; j < cols; ++j) r(i, j) -= fct * r(s, j);
            r(i, bj) = 0.0;
        }
        ++s;
    }
    const std::size_t rank = pivot_cols.size();
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols; ++j)
        if (!used[j]) free_cols.push_back(j);
    ComplexMatrix nb(cols, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        nb(free_cols[t], t) = 1.0;
        for (std::size_t srow = 0; srow < rank; ++srow)
            nb(pivot_cols[srow], t) = -r(srow, free_cols[t]);
    }
    return {rank, std::move(nb)};
}

std::vector<std::size_t> independent_columns(const ComplexMatrix& m, double tol) {
    if (tol <= 0.0) tol = default_rank_tol(m);
    ComplexMatrix w = m;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t p = r;
        double best = std::abs(w(r, j));
        for (std::size_t i = r + 1; i < rows; ++i)
            if (std::abs(w(i, j)) > best) {
                best = std::abs(w(i, j));
                p = i;
            }
        if (best <= tol) continue;
        swap_rows(w, r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Complex fct = w(i, j) / w(r, j);
            if (fct == Complex{}) continue;
            for (std::size_t jj = j; jj < cols; ++jj) w(i, jj) -= fct * w(r, jj);
        }
        piv.push_back(j);
        ++r;
    }
    return piv;
}

ComplexMatrix orthonormal_colspace_basis(const ComplexMatrix& m, double tol) {
    if (tol <= 0.0) tol = default_rank_tol(m);
    const std::size_t rows = m.rows();
    std::vector<std::vector<Complex>> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<Complex> v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = m(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) {
                Complex d{};
                for (std::size_t i = 0; i < rows; ++i) d += std::conj(q[i]) * v[i];
                for (std::size_t i = 0; i < rows; ++i) v[i] -= d * q[i];
            }
        const double nv = vec_norm(v);
        if (nv <= tol) continue;
        for (Complex& e : v) e /= nv;
        basis.push_back(std::move(v));
    }
    ComplexMatrix r(rows, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) r(i, j) = basis[j][i];
    return r;
}

EigenResult eigen(const ComplexMatrix& m, std::size_t size_limit) {
    if (m.rows() != m.cols()) throw ShapeMismatchError("eigen needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) throw ShapeMismatchError("eigen needs a nonempty matrix");
    if (n > size_limit) throw Error("matrix exceeds the eigensolver size limit");
    const double nrm = frobenius_norm(m);

    ComplexMatrix h = m;
    hessenberg_inplace(h);
    const std::vector<bool> qr_ok = qr_eigenvalues(h);

    EigenResult result;
    result.values.resize(n);
    for (std::size_t d = 0; d < n; ++d) result.values[d] = h(d, d);
    result.vectors = ComplexMatrix(n, n);
    result.converged.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        double res = 0.0;
        const std::vector<Complex> v = inverse_iteration(m, result.values[k], k, nrm, res);
        for (std::size_t i = 0; i < n; ++i) result.vectors(i, k) = v[i];
        result.converged[k] = qr_ok[k] && res <= 1e-8 * nrm;
    }
    return result;
}

}  // namespace qlin
