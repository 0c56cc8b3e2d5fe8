// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. The CLI binary under test is passed with --cli.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qlin/adjoint.hpp"
#include "qlin/complex_engine.hpp"
#include "qlin/qdft.hpp"
#include "qlin/qmat_io.hpp"
#include "qlin/spectral.hpp"
#include "qlin/subspaces.hpp"
#include "qlin/tensor.hpp"
#include "qlin/text.hpp"
#include "qlin/widely_linear.hpp"

using namespace qlin;
using qtest::Rng;

namespace {

std::string g_cli_path;

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

const PureUnitQuaternion mu_i = PureUnitQuaternion::i();
const PureUnitQuaternion mu_j = PureUnitQuaternion::j();

// --------------------------------------------------------------------------
// criterion 1: ordered products against the independent oracles, bitwise
// --------------------------------------------------------------------------

bool criterion_1(std::string& detail) {
    Checker c;
    const TripleOrder all_orders[] = {TripleOrder::LL,        TripleOrder::RR,
                                      TripleOrder::L_of_R,    TripleOrder::LB_then_R,
                                      TripleOrder::RB_then_L, TripleOrder::R_of_L};
    Rng rng(42);
    for (int t = 0; t < 200 && c.ok; ++t) {
        const std::size_t m = 1 + rng.integer(0, 5);
        const std::size_t k = 1 + rng.integer(0, 5);
        const std::size_t l = 1 + rng.integer(0, 5);
        const std::size_t n = 1 + rng.integer(0, 5);

        // two-factor products: identical summation order, continuous entries
        const QuatMatrix a = rng.qmatrix(m, k);
        const QuatMatrix b = rng.qmatrix(k, n);
        c.expect(mul_left(a, b) == qtest::oracle_mul_left(a, b), "mul_left differs from oracle");
        c.expect(mul_right(a, b) == qtest::oracle_mul_right(a, b), "mul_right differs from oracle");

        // triple products: integer components keep every sum exact, so the
        // bracketed compositions must agree with the double-sum oracles bitwise
        const QuatMatrix ia = rng.int_qmatrix(m, k);
        const QuatMatrix ib = rng.int_qmatrix(k, l);
        const QuatMatrix ic = rng.int_qmatrix(l, n);
        for (TripleOrder order : all_orders)
            c.expect(triple_product(ia, ib, ic, order) == qtest::oracle_triple(ia, ib, ic, order),
                     "triple_product differs from oracle");
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------------------
// criterion 2: transpose / conjugation / Hermitian / associativity identities
// --------------------------------------------------------------------------

bool criterion_2(std::string& detail) {
    Checker c;
    Rng rng(43);
    for (int t = 0; t < 100 && c.ok; ++t) {
        const std::size_t m = 1 + rng.integer(0, 4);
        const std::size_t k = 1 + rng.integer(0, 4);
        const std::size_t l = 1 + rng.integer(0, 4);
        const std::size_t n = 1 + rng.integer(0, 4);
        const QuatMatrix a = rng.qmatrix(m, k);
        const QuatMatrix b = rng.qmatrix(k, l);
        const QuatMatrix d = rng.qmatrix(l, n);

        c.expect(distance(transpose(mul_left(a, b)), mul_right(transpose(b), transpose(a))) <=
                     1e-12,
                 "transpose rule");
        c.expect(distance(transpose(mul_right(a, b)), mul_left(transpose(b), transpose(a))) <=
                     1e-12,
                 "transpose rule (right)");
        c.expect(distance(conj(mul_left(a, b)), mul_right(conj(a), conj(b))) <= 1e-12,
                 "conjugation rule");
        c.expect(distance(herm(mul_left(a, b)), mul_left(herm(b), herm(a))) <= 1e-12,
                 "hermitian rule (left)");
        c.expect(distance(herm(mul_right(a, b)), mul_right(herm(b), herm(a))) <= 1e-12,
                 "hermitian rule (right)");
        c.expect(distance(mul_left(mul_left(a, b), d), mul_left(a, mul_left(b, d))) <= 1e-12,
                 "left associativity");
        c.expect(distance(mul_right(mul_right(a, b), d), mul_right(a, mul_right(b, d))) <= 1e-12,
                 "right associativity");

        // mixed bracketings commute the outer scalars across each other, so
        // the outer factors share one subfield while the middle stays free
        const PureUnitQuaternion mu = rng.puq();
        const QuatMatrix sa = rng.cmu_matrix(m, k, mu);
        const QuatMatrix sm = rng.qmatrix(k, l);
        const QuatMatrix sc = rng.cmu_matrix(l, n, mu);
        c.expect(distance(mul_right(mul_left(sa, sm), sc), mul_left(sa, mul_right(sm, sc))) <=
                     1e-12,
                 "mixed associativity (L then R)");
        c.expect(distance(mul_left(mul_right(sa, sm), sc), mul_right(sa, mul_left(sm, sc))) <=
                     1e-12,
                 "mixed associativity (R then L)");
    }

    // generic counterexample: (i .L j) .R k = -1 but i .L (j .R k) = +1
    const QuatMatrix ei{{Quaternion::unit_i()}};
    const QuatMatrix ej{{Quaternion::unit_j()}};
    const QuatMatrix ek{{Quaternion::unit_k()}};
    c.expect(distance(mul_right(mul_left(ei, ej), ek), mul_left(ei, mul_right(ej, ek))) > 1e-3,
             "generic mixed associativity should fail");
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------------------
// criterion 3: inverse suite
// --------------------------------------------------------------------------

QuatMatrix well_conditioned(Rng& rng, std::size_t n) {
    for (;;) {
        const QuatMatrix a = rng.qmatrix(n, n);
        try {
            const ComplexMatrix chi = adjoint(a, AdjointSide::LeftAdjoint);
            if (frobenius_norm(chi) * frobenius_norm(inverse(chi)) < 1e5) return a;
        } catch (const SingularMatrixError&) {
        }
    }
}

bool criterion_3(std::string& detail) {
    Checker c;
    Rng rng(44);
    for (int t = 0; t < 100 && c.ok; ++t) {
        const std::size_t n = 1 + rng.integer(0, 7);
        const QuatMatrix a = well_conditioned(rng, n);
        const QuatMatrix al = inv_left(a);
        const QuatMatrix ar = inv_right(a);
        const QuatMatrix eye = QuatMatrix::identity(n);
        const std::size_t p = 1 + rng.integer(0, 2);
        const QuatMatrix x = rng.qmatrix(n, p);
        const QuatMatrix y = rng.qmatrix(p, n);

        c.expect(distance(mul_left(al, mul_left(a, x)), x) <=
                     1e-10 * std::max(1.0, frobenius_norm(x)),
                 "left inverse condition");
        c.expect(distance(mul_right(ar, mul_right(a, x)), x) <=
                     1e-10 * std::max(1.0, frobenius_norm(x)),
                 "right inverse condition");
        c.expect(distance(mul_left(mul_left(y, a), al), y) <=
                     1e-10 * std::max(1.0, frobenius_norm(y)),
                 "left order-swapped condition");
        c.expect(distance(mul_right(mul_right(y, a), ar), y) <=
                     1e-10 * std::max(1.0, frobenius_norm(y)),
                 "right order-swapped condition");
        c.expect(distance(mul_left(al, a), eye) <= 1e-10, "A^-L .L A = I");
        c.expect(distance(mul_right(ar, a), eye) <= 1e-10, "A^-R .R A = I");
        c.expect(distance(mul_left(a, al), eye) <= 1e-10, "A .L A^-L = I");
        c.expect(distance(mul_right(a, ar), eye) <= 1e-10, "A .R A^-R = I");
        c.expect(distance(transpose(al), inv_right(transpose(a))) <= 1e-10,
                 "inverse transpose relation");
        c.expect(distance(transpose(ar), inv_left(transpose(a))) <= 1e-10,
                 "inverse transpose relation (right)");

        // adjoint homomorphism
        const QuatMatrix b = rng.qmatrix(n, n);
        c.expect(distance(adjoint(mul_left(a, b), AdjointSide::LeftAdjoint),
                          adjoint(a, AdjointSide::LeftAdjoint) *
                              adjoint(b, AdjointSide::LeftAdjoint)) <= 1e-12,
                 "left adjoint homomorphism");
        c.expect(distance(adjoint(mul_right(a, b), AdjointSide::RightAdjoint),
                          adjoint(a, AdjointSide::RightAdjoint) *
                              adjoint(b, AdjointSide::RightAdjoint)) <= 1e-12,
                 "right adjoint homomorphism");

        // subfield reduction
        const PureUnitQuaternion mu = rng.puq();
        const PureUnitQuaternion perp = orthogonal_complement(mu);
        QuatMatrix s = rng.cmu_matrix(n, n, mu);
        for (std::size_t d = 0; d < n; ++d)
            s(d, d) = s(d, d) + Quaternion::real(2.0);  // keep it invertible
        c.expect(distance(inv_left(s, mu, perp), inv_right(s, mu, perp)) <= 1e-10,
                 "subfield reduction to one inverse");
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------------------
// criterion 4: subspace suite
// --------------------------------------------------------------------------

bool criterion_4(std::string& detail) {
    Checker c;
    Rng rng(45);
    for (int t = 0; t < 12 && c.ok; ++t) {
        const std::size_t rows = 2 + rng.integer(0, 2);
        const std::size_t cols = 2 + rng.integer(0, 2);
        const std::size_t r = 1 + rng.integer(0, 1);
        const QuatMatrix a = mul_left(rng.qmatrix(rows, r), rng.qmatrix(r, cols));
        const QuatMatrix at = transpose(a);

        const std::pair<SubspaceKind, SubspaceKind> pairs[] = {
            {SubspaceKind::LR, SubspaceKind::RC},
            {SubspaceKind::RR, SubspaceKind::LC},
            {SubspaceKind::LRN, SubspaceKind::RCN},
            {SubspaceKind::RRN, SubspaceKind::LCN},
        };
        for (const auto& [lhs, rhs] : pairs) {
            const SubspaceBasis bl = basis(a, lhs);
            const SubspaceBasis br = basis(at, rhs);
            c.expect(bl.vectors.size() == br.vectors.size(), "transpose relation dimensions");
            for (const QuatMatrix& v : bl.vectors)
                c.expect(contains(at, rhs, v, 1e-9), "transpose relation membership");
            for (const QuatMatrix& v : br.vectors)
                c.expect(contains(a, lhs, v, 1e-9), "transpose relation membership (reverse)");
        }

        c.expect(basis(a, SubspaceKind::LR).vectors.size() +
                         basis(a, SubspaceKind::LRN).vectors.size() ==
                     cols,
                 "rank-nullity (left family)");
        c.expect(basis(a, SubspaceKind::RR).vectors.size() +
                         basis(a, SubspaceKind::RRN).vectors.size() ==
                     cols,
                 "rank-nullity (right family)");

        const SubspaceKind closure_kinds[] = {SubspaceKind::LR, SubspaceKind::RR,
                                              SubspaceKind::LRN, SubspaceKind::RRN,
                                              SubspaceKind::LC, SubspaceKind::RC};
        for (SubspaceKind kind : closure_kinds) {
            const SubspaceBasis b = basis(a, kind);
            if (b.vectors.empty()) continue;
            const ProductOrder side = b.scalar_side == ScalarSide::RightScalars
                                          ? ProductOrder::Right
                                          : ProductOrder::Left;
            QuatMatrix combo = scalar_mul(side, rng.quat(), b.vectors[0]);
            if (b.vectors.size() > 1) combo = combo + scalar_mul(side, rng.quat(), b.vectors[1]);
            c.expect(contains(a, kind, combo, 1e-9), "scalar-side closure");
        }
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------------------
// criterion 5: tensor suite
// --------------------------------------------------------------------------

bool criterion_5(std::string& detail) {
    Checker c;
    const VecIdentityForm forms[] = {VecIdentityForm::L_R, VecIdentityForm::R_L,
                                     VecIdentityForm::LB_R, VecIdentityForm::RB_L};
    for (int seed = 0; seed < 100 && c.ok; ++seed) {
        Rng rng(4600 + seed);
        const std::size_t m = 1 + rng.integer(0, 3);
        const std::size_t k = 1 + rng.integer(0, 3);
        const std::size_t l = 1 + rng.integer(0, 3);
        const std::size_t n = 1 + rng.integer(0, 3);
        const QuatMatrix a = rng.qmatrix(m, k);
        const QuatMatrix b = rng.qmatrix(k, l);
        const QuatMatrix d = rng.qmatrix(l, n);
        for (VecIdentityForm form : forms) {
            const VecIdentitySides s = vec_identity_kron(a, b, d, form);
            c.expect(distance(s.lhs, s.rhs) <= 1e-12, "kron vec identity");
        }
        const QuatMatrix bv = rng.qmatrix(k, 1);
        const QuatMatrix ckn = rng.qmatrix(k, n);
        for (VecIdentityForm form : forms) {
            const VecIdentitySides s = vec_identity_kr(a, bv, ckn, form);
            c.expect(distance(s.lhs, s.rhs) <= 1e-12, "khatri-rao vec identity");
        }
        c.expect(transpose(kron(a, b, ProductOrder::Left)) ==
                     kron(transpose(a), transpose(b), ProductOrder::Left),
                 "kron transpose rule (left)");
        c.expect(transpose(kron(a, b, ProductOrder::Right)) ==
                     kron(transpose(a), transpose(b), ProductOrder::Right),
                 "kron transpose rule (right)");
    }

    int big = 0;
    for (int seed = 0; seed < 100; ++seed) {
        Rng rng(4700 + seed);
        const QuatMatrix a = rng.qmatrix(2, 3);
        const QuatMatrix b = rng.qmatrix(3, 2);
        const QuatMatrix d = rng.qmatrix(2, 2);
        const QuatMatrix lhs = vec(mul_left(mul_left(a, b), d));
        const QuatMatrix rhs = mul_left(kron(transpose(d), a, ProductOrder::Left), vec(b));
        if (distance(lhs, rhs) / frobenius_norm(lhs) > 1e-3) ++big;
    }
    c.expect(big >= 95, "negative control should fail on at least 95 of 100 seeds");
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------------------
// criterion 6: widely-linear solver
// --------------------------------------------------------------------------

bool criterion_6(std::string& detail) {
    Checker c;
    int solved = 0;
    for (int seed = 0; solved < 100 && seed < 150 && c.ok; ++seed) {
        Rng rng(4800 + seed);
        const ComplexMatrix za = rng.cmatrix(3, 3);
        const ComplexMatrix zb = rng.cmatrix(3, 3);
        const ComplexMatrix zc = rng.cmatrix(3, 2);
        const WidelyLinearSystem sys = WidelyLinearSystem::from_complex(za, zb, zc);
        QuatMatrix x(1, 1);
        try {
            x = solve_widely_linear(sys);
        } catch (const SingularMatrixError&) {
            continue;
        }
        ++solved;
        const double res = distance(mul_left(sys.a, x) + mul_left(sys.b, conj(x)), sys.c);
        c.expect(res <= 1e-10 * (frobenius_norm(sys.a) + frobenius_norm(sys.b)) *
                            std::max(1.0, frobenius_norm(x)),
                 "substitution residual");
        const ComplexMatrix zx = qtest::oracle_realified_widely_linear(za, zb, zc);
        c.expect(distance(x, lift_complex(zx, mu_i)) <= 1e-9 * std::max(1.0, frobenius_norm(x)),
                 "agreement with the realified solve");
    }
    c.expect(solved == 100, "not enough solvable random systems");

    const QuatMatrix g = vcat(QuatMatrix::identity(3),
                              scalar_mul(ProductOrder::Left, mu_j.axis(), QuatMatrix::identity(3)));
    const QuatMatrix two_eye = 2.0 * QuatMatrix::identity(3);
    c.expect(distance(mul_left(herm(g), g), two_eye) <= 1e-13, "G^H .L G = 2I");
    c.expect(distance(mul_right(herm(g), g), two_eye) <= 1e-13, "G^H .R G = 2I");
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------------------
// criterion 7: spectral suite
// --------------------------------------------------------------------------

bool criterion_7(std::string& detail) {
    Checker c;
    int done = 0;
    for (int seed = 0; done < 100 && seed < 120 && c.ok; ++seed) {
        Rng rng(4900 + seed);
        const QuatMatrix a = rng.qmatrix(5, 5);
        RightEigenDecomposition d{QuatMatrix(1, 1), {}};
        try {
            d = right_eig(a);
        } catch (const Error&) {
            continue;  // non-convergent or ambiguous draw; criterion covers convergent ones
        }
        ++done;
        c.expect(d.lambda.size() == 5, "exactly M standard eigenvalues");
        for (const Quaternion& l : d.lambda)
            c.expect(l.y == 0.0 && l.z == 0.0 && l.x >= 0.0, "standard eigenvalue form");
        c.expect(distance(reconstruct_right(d), a) <= 1e-7 * frobenius_norm(a),
                 "reconstruction residual");

        QuatMatrix col(5, 1);
        for (std::size_t r = 0; r < 5; ++r) col(r, 0) = d.q(r, 0);
        for (int t = 0; t < 20; ++t) {
            const Quaternion s = rng.unit_quat();
            c.expect(verify_right_pair(a, scalar_mul(ProductOrder::Right, s, col),
                                       (inverse(s) * d.lambda[0]) * s, 1e-8),
                     "similarity orbit of right eigenvalues");
        }
    }
    c.expect(done == 100, "not enough convergent decompositions");

    // C_i matrices reproduce the classical complex spectrum
    for (int seed = 0; seed < 10 && c.ok; ++seed) {
        Rng rng(5000 + seed);
        const ComplexMatrix z = rng.cmatrix(5, 5);
        const QuatMatrix a = lift_complex(z, mu_i);
        const RightEigenDecomposition d = right_eig(a);
        const EigenResult er = eigen(z);
        std::vector<Quaternion> classical;
        for (const Complex& v : er.values)
            classical.push_back(Quaternion{v.real(), std::fabs(v.imag()), 0, 0});
        std::sort(classical.begin(), classical.end(), [](const Quaternion& l, const Quaternion& r) {
            return l.w < r.w || (l.w == r.w && l.x < r.x);
        });
        for (std::size_t k = 0; k < 5; ++k)
            c.expect(modulus(classical[k] - d.lambda[k]) <= 1e-8 * (1.0 + frobenius_norm(a)),
                     "subfield spectrum matches the complex spectrum");
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------------------
// criterion 8: QDFT suite
// --------------------------------------------------------------------------

bool criterion_8(std::string& detail) {
    Checker c;
    Rng rng(51);
    const QdftKind kinds[] = {QdftKind::TwoSide, QdftKind::LeftSide, QdftKind::RightSide};
    const std::pair<std::size_t, std::size_t> shapes[] = {{3, 4}, {8, 8}};
    for (const auto& [rows, cols] : shapes) {
        const QuatMatrix a = rng.qmatrix(rows, cols);
        const double an = frobenius_norm(a);
        const std::pair<PureUnitQuaternion, PureUnitQuaternion> axes[] = {
            {mu_i, mu_i}, {mu_i, mu_j}, {rng.puq(), rng.puq()}};
        for (const auto& [m1, m2] : axes) {
            for (QdftKind kind : kinds) {
                const QuatMatrix f = dqft(a, kind, m1, m2);
                c.expect(distance(f, qtest::oracle_dqft(a, kind, m1, m2)) <= 1e-11 * an,
                         "matrix form vs component form");
                c.expect(distance(idqft(f, kind, m1, m2), a) <= 1e-10 * an, "round trip");
            }
        }

        // equal axes leave the bracketing free; orthogonal axes do not
        const PureUnitQuaternion mu = rng.puq();
        const QuatMatrix f1 = fourier_matrix(rows, mu).f;
        const QuatMatrix f2 = fourier_matrix(cols, mu).f;
        c.expect(distance(mul_left(f1, mul_right(a, f2)), mul_right(mul_left(f1, a), f2)) <=
                     1e-11 * an,
                 "left-side bracketing with equal axes");
        c.expect(distance(mul_left(mul_right(f1, a), f2), mul_right(f1, mul_left(a, f2))) <=
                     1e-11 * an,
                 "right-side bracketing with equal axes");
        const QuatMatrix g1 = fourier_matrix(rows, mu_i).f;
        const QuatMatrix g2 = fourier_matrix(cols, mu_j).f;
        c.expect(distance(mul_left(g1, mul_right(a, g2)), mul_right(mul_left(g1, a), g2)) > 1e-3,
                 "orthogonal-axes bracketing counterexample");
    }
    detail = c.detail;
    return c.ok;
}

// --------------------------------------------------------------------------
// criterion 9: CLI determinism and QMAT round-trip
// --------------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    return std::system(cmd.c_str());
}

bool criterion_9(std::string& detail) {
    Checker c;

    // in-process round trip: format/parse is exact
    Rng rng(52);
    for (int t = 0; t < 50 && c.ok; ++t) {
        const QuatMatrix a = rng.qmatrix(1 + rng.integer(0, 4), 1 + rng.integer(0, 4));
        std::stringstream s;
        write_qmat(s, a);
        c.expect(read_qmat(s) == a, "QMAT round trip must be exact");
    }

    if (g_cli_path.empty()) {
        c.expect(false, "CLI path not supplied (--cli)");
        detail = c.detail;
        return c.ok;
    }

    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("qlin_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);

    const QuatMatrix a{{Quaternion::unit_i()}};
    const QuatMatrix b{{Quaternion::unit_j()}};
    write_qmat_file((dir / "a.qm").string(), a);
    write_qmat_file((dir / "b.qm").string(), b);
    write_qmat_file((dir / "r.qm").string(), rng.qmatrix(4, 4));
    write_qmat_file((dir / "ka.qm").string(), rng.qmatrix(2, 3));
    write_qmat_file((dir / "kb.qm").string(), rng.qmatrix(3, 2));
    write_qmat_file((dir / "kc.qm").string(), rng.qmatrix(2, 2));
    write_qmat_file((dir / "kd.qm").string(), rng.qmatrix(4, 3));
    write_qmat_file((dir / "kvec.qm").string(), rng.qmatrix(3, 1));
    write_qmat_file((dir / "eye.qm").string(), QuatMatrix::identity(3));
    write_qmat_file((dir / "wa.qm").string(), rng.cmu_matrix(2, 2, mu_i));
    write_qmat_file((dir / "wb.qm").string(), rng.cmu_matrix(2, 2, mu_i));
    write_qmat_file((dir / "wc.qm").string(), rng.cmu_matrix(2, 1, mu_i));

    const std::string commands[] = {
        "mul --order left " + (dir / "a.qm").string() + " " + (dir / "b.qm").string(),
        "triple --order rb-then-l " + (dir / "ka.qm").string() + " " + (dir / "kb.qm").string() +
            " " + (dir / "kc.qm").string(),
        "inv --side left " + (dir / "eye.qm").string(),
        "adjoint --side right --mu i " + (dir / "r.qm").string(),
        "rank --side left " + (dir / "r.qm").string(),
        "kron --order right " + (dir / "ka.qm").string() + " " + (dir / "kb.qm").string(),
        "khatri-rao --order left " + (dir / "ka.qm").string() + " " + (dir / "kd.qm").string(),
        "qdft --kind 2 --mu1 i --mu2 j " + (dir / "r.qm").string(),
        "iqdft --kind 3 --mu1 i --mu2 j " + (dir / "r.qm").string(),
        "vec-check --identity kron-L_R " + (dir / "ka.qm").string() + " " +
            (dir / "kb.qm").string() + " " + (dir / "kc.qm").string(),
        "vec-check --identity kr-RB_L " + (dir / "ka.qm").string() + " " +
            (dir / "kvec.qm").string() + " " + (dir / "kb.qm").string(),
        "solve-widely-linear " + (dir / "wa.qm").string() + " " + (dir / "wb.qm").string() + " " +
            (dir / "wc.qm").string(),
        "subspace --kind lrn " + (dir / "r.qm").string(),
        "eig --side right " + (dir / "r.qm").string(),
        "convert " + (dir / "r.qm").string(),
    };
    int idx = 0;
    for (const std::string& cmd : commands) {
        const fs::path out1 = dir / ("out" + std::to_string(idx) + "_1.txt");
        const fs::path out2 = dir / ("out" + std::to_string(idx) + "_2.txt");
        c.expect(run_cli(cmd + " -o " + out1.string()) == 0, "CLI run failed: " + cmd);
        c.expect(run_cli(cmd + " -o " + out2.string()) == 0, "CLI rerun failed: " + cmd);
        c.expect(slurp(out1) == slurp(out2), "CLI output not byte-identical: " + cmd);
        ++idx;
    }

    // spot checks on content
    {
        const fs::path out = dir / "mul_check.txt";
        run_cli("mul --order left " + (dir / "a.qm").string() + " " + (dir / "b.qm").string() +
                " -o " + out.string());
        c.expect(slurp(out) == "QMAT 1 1\n1k\n", "mul output must be the literal 1k matrix");
    }
    {
        const fs::path out = dir / "inv_check.txt";
        run_cli("inv --side left " + (dir / "eye.qm").string() + " -o " + out.string());
        std::ifstream in(out);
        c.expect(distance(read_qmat(in), QuatMatrix::identity(3)) <= 1e-12,
                 "inverse of identity must be identity");
    }
    {
        const fs::path out = dir / "vc_check.txt";
        run_cli("vec-check --identity kron-L_R " + (dir / "ka.qm").string() + " " +
                (dir / "kb.qm").string() + " " + (dir / "kc.qm").string() + " -o " + out.string());
        c.expect(std::stod(slurp(out)) <= 1e-12, "vec-check residual must be tiny");
    }
    {
        // CLI round trip through convert
        const fs::path out = dir / "conv_check.txt";
        run_cli("convert " + (dir / "r.qm").string() + " -o " + out.string());
        std::ifstream in(out);
        std::ifstream orig(dir / "r.qm");
        c.expect(read_qmat(in) == read_qmat(orig), "convert must reproduce the matrix exactly");
    }
    {
        // eig-verify exit codes: a valid diagonal pair passes, a wrong one fails
        QuatMatrix d(2, 2);
        d(0, 0) = Quaternion::unit_i();
        d(1, 1) = 2.0 * Quaternion::unit_i();
        write_qmat_file((dir / "diag.qm").string(), d);
        QuatMatrix e1(2, 1);
        e1(0, 0) = Quaternion::real(1.0);
        write_qmat_file((dir / "e1.qm").string(), e1);
        const fs::path out = dir / "ev_check.txt";
        c.expect(run_cli("eig-verify --side right --lambda i " + (dir / "diag.qm").string() + " " +
                         (dir / "e1.qm").string() + " -o " + out.string()) == 0,
                 "eig-verify should accept a true pair");
        c.expect(slurp(out).rfind("PASS", 0) == 0, "eig-verify output should start with PASS");
        c.expect(run_cli("eig-verify --side right --lambda 2i " + (dir / "diag.qm").string() +
                         " " + (dir / "e1.qm").string() + " -o " + out.string()) != 0,
                 "eig-verify should reject a wrong pair");
    }

    std::error_code ec;
    fs::remove_all(dir, ec);
    detail = c.detail;
    return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];

    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<bool(std::string&)> run;
    };
    const Criterion criteria[] = {
        {1, "ordered-product oracle equivalence (bitwise, 200 instances)", 5.0, criterion_1},
        {2, "transpose/conjugation/Hermitian/associativity identity suite", 5.0, criterion_2},
        {3, "inverse suite (defining conditions, transpose relation, subfield reduction)", 10.0,
         criterion_3},
        {4, "subspace suite (transpose relations, rank-nullity, scalar closure)", 10.0,
         criterion_4},
        {5, "tensor suite (eight vec identities, transpose rules, negative control)", 10.0,
         criterion_5},
        {6, "widely-linear solver (residuals, realified cross-check, G orthogonality)", 5.0,
         criterion_6},
        {7, "spectral suite (reconstruction, standard form, orbit, subfield spectra)", 30.0,
         criterion_7},
        {8, "QDFT suite (component equivalence, round trips, bracketing)", 10.0, criterion_8},
        {9, "CLI determinism and QMAT round-trip", 5.0, criterion_9},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = cr.run(why);
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && secs >= cr.limit_s) {
            ok = false;
            why = "runtime limit exceeded";
        }
        std::printf("[%s] criterion %d: %s [%.2f s]%s%s\n", ok ? "PASS" : "FAIL", cr.id, cr.name,
                    secs, why.empty() ? "" : " -- ", why.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
