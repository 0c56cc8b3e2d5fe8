// qlin: batch front end for the quaternion linear algebra library.
//
// Results go to stdout (or -o <path>) in QMAT v1 format; diagnostics go to
// stderr. Exit codes: 0 success, 1 usage/validation error, 2 numerical
// failure (singular matrix, no convergence, ...).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qlin/adjoint.hpp"
#include "qlin/qdft.hpp"
#include "qlin/qmat_io.hpp"
#include "qlin/spectral.hpp"
#include "qlin/subspaces.hpp"
#include "qlin/tensor.hpp"
#include "qlin/text.hpp"
#include "qlin/widely_linear.hpp"

namespace {

using namespace qlin;

void emit_matrix(const QuatMatrix& m, const std::string& out_path) {
    if (out_path.empty())
        write_qmat(std::cout, m);
    else
        write_qmat_file(out_path, m);
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open file for writing: " + out_path);
        out << text;
    }
}

PureUnitQuaternion parse_axis(const std::string& text, const std::string& flag) {
    const Quaternion q = parse_quaternion(text);
    if (std::abs(q.w) > 1e-12)
        throw Error(flag + ": axis must be a pure quaternion, got scalar part " +
                    std::to_string(q.w));
    const double n = vector_norm(q);
    if (n == 0.0) throw Error(flag + ": axis vector part vanishes");
    if (std::abs(n - 1.0) >= 1e-6)
        throw Error(flag + ": axis modulus " + std::to_string(n) + " is too far from 1");
    if (std::abs(n - 1.0) > 1e-15)
        std::cerr << "warning: " << flag << " off unit by " << std::abs(n - 1.0)
                  << "; normalizing\n";
    return {q.x, q.y, q.z};
}

ProductOrder parse_order(const std::string& s) {
    if (s == "left") return ProductOrder::Left;
    if (s == "right") return ProductOrder::Right;
    throw Error("--order must be left or right");
}

std::string format_residual(double r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g\n", r);
    return buf;
}

const std::map<std::string, TripleOrder> kTripleOrders = {
    {"ll", TripleOrder::LL},
    {"rr", TripleOrder::RR},
    {"l-of-r", TripleOrder::L_of_R},
    {"lb-then-r", TripleOrder::LB_then_R},
    {"rb-then-l", TripleOrder::RB_then_L},
    {"r-of-l", TripleOrder::R_of_L},
};

const std::map<std::string, SubspaceKind> kSubspaceKinds = {
    {"lr", SubspaceKind::LR},   {"rr", SubspaceKind::RR},   {"lc", SubspaceKind::LC},
    {"rc", SubspaceKind::RC},   {"lrn", SubspaceKind::LRN}, {"rrn", SubspaceKind::RRN},
    {"lcn", SubspaceKind::LCN}, {"rcn", SubspaceKind::RCN},
};

struct VecCheckSpec {
    bool kron;
    VecIdentityForm form;
};

const std::map<std::string, VecCheckSpec> kVecChecks = {
    {"kron-L_R", {true, VecIdentityForm::L_R}},   {"kron-R_L", {true, VecIdentityForm::R_L}},
    {"kron-LB_R", {true, VecIdentityForm::LB_R}}, {"kron-RB_L", {true, VecIdentityForm::RB_L}},
    {"kr-L_R", {false, VecIdentityForm::L_R}},    {"kr-R_L", {false, VecIdentityForm::R_L}},
    {"kr-LB_R", {false, VecIdentityForm::LB_R}},  {"kr-RB_L", {false, VecIdentityForm::RB_L}},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion linear algebra batch tool"};
    app.require_subcommand(1);

    std::string out_path;

    // ---- mul ----------------------------------------------------------
    std::string mul_order;
    std::string mul_a, mul_b;
    auto* sc_mul = app.add_subcommand("mul", "ordered product of two matrices");
    sc_mul->add_option("--order", mul_order, "left|right")->required();
    sc_mul->add_option("a", mul_a, "left operand (QMAT file)")->required();
    sc_mul->add_option("b", mul_b, "right operand (QMAT file)")->required();

    // ---- triple -------------------------------------------------------
    std::string triple_order;
    std::string tri_a, tri_b, tri_c;
    auto* sc_triple = app.add_subcommand("triple", "three-matrix product in a chosen scalar order");
    sc_triple->add_option("--order", triple_order, "ll|rr|l-of-r|lb-then-r|rb-then-l|r-of-l")
        ->required();
    sc_triple->add_option("a", tri_a)->required();
    sc_triple->add_option("b", tri_b)->required();
    sc_triple->add_option("c", tri_c)->required();

    // ---- inv ----------------------------------------------------------
    std::string inv_side, inv_mu = "i";
    std::string inv_a;
    auto* sc_inv = app.add_subcommand("inv", "left or right inverse");
    sc_inv->add_option("--side", inv_side, "left|right")->required();
    sc_inv->add_option("--mu", inv_mu, "embedding axis (pure unit scalar)");
    sc_inv->add_option("a", inv_a)->required();

    // ---- adjoint ------------------------------------------------------
    std::string adj_side, adj_mu = "i";
    std::string adj_a;
    auto* sc_adj = app.add_subcommand("adjoint", "complex adjoint embedding (printed as QMAT)");
    sc_adj->add_option("--side", adj_side, "left|right")->required();
    sc_adj->add_option("--mu", adj_mu, "embedding axis");
    sc_adj->add_option("a", adj_a)->required();

    // ---- subspace -----------------------------------------------------
    std::string sub_kind;
    double sub_tol = 0.0;
    std::string sub_a;
    auto* sc_sub = app.add_subcommand("subspace", "basis of a fundamental subspace");
    sc_sub->add_option("--kind", sub_kind, "lr|rr|lc|rc|lrn|rrn|lcn|rcn")->required();
    sc_sub->add_option("--tol", sub_tol, "rank tolerance (default: engine tolerance)");
    sc_sub->add_option("a", sub_a)->required();

    // ---- rank ---------------------------------------------------------
    std::string rank_side;
    std::string rank_a;
    auto* sc_rank = app.add_subcommand("rank", "left or right rank");
    sc_rank->add_option("--side", rank_side, "left|right")->required();
    sc_rank->add_option("a", rank_a)->required();

    // ---- kron / khatri-rao ---------------------------------------------
    std::string kron_order;
    std::string kron_a, kron_b;
    auto* sc_kron = app.add_subcommand("kron", "left or right Kronecker product");
    sc_kron->add_option("--order", kron_order, "left|right")->required();
    sc_kron->add_option("a", kron_a)->required();
    sc_kron->add_option("b", kron_b)->required();

    std::string kr_order;
    std::string kr_a, kr_b;
    auto* sc_kr = app.add_subcommand("khatri-rao", "left or right Khatri-Rao product");
    sc_kr->add_option("--order", kr_order, "left|right")->required();
    sc_kr->add_option("a", kr_a)->required();
    sc_kr->add_option("b", kr_b)->required();

    // ---- vec-check ------------------------------------------------------
    std::string vc_identity;
    std::string vc_a, vc_b, vc_c;
    auto* sc_vc = app.add_subcommand("vec-check",
                                     "evaluate both sides of a vectorization identity, print the residual");
    sc_vc->add_option("--identity", vc_identity,
                      "kron-L_R|kron-R_L|kron-LB_R|kron-RB_L|kr-L_R|kr-R_L|kr-LB_R|kr-RB_L")
        ->required();
    sc_vc->add_option("a", vc_a)->required();
    sc_vc->add_option("b", vc_b, "middle matrix, or the diagonal vector for kr-* identities")
        ->required();
    sc_vc->add_option("c", vc_c)->required();

    // ---- solve-widely-linear -------------------------------------------
    std::string wl_mu = "i";
    std::string wl_a, wl_b, wl_c;
    auto* sc_wl = app.add_subcommand("solve-widely-linear", "solve A X + B X* = C inside C_mu");
    sc_wl->add_option("--mu", wl_mu, "subfield axis");
    sc_wl->add_option("a", wl_a)->required();
    sc_wl->add_option("b", wl_b)->required();
    sc_wl->add_option("c", wl_c)->required();

    // ---- eig ------------------------------------------------------------
    std::string eig_side;
    std::string eig_a;
    auto* sc_eig = app.add_subcommand("eig", "right eigendecomposition (standard eigenvalues)");
    sc_eig->add_option("--side", eig_side, "right (left has no general algorithm)")->required();
    sc_eig->add_option("a", eig_a)->required();

    // ---- eig-verify -------------------------------------------------------
    std::string ev_side, ev_lambda;
    double ev_tol = 1e-8;
    std::string ev_a, ev_q;
    auto* sc_ev = app.add_subcommand("eig-verify", "check a user-supplied eigenpair");
    sc_ev->add_option("--side", ev_side, "left|right")->required();
    sc_ev->add_option("--lambda", ev_lambda, "eigenvalue (scalar syntax)")->required();
    sc_ev->add_option("--tol", ev_tol, "relative tolerance (default 1e-8)");
    sc_ev->add_option("a", ev_a)->required();
    sc_ev->add_option("q", ev_q, "candidate eigenvector (column QMAT)")->required();

    // ---- qdft / iqdft ----------------------------------------------------
    int qd_kind = 1;
    std::string qd_mu1 = "i", qd_mu2 = "j";
    std::string qd_a;
    auto* sc_qd = app.add_subcommand("qdft", "discrete quaternion Fourier transform");
    sc_qd->add_option("--kind", qd_kind, "1 (two-side) | 2 (left-side) | 3 (right-side)")
        ->required()
        ->check(CLI::Range(1, 3));
    sc_qd->add_option("--mu1", qd_mu1, "row-side axis");
    sc_qd->add_option("--mu2", qd_mu2, "column-side axis");
    sc_qd->add_option("a", qd_a)->required();

    int iqd_kind = 1;
    std::string iqd_mu1 = "i", iqd_mu2 = "j";
    std::string iqd_a;
    auto* sc_iqd = app.add_subcommand("iqdft", "inverse discrete quaternion Fourier transform");
    sc_iqd->add_option("--kind", iqd_kind, "1|2|3")->required()->check(CLI::Range(1, 3));
    sc_iqd->add_option("--mu1", iqd_mu1, "row-side axis");
    sc_iqd->add_option("--mu2", iqd_mu2, "column-side axis");
    sc_iqd->add_option("a", iqd_a)->required();

    // ---- convert ----------------------------------------------------------
    std::string conv_a;
    auto* sc_conv = app.add_subcommand("convert", "parse a QMAT file and rewrite it canonically");
    sc_conv->add_option("a", conv_a)->required();

    for (CLI::App* sc : {sc_mul, sc_triple, sc_inv, sc_adj, sc_sub, sc_rank, sc_kron, sc_kr,
                         sc_vc, sc_wl, sc_eig, sc_ev, sc_qd, sc_iqd, sc_conv})
        sc->add_option("-o,--output", out_path, "write the result here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*sc_mul) {
            const ProductOrder order = parse_order(mul_order);
            const QuatMatrix a = read_qmat_file(mul_a);
            const QuatMatrix b = read_qmat_file(mul_b);
            emit_matrix(order == ProductOrder::Left ? mul_left(a, b) : mul_right(a, b), out_path);
        } else if (*sc_triple) {
            const auto it = kTripleOrders.find(triple_order);
            if (it == kTripleOrders.end())
                throw Error("--order must be one of ll, rr, l-of-r, lb-then-r, rb-then-l, r-of-l");
            emit_matrix(triple_product(read_qmat_file(tri_a), read_qmat_file(tri_b),
                                       read_qmat_file(tri_c), it->second),
                        out_path);
        } else if (*sc_inv) {
            const PureUnitQuaternion mu = parse_axis(inv_mu, "--mu");
            const PureUnitQuaternion mu_perp = orthogonal_complement(mu);
            const QuatMatrix a = read_qmat_file(inv_a);
            if (inv_side == "left")
                emit_matrix(inv_left(a, mu, mu_perp), out_path);
            else if (inv_side == "right")
                emit_matrix(inv_right(a, mu, mu_perp), out_path);
            else
                throw Error("--side must be left or right");
        } else if (*sc_adj) {
            const PureUnitQuaternion mu = parse_axis(adj_mu, "--mu");
            const PureUnitQuaternion mu_perp = orthogonal_complement(mu);
            AdjointSide side;
            if (adj_side == "left")
                side = AdjointSide::LeftAdjoint;
            else if (adj_side == "right")
                side = AdjointSide::RightAdjoint;
            else
                throw Error("--side must be left or right");
            const ComplexMatrix chi = adjoint(read_qmat_file(adj_a), side, mu, mu_perp);
            emit_matrix(lift_complex(chi, PureUnitQuaternion::i()), out_path);
        } else if (*sc_sub) {
            const auto it = kSubspaceKinds.find(sub_kind);
            if (it == kSubspaceKinds.end())
                throw Error("--kind must be one of lr, rr, lc, rc, lrn, rrn, lcn, rcn");
            const SubspaceBasis sb = basis(read_qmat_file(sub_a), it->second, sub_tol);
            std::string text = "# subspace " + sub_kind + " dimension " +
                               std::to_string(sb.vectors.size()) + " scalar-side " +
                               (sb.scalar_side == ScalarSide::LeftScalars ? "left" : "right") +
                               "\n";
            if (!sb.vectors.empty()) {
                QuatMatrix m = sb.vectors.front();
                for (std::size_t i = 1; i < sb.vectors.size(); ++i) m = hcat(m, sb.vectors[i]);
                std::ostringstream os;
                write_qmat(os, m);
                text += os.str();
            }
            emit_text(text, out_path);
        } else if (*sc_rank) {
            const QuatMatrix a = read_qmat_file(rank_a);
            std::size_t r = 0;
            if (rank_side == "left")
                r = rank_left(a);
            else if (rank_side == "right")
                r = rank_right(a);
            else
                throw Error("--side must be left or right");
            emit_text(std::to_string(r) + "\n", out_path);
        } else if (*sc_kron) {
            emit_matrix(
                kron(read_qmat_file(kron_a), read_qmat_file(kron_b), parse_order(kron_order)),
                out_path);
        } else if (*sc_kr) {
            emit_matrix(
                khatri_rao(read_qmat_file(kr_a), read_qmat_file(kr_b), parse_order(kr_order)),
                out_path);
        } else if (*sc_vc) {
            const auto it = kVecChecks.find(vc_identity);
            if (it == kVecChecks.end())
                throw Error("--identity must name one of the eight vec identities");
            const QuatMatrix a = read_qmat_file(vc_a);
            const QuatMatrix b = read_qmat_file(vc_b);
            const QuatMatrix c = read_qmat_file(vc_c);
            const VecIdentitySides sides = it->second.kron
                                               ? vec_identity_kron(a, b, c, it->second.form)
                                               : vec_identity_kr(a, b, c, it->second.form);
            emit_text(format_residual(distance(sides.lhs, sides.rhs)), out_path);
        } else if (*sc_wl) {
            const PureUnitQuaternion mu = parse_axis(wl_mu, "--mu");
            const WidelyLinearSystem sys(read_qmat_file(wl_a), read_qmat_file(wl_b),
                                         read_qmat_file(wl_c), mu);
            emit_matrix(solve_widely_linear(sys), out_path);
        } else if (*sc_eig) {
            if (eig_side != "right")
                throw Error("--side right is the only supported eigendecomposition");
            const RightEigenDecomposition d = right_eig(read_qmat_file(eig_a));
            QuatMatrix lam(d.lambda.size(), 1);
            for (std::size_t i = 0; i < d.lambda.size(); ++i) lam(i, 0) = d.lambda[i];
            std::ostringstream os;
            os << "# right eigendecomposition: A = Q .L Diag(lambda) .L Q^-L\n";
            os << "# standard eigenvalues (" << d.lambda.size() << " x 1)\n";
            write_qmat(os, lam);
            os << "# eigenvectors (columns)\n";
            write_qmat(os, d.q);
            emit_text(os.str(), out_path);
        } else if (*sc_ev) {
            const Quaternion lambda = parse_quaternion(ev_lambda);
            const QuatMatrix a = read_qmat_file(ev_a);
            const QuatMatrix q = read_qmat_file(ev_q);
            bool ok = false;
            if (ev_side == "right")
                ok = verify_right_pair(a, q, lambda, ev_tol);
            else if (ev_side == "left")
                ok = verify_left_pair(a, q, lambda, ev_tol);
            else
                throw Error("--side must be left or right");
            const double res =
                distance(mul_left(a, q),
                         scalar_mul(ev_side == "right" ? ProductOrder::Right : ProductOrder::Left,
                                    lambda, q));
            emit_text(std::string(ok ? "PASS" : "FAIL") + " residual " + format_residual(res),
                      out_path);
            return ok ? 0 : 2;
        } else if (*sc_qd) {
            emit_matrix(dqft(read_qmat_file(qd_a), static_cast<QdftKind>(qd_kind),
                             parse_axis(qd_mu1, "--mu1"), parse_axis(qd_mu2, "--mu2")),
                        out_path);
        } else if (*sc_iqd) {
            emit_matrix(idqft(read_qmat_file(iqd_a), static_cast<QdftKind>(iqd_kind),
                              parse_axis(iqd_mu1, "--mu1"), parse_axis(iqd_mu2, "--mu2")),
                        out_path);
        } else if (*sc_conv) {
            emit_matrix(read_qmat_file(conv_a), out_path);
        }
    } catch (const SingularMatrixError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NoConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DefectiveOrAmbiguousError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NotInEmbeddingImageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DivisionByZeroError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
