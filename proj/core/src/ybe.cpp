#include "ldb/ybe.hpp"

namespace ldb {

namespace {

void require_same_dim(const DendAlgebra& a, const Tensor2& r, const char* what) {
    if (a.dim() != r.dim()) throw ShapeError(std::string(what) + ": tensor and algebra dimensions differ");
}

}  // namespace

STensors s_tensors(const DendAlgebra& a, const Tensor2& r) {
    require_same_dim(a, r, "s_tensors");
    const BilinearOp circ = a.circ(), odot = a.odot(), star = a.star();
    auto P = [&r](const BilinearOp& op, Slots x, Slots y) { return place_product(op, r, r, x, y); };
    STensors s;
    s.S = P(circ, {2, 3}, {1, 3}) - P(odot, {1, 2}, {2, 3}) - P(a.succ, {1, 2}, {1, 3});
    s.S1 = P(odot, {1, 2}, {1, 3}) + P(circ, {1, 3}, {2, 3}) + P(a.succ, {1, 2}, {2, 3});
    s.S2 = P(star, {1, 2}, {1, 3}) - P(a.prec, {1, 2}, {2, 3}) + P(a.prec, {1, 3}, {2, 3});
    s.S3 = P(odot, {2, 3}, {1, 2}) + P(a.succ, {2, 3}, {1, 3}) - P(circ, {1, 2}, {1, 3});
    s.S4 = -P(odot, {1, 3}, {1, 2}) + P(circ, {1, 2}, {2, 3}) + P(a.succ, {1, 3}, {2, 3});
    s.S5 = P(a.prec, {2, 3}, {1, 3}) + P(a.prec, {1, 2}, {1, 3}) - P(star, {1, 2}, {2, 3});
    return s;
}

Tensor3 ldybe_tensor(const DendAlgebra& a, const Tensor2& r) {
    require_same_dim(a, r, "ldybe_tensor");
    const BilinearOp circ = a.circ(), odot = a.odot();
    return place_product(circ, r, r, {2, 3}, {1, 3}) - place_product(odot, r, r, {1, 2}, {2, 3}) -
           place_product(a.succ, r, r, {1, 2}, {1, 3});
}

bool check_ldybe(const DendAlgebra& a, const Tensor2& r) { return ldybe_tensor(a, r).is_zero(); }

Matrix t_map(const Tensor2& r) { return r.coeff().transpose(); }

Report invariance_report(const DendAlgebra& a, const Tensor2& r) {
    require_same_dim(a, r, "invariance_report");
    const std::size_t n = a.dim();
    MulTable o(a.odot()), c(a.circ()), st(a.star()), p(a.prec);
    const Matrix id = Matrix::identity(n);
    const Tensor2 tr = r.tau();
    Report rep;
    for (std::size_t x = 0; x < n; ++x) {
        rep.add_matrix("Iv1", {x}, (r.apply(o.L[x], id) - r.apply(id, c.R[x])).coeff());
        rep.add_matrix("Iv2", {x}, (tr.apply(st.L[x], id) - tr.apply(id, p.R[x])).coeff());
    }
    return rep;
}

bool check_invariant(const DendAlgebra& a, const Tensor2& r) { return invariance_report(a, r).ok(); }

Report invariance_operator_report(const DendAlgebra& a, const Tensor2& r) {
    require_same_dim(a, r, "invariance_operator_report");
    const std::size_t n = a.dim();
    MulTable o(a.odot()), c(a.circ()), st(a.star()), p(a.prec);
    const Matrix t = t_map(r);
    Report rep;
    for (std::size_t x = 0; x < n; ++x) {
        rep.add_matrix("Iv3", {x}, c.R[x] * t + t * dual_map(o.L[x]));
        rep.add_matrix("Iv4", {x}, st.L[x] * t + t * dual_map(p.R[x]));
    }
    return rep;
}

namespace {

// Residuals of the weighted relative identity without any precondition checks.
void relative_identity(Report& out, const char* succ_label, const char* prec_label, const Matrix& t,
                       const DendRep& rep, const Scalar& weight, const DendAlgebra* background) {
    const DendAlgebra& a = rep.alg;
    const std::size_t m = rep.mdim;
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            const Vec tu = t.column(u), tv = t.column(v);
            Vec inner_s = combine(rep.lsucc, tu).column(v) + combine(rep.rsucc, tv).column(u);
            Vec inner_p = combine(rep.lprec, tu).column(v) + combine(rep.rprec, tv).column(u);
            if (background && !weight.is_zero()) {
                axpy(inner_s, weight, background->succ.basis_product(u, v));
                axpy(inner_p, weight, background->prec.basis_product(u, v));
            }
            out.add(succ_label, {u, v}, a.succ.apply(tu, tv) - t * inner_s);
            out.add(prec_label, {u, v}, a.prec.apply(tu, tv) - t * inner_p);
        }
}

}  // namespace

Report o_operator_report(const OOperator& o) {
    o.rep.validate_shape();
    if (o.t.rows() != o.host().dim() || o.t.cols() != o.rep.mdim)
        throw ShapeError("O-operator matrix must be dim(A) x dim(V)");
    if (!o.weight.is_zero()) {
        if (!o.background) throw ContractError("nonzero weight requires products on the module");
        if (o.background->dim() != o.rep.mdim) throw ShapeError("module products have the wrong dimension");
        if (!is_a_ld_algebra(o.rep, *o.background))
            throw ContractError("module products and actions do not form an A-module algebra");
    }
    Report rep;
    relative_identity(rep, "O-succ", "O-prec", o.t, o.rep, o.weight, o.background ? &*o.background : nullptr);
    return rep;
}

bool check_o_operator(const OOperator& o) { return o_operator_report(o).ok(); }

Report rota_baxter_report(const DendAlgebra& a, const Matrix& p, const Scalar& weight) {
    if (p.rows() != a.dim() || p.cols() != a.dim()) throw ShapeError("Rota-Baxter operator must be square of algebra size");
    Report rep;
    relative_identity(rep, "RB-succ", "RB-prec", p, regular_rep(a), weight, &a);
    return rep;
}

bool check_rota_baxter(const DendAlgebra& a, const Matrix& p, const Scalar& weight) {
    return rota_baxter_report(a, p, weight).ok();
}

OSolution solution_from_o_operator(const OOperator& o) {
    if (!o.weight.is_zero()) throw ContractError("solution_from_o_operator: weight must be zero");
    if (!check_o_operator(o)) throw ContractError("solution_from_o_operator: T is not an O-operator");
    const std::size_t n = o.host().dim(), m = o.rep.mdim;
    OSolution out;
    out.hat = semidirect(o.host(), dual_rep(o.rep));
    out.r = Tensor2(n + m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < n; ++a) {
            out.r(a, n + i) += o.t(a, i);
            out.r(n + i, a) -= o.t(a, i);
        }
    return out;
}

DendAlgebra symmetric_part_products(const DendAlgebra& a, const Tensor2& r) {
    require_same_dim(a, r, "symmetric_part_products");
    const std::size_t n = a.dim();
    const Matrix ts = t_map(r + r.tau());
    const std::vector<Matrix> lcirc_dual = dual_maps(MulTable(a.circ()).L);
    const std::vector<Matrix> lprec_dual = dual_maps(MulTable(a.prec).L);
    DendAlgebra out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec tz = ts.column(i);
        const Matrix ls = combine(lcirc_dual, tz), lp = combine(lprec_dual, tz);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.succ(i, j, k) = ls(k, j);
                out.prec(i, j, k) = -lp(k, j);
            }
    }
    return out;
}

OOperator relative_rb_from_r(const DendAlgebra& a, const Tensor2& r) {
    if (!check_invariant(a, r + r.tau()))
        throw ContractError("relative_rb_from_r: the symmetric part of r is not invariant");
    return OOperator{t_map(r), dual_rep(regular_rep(a)), Scalar(-1), symmetric_part_products(a, r)};
}

bool check_relative_rb_from_r(const DendAlgebra& a, const Tensor2& r) {
    return check_o_operator(relative_rb_from_r(a, r));
}

}  // namespace ldb
