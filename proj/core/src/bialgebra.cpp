#include "ldb/bialgebra.hpp"

namespace ldb {

namespace {

Tensor2 combine_rows(const std::vector<Tensor2>& rows, const Vec& x) {
    if (rows.size() != x.size()) throw ShapeError("coproduct applied to a vector of the wrong size");
    Tensor2 out(rows.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out += x[i] * rows[i];
    return out;
}

// (D (x) I) t and (I (x) D) t for t in V (x) V.
Tensor3 left_apply(const std::vector<Tensor2>& d, const Tensor2& t) {
    const std::size_t n = t.dim();
    Tensor3 out(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (t(p, q).is_zero()) continue;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) out(a, b, q).add_product(t(p, q), d[p](a, b));
        }
    return out;
}

Tensor3 right_apply(const std::vector<Tensor2>& d, const Tensor2& t) {
    const std::size_t n = t.dim();
    Tensor3 out(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (t(p, q).is_zero()) continue;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) out(p, a, b).add_product(t(p, q), d[q](a, b));
        }
    return out;
}

Vec flatten(const Tensor3& t) { return t.data(); }

std::vector<Tensor2> sum_rows(const std::vector<Tensor2>& a, const std::vector<Tensor2>& b) {
    std::vector<Tensor2> out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

// Matrices in a family indexed by basis, viewed as dual maps.
std::vector<Matrix> dual_left(const BilinearOp& op) { return dual_maps(MulTable(op).L); }
std::vector<Matrix> dual_right(const BilinearOp& op) { return dual_maps(MulTable(op).R); }

}  // namespace

void CoProduct::validate_shape() const {
    const std::size_t n = dsucc.size();
    if (dprec.size() != n) throw ShapeError("coproduct: succ and prec row counts differ");
    for (std::size_t i = 0; i < n; ++i)
        if (dsucc[i].dim() != n || dprec[i].dim() != n) throw ShapeError("coproduct: row tensor has wrong dimension");
}

Tensor2 CoProduct::succ(const Vec& x) const { return combine_rows(dsucc, x); }
Tensor2 CoProduct::prec(const Vec& x) const { return combine_rows(dprec, x); }
Tensor2 CoProduct::odot(const Vec& x) const { return succ(x) + prec(x).tau(); }

DendAlgebra dualize(const CoProduct& cop) {
    cop.validate_shape();
    const std::size_t n = cop.dim();
    DendAlgebra out(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                out.succ(i, j, k) = cop.dsucc[k](i, j);
                out.prec(i, j, k) = cop.dprec[k](i, j);
            }
    return out;
}

Report check_coalgebra(const CoProduct& cop) {
    cop.validate_shape();
    const std::size_t n = cop.dim();
    const std::vector<Tensor2> total = sum_rows(cop.dsucc, cop.dprec);
    Report rep;
    for (std::size_t x = 0; x < n; ++x) {
        const Tensor2& ds = cop.dsucc[x];
        const Tensor2& dp = cop.dprec[x];
        const Tensor3 ca1 = left_apply(total, ds) - right_apply(cop.dsucc, ds) + right_apply(cop.dsucc, ds).sigma12();
        const Tensor3 ca2 =
            right_apply(cop.dprec, ds) - left_apply(cop.dsucc, dp) - right_apply(total, dp).sigma12();
        const Tensor3 ca3 =
            right_apply(total, dp) - left_apply(cop.dprec, dp) - right_apply(cop.dprec, ds).sigma12();
        rep.add("Ca1", {x}, flatten(ca1));
        rep.add("Ca2", {x}, flatten(ca2));
        rep.add("Ca3", {x}, flatten(ca3));
    }
    return rep;
}

Report check_bialgebra(const Bialgebra& b) {
    const DendAlgebra& a = b.alg;
    const CoProduct& c = b.cop;
    c.validate_shape();
    const std::size_t n = a.dim();
    if (c.dim() != n) throw ShapeError("bialgebra: coproduct and algebra dimensions differ");
    const BilinearOp circ = a.circ(), odot = a.odot();
    const MulTable s(a.succ), p(a.prec), cm(circ), o(odot);
    const Matrix id = Matrix::identity(n);
    Report rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec x = basis_vec(n, i), y = basis_vec(n, j);
            const Tensor2 dy = c.total(y), dsx = c.succ(x), dsy = c.succ(y);
            const Tensor2 dox = c.odot(x), doy = c.odot(y);

            const Tensor2 b1a = dy.apply_right(o.L[i]);
            const Tensor2 b1b = dsx.apply_right(o.R[j]);
            const Tensor2 b1 = c.total(odot.basis_product(i, j)) - b1a + b1a.tau() + b1b.tau() - b1b;

            const Tensor2 b2 = c.total(a.succ.basis_product(i, j)) - dy.apply(s.L[i], id) - dy.apply_right(s.L[i]) -
                               dox.apply_right(s.R[j]) + dox.apply_right(o.R[j]).tau();

            const Tensor2 b3 = c.prec(x).tau().apply_right(s.R[j]) - dy.apply_left(p.R[i]);

            const Tensor2 b4 = c.odot(circ.basis_product(i, j)) - doy.apply_right(cm.L[i]) -
                               doy.apply_left(s.L[i]) + dox.apply_right(cm.L[j]) + dox.apply_left(s.L[j]);

            const Tensor2 b5 = c.succ(circ.basis_product(i, j)) - dsx.apply_right(cm.R[j]) -
                               dsy.apply_right(cm.L[i]) - dsy.apply_left(o.L[i]) + dox.apply_left(o.L[j]);

            const Tensor2 b6 = c.prec(x).tau().apply_right(cm.R[j]) - dsy.apply_left(p.R[i]);

            rep.add_matrix("B1", {i, j}, b1.coeff());
            rep.add_matrix("B2", {i, j}, b2.coeff());
            rep.add_matrix("B3", {i, j}, b3.coeff());
            rep.add_matrix("B4", {i, j}, b4.coeff());
            rep.add_matrix("B5", {i, j}, b5.coeff());
            rep.add_matrix("B6", {i, j}, b6.coeff());
        }
    return rep;
}

Report bialgebra_full_report(const Bialgebra& b) {
    Report rep = check_ld(b.alg);
    rep.merge(check_coalgebra(b.cop));
    rep.merge(check_bialgebra(b));
    return rep;
}

CoProduct cobound(const DendAlgebra& a, const Tensor2& r) {
    const std::size_t n = a.dim();
    if (r.dim() != n) throw ShapeError("cobound: tensor and algebra dimensions differ");
    const MulTable o(a.odot()), c(a.circ()), st(a.star()), p(a.prec);
    const Tensor2 tr = r.tau();
    CoProduct out(n);
    for (std::size_t x = 0; x < n; ++x) {
        out.dsucc[x] = r.apply_left(o.L[x]) - r.apply_right(c.R[x]);
        out.dprec[x] = tr.apply_left(st.L[x]) - tr.apply_right(p.R[x]);
    }
    return out;
}

std::string_view to_string(RClassTag tag) {
    switch (tag) {
        case RClassTag::NotSolution: return "NotSolution";
        case RClassTag::Triangular: return "Triangular";
        case RClassTag::QuasiTriangular: return "QuasiTriangular";
        case RClassTag::Factorizable: return "Factorizable";
    }
    return "?";
}

RClass classify_r(const DendAlgebra& a, const Tensor2& r) {
    RClass out;
    out.s_residual = ldybe_tensor(a, r);
    const Tensor2 s = r + r.tau();
    out.invariance = invariance_report(a, s);
    out.kernel = kernel(t_map(s));
    if (!out.s_residual.is_zero() || !out.invariance.ok()) out.tag = RClassTag::NotSolution;
    else if (r.is_skew()) out.tag = RClassTag::Triangular;
    else if (out.kernel.empty()) out.tag = RClassTag::Factorizable;
    else out.tag = RClassTag::QuasiTriangular;
    return out;
}

DendAlgebra dual_mult_from_r(const DendAlgebra& a, const Tensor2& r) {
    const std::size_t n = a.dim();
    if (r.dim() != n) throw ShapeError("dual_mult_from_r: tensor and algebra dimensions differ");
    const Matrix tr = t_map(r), ttr = t_map(r.tau());
    const auto lcirc = dual_left(a.circ()), rodot = dual_right(a.odot());
    const auto lprec = dual_left(a.prec), lstar = dual_left(a.star());
    DendAlgebra out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec s = combine(lcirc, tr.column(i)).column(j) - combine(rodot, ttr.column(j)).column(i);
            const Vec p = combine(lprec, ttr.column(i)).column(j) - combine(lstar, tr.column(j)).column(i);
            for (std::size_t k = 0; k < n; ++k) {
                out.succ(i, j, k) = s[k];
                out.prec(i, j, k) = p[k];
            }
        }
    return out;
}

MatchedPairLD double_matched_pair(const Bialgebra& b) {
    const DendAlgebra dual = dualize(b.cop);
    if (dual.dim() != b.alg.dim()) throw ShapeError("double: coproduct and algebra dimensions differ");
    return {dual_rep(regular_rep(b.alg)), dual_rep(regular_rep(dual))};
}

DendAlgebra double_of(const Bialgebra& b) { return ld_sum(double_matched_pair(b)); }

CanonicalR canonical_r(const Bialgebra& b) {
    CanonicalR out;
    out.d = double_of(b);
    const std::size_t n = b.alg.dim();
    out.r = Tensor2(2 * n);
    for (std::size_t i = 0; i < n; ++i) out.r(i, n + i) = 1;
    out.cls = classify_r(out.d, out.r);
    return out;
}

PhiIso phi_iso(const DendAlgebra& a, const Tensor2& r) {
    if (classify_r(a, r).tag != RClassTag::Factorizable) throw ContractError("phi_iso: r is not factorizable");
    const std::size_t n = a.dim();
    PhiIso out;
    out.source = double_of(Bialgebra{a, cobound(a, r)});
    out.target = direct_sum(a, a);
    const Matrix tr = t_map(r), ttr = t_map(r.tau());
    out.phi = Matrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar one = i == j ? Scalar(1) : Scalar(0);
            out.phi(i, j) = one;
            out.phi(n + i, j) = one;
            out.phi(i, n + j) = tr(i, j);
            out.phi(n + i, n + j) = -ttr(i, j);
        }
    out.bijective = !det(out.phi).is_zero();
    out.hom = check_hom(out.phi, out.source, out.target);
    return out;
}

namespace {

Matrix block_columns(std::size_t total, std::size_t first, std::size_t count) {
    Matrix m(total, count);
    for (std::size_t i = 0; i < count; ++i) m(first + i, i) = 1;
    return m;
}

}  // namespace

bool phase_space_check(const LeibnizAlgebra& d, const BilForm& omega) {
    const std::size_t dim = d.dim();
    if (dim % 2 != 0) throw ShapeError("phase space: dimension must be even");
    if (omega.dim() != dim) throw ShapeError("phase space: form dimension mismatch");
    const std::size_t n = dim / 2;
    if (!(omega == pairing_form(n))) return false;
    return check_symplectic(d, omega) && check_subalgebra(d, block_columns(dim, 0, n)) &&
           check_subalgebra(d, block_columns(dim, n, n));
}

bool phase_space_check(const DendAlgebra& d, const BilForm& omega) { return phase_space_check(associated(d), omega); }

bool manin_triple_check(const DendAlgebra& d, const BilForm& omega, const Matrix& span_a, const Matrix& span_b) {
    const std::size_t n = d.dim();
    if (span_a.rows() != n || span_b.rows() != n || omega.dim() != n) throw ShapeError("Manin triple: dimension mismatch");
    if (span_a.cols() == 0 || span_b.cols() == 0) throw ContractError("Manin triple: empty summand");
    Matrix joined(n, span_a.cols() + span_b.cols());
    for (std::size_t c = 0; c < span_a.cols(); ++c) joined.set_column(c, span_a.column(c));
    for (std::size_t c = 0; c < span_b.cols(); ++c) joined.set_column(span_a.cols() + c, span_b.column(c));
    if (joined.cols() != n || rank(joined) != n) throw ContractError("Manin triple: spans are not complementary");
    if (!check_quadratic_ld(d, omega)) return false;
    if (!check_subalgebra(d, span_a) || !check_subalgebra(d, span_b)) return false;
    return (span_a.transpose() * omega.g * span_a).is_zero() && (span_b.transpose() * omega.g * span_b).is_zero();
}

}  // namespace ldb
