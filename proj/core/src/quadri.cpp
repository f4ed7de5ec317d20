#include "ldb/quadri.hpp"

#include "ldb/errors.hpp"

namespace ldb {

QuadriAlgebra::QuadriAlgebra(BilinearOp se_, BilinearOp ne_, BilinearOp sw_, BilinearOp nw_)
    : se(std::move(se_)), ne(std::move(ne_)), sw(std::move(sw_)), nw(std::move(nw_)) {
    const std::size_t n = se.dim();
    if (ne.dim() != n || sw.dim() != n || nw.dim() != n)
        throw ShapeError("QuadriAlgebra: the four products must share one dimension");
}

DendAlgebra horizontal(const QuadriAlgebra& q) { return {q.succ(), q.prec()}; }
DendAlgebra vertical(const QuadriAlgebra& q) { return {q.vee(), q.wedge()}; }

namespace {

struct QuadriOps {
    const QuadriAlgebra& q;
    BilinearOp succ, prec, vee, wedge, circ;

    explicit QuadriOps(const QuadriAlgebra& quad)
        : q(quad), succ(quad.succ()), prec(quad.prec()), vee(quad.vee()), wedge(quad.wedge()), circ(quad.circ()) {}
};

}  // namespace

Report check_quadri(const QuadriAlgebra& q) {
    const QuadriOps o(q);
    const std::size_t n = q.dim();
    Report out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                const std::vector<std::size_t> idx{i, j, k};
                out.add("Lq1", idx,
                        q.se.apply(o.circ.apply(x, y), z) - q.se.apply(x, q.se.apply(y, z)) +
                            q.se.apply(y, q.se.apply(x, z)));
                out.add("Lq2", idx,
                        q.ne.apply(o.vee.apply(x, y), z) - q.se.apply(x, q.ne.apply(y, z)) +
                            q.ne.apply(y, o.succ.apply(x, z)));
                out.add("Lq3", idx,
                        q.ne.apply(o.wedge.apply(x, y), z) - q.ne.apply(x, o.succ.apply(y, z)) +
                            q.se.apply(y, q.ne.apply(x, z)));
                out.add("Lq4", idx,
                        q.sw.apply(o.succ.apply(x, y), z) + q.sw.apply(y, o.vee.apply(x, z)) -
                            q.se.apply(x, q.sw.apply(y, z)));
                out.add("Lq5", idx,
                        q.nw.apply(q.se.apply(x, y), z) + q.nw.apply(y, o.circ.apply(x, z)) -
                            q.se.apply(x, q.nw.apply(y, z)));
                out.add("Lq6", idx,
                        q.ne.apply(y, o.prec.apply(x, z)) - q.nw.apply(q.ne.apply(y, x), z) -
                            q.sw.apply(x, o.wedge.apply(y, z)));
                out.add("Lq7", idx,
                        q.sw.apply(x, o.vee.apply(y, z)) - q.sw.apply(o.prec.apply(x, y), z) -
                            q.se.apply(y, q.sw.apply(x, z)));
                out.add("Lq8", idx,
                        q.sw.apply(x, o.wedge.apply(y, z)) - q.nw.apply(q.sw.apply(x, y), z) -
                            q.ne.apply(y, o.prec.apply(x, z)));
                out.add("Lq9", idx,
                        q.nw.apply(x, o.circ.apply(y, z)) - q.nw.apply(q.nw.apply(x, y), z) -
                            q.se.apply(y, q.nw.apply(x, z)));
            }
    return out;
}

Report lq6_alternative_report(const QuadriAlgebra& q) {
    const QuadriOps o(q);
    const std::size_t n = q.dim();
    Report out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                out.add("Lq6-alt", {i, j, k},
                        q.nw.apply(q.ne.apply(y, x), z) + q.sw.apply(x, o.wedge.apply(y, z)) -
                            q.ne.apply(x, o.prec.apply(y, z)));
            }
    return out;
}

DendRep horizontal_module(const QuadriAlgebra& q) {
    const std::size_t n = q.dim();
    DendRep rep(horizontal(q), n);
    for (std::size_t i = 0; i < n; ++i) {
        rep.lsucc[i] = q.se.left(i);
        rep.rsucc[i] = q.ne.right(i);
        rep.lprec[i] = q.sw.left(i);
        rep.rprec[i] = q.nw.right(i);
    }
    return rep;
}

DendRep vertical_module(const QuadriAlgebra& q) {
    const std::size_t n = q.dim();
    DendRep rep(vertical(q), n);
    for (std::size_t i = 0; i < n; ++i) {
        rep.lsucc[i] = q.se.left(i);
        rep.rsucc[i] = q.sw.right(i);
        rep.lprec[i] = q.ne.left(i);
        rep.rprec[i] = q.nw.right(i);
    }
    return rep;
}

QuadriEquivalence check_qq1(const QuadriAlgebra& q) {
    QuadriEquivalence e;
    e.quadri = check_quadri(q).ok();
    e.horizontal = check_ld(horizontal(q)).ok() && check_dend_rep(horizontal_module(q)).ok();
    e.vertical = check_ld(vertical(q)).ok() && check_dend_rep(vertical_module(q)).ok();
    return e;
}

namespace {

BilinearOp kron(const BilinearOp& a, const BilinearOp& b) {
    const std::size_t n = a.dim(), m = b.dim();
    BilinearOp out(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = a(i, j, k);
                if (c.is_zero()) continue;
                for (std::size_t p = 0; p < m; ++p)
                    for (std::size_t s = 0; s < m; ++s)
                        for (std::size_t t = 0; t < m; ++t) out(i * m + p, j * m + s, k * m + t) = c * b(p, s, t);
            }
    return out;
}

}  // namespace

QuadriAlgebra quadri_tensor(const DendAlgebra& a, const DendAlgebra& b) {
    return {kron(a.succ, b.succ), kron(a.succ, b.prec), kron(a.prec, b.succ), kron(a.prec, b.prec)};
}

QuadriAlgebra quadri_from_o_operator(const OOperator& o) {
    if (!o.weight.is_zero()) throw ContractError("quadri_from_o_operator: weight must be zero");
    if (!check_o_operator(o)) throw ContractError("quadri_from_o_operator: T is not an O-operator");
    const std::size_t m = o.rep.mdim;
    std::vector<Matrix> ls(m), rs(m), lp(m), rp(m);
    for (std::size_t u = 0; u < m; ++u) {
        const Vec tu = o.t.column(u);
        ls[u] = combine(o.rep.lsucc, tu);
        rs[u] = combine(o.rep.rsucc, tu);
        lp[u] = combine(o.rep.lprec, tu);
        rp[u] = combine(o.rep.rprec, tu);
    }
    QuadriAlgebra q(m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t k = 0; k < m; ++k) {
                q.se(u, v, k) = ls[u](k, v);
                q.ne(u, v, k) = rs[v](k, u);
                q.sw(u, v, k) = lp[u](k, v);
                q.nw(u, v, k) = rp[v](k, u);
            }
    return q;
}

TransportedQuadri transport_quadri(const OOperator& o) {
    if (rank(o.t) != o.t.cols()) throw ContractError("transport_quadri: T is not injective");
    // T(u) op T(v) = T(u op v): in the basis of T's columns the constants are those on V.
    return {o.t, quadri_from_o_operator(o)};
}

Matrix cocycle_operator(const BilForm& omega) {
    auto ginv = inverse(omega.g);
    if (!ginv) throw ContractError("cocycle_operator: form is degenerate");
    return ginv->transpose();
}

QuadriAlgebra quadri_from_cocycle(const DendAlgebra& a, const BilForm& omega) {
    if (omega.dim() != a.dim()) throw ShapeError("quadri_from_cocycle: dimension mismatch");
    if (!omega.is_skew()) throw ContractError("quadri_from_cocycle: form is not skew-symmetric");
    if (!omega.is_nondegenerate()) throw ContractError("quadri_from_cocycle: form is degenerate");
    if (!check_2cocycle(a, omega)) throw ContractError("quadri_from_cocycle: form is not a 2-cocycle");
    const Matrix t = cocycle_operator(omega);
    const QuadriAlgebra on_dual = quadri_from_o_operator(OOperator{t, dual_rep(regular_rep(a)), Scalar(0), {}});
    const Matrix tinv = *inverse(t);
    return {change_basis(on_dual.se, tinv), change_basis(on_dual.ne, tinv), change_basis(on_dual.sw, tinv),
            change_basis(on_dual.nw, tinv)};
}

namespace {

// Calls f(label, indices, residual) for the four invariance equations on every basis triple.
template <class F>
void for_each_form_residual(const QuadriAlgebra& q, const BilForm& omega, F&& f) {
    const std::size_t n = q.dim();
    if (omega.dim() != n) throw ShapeError("quadri_form_report: dimension mismatch");
    const DerivedOps d = derive_ops(horizontal(q));
    const BilinearOp prec = q.prec();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec x = basis_vec(n, i), y = basis_vec(n, j), z = basis_vec(n, k);
                const std::vector<std::size_t> idx{i, j, k};
                f("Qr2-se", idx, omega(q.se.apply(x, y), z) + omega(y, d.circ.apply(x, z)));
                f("Qr2-sw", idx, omega(q.sw.apply(x, y), z) - omega(y, prec.apply(x, z)));
                f("Qr3-ne", idx, omega(q.ne.apply(x, y), z) + omega(x, d.odot.apply(z, y)));
                f("Qr3-nw", idx, omega(q.nw.apply(x, y), z) - omega(x, d.star.apply(y, z)));
            }
}

}  // namespace

Report quadri_form_report(const QuadriAlgebra& q, const BilForm& omega) {
    Report out;
    for_each_form_residual(q, omega, [&](const char* label, const std::vector<std::size_t>& idx, const Scalar& r) {
        out.add(label, idx, {r});
    });
    return out;
}

std::vector<BilForm> quadri_form_space(const QuadriAlgebra& q) {
    const std::size_t n = q.dim();
    std::vector<Matrix> basis;
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix g(n, n);
            g(i, j) = 1;
            g(j, i) = -1;
            Vec col;
            for_each_form_residual(q, BilForm(g), [&](const char*, const std::vector<std::size_t>&, const Scalar& r) {
                col.push_back(r);
            });
            cols.push_back(std::move(col));
            basis.push_back(std::move(g));
        }
    if (basis.empty()) return {};
    std::vector<BilForm> out;
    for (const Vec& k : kernel(Matrix::from_columns(cols, cols.front().size()))) {
        Matrix g(n, n);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (!k[b].is_zero()) g += k[b] * basis[b];
        out.emplace_back(std::move(g));
    }
    return out;
}

}  // namespace ldb
