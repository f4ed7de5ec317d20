#include "ldb/algebra.hpp"

namespace ldb {

DendAlgebra::DendAlgebra(BilinearOp s, BilinearOp p) : succ(std::move(s)), prec(std::move(p)) {
    if (succ.dim() != prec.dim()) throw ShapeError("succ and prec dimensions differ");
}

BilinearOp DendAlgebra::star() const {
    BilinearOp c = circ();
    return c + c.opposite();
}

DerivedOps derive_ops(const DendAlgebra& a) { return {a.circ(), a.odot(), a.star()}; }

LeibnizAlgebra associated(const DendAlgebra& a) { return LeibnizAlgebra(a.circ()); }

MulTable::MulTable(const BilinearOp& op) {
    L.reserve(op.dim());
    R.reserve(op.dim());
    for (std::size_t i = 0; i < op.dim(); ++i) {
        L.push_back(op.left(i));
        R.push_back(op.right(i));
    }
}

Matrix MulTable::left(const Vec& x) const { return combine(L, x); }
Matrix MulTable::right(const Vec& x) const { return combine(R, x); }

Matrix combine(const std::vector<Matrix>& mats, const Vec& v) {
    if (mats.size() != v.size()) throw ShapeError("combine: coefficient count mismatch");
    if (mats.empty()) return {};
    Matrix out(mats[0].rows(), mats[0].cols());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out += v[i] * mats[i];
    return out;
}

Report check_leibniz(const BilinearOp& op) {
    // As operators on z: L(x o y) = L(x)L(y) - L(y)L(x).
    const std::size_t n = op.dim();
    MulTable t(op);
    Report rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix res = t.L[i] * t.L[j] - t.left(op.basis_product(i, j)) - t.L[j] * t.L[i];
            rep.add_columns("Leibniz", {i, j}, res);
        }
    return rep;
}

Report check_ld(const DendAlgebra& a) {
    const std::size_t n = a.dim();
    const BilinearOp circ = a.circ();
    MulTable s(a.succ), p(a.prec), c(circ);
    Report rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // x = e_i, y = e_j; each residual is an operator in z.
            Vec xcy = circ.basis_product(i, j);
            Vec xsy = a.succ.basis_product(i, j);
            Vec xpy = a.prec.basis_product(i, j);
            Matrix ld1 = s.left(xcy) - s.L[i] * s.L[j] + s.L[j] * s.L[i];
            Matrix ld2 = p.L[j] * c.L[i] + p.left(xsy) - s.L[i] * p.L[j];
            Matrix ld3 = p.L[i] * c.L[j] - p.left(xpy) - s.L[j] * p.L[i];
            rep.add_columns("Ld1", {i, j}, ld1);
            rep.add_columns("Ld2", {i, j}, ld2);
            rep.add_columns("Ld3", {i, j}, ld3);
        }
    return rep;
}

Report check_ld_consequences(const DendAlgebra& a) {
    const std::size_t n = a.dim();
    BilinearOp circ = a.circ(), odot = a.odot(), star = a.star();
    MulTable s(a.succ), p(a.prec), o(odot);
    Report rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            rep.add_columns("Ld4a", {i, j}, p.left(odot.basis_product(i, j)));
            rep.add_columns("Ld4b", {i, j}, s.left(star.basis_product(i, j)));
            // x = e_i, y = e_j:
            // y.(x.z) - (y o x).z = x.(y > z) = y > (x.z) - (y o x).z
            Matrix yox = o.left(circ.basis_product(j, i));
            Matrix lhs = o.L[j] * o.L[i] - yox;
            Matrix mid = o.L[i] * s.L[j];
            Matrix rhs = s.L[j] * o.L[i] - yox;
            rep.add_columns("Ld5a", {i, j}, lhs - mid);
            rep.add_columns("Ld5b", {i, j}, mid - rhs);
        }
    return rep;
}

namespace {

void hom_check(Report& rep, const char* label, const Matrix& f, const BilinearOp& src, const BilinearOp& dst) {
    const std::size_t n = src.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = f * src.basis_product(i, j);
            Vec rhs = dst.apply(f.column(i), f.column(j));
            rep.add(label, {i, j}, lhs - rhs);
        }
}

void require_map(const Matrix& f, std::size_t src, std::size_t dst) {
    if (f.cols() != src || f.rows() != dst) throw ShapeError("map shape does not match source and target dimensions");
}

}  // namespace

Report check_hom(const Matrix& f, const DendAlgebra& src, const DendAlgebra& dst) {
    require_map(f, src.dim(), dst.dim());
    Report rep;
    hom_check(rep, "hom-succ", f, src.succ, dst.succ);
    hom_check(rep, "hom-prec", f, src.prec, dst.prec);
    return rep;
}

Report check_hom(const Matrix& f, const LeibnizAlgebra& src, const LeibnizAlgebra& dst) {
    require_map(f, src.dim(), dst.dim());
    Report rep;
    hom_check(rep, "hom-circ", f, src.circ, dst.circ);
    return rep;
}

bool is_closed(const std::vector<const BilinearOp*>& ops, const Matrix& span) {
    for (const BilinearOp* op : ops) {
        if (op->dim() != span.rows()) throw ShapeError("span rows differ from algebra dimension");
        for (std::size_t a = 0; a < span.cols(); ++a)
            for (std::size_t b = 0; b < span.cols(); ++b) {
                Vec v = op->apply(span.column(a), span.column(b));
                if (is_zero(v)) continue;
                if (!solve_vector(span, v)) return false;
            }
    }
    return true;
}

bool check_subalgebra(const DendAlgebra& a, const Matrix& span) { return is_closed({&a.succ, &a.prec}, span); }

bool check_subalgebra(const LeibnizAlgebra& a, const Matrix& span) { return is_closed({&a.circ}, span); }

BilinearOp direct_sum(const BilinearOp& a, const BilinearOp& b) {
    const std::size_t n = a.dim(), m = b.dim();
    BilinearOp out(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = a(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) out(n + i, n + j, n + k) = b(i, j, k);
    return out;
}

DendAlgebra direct_sum(const DendAlgebra& a, const DendAlgebra& b) {
    return {direct_sum(a.succ, b.succ), direct_sum(a.prec, b.prec)};
}

BilinearOp change_basis(const BilinearOp& op, const Matrix& p) {
    auto pinv = inverse(p);
    if (!pinv) throw ContractError("change_basis: matrix is singular");
    const std::size_t n = op.dim();
    if (p.rows() != n) throw ShapeError("change_basis: dimension mismatch");
    BilinearOp out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = *pinv * op.apply(p.column(i), p.column(j));
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = v[k];
        }
    return out;
}

DendAlgebra change_basis(const DendAlgebra& a, const Matrix& p) {
    return {change_basis(a.succ, p), change_basis(a.prec, p)};
}

BilinearOp restrict_to(const BilinearOp& op, const Matrix& span) {
    const std::size_t d = span.cols();
    BilinearOp out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto coords = solve_vector(span, op.apply(span.column(i), span.column(j)));
            if (!coords) throw ContractError("restrict_to: span is not closed under the product");
            for (std::size_t k = 0; k < d; ++k) out(i, j, k) = (*coords)[k];
        }
    return out;
}

}  // namespace ldb
