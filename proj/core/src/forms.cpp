#include "ldb/forms.hpp"
#include "ldb/bialgebra.hpp"

#include <functional>

namespace ldb {

BilForm::BilForm(Matrix m) : g(std::move(m)) {
    if (!g.square()) throw ShapeError("bilinear form matrix must be square");
}

Scalar BilForm::operator()(const Vec& u, const Vec& v) const {
    const Vec gv = g * v;
    if (u.size() != gv.size()) throw ShapeError("bilinear form applied to a vector of the wrong size");
    Scalar s;
    for (std::size_t i = 0; i < u.size(); ++i) s.add_product(u[i], gv[i]);
    return s;
}

BilForm pairing_form(std::size_t n) {
    Matrix g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, n + i) = 1;
        g(n + i, i) = 1;
    }
    return BilForm(std::move(g));
}

namespace {

using TripleFn = std::function<Scalar(std::size_t, std::size_t, std::size_t)>;

void require_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw ShapeError(std::string(what) + ": form and algebra dimensions differ");
}

void require_sym_nondeg(const BilForm& omega, const char* what) {
    if (!omega.is_symmetric() || !omega.is_nondegenerate())
        throw ContractError(std::string(what) + ": form must be symmetric and nondegenerate");
}

void add_triples(Report& rep, const char* label, std::size_t n, const TripleFn& f) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar v = f(i, j, k);
                if (!v.is_zero()) rep.add(label, {i, j, k}, Vec{v});
            }
}

// e_a^T g v
Scalar pair(const Matrix& g, std::size_t a, const Vec& v) {
    Scalar s;
    for (std::size_t j = 0; j < v.size(); ++j) s.add_product(g(a, j), v[j]);
    return s;
}

// v^T g e_b
Scalar pair(const Matrix& g, const Vec& v, std::size_t b) {
    Scalar s;
    for (std::size_t i = 0; i < v.size(); ++i) s.add_product(v[i], g(i, b));
    return s;
}

// Residual of each identity on the basis triple (x, y, z); all are linear in g.
TripleFn bs_fn(const BilinearOp& c, const Matrix& g) {
    return [&c, &g](std::size_t x, std::size_t y, std::size_t z) {
        return pair(g, z, c.basis_product(x, y)) + pair(g, y, c.basis_product(x, z)) -
               pair(g, x, c.basis_product(y, z) + c.basis_product(z, y));
    };
}

TripleFn c1_prec_fn(const DendAlgebra& a, const BilinearOp& circ, const Matrix& g) {
    return [&a, &circ, &g](std::size_t x, std::size_t y, std::size_t z) {
        return pair(g, a.prec.basis_product(x, y), z) - pair(g, x, circ.basis_product(y, z) + circ.basis_product(z, y));
    };
}

TripleFn c1_succ_fn(const DendAlgebra& a, const BilinearOp& circ, const Matrix& g) {
    return [&a, &circ, &g](std::size_t x, std::size_t y, std::size_t z) {
        return pair(g, a.succ.basis_product(x, y), z) + pair(g, y, circ.basis_product(x, z));
    };
}

TripleFn qr1_fn(const DendAlgebra& a, const BilinearOp& circ, const Matrix& g) {
    return [&a, &circ, &g](std::size_t x, std::size_t y, std::size_t z) {
        return pair(g, circ.basis_product(x, y), z) -
               pair(g, x, a.succ.basis_product(y, z) + a.prec.basis_product(z, y)) +
               pair(g, y, a.succ.basis_product(x, z));
    };
}

std::vector<Matrix> sym_basis(std::size_t n, bool skew) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (skew && i == j) continue;
            Matrix m(n, n);
            m(i, j) = 1;
            m(j, i) = skew ? -1 : 1;
            out.push_back(std::move(m));
        }
    return out;
}

// Forms in the span of basis on which the linear residual map vanishes.
std::vector<BilForm> solve_forms(std::size_t n, const std::vector<Matrix>& basis,
                                 const std::function<std::vector<Scalar>(const Matrix&)>& residuals) {
    if (basis.empty()) return {};
    std::vector<Vec> cols;
    for (const Matrix& b : basis) cols.push_back(residuals(b));
    const std::size_t rows = cols.front().size();
    Matrix m = rows == 0 ? Matrix(1, basis.size()) : Matrix::from_columns(cols, rows);
    std::vector<BilForm> out;
    for (const Vec& k : kernel(m)) {
        Matrix g(n, n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!k[i].is_zero()) g += k[i] * basis[i];
        out.emplace_back(std::move(g));
    }
    return out;
}

std::vector<Scalar> triples(std::size_t n, const TripleFn& f) {
    std::vector<Scalar> out;
    out.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.push_back(f(i, j, k));
    return out;
}

}  // namespace

Report symplectic_report(const LeibnizAlgebra& l, const BilForm& omega) {
    require_dim(omega.dim(), l.dim(), "symplectic");
    Report rep;
    add_triples(rep, "Bs", l.dim(), bs_fn(l.circ, omega.g));
    return rep;
}

bool check_symplectic(const LeibnizAlgebra& l, const BilForm& omega) {
    require_sym_nondeg(omega, "check_symplectic");
    return symplectic_report(l, omega).ok();
}

Report quadratic_report(const DendAlgebra& a, const BilForm& omega) {
    require_dim(omega.dim(), a.dim(), "quadratic");
    const BilinearOp circ = a.circ();
    Report rep;
    add_triples(rep, "C1-prec", a.dim(), c1_prec_fn(a, circ, omega.g));
    add_triples(rep, "C1-succ", a.dim(), c1_succ_fn(a, circ, omega.g));
    return rep;
}

bool check_quadratic_ld(const DendAlgebra& a, const BilForm& omega) {
    require_sym_nondeg(omega, "check_quadratic_ld");
    return quadratic_report(a, omega).ok();
}

Report cocycle_report(const DendAlgebra& a, const BilForm& omega) {
    require_dim(omega.dim(), a.dim(), "cocycle");
    const BilinearOp circ = a.circ();
    Report rep;
    add_triples(rep, "Qr1", a.dim(), qr1_fn(a, circ, omega.g));
    return rep;
}

bool check_2cocycle(const DendAlgebra& a, const BilForm& omega) {
    if (!omega.is_skew()) throw ContractError("check_2cocycle: form must be skew-symmetric");
    return cocycle_report(a, omega).ok();
}

DendAlgebra dendriform_from_symplectic(const LeibnizAlgebra& l, const BilForm& omega) {
    if (!check_symplectic(l, omega)) throw ContractError("dendriform_from_symplectic: form is not symplectic");
    const std::size_t n = l.dim();
    const Matrix w = omega_sharp(omega);
    const Matrix winv = *inverse(w);
    const MulTable c(l.circ), st(l.circ + l.circ.opposite());
    DendAlgebra out(n);
    for (std::size_t x = 0; x < n; ++x) {
        const Matrix succ_x = -(winv * c.L[x].transpose() * w);   // column y: e_x > e_y
        const Matrix prec_x = winv * st.L[x].transpose() * w;     // column u: e_u < e_x
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < n; ++k) {
                out.succ(x, y, k) = succ_x(k, y);
                out.prec(y, x, k) = prec_x(k, y);
            }
    }
    return out;
}

Report rota_baxter_leibniz_report(const LeibnizAlgebra& l, const Matrix& p, const Scalar& weight) {
    const std::size_t n = l.dim();
    if (p.rows() != n || p.cols() != n) throw ShapeError("Rota-Baxter operator must be square of algebra size");
    Report rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec px = p.column(i), py = p.column(j);
            Vec inner = l.circ.apply(px, basis_vec(n, j)) + l.circ.apply(basis_vec(n, i), py);
            axpy(inner, weight, l.circ.basis_product(i, j));
            rep.add("RB-circ", {i, j}, l.circ.apply(px, py) - p * inner);
        }
    return rep;
}

Report compatibility_report(const Matrix& p, const BilForm& omega, const Scalar& weight) {
    if (p.rows() != omega.dim() || p.cols() != omega.dim()) throw ShapeError("compatibility: dimension mismatch");
    Report rep;
    rep.add_matrix("Fs", {}, p.transpose() * omega.g + omega.g * p + weight * omega.g);
    return rep;
}

bool check_quadratic_rb(const QuadraticRB& q) {
    return check_quadratic_ld(q.alg, q.omega) && check_rota_baxter(q.alg, q.p, q.weight) &&
           compatibility_report(q.p, q.omega, q.weight).ok();
}

bool check_rb_symplectic(const LeibnizAlgebra& l, const Matrix& p, const BilForm& omega, const Scalar& weight) {
    return check_symplectic(l, omega) && rota_baxter_leibniz_report(l, p, weight).ok() &&
           compatibility_report(p, omega, weight).ok();
}

Matrix omega_sharp(const BilForm& omega) { return omega.g.transpose(); }

Tensor2 r_omega(const BilForm& omega) {
    auto inv = inverse(omega.g);
    if (!inv) throw ContractError("r_omega: form is degenerate");
    return Tensor2(*inv);
}

QuadraticRB rb_from_factorizable(const DendAlgebra& a, const Tensor2& r, const Scalar& weight) {
    if (weight.is_zero()) throw ContractError("rb_from_factorizable: weight must be nonzero");
    if (classify_r(a, r).tag != RClassTag::Factorizable)
        throw ContractError("rb_from_factorizable: r is not factorizable");
    const Matrix ts_inv = *inverse(t_map(r + r.tau()));
    BilForm omega(-weight * ts_inv.transpose());
    Matrix p = t_map(r) * omega_sharp(omega);
    return QuadraticRB{a, std::move(p), std::move(omega), weight};
}

Tensor2 factorizable_from_rb(const QuadraticRB& q) {
    if (q.weight.is_zero()) throw ContractError("factorizable_from_rb: weight must be nonzero");
    if (!check_quadratic_rb(q)) throw ContractError("factorizable_from_rb: input is not a quadratic Rota-Baxter algebra");
    const Matrix winv = *inverse(omega_sharp(q.omega));
    return Tensor2((q.p * winv).transpose());
}

std::vector<BilForm> symplectic_form_space(const LeibnizAlgebra& l) {
    const std::size_t n = l.dim();
    return solve_forms(n, sym_basis(n, false), [&](const Matrix& g) { return triples(n, bs_fn(l.circ, g)); });
}

std::vector<BilForm> cocycle_form_space(const DendAlgebra& a) {
    const std::size_t n = a.dim();
    const BilinearOp circ = a.circ();
    return solve_forms(n, sym_basis(n, true), [&](const Matrix& g) { return triples(n, qr1_fn(a, circ, g)); });
}

std::vector<BilForm> quadratic_form_space(const DendAlgebra& a) {
    const std::size_t n = a.dim();
    const BilinearOp circ = a.circ();
    return solve_forms(n, sym_basis(n, false), [&](const Matrix& g) {
        auto eqs = triples(n, c1_prec_fn(a, circ, g));
        auto more = triples(n, c1_succ_fn(a, circ, g));
        eqs.insert(eqs.end(), more.begin(), more.end());
        return eqs;
    });
}

std::optional<BilForm> find_nondegenerate(const std::vector<BilForm>& basis, int bound) {
    if (basis.empty()) return std::nullopt;
    const std::size_t k = basis.size();
    std::vector<int> c(k, -bound);
    while (true) {
        Matrix g(basis[0].dim(), basis[0].dim());
        for (std::size_t i = 0; i < k; ++i)
            if (c[i] != 0) g += Scalar(c[i]) * basis[i].g;
        if (!det(g).is_zero()) return BilForm(std::move(g));
        std::size_t pos = 0;
        while (pos < k && c[pos] == bound) c[pos++] = -bound;
        if (pos == k) return std::nullopt;
        ++c[pos];
    }
}

}  // namespace ldb
