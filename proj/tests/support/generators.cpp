#include "generators.hpp"

#include "ldb/catalog.hpp"

namespace testgen {

DendAlgebra typed_abelian_circ_2d() {
    DendAlgebra a(2);
    a.succ(0, 0, 0) = 1;
    a.prec(0, 0, 0) = -1;
    a.succ(0, 1, 1) = 1;
    a.succ(1, 0, 1) = 1;
    a.prec(0, 1, 1) = -1;
    a.prec(1, 0, 1) = -1;
    return a;
}

DendAlgebra typed_affine_2d() {
    DendAlgebra a(2);
    a.succ(0, 0, 0) = 1;
    a.prec(0, 0, 0) = -1;
    a.succ(0, 1, 1) = 1;
    a.prec(1, 0, 1) = -1;
    return a;
}

DendAlgebra affine_semidirect_4d() {
    // e1, e2, e1*, e2* at indices 0..3
    DendAlgebra a(4);
    a.succ(0, 0, 0) = 1;
    a.prec(0, 0, 0) = -1;
    a.succ(0, 1, 1) = 1;
    a.prec(1, 0, 1) = -1;
    a.prec(0, 2, 2) = -1;
    a.prec(1, 3, 2) = -1;
    a.succ(0, 3, 3) = -1;
    a.succ(1, 3, 2) = 1;
    return a;
}

Tensor2 affine_skew_solution(const Scalar& t) {
    Tensor2 r(4);
    r(1, 2) = t;
    r(2, 1) = -t;
    return r;
}

Matrix Rng::matrix(std::size_t rows, std::size_t cols, int bound) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(bound);
    return m;
}

Matrix Rng::invertible(std::size_t n, int bound) {
    for (;;) {
        Matrix m = matrix(n, n, bound);
        if (!ldb::det(m).is_zero()) return m;
    }
}

Tensor2 Rng::tensor(std::size_t n, int bound) { return Tensor2(matrix(n, n, bound)); }

Tensor2 Rng::skew(std::size_t n, int bound) {
    Tensor2 r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            r(i, j) = entry(bound);
            r(j, i) = -r(i, j);
        }
    return r;
}

DendAlgebra Rng::valid_algebra(std::size_t n) {
    DendAlgebra acc;
    std::size_t built = 0;
    while (built < n) {
        DendAlgebra piece;
        const std::size_t left = n - built;
        const int pick = uniform(0, left >= 2 ? 3 : 1);
        if (pick == 0) {
            const Scalar p = entry(2);
            piece = ldb::catalog::scalar_1d(p, -p);
        } else if (pick == 1) {
            piece = ldb::catalog::zero(1);
        } else if (pick == 2) {
            piece = typed_affine_2d();
        } else {
            piece = typed_abelian_circ_2d();
        }
        acc = built == 0 ? piece : ldb::direct_sum(acc, piece);
        built += piece.dim();
    }
    return ldb::change_basis(acc, invertible(n, 1));
}

std::vector<Tensor2> invariant_symmetric_space(const DendAlgebra& a) {
    const std::size_t n = a.dim();
    // Unknowns: s(i, j) for i <= j.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
    std::vector<ldb::Vec> rows;
    std::vector<std::vector<ldb::Scalar>> columns;
    for (const auto& [i, j] : slots) {
        Tensor2 s(n);
        s(i, j) = 1;
        s(j, i) = 1;
        std::vector<ldb::Scalar> col;
        for (std::size_t x = 0; x < n; ++x) {
            const ldb::DerivedOps d = ldb::derive_ops(a);
            const Tensor2 iv1 = s.apply(d.odot.left(x), Matrix::identity(n)) -
                                s.apply(Matrix::identity(n), d.circ.right(x));
            const Tensor2 iv2 = s.tau().apply(d.star.left(x), Matrix::identity(n)) -
                                s.tau().apply(Matrix::identity(n), a.prec.right(x));
            for (const auto& v : iv1.coeff().data()) col.push_back(v);
            for (const auto& v : iv2.coeff().data()) col.push_back(v);
        }
        columns.push_back(std::move(col));
    }
    const Matrix sys = Matrix::from_columns(columns, columns.empty() ? 0 : columns[0].size());
    std::vector<Tensor2> out;
    for (const auto& k : ldb::kernel(sys)) {
        Tensor2 s(n);
        for (std::size_t c = 0; c < slots.size(); ++c) {
            const auto [i, j] = slots[c];
            s(i, j) = k[c];
            s(j, i) = k[c];
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace testgen
