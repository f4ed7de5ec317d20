#pragma once

#include "ldb/report.hpp"
#include "ldb/tensor.hpp"

#include <cstddef>
#include <vector>

namespace ldb {

/// A vector space with two products succ (x > y) and prec (x < y).
struct DendAlgebra {
    BilinearOp succ;
    BilinearOp prec;

    DendAlgebra() = default;
    explicit DendAlgebra(std::size_t n) : succ(n), prec(n) {}
    DendAlgebra(BilinearOp s, BilinearOp p);

    std::size_t dim() const { return succ.dim(); }
    /// x o y = x > y + x < y
    BilinearOp circ() const { return succ + prec; }
    /// x . y = x > y + y < x
    BilinearOp odot() const { return succ + prec.opposite(); }
    /// x * y = x o y + y o x
    BilinearOp star() const;

    friend bool operator==(const DendAlgebra& a, const DendAlgebra& b) = default;
};

struct LeibnizAlgebra {
    BilinearOp circ;

    LeibnizAlgebra() = default;
    explicit LeibnizAlgebra(BilinearOp c) : circ(std::move(c)) {}
    std::size_t dim() const { return circ.dim(); }
    friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) = default;
};

struct DerivedOps {
    BilinearOp circ;
    BilinearOp odot;
    BilinearOp star;
};

DerivedOps derive_ops(const DendAlgebra& a);
LeibnizAlgebra associated(const DendAlgebra& a);

/// Cached left and right multiplication matrices of a product, indexed by basis element.
struct MulTable {
    std::vector<Matrix> L;
    std::vector<Matrix> R;

    MulTable() = default;
    explicit MulTable(const BilinearOp& op);
    std::size_t dim() const { return L.size(); }
    Matrix left(const Vec& x) const;
    Matrix right(const Vec& x) const;
};

/// Matrix-valued linear combination sum_i v_i * mats[i].
Matrix combine(const std::vector<Matrix>& mats, const Vec& v);

/// x o (y o z) = (x o y) o z + y o (x o z) on every basis triple. Label "Leibniz".
Report check_leibniz(const BilinearOp& op);
inline Report check_leibniz(const LeibnizAlgebra& a) { return check_leibniz(a.circ); }

/// The three defining identities, labelled Ld1, Ld2, Ld3, indices (x, y, z).
Report check_ld(const DendAlgebra& a);

/// The consequences of the defining identities: Ld4a, Ld4b, Ld5a, Ld5b.
Report check_ld_consequences(const DendAlgebra& a);

/// f(x > y) = f(x) > f(y) and f(x < y) = f(x) < f(y). Labels "hom-succ", "hom-prec".
Report check_hom(const Matrix& f, const DendAlgebra& src, const DendAlgebra& dst);
/// f(x o y) = f(x) o f(y). Label "hom-circ".
Report check_hom(const Matrix& f, const LeibnizAlgebra& src, const LeibnizAlgebra& dst);

/// True when span(columns) is closed under every product in ops.
bool is_closed(const std::vector<const BilinearOp*>& ops, const Matrix& span);
/// True when span(columns) is closed under both dendriform products.
bool check_subalgebra(const DendAlgebra& a, const Matrix& span);
bool check_subalgebra(const LeibnizAlgebra& a, const Matrix& span);

/// Componentwise products on A (+) B with A and B multiplying to zero.
DendAlgebra direct_sum(const DendAlgebra& a, const DendAlgebra& b);
BilinearOp direct_sum(const BilinearOp& a, const BilinearOp& b);

/// Rewrites a product in the basis given by the columns of an invertible p.
BilinearOp change_basis(const BilinearOp& op, const Matrix& p);
DendAlgebra change_basis(const DendAlgebra& a, const Matrix& p);

/// Restriction of a product to the subspace spanned by the columns of span, in that basis.
/// Requires the span to be closed.
BilinearOp restrict_to(const BilinearOp& op, const Matrix& span);

}  // namespace ldb
