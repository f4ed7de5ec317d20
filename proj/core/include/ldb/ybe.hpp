#pragma once

#include "ldb/rep.hpp"

#include <optional>

namespace ldb {

/// The six three-tensors attached to r. S is the left-hand side of the Yang-Baxter type equation
///   S  = r23 o r13 - r12 . r23 - r12 > r13
///   S1 = r12 . r13 + r13 o r23 + r12 > r23
///   S2 = r12 * r13 - r12 < r23 + r13 < r23
///   S3 = r23 . r12 + r23 > r13 - r12 o r13
///   S4 = -r13 . r12 + r12 o r23 + r13 > r23
///   S5 = r23 < r13 + r12 < r13 - r12 * r23
/// where o, ., * are circ, odot, star.
struct STensors {
    Tensor3 S, S1, S2, S3, S4, S5;
};

STensors s_tensors(const DendAlgebra& a, const Tensor2& r);
/// S alone.
Tensor3 ldybe_tensor(const DendAlgebra& a, const Tensor2& r);
bool check_ldybe(const DendAlgebra& a, const Tensor2& r);

/// Matrix of T_r : A* -> A, <T_r(zeta), eta> = <r, zeta (x) eta>. Column i is T_r(e_i*).
Matrix t_map(const Tensor2& r);

/// Iv1 (L.(x) (x) I - I (x) Ro(x)) r and Iv2 (L*(x) (x) I - I (x) R<(x)) tau(r), per basis x.
Report invariance_report(const DendAlgebra& a, const Tensor2& r);
bool check_invariant(const DendAlgebra& a, const Tensor2& r);
/// The same condition phrased on T_r: Iv3 Ro(x)T_r + T_r L.*(x) and Iv4 L*(x)T_r + T_r R<*(x).
Report invariance_operator_report(const DendAlgebra& a, const Tensor2& r);

/// T : V -> A (matrix dim A x dim V) against a module rep, optionally with products on V.
struct OOperator {
    Matrix t;
    DendRep rep;
    Scalar weight;
    std::optional<DendAlgebra> background;

    const DendAlgebra& host() const { return rep.alg; }
};

/// Residuals of T(u)>T(v) - T(l>(Tu)v + r>(Tv)u + w u>_V v) ("O-succ") and the < analogue
/// ("O-prec") on basis pairs. Throws ContractError for nonzero weight without products on V, or
/// when those products do not form an A-module algebra.
Report o_operator_report(const OOperator& o);
bool check_o_operator(const OOperator& o);

/// P(x)>P(y) = P(P(x)>y + x>P(y) + w x>y) and the < analogue. Labels "RB-succ", "RB-prec".
Report rota_baxter_report(const DendAlgebra& a, const Matrix& p, const Scalar& weight);
bool check_rota_baxter(const DendAlgebra& a, const Matrix& p, const Scalar& weight);

/// Algebra A (+) V* (A basis first) and the skew tensor sum_i T(v_i)(x)v_i* - v_i*(x)T(v_i).
struct OSolution {
    DendAlgebra hat;
    Tensor2 r;
};

/// Requires weight 0 and a passing O-operator; throws ContractError otherwise.
OSolution solution_from_o_operator(const OOperator& o);

/// Products on A* built from the symmetric part s = r + tau(r):
///   zeta >= eta = Lo*(T_s zeta) eta,   zeta <= eta = -L<*(T_s zeta) eta.
DendAlgebra symmetric_part_products(const DendAlgebra& a, const Tensor2& r);

/// T_r as a weight -1 operator against the dual regular module with the products above.
/// Throws ContractError when r + tau(r) is not invariant.
OOperator relative_rb_from_r(const DendAlgebra& a, const Tensor2& r);
bool check_relative_rb_from_r(const DendAlgebra& a, const Tensor2& r);

}  // namespace ldb
