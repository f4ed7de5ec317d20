#pragma once

#include "ldb/forms.hpp"
#include "ldb/ybe.hpp"

namespace ldb {

/// Four products: se (x \ y), ne (x / y), sw (x ./ y), nw (x \. y), drawn as arrows.
struct QuadriAlgebra {
    BilinearOp se, ne, sw, nw;

    QuadriAlgebra() = default;
    explicit QuadriAlgebra(std::size_t n) : se(n), ne(n), sw(n), nw(n) {}
    QuadriAlgebra(BilinearOp se_, BilinearOp ne_, BilinearOp sw_, BilinearOp nw_);

    std::size_t dim() const { return se.dim(); }
    BilinearOp succ() const { return ne + se; }
    BilinearOp prec() const { return nw + sw; }
    BilinearOp vee() const { return se + sw; }
    BilinearOp wedge() const { return ne + nw; }
    BilinearOp circ() const { return succ() + prec(); }

    friend bool operator==(const QuadriAlgebra& a, const QuadriAlgebra& b) = default;
};

/// (succ, prec) = (ne + se, nw + sw).
DendAlgebra horizontal(const QuadriAlgebra& q);
/// (vee, wedge) = (se + sw, ne + nw).
DendAlgebra vertical(const QuadriAlgebra& q);

/// Lq1..Lq9 on all basis triples (x, y, z). Lq6 is checked in the form
///   y ne (x < z) = (y ne x) nw z + x sw (y wedge z),
/// which is what the representation identities on the horizontal algebra require.
Report check_quadri(const QuadriAlgebra& q);
/// The alternative form (y ne x) nw z + x sw (y wedge z) = x ne (y < z). Label "Lq6-alt".
Report lq6_alternative_report(const QuadriAlgebra& q);

/// (L_se, R_ne, L_sw, R_nw) as a module over the horizontal algebra.
DendRep horizontal_module(const QuadriAlgebra& q);
/// (L_se, R_sw, L_ne, R_nw) as a module over the vertical algebra.
DendRep vertical_module(const QuadriAlgebra& q);

struct QuadriEquivalence {
    bool quadri = false;
    bool horizontal = false;
    bool vertical = false;
    bool agree() const { return quadri == horizontal && horizontal == vertical; }
};

/// The three equivalent characterizations, each computed independently.
QuadriEquivalence check_qq1(const QuadriAlgebra& q);

/// Products on A (x) B, basis e_i (x) f_a at index i * dim B + a:
///   nw = <1 (x) <2, sw = <1 (x) >2, ne = >1 (x) <2, se = >1 (x) >2.
QuadriAlgebra quadri_tensor(const DendAlgebra& a, const DendAlgebra& b);

/// u se v = l>(Tu)v, u ne v = r>(Tv)u, u sw v = l<(Tu)v, u nw v = r<(Tv)u.
/// Throws ContractError unless T is a weight-zero O-operator.
QuadriAlgebra quadri_from_o_operator(const OOperator& o);

/// Image of an injective O-operator with the transported products, in the basis of the columns of T.
struct TransportedQuadri {
    Matrix span;
    QuadriAlgebra q;
};
/// Throws ContractError when T is not injective or not an O-operator.
TransportedQuadri transport_quadri(const OOperator& o);

/// T: A* -> A with omega(T a, y) = <a, y>.
Matrix cocycle_operator(const BilForm& omega);

/// Products built on A* from the dual regular module through T, then carried to A along T.
/// Throws ContractError unless omega is skew, nondegenerate and a 2-cocycle.
QuadriAlgebra quadri_from_cocycle(const DendAlgebra& a, const BilForm& omega);

/// omega(x se y, z) = -omega(y, x o z), omega(x sw y, z) = omega(y, x < z),
/// omega(x ne y, z) = -omega(x, z . y), omega(x nw y, z) = omega(x, y * z),
/// with o, ., * taken from the horizontal algebra. Labels "Qr2-se", "Qr2-sw", "Qr3-ne", "Qr3-nw".
Report quadri_form_report(const QuadriAlgebra& q, const BilForm& omega);
/// Skew forms satisfying Qr2 and Qr3 for q, as a basis of the solution space (possibly degenerate).
std::vector<BilForm> quadri_form_space(const QuadriAlgebra& q);

}  // namespace ldb
