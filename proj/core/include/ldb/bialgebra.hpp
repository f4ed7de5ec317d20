#pragma once

#include "ldb/forms.hpp"
#include "ldb/ybe.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ldb {

/// Two comultiplications, stored by their values on basis elements.
struct CoProduct {
    std::vector<Tensor2> dsucc, dprec;

    CoProduct() = default;
    /// Zero comultiplications on an n-dimensional space.
    explicit CoProduct(std::size_t n) : dsucc(n, Tensor2(n)), dprec(n, Tensor2(n)) {}

    std::size_t dim() const { return dsucc.size(); }
    void validate_shape() const;

    /// Values on an arbitrary vector.
    Tensor2 succ(const Vec& x) const;
    Tensor2 prec(const Vec& x) const;
    Tensor2 total(const Vec& x) const { return succ(x) + prec(x); }
    /// D>(x) + tau D<(x)
    Tensor2 odot(const Vec& x) const;

    friend bool operator==(const CoProduct& a, const CoProduct& b) = default;
};

struct Bialgebra {
    DendAlgebra alg;
    CoProduct cop;

    friend bool operator==(const Bialgebra& a, const Bialgebra& b) = default;
};

/// Products on A*: e_i* > e_j* = sum_k D>(e_k)(i, j) e_k*, likewise for <.
DendAlgebra dualize(const CoProduct& cop);

/// Ca1, Ca2, Ca3 per basis element, residuals flattened three-tensors.
Report check_coalgebra(const CoProduct& cop);

/// B1..B6 on basis pairs (x, y).
Report check_bialgebra(const Bialgebra& b);
/// Algebra identities, coalgebra identities and B1..B6 together.
Report bialgebra_full_report(const Bialgebra& b);

/// D>(x) = (L.(x) (x) I - I (x) Ro(x)) r,  D<(x) = (L*(x) (x) I - I (x) R<(x)) tau(r).
CoProduct cobound(const DendAlgebra& a, const Tensor2& r);

enum class RClassTag { NotSolution, Triangular, QuasiTriangular, Factorizable };
std::string_view to_string(RClassTag tag);

struct RClass {
    RClassTag tag = RClassTag::NotSolution;
    /// S(r); zero for solutions.
    Tensor3 s_residual;
    /// Invariance of r + tau(r).
    Report invariance;
    /// Kernel of T_{r + tau(r)}; empty exactly when it is invertible.
    std::vector<Vec> kernel;
};

RClass classify_r(const DendAlgebra& a, const Tensor2& r);

/// zeta >_r eta = Lo*(T_r zeta) eta - R.*(T_tau(r) eta) zeta,
/// zeta <_r eta = L<*(T_tau(r) zeta) eta - L**(T_r eta) zeta.
DendAlgebra dual_mult_from_r(const DendAlgebra& a, const Tensor2& r);

/// The matched-pair pieces of the double: A acting on A* and A* acting on A, both by dual regular
/// modules. Throws ContractError when either algebra fails the dendriform identities.
MatchedPairLD double_matched_pair(const Bialgebra& b);
/// Products on A (+) A*, A basis first.
DendAlgebra double_of(const Bialgebra& b);

struct CanonicalR {
    DendAlgebra d;
    Tensor2 r;
    RClass cls;
};

/// The double together with r = sum_i e_i (x) e_i*.
CanonicalR canonical_r(const Bialgebra& b);

struct PhiIso {
    /// Map from the double of (A, cobound(r)) to A (+) A, A* block second.
    Matrix phi;
    DendAlgebra source;
    DendAlgebra target;
    bool bijective = false;
    Report hom;
};

/// phi(x, zeta) = (x + T_r zeta, x - T_tau(r) zeta). Throws ContractError unless r is factorizable.
PhiIso phi_iso(const DendAlgebra& a, const Tensor2& r);

/// The Leibniz algebra on A (+) A* (n = half the dimension) is symplectic for the pairing form and
/// both halves are subalgebras.
bool phase_space_check(const LeibnizAlgebra& d, const BilForm& omega);
bool phase_space_check(const DendAlgebra& d, const BilForm& omega);

/// (d, omega) quadratic, both spans subalgebras and isotropic. Throws ContractError when the spans
/// are not complementary or one of them is empty.
bool manin_triple_check(const DendAlgebra& d, const BilForm& omega, const Matrix& span_a, const Matrix& span_b);

}  // namespace ldb
