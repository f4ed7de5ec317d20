#pragma once

#include "ldb/ybe.hpp"

#include <optional>
#include <vector>

namespace ldb {

/// omega(u, v) = u^T g v.
struct BilForm {
    Matrix g;

    BilForm() = default;
    explicit BilForm(Matrix m);

    std::size_t dim() const { return g.rows(); }
    bool is_symmetric() const { return g.is_symmetric(); }
    bool is_skew() const { return g.is_skew(); }
    bool is_nondegenerate() const { return !det(g).is_zero(); }
    Scalar operator()(const Vec& u, const Vec& v) const;

    friend bool operator==(const BilForm& a, const BilForm& b) = default;
};

/// omega(x + a, y + b) = <x, b> + <a, y> on A (+) A*, n = dim A.
BilForm pairing_form(std::size_t n);

struct QuadraticRB {
    DendAlgebra alg;
    Matrix p;
    BilForm omega;
    Scalar weight;

    friend bool operator==(const QuadraticRB& a, const QuadraticRB& b) = default;
};

/// omega(z, x o y) = -omega(y, x o z) + omega(x, y o z + z o y). Label "Bs".
Report symplectic_report(const LeibnizAlgebra& l, const BilForm& omega);
/// Requires omega symmetric and nondegenerate (ContractError otherwise).
bool check_symplectic(const LeibnizAlgebra& l, const BilForm& omega);

/// omega(x < y, z) = omega(x, y o z + z o y) ("C1-prec") and omega(x > y, z) = -omega(y, x o z) ("C1-succ").
Report quadratic_report(const DendAlgebra& a, const BilForm& omega);
/// Requires omega symmetric and nondegenerate (ContractError otherwise).
bool check_quadratic_ld(const DendAlgebra& a, const BilForm& omega);

/// omega(x > y + x < y, z) = omega(x, y > z + z < y) - omega(y, x > z). Label "Qr1".
Report cocycle_report(const DendAlgebra& a, const BilForm& omega);
/// Requires omega skew (ContractError otherwise).
bool check_2cocycle(const DendAlgebra& a, const BilForm& omega);

/// Products solved from the invariance conditions: x > y = -W^{-1} Lo(x)^T W y and
/// x < y = W^{-1} L*(y)^T W x with W = omega#. Requires a symplectic input.
DendAlgebra dendriform_from_symplectic(const LeibnizAlgebra& l, const BilForm& omega);

/// P(x) o P(y) = P(P(x) o y + x o P(y) + w x o y). Labels "RB-circ".
Report rota_baxter_leibniz_report(const LeibnizAlgebra& l, const Matrix& p, const Scalar& weight);

/// omega(Px, y) + omega(x, Py) + w omega(x, y) = 0. Label "Fs".
Report compatibility_report(const Matrix& p, const BilForm& omega, const Scalar& weight);

/// Quadratic, Rota-Baxter of the given weight, and compatible.
bool check_quadratic_rb(const QuadraticRB& q);
/// Symplectic for the sum product, Rota-Baxter on it, and compatible.
bool check_rb_symplectic(const LeibnizAlgebra& l, const Matrix& p, const BilForm& omega, const Scalar& weight);

/// omega#: omega(x, y) = <omega#(x), y>, i.e. the matrix g^T.
Matrix omega_sharp(const BilForm& omega);
/// Tensor with T_{r_omega} = (omega#)^{-1}. Requires a nondegenerate form.
Tensor2 r_omega(const BilForm& omega);

/// omega(x, y) = -w <T_{r + tau(r)}^{-1} x, y> and P = T_r omega#. Throws ContractError when
/// the weight is zero or r is not factorizable.
QuadraticRB rb_from_factorizable(const DendAlgebra& a, const Tensor2& r, const Scalar& weight);
/// r with T_r = P (omega#)^{-1}. Throws ContractError for zero weight or invalid input.
Tensor2 factorizable_from_rb(const QuadraticRB& q);

/// Bases of the spaces of symmetric forms satisfying Bs and of skew forms satisfying Qr1,
/// obtained as kernels of the linear conditions in the form entries.
std::vector<BilForm> symplectic_form_space(const LeibnizAlgebra& l);
std::vector<BilForm> cocycle_form_space(const DendAlgebra& a);
std::vector<BilForm> quadratic_form_space(const DendAlgebra& a);

/// First nondegenerate combination sum c_i f_i with integer c_i in [-bound, bound], if any.
std::optional<BilForm> find_nondegenerate(const std::vector<BilForm>& basis, int bound = 1);

}  // namespace ldb
