#pragma once

#include "ldb/linalg.hpp"

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

namespace ldb {

/// A bilinear product on an n-dimensional space: e_i . e_j = sum_k c(i,j,k) e_k.
class BilinearOp {
public:
    BilinearOp() = default;
    explicit BilinearOp(std::size_t n) : n_(n), c_(n * n * n) {}

    std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }
    /// Product of basis vectors e_i . e_j as a coordinate vector.
    Vec basis_product(std::size_t i, std::size_t j) const;
    Vec apply(const Vec& x, const Vec& y) const;

    /// Left multiplication L(e_i): column j holds e_i . e_j.
    Matrix left(std::size_t i) const;
    /// Right multiplication R(e_i): column j holds e_j . e_i.
    Matrix right(std::size_t i) const;
    Matrix left(const Vec& x) const;
    Matrix right(const Vec& x) const;

    /// (x, y) -> y . x
    BilinearOp opposite() const;
    bool is_zero() const;

    BilinearOp& operator+=(const BilinearOp& o);
    BilinearOp& operator-=(const BilinearOp& o);
    BilinearOp& operator*=(const Scalar& s);
    friend BilinearOp operator+(BilinearOp a, const BilinearOp& b) { return a += b; }
    friend BilinearOp operator-(BilinearOp a, const BilinearOp& b) { return a -= b; }
    friend BilinearOp operator*(const Scalar& s, BilinearOp a) { return a *= s; }
    friend bool operator==(const BilinearOp& a, const BilinearOp& b) = default;

    const std::vector<Scalar>& data() const { return c_; }

private:
    std::size_t n_ = 0;
    std::vector<Scalar> c_;
};

/// Element of V (x) V stored as its coefficient matrix: coeff(i,j) multiplies e_i (x) e_j.
class Tensor2 {
public:
    Tensor2() = default;
    explicit Tensor2(std::size_t n) : m_(n, n) {}
    explicit Tensor2(Matrix coeff);

    static Tensor2 elementary(std::size_t n, std::size_t i, std::size_t j, const Scalar& c = 1);
    static Tensor2 outer(const Vec& a, const Vec& b);

    std::size_t dim() const { return m_.rows(); }
    Scalar& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& coeff() const { return m_; }

    /// The flip tau(a (x) b) = b (x) a.
    Tensor2 tau() const { return Tensor2(m_.transpose()); }
    bool is_skew() const { return m_.is_skew(); }
    bool is_symmetric() const { return m_.is_symmetric(); }
    bool is_zero() const { return m_.is_zero(); }

    /// (f (x) g) applied to this tensor.
    Tensor2 apply(const Matrix& f, const Matrix& g) const;
    Tensor2 apply_left(const Matrix& f) const;
    Tensor2 apply_right(const Matrix& g) const;

    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(const Scalar& s, const Tensor2& a) { return Tensor2(s * a.m_); }
    friend Tensor2 operator-(const Tensor2& a) { return Tensor2(-a.m_); }
    friend bool operator==(const Tensor2& a, const Tensor2& b) = default;

private:
    Matrix m_;
};

std::ostream& operator<<(std::ostream& os, const Tensor2& t);

/// Element of V (x) V (x) V.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t n) : n_(n), c_(n * n * n) {}

    std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }
    bool is_zero() const;

    /// x(x)y(x)z -> y(x)x(x)z
    Tensor3 sigma12() const;
    /// x(x)y(x)z -> z(x)y(x)x
    Tensor3 sigma13() const;
    /// x(x)y(x)z -> x(x)z(x)y
    Tensor3 sigma23() const;
    /// The cycle 1 -> 3 -> 2 -> 1 on tensor positions: x(x)y(x)z -> y(x)z(x)x.
    Tensor3 sigma132() const;

    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator-(Tensor3 a);
    friend Tensor3 operator*(const Scalar& s, Tensor3 a);
    friend bool operator==(const Tensor3& a, const Tensor3& b) = default;

    const std::vector<Scalar>& data() const { return c_; }

private:
    std::size_t n_ = 0;
    std::vector<Scalar> c_;
};

std::ostream& operator<<(std::ostream& os, const Tensor3& t);

/// A pair of distinct 1-based tensor slots from {1,2,3}.
using Slots = std::array<int, 2>;

/// Places r in slots rs and s in slots ss, multiplying with op in the single slot they share.
/// The first factor of each operand goes to its first named slot. In the shared slot the
/// entry of r is the left argument of op. Throws PlacementError unless exactly one slot is shared.
Tensor3 place_product(const BilinearOp& op, const Tensor2& r, const Tensor2& s, Slots rs, Slots ss);

}  // namespace ldb
