#include "ldb/tensor.hpp"

#include <string>

namespace ldb {

namespace {

void require_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw ShapeError(std::string(what) + ": dimension " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Vec BilinearOp::basis_product(std::size_t i, std::size_t j) const {
    Vec v(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = (*this)(i, j, k);
    return v;
}

Vec BilinearOp::apply(const Vec& x, const Vec& y) const {
    require_dim(x.size(), n_, "BilinearOp::apply");
    require_dim(y.size(), n_, "BilinearOp::apply");
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar w = x[i] * y[j];
            for (std::size_t k = 0; k < n_; ++k) out[k].add_product(w, (*this)(i, j, k));
        }
    }
    return out;
}

Matrix BilinearOp::left(std::size_t i) const {
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) m(k, j) = (*this)(i, j, k);
    return m;
}

Matrix BilinearOp::right(std::size_t i) const {
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) m(k, j) = (*this)(j, i, k);
    return m;
}

Matrix BilinearOp::left(const Vec& x) const {
    require_dim(x.size(), n_, "BilinearOp::left");
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (!x[i].is_zero()) m += x[i] * left(i);
    return m;
}

Matrix BilinearOp::right(const Vec& x) const {
    require_dim(x.size(), n_, "BilinearOp::right");
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (!x[i].is_zero()) m += x[i] * right(i);
    return m;
}

BilinearOp BilinearOp::opposite() const {
    BilinearOp o(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) o(i, j, k) = (*this)(j, i, k);
    return o;
}

bool BilinearOp::is_zero() const {
    for (const auto& s : c_)
        if (!s.is_zero()) return false;
    return true;
}

BilinearOp& BilinearOp::operator+=(const BilinearOp& o) {
    require_dim(n_, o.n_, "BilinearOp sum");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

BilinearOp& BilinearOp::operator-=(const BilinearOp& o) {
    require_dim(n_, o.n_, "BilinearOp difference");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

BilinearOp& BilinearOp::operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

Tensor2::Tensor2(Matrix coeff) : m_(std::move(coeff)) {
    if (!m_.square()) throw ShapeError("Tensor2 coefficients must be square");
}

Tensor2 Tensor2::elementary(std::size_t n, std::size_t i, std::size_t j, const Scalar& c) {
    Tensor2 t(n);
    t.m_.at(i, j) = c;
    return t;
}

Tensor2 Tensor2::outer(const Vec& a, const Vec& b) {
    require_dim(a.size(), b.size(), "Tensor2::outer");
    Tensor2 t(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) t(i, j) = a[i] * b[j];
    return t;
}

Tensor2 Tensor2::apply(const Matrix& f, const Matrix& g) const { return Tensor2(f * m_ * g.transpose()); }

Tensor2 Tensor2::apply_left(const Matrix& f) const { return Tensor2(f * m_); }

Tensor2 Tensor2::apply_right(const Matrix& g) const { return Tensor2(m_ * g.transpose()); }

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    m_ += o.m_;
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    m_ -= o.m_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Tensor2& t) { return os << t.coeff(); }

bool Tensor3::is_zero() const {
    for (const auto& s : c_)
        if (!s.is_zero()) return false;
    return true;
}

Tensor3 Tensor3::sigma12() const {
    Tensor3 t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) t(j, i, k) = (*this)(i, j, k);
    return t;
}

Tensor3 Tensor3::sigma13() const {
    Tensor3 t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) t(k, j, i) = (*this)(i, j, k);
    return t;
}

Tensor3 Tensor3::sigma23() const {
    Tensor3 t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) t(i, k, j) = (*this)(i, j, k);
    return t;
}

Tensor3 Tensor3::sigma132() const {
    Tensor3 t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t k = 0; k < n_; ++k) t(j, k, i) = (*this)(i, j, k);
    return t;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    require_dim(n_, o.n_, "Tensor3 sum");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    require_dim(n_, o.n_, "Tensor3 difference");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Tensor3 operator-(Tensor3 a) {
    for (auto& x : a.c_) x = -x;
    return a;
}

Tensor3 operator*(const Scalar& s, Tensor3 a) {
    for (auto& x : a.c_) x *= s;
    return a;
}

std::ostream& operator<<(std::ostream& os, const Tensor3& t) {
    bool first = true;
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t k = 0; k < t.dim(); ++k) {
                if (t(i, j, k).is_zero()) continue;
                os << (first ? "" : " + ") << t(i, j, k) << "*e" << i + 1 << "(x)e" << j + 1 << "(x)e" << k + 1;
                first = false;
            }
    if (first) os << '0';
    return os;
}

Tensor3 place_product(const BilinearOp& op, const Tensor2& r, const Tensor2& s, Slots rs, Slots ss) {
    const std::size_t n = op.dim();
    require_dim(r.dim(), n, "place_product");
    require_dim(s.dim(), n, "place_product");
    for (int v : {rs[0], rs[1], ss[0], ss[1]})
        if (v < 1 || v > 3) throw PlacementError("slot out of range 1..3");
    if (rs[0] == rs[1] || ss[0] == ss[1]) throw PlacementError("repeated slot within one operand");

    // Which operand positions land in the shared slot.
    int shared = 0, ri = -1, si = -1;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            if (rs[a] == ss[b]) {
                ++shared;
                ri = a;
                si = b;
            }
    if (shared != 1) throw PlacementError("operands must share exactly one slot");
    const int collision = rs[ri] - 1;
    const int r_free = rs[1 - ri] - 1;
    const int s_free = ss[1 - si] - 1;

    Tensor3 out(n);
    std::array<std::size_t, 3> idx{};
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Scalar& rc = r(p, q);
            if (rc.is_zero()) continue;
            const std::size_t r_col = ri == 0 ? p : q;
            idx[r_free] = ri == 0 ? q : p;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) {
                    const Scalar& sc = s(u, v);
                    if (sc.is_zero()) continue;
                    const std::size_t s_col = si == 0 ? u : v;
                    idx[s_free] = si == 0 ? v : u;
                    Scalar w = rc * sc;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& c = op(r_col, s_col, k);
                        if (c.is_zero()) continue;
                        idx[collision] = k;
                        out(idx[0], idx[1], idx[2]).add_product(w, c);
                    }
                }
        }
    return out;
}

}  // namespace ldb
