#pragma once

#include <gmpxx.h>

#include "ldb/errors.hpp"

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ldb {

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Scalar {
public:
    Scalar() = default;

    template <std::integral I>
    Scalar(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Scalar(long num, long den);
    explicit Scalar(mpq_class v);

    /// Accepts "p", "-p" or "p/q" with decimal integers; q must be nonzero.
    static Scalar parse(std::string_view text);

    /// Canonical "p/q" form; the denominator is omitted when it equals 1.
    std::string str() const;

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    bool is_integer() const;

    const mpq_class& raw() const { return value_; }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    /// Throws std::domain_error on division by zero.
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// Adds a*b in place without a temporary Scalar.
    void add_product(const Scalar& a, const Scalar& b);

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec basis_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(const Scalar& s, Vec v);
Vec operator-(Vec v);
void axpy(Vec& y, const Scalar& a, const Vec& x);

}  // namespace ldb
