#include "ldb/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace ldb {

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar::Scalar(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Scalar::Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer(num)) throw ParseError("malformed scalar '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Scalar(mpq_class(parse_integer(num)));
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer(den) || den[0] == '-' || den[0] == '+') {
        throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Scalar(mpq_class(parse_integer(num), d));
}

std::string Scalar::str() const {
    // mpq_class::get_str omits a unit denominator already.
    return value_.get_str(10);
}

bool Scalar::is_integer() const { return value_.get_den() == 1; }

Scalar& Scalar::operator+=(const Scalar& o) {
    value_ += o.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    value_ -= o.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    value_ *= o.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    value_ += a.value_ * b.value_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& s : v) {
        if (!s.is_zero()) return false;
    }
    return true;
}

Vec operator+(Vec a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec operator-(Vec a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

Vec operator-(Vec v) {
    for (auto& x : v) x = -x;
    return v;
}

Vec operator*(const Scalar& s, Vec v) {
    for (auto& x : v) x *= s;
    return v;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (y.size() != x.size()) throw ShapeError("vector size mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i) y[i].add_product(a, x[i]);
}

}  // namespace ldb
