#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace psolve {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& value) : value_(value) {}
    explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Parses "a" or "a/b" with optional leading sign. Throws
    /// std::invalid_argument on malformed text or a zero denominator.
    static Rational from_string(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_one() const { return value_ == 1; }

    double to_double() const { return value_.get_d(); }
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    std::size_t hash() const;

private:
    mpq_class value_{0};
};

}  // namespace psolve

template <>
struct std::hash<psolve::Rational> {
    std::size_t operator()(const psolve::Rational& r) const noexcept { return r.hash(); }
};
