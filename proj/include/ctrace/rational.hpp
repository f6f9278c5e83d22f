#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ctrace::qlinalg {

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// every operation is exact. Backed by GMP so numerators and denominators
/// never overflow.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {} // NOLINT: implicit by design, scalars mix with ints
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    /// Throws ParseError on anything else (including zero denominators).
    static Rational parse(const std::string& text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other); // throws InputError on zero divisor

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    Rational abs() const;

    /// "p" when the value is integral, "p/q" otherwise.
    std::string str() const;

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_; // canonical form maintained by mpq
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ctrace::qlinalg
