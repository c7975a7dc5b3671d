#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace bdgalois {

// Exact rational number. Invariants: always in lowest terms, denominator > 0,
// canonical zero is 0/1. Backed by GMP; every constructor canonicalizes.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}    // NOLINT: implicit by design, 3 -> 3/1
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n, long d);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d);

    // Accepts "p", "-p", "p/q" (decimal digits only).
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonnegative_integer() const { return is_integer() && sgn(v_) >= 0; }
    int sign() const { return sgn(v_); }

    // Requires an integer value that fits in long.
    long to_long() const;
    double to_double() const { return v_.get_d(); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational floor() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // e may be negative only for nonzero values.
    Rational pow(long e) const;

    // "p" when integral, otherwise "p/q".
    std::string str() const;

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace bdgalois
