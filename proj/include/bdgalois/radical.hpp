#pragma once

#include "bdgalois/rational.hpp"

#include <map>
#include <string>

namespace bdgalois {

// Element of a multiquadratic extension of Q: rational_part + sum c_d * sqrt(d)
// over square-free integer radicands d. Radicands may be negative (sqrt(d) is
// then i*sqrt(|d|), with key -1 playing the role of i), which keeps the
// integrality tests decidable when 1+4b < 0. Closed under +, -, *, /; no zero
// coefficients are stored and every key is square-free with |d| >= 2 or d == -1.
class RadicalNumber {
public:
    RadicalNumber() = default;
    RadicalNumber(Rational r) : rat_(std::move(r)) {}  // NOLINT: implicit by design
    RadicalNumber(long n) : rat_(n) {}
    RadicalNumber(int n) : rat_(n) {}

    // Exact square root of a rational, e.g. 9/4 -> 3/2, 1/2 -> (1/2)sqrt(2),
    // -3 -> sqrt(-3).
    static RadicalNumber sqrt_of(const Rational& q);

    const Rational& rational_part() const { return rat_; }
    const std::map<long long, Rational>& radical_terms() const { return terms_; }

    bool is_zero() const { return terms_.empty() && rat_.is_zero(); }
    bool is_one() const { return terms_.empty() && rat_.is_one(); }
    bool is_rational() const { return terms_.empty(); }
    bool is_integer() const { return terms_.empty() && rat_.is_integer(); }
    bool is_nonnegative_integer() const { return terms_.empty() && rat_.is_nonnegative_integer(); }
    bool is_real() const;

    // Requires a rational value.
    const Rational& to_rational() const;
    // Requires a real value.
    double to_double() const;

    RadicalNumber operator-() const;
    RadicalNumber& operator+=(const RadicalNumber& o);
    RadicalNumber& operator-=(const RadicalNumber& o);
    RadicalNumber& operator*=(const RadicalNumber& o);
    RadicalNumber& operator/=(const RadicalNumber& o);

    friend RadicalNumber operator+(RadicalNumber a, const RadicalNumber& b) { return a += b; }
    friend RadicalNumber operator-(RadicalNumber a, const RadicalNumber& b) { return a -= b; }
    friend RadicalNumber operator*(RadicalNumber a, const RadicalNumber& b) { return a *= b; }
    friend RadicalNumber operator/(RadicalNumber a, const RadicalNumber& b) { return a /= b; }

    friend bool operator==(const RadicalNumber& a, const RadicalNumber& b) {
        return a.rat_ == b.rat_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const RadicalNumber& a, const RadicalNumber& b) { return !(a == b); }

    RadicalNumber inverse() const;

    std::string str() const;

private:
    void add_term(long long d, const Rational& c);

    Rational rat_;
    std::map<long long, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const RadicalNumber& r);

// m = s^2 * d with d square-free; returns (s, d). m must be nonzero and
// |m| small enough to factor by bounded trial division.
std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& m);

}  // namespace bdgalois
