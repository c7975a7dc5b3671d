#pragma once

#include "bdgalois/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace bdgalois {

// Quotient of polynomials over an exact field, kept canonical:
// gcd(num, den) = 1 and den monic. The canonical zero is 0/1.
template <class F>
class RationalFunction {
public:
    RationalFunction() : den_(F(1)) {}
    RationalFunction(Polynomial<F> p) : num_(std::move(p)), den_(F(1)) {}  // NOLINT
    RationalFunction(F constant) : num_(std::move(constant)), den_(F(1)) {}  // NOLINT
    RationalFunction(long n) : num_(F(n)), den_(F(1)) {}                     // NOLINT

    static RationalFunction reduce(Polynomial<F> num, Polynomial<F> den) {
        if (den.is_zero()) throw std::domain_error("division by zero polynomial");
        RationalFunction out;
        if (num.is_zero()) return out;
        Polynomial<F> g = Polynomial<F>::gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        F lead_inv = F(1) / den.leading();
        out.num_ = num * lead_inv;
        out.den_ = den.monic();
        return out;
    }

    const Polynomial<F>& num() const { return num_; }
    const Polynomial<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    // deg(den) - deg(num); the order of the zero at infinity. Undefined for 0.
    int order_at_infinity() const {
        if (is_zero()) throw std::domain_error("order of zero function undefined");
        return den_.degree() - num_.degree();
    }

    RationalFunction operator-() const {
        RationalFunction out = *this;
        out.num_ = -out.num_;
        return out;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return reduce(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return reduce(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    RationalFunction derivative() const {
        return reduce(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Evaluation at a non-pole.
    F eval(const F& x) const {
        F d = den_.eval(x);
        if (d.is_zero()) throw std::domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

    RationalFunction pow(long e) const {
        if (e >= 0) {
            RationalFunction out;
            out.num_ = num_.pow(static_cast<unsigned>(e));
            out.den_ = den_.pow(static_cast<unsigned>(e));
            return out;  // already coprime, den monic
        }
        if (is_zero()) throw std::domain_error("division by zero");
        return reduce(den_.pow(static_cast<unsigned>(-e)), num_.pow(static_cast<unsigned>(-e)));
    }

    std::string str(const std::string& var = "x") const {
        if (is_polynomial()) return num_.str(var);
        std::string n = num_.str(var), d = den_.str(var);
        return "(" + n + ")/(" + d + ")";
    }

private:
    Polynomial<F> num_;
    Polynomial<F> den_;
};

template <class G, class F>
RationalFunction<G> convert_ratfun(const RationalFunction<F>& r) {
    return RationalFunction<G>::reduce(convert_poly<G>(r.num()), convert_poly<G>(r.den()));
}

}  // namespace bdgalois
