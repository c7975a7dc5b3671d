#include "bdgalois/radical.hpp"

#include <cmath>
#include <ostream>
#include <vector>

namespace bdgalois {

namespace {

// Product of two square-free radicands: sqrt(d1)*sqrt(d2) = s*sqrt(d), with the
// convention sqrt(negative) = i*sqrt(|.|), so sqrt(-a)*sqrt(-b) = -sqrt(ab).
// Returns (s, d) with d square-free (or 1).
std::pair<mpz_class, long long> radicand_product(long long d1, long long d2) {
    mpz_class a(static_cast<long>(d1 < 0 ? -d1 : d1));
    mpz_class b(static_cast<long>(d2 < 0 ? -d2 : d2));
    auto [s, d] = squarefree_decompose(a * b);
    mpz_class sign(1);
    if (d1 < 0 && d2 < 0) sign = -1;                    // i*i = -1
    long long key = d.get_si();
    if (d1 < 0 != d2 < 0) key = -key;                   // one factor of i survives
    return {sign * s, key};
}

}  // namespace

std::pair<mpz_class, mpz_class> squarefree_decompose(const mpz_class& m) {
    if (sgn(m) == 0) throw std::domain_error("square-free decomposition of zero");
    mpz_class n = ::abs(m);
    mpz_class s = 1, d = 1;
    for (long p = 2; p * p <= n && p <= 1000000L; p == 2 ? p = 3 : p += 2) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e / 2 > 0) {
            mpz_class pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                          static_cast<unsigned long>(e / 2));
            s *= pk;
        }
        if (e % 2) d *= p;
    }
    if (n > 1) {
        // Remaining cofactor has no prime factor <= 1e6. Up to ~1e18 it is a
        // prime, a prime square, or a product of two distinct primes; each of
        // those is handled exactly below. Refuse anything bigger.
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_class rt;
            mpz_sqrt(rt.get_mpz_t(), n.get_mpz_t());
            s *= rt;
        } else if (n < mpz_class("1000000000000000000")) {
            d *= n;
        } else {
            throw std::domain_error("radicand too large to normalize: " + m.get_str());
        }
    }
    return {s, d};
}

RadicalNumber RadicalNumber::sqrt_of(const Rational& q) {
    if (q.is_zero()) return RadicalNumber();
    // sqrt(p/q) = sqrt(p*q)/q
    mpz_class prod = q.num() * q.den();
    auto [s, d] = squarefree_decompose(prod);
    Rational coeff(s, q.den());
    RadicalNumber out;
    if (d == 1 && sgn(prod) > 0) {
        out.rat_ = coeff;
    } else {
        long long key = d.get_si();
        if (sgn(prod) < 0) key = key == 1 ? -1 : -key;
        out.add_term(key, coeff);
    }
    return out;
}

bool RadicalNumber::is_real() const {
    for (const auto& [d, c] : terms_)
        if (d < 0) return false;
    return true;
}

const Rational& RadicalNumber::to_rational() const {
    if (!is_rational()) throw std::domain_error("not a rational value: " + str());
    return rat_;
}

double RadicalNumber::to_double() const {
    if (!is_real()) throw std::domain_error("not a real value: " + str());
    double v = rat_.to_double();
    for (const auto& [d, c] : terms_) v += c.to_double() * std::sqrt(static_cast<double>(d));
    return v;
}

void RadicalNumber::add_term(long long d, const Rational& c) {
    if (c.is_zero()) return;
    if (d == 1) { rat_ += c; return; }
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RadicalNumber RadicalNumber::operator-() const {
    RadicalNumber out;
    out.rat_ = -rat_;
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
    return out;
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& o) {
    rat_ += o.rat_;
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

RadicalNumber& RadicalNumber::operator-=(const RadicalNumber& o) {
    rat_ -= o.rat_;
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

RadicalNumber& RadicalNumber::operator*=(const RadicalNumber& o) {
    RadicalNumber out;
    out.rat_ = rat_ * o.rat_;
    for (const auto& [d, c] : terms_) out.add_term(d, c * o.rat_);
    for (const auto& [d, c] : o.terms_) out.add_term(d, c * rat_);
    for (const auto& [d1, c1] : terms_) {
        for (const auto& [d2, c2] : o.terms_) {
            if (d1 == d2) {
                out.rat_ += c1 * c2 * Rational(static_cast<long>(d1));
                continue;
            }
            auto [s, d] = radicand_product(d1, d2);
            out.add_term(d, c1 * c2 * Rational(s));
        }
    }
    *this = std::move(out);
    return *this;
}

RadicalNumber RadicalNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return RadicalNumber(Rational(1) / rat_);
    // Eliminate the imaginary part first: x = u + i*w with u, w real.
    if (!is_real()) {
        RadicalNumber u, w;
        u.rat_ = rat_;
        for (const auto& [d, c] : terms_) {
            if (d > 0) u.add_term(d, c);
            else if (d == -1) w.rat_ += c;
            else w.add_term(-d, c);
        }
        RadicalNumber conj = u - RadicalNumber::sqrt_of(Rational(-1)) * w;
        RadicalNumber norm = u * u + w * w;  // real, strictly fewer radicands
        return conj * norm.inverse();
    }
    // Split over the smallest prime p dividing some radicand: x = u + sqrt(p)*v
    // with u, v free of p; (u + sqrt(p)v)(u - sqrt(p)v) = u^2 - p v^2 drops p.
    long long p = 0;
    for (const auto& [d, c] : terms_) {
        for (long q = 2; q * q <= d; q == 2 ? q = 3 : q += 2)
            if (d % q == 0) { p = q; break; }
        if (p == 0) p = d;  // d itself prime
        break;
    }
    RadicalNumber u, v;
    u.rat_ = rat_;
    for (const auto& [d, c] : terms_) {
        if (d % p == 0) {
            long long rest = d / p;
            if (rest == 1) v.rat_ += c;
            else v.add_term(rest, c);
        } else {
            u.add_term(d, c);
        }
    }
    RadicalNumber sqrt_p = RadicalNumber::sqrt_of(Rational(static_cast<long>(p)));
    RadicalNumber conj = u - sqrt_p * v;
    RadicalNumber norm = u * u - RadicalNumber(Rational(static_cast<long>(p))) * v * v;
    return conj * norm.inverse();
}

RadicalNumber& RadicalNumber::operator/=(const RadicalNumber& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (o.is_rational()) {
        Rational inv = Rational(1) / o.rat_;
        rat_ *= inv;
        for (auto& [d, c] : terms_) c *= inv;
        return *this;
    }
    *this *= o.inverse();
    return *this;
}

std::string RadicalNumber::str() const {
    if (is_rational()) return rat_.str();
    std::string out;
    if (!rat_.is_zero()) out = rat_.str();
    for (const auto& [d, c] : terms_) {
        std::string term;
        Rational ac = c.abs();
        if (!ac.is_one()) term = "(" + ac.str() + ")*";
        term += "sqrt(" + std::to_string(d) + ")";
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + term;
        else
            out += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RadicalNumber& r) { return os << r.str(); }

}  // namespace bdgalois
