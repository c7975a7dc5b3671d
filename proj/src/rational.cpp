#include "bdgalois/rational.hpp"

#include <ostream>

namespace bdgalois {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("division by zero");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (sgn(d) == 0) throw std::domain_error("division by zero");
    v_ = mpq_class(n) / mpq_class(d);
}

Rational Rational::parse(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    auto check_digits = [](const std::string& s) {
        std::size_t i = (s.size() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    if (slash == std::string::npos) {
        if (!check_digits(t)) throw std::invalid_argument("bad rational literal: " + text);
        return Rational(mpz_class(t));
    }
    std::string numer = t.substr(0, slash), denom = t.substr(slash + 1);
    if (!check_digits(numer) || !check_digits(denom))
        throw std::invalid_argument("bad rational literal: " + text);
    mpz_class q(denom);
    if (sgn(q) == 0) throw std::domain_error("division by zero");
    return Rational(mpz_class(numer), q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::domain_error("rational does not fit in long: " + str());
    return v_.get_num().get_si();
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return Rational(q);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("division by zero");
        return Rational();
    }
    mpz_class n = num(), d = den();
    if (e < 0) { std::swap(n, d); e = -e; if (sgn(d) < 0) { n = -n; d = -d; } }
    mpz_class rn, rd;
    mpz_pow_ui(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(rn, rd);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bdgalois
