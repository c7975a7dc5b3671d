#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bdgalois {

// Dense univariate polynomial over an exact field F (Rational or RadicalNumber).
// Coefficients are stored lowest degree first with no trailing zeros; the zero
// polynomial has the sentinel degree kZeroPolyDegree.
inline constexpr int kZeroPolyDegree = -1;

template <class F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(F constant) {  // NOLINT: implicit by design
        if (!constant.is_zero()) c_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<F> coeffs_low_first) : c_(std::move(coeffs_low_first)) {
        trim();
    }

    static Polynomial monomial(F coeff, int deg) {
        if (deg < 0) throw std::invalid_argument("negative monomial degree");
        if (coeff.is_zero()) return {};
        std::vector<F> c(static_cast<std::size_t>(deg) + 1);
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }
    static Polynomial variable() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    // Coefficient of x^k (zero outside the stored range).
    const F& coeff(int k) const {
        static const F zero{};
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<F>& coeffs() const { return c_; }
    const F& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& v : out.c_) v = -v;
        return out;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial& scale(const F& s) {
        if (s.is_zero()) { c_.clear(); return *this; }
        for (auto& v : c_) v = v * s;
        return *this;
    }
    friend Polynomial operator*(Polynomial a, const F& s) { return a.scale(s); }
    friend Polynomial operator*(const F& s, Polynomial a) { return a.scale(s); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * F(static_cast<long>(i));
        return Polynomial(std::move(c));
    }

    F eval(const F& x) const {
        F acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        Polynomial r = *this;
        if (r.degree() < d.degree()) return {{}, r};
        std::vector<F> q(static_cast<std::size_t>(r.degree() - d.degree()) + 1);
        F dl_inv = F(1) / d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            F factor = r.leading() * dl_inv;
            q[static_cast<std::size_t>(k)] = factor;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[static_cast<std::size_t>(k) + i] -= factor * d.c_[i];
            r.trim();
        }
        return {Polynomial(std::move(q)), r};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        return a.divmod(b).first;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        return a.divmod(b).second;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        Polynomial out = *this;
        F inv = F(1) / leading();
        for (auto& v : out.c_) v = v * inv;
        return out;
    }

    // Monic gcd.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    // p(x + c), used for expansions about a finite point.
    Polynomial shifted(const F& c) const {
        Polynomial out;
        Polynomial shift(std::vector<F>{c, F(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * shift + Polynomial(*it);
        return out;
    }

    // x^n * p(1/x) with n = deg p (coefficients reversed), used at infinity.
    Polynomial reversed() const {
        std::vector<F> c(c_.rbegin(), c_.rend());
        return Polynomial(std::move(c));
    }

    Polynomial pow(unsigned e) const {
        Polynomial out{F(1)};
        Polynomial base = *this;
        while (e) {
            if (e & 1u) out = out * base;
            base = base * base;
            e >>= 1u;
        }
        return out;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const F& v = coeff(k);
            if (v.is_zero()) continue;
            std::string cs = v.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs = cs.substr(1);
            bool composite = cs.find('/') != std::string::npos ||
                             cs.find(' ') != std::string::npos ||
                             cs.find('*') != std::string::npos;
            if (composite) cs = "(" + cs + ")";
            std::string term;
            if (k == 0) {
                term = cs;
            } else {
                term = (cs == "1") ? "" : cs + "*";
                term += var;
                if (k > 1) term += "^" + std::to_string(k);
            }
            if (out.empty())
                out = (neg ? "-" : "") + term;
            else
                out += (neg ? " - " : " + ") + term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

// Coefficient-wise field embedding, e.g. Polynomial<Rational> -> Polynomial<RadicalNumber>.
template <class G, class F>
Polynomial<G> convert_poly(const Polynomial<F>& p) {
    std::vector<G> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return Polynomial<G>(std::move(c));
}

}  // namespace bdgalois
