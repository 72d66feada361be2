#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genus/rational.hpp"
#include "genus/series.hpp"

namespace genus {

struct NotPolynomial : std::domain_error {
    using std::domain_error::domain_error;
};

// Dense univariate polynomial over Rational.
class Poly {
  public:
    Poly() = default;
    Poly(long n) { set_constant(Rational(n)); }
    Poly(const Rational& r) { set_constant(r); }
    Poly(Var v, std::vector<Rational> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

    static Poly monomial(Var v, int exp, const Rational& c = Rational(1)) {
        std::vector<Rational> cs(exp + 1);
        cs[exp] = c;
        return Poly(v, std::move(cs));
    }

    Var var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }

    Rational coeff(int i) const {
        if (i < 0 || i > degree()) return Rational(0);
        return c_[i];
    }
    const Rational& lead() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r(joint_var(a, b), {});
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r(a);
        for (Rational& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(joint_var(a, b), {});
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Rational& s) {
        Poly r(a);
        for (Rational& c : r.c_) c *= s;
        r.trim();
        return r;
    }

    // Euclidean division, exact over Q.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Var v = joint_var(a, b);
        Poly rem(a), quot(v, {});
        quot.c_.assign(std::max(a.degree() - b.degree() + 1, 0), Rational(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int d = rem.degree() - b.degree();
            Rational f = rem.lead() / b.lead();
            quot.c_[d] += f;
            for (int i = 0; i <= b.degree(); ++i)
                rem.c_[i + d] -= f * b.c_[i];
            rem.trim();
        }
        quot.var_ = v;
        quot.trim();
        rem.var_ = rem.is_zero() ? v : rem.var_;
        return {quot, rem};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / lead());
    }

    // Reversed coefficients: t^deg * p(1/t).
    Poly reversed() const {
        std::vector<Rational> cs(c_.rbegin(), c_.rend());
        return Poly(var_, std::move(cs));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.var_ != Var::none && b.var_ != Var::none && a.var_ != b.var_) return false;
        return a.c_ == b.c_;
    }

  private:
    void set_constant(const Rational& r) {
        if (r != 0) c_.assign(1, r);
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    static Var joint_var(const Poly& a, const Poly& b) {
        if (a.var_ == Var::none) return b.var_;
        if (b.var_ == Var::none) return a.var_;
        if (a.var_ != b.var_)
            throw VariableMismatch(std::string("polynomial variable mismatch: ") +
                                   var_name(a.var_) + " vs " + var_name(b.var_));
        return a.var_;
    }

    Var var_ = Var::none;
    std::vector<Rational> c_;
};

// Monic Euclidean gcd.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r).monic();  // keeps coefficient growth in check
    }
    return a.monic();
}

// Laurent polynomial: finite support over integer exponents, no stored zeros.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(Var v) : var_(v) {}

    Var var() const { return var_; }
    const std::map<int, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Rational coeff(int k) const {
        auto it = t_.find(k);
        return it == t_.end() ? Rational(0) : it->second;
    }
    void add_term(int k, const Rational& c) {
        if (c == 0) return;
        Rational& slot = t_[k];
        slot += c;
        if (slot == 0) t_.erase(k);
    }

    Rational eval(const Rational& x) const {
        if (x == 0) throw std::domain_error("Laurent polynomial evaluation at 0");
        Rational acc(0);
        for (const auto& [k, c] : t_) {
            Rational p(1);
            Rational base = k >= 0 ? x : Rational(1) / x;
            for (int i = 0; i < (k >= 0 ? k : -k); ++i) p *= base;
            acc += c * p;
        }
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.t_ == b.t_;
    }

  private:
    Var var_ = Var::none;
    std::map<int, Rational> t_;
};

// "c λ^k + ..." sorted by exponent; bare constants printed plainly.
inline std::string format_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    const char* v = var_name(p.var() == Var::none ? Var::lam : p.var());
    std::string out;
    for (const auto& [k, coeff] : p.terms()) {
        Rational c = coeff;
        if (!out.empty()) {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (k == 0) {
            out += format_rational(c);
            continue;
        }
        if (c != 1) out += format_rational(c) + "*";
        out += v;
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

// Reduced rational function num/den: gcd 1, monic nonzero denominator.
class RatFunc {
  public:
    RatFunc() : den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}
    RatFunc(const Rational& r) : num_(r), den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    Var var() const { return num_.var() != Var::none ? num_.var() : den_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r(a);
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw std::domain_error("rational function pole at evaluation point");
        return num_.eval(x) / d;
    }

    // Substitution t -> 1/t, re-reduced.
    RatFunc subst_inverse() const {
        if (is_zero()) return *this;
        Var v = var();
        int dn = num_.degree(), dd = den_.degree();
        Poly n = num_.reversed() * Poly::monomial(v, dn >= dd ? 0 : dd - dn);
        Poly d = den_.reversed() * Poly::monomial(v, dd >= dn ? 0 : dn - dd);
        return RatFunc(n, d);
    }

  private:
    void reduce() {
        if (den_.is_zero())
            throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Rational lead = den_.lead();
        num_ = num_ * (Rational(1) / lead);
        den_ = den_ * (Rational(1) / lead);
    }

    Poly num_, den_;
};

// Succeeds when the reduced denominator is a power of the variable.
inline LaurentPoly ratfunc_to_laurent(const RatFunc& f) {
    LaurentPoly out(f.var());
    if (f.is_zero()) return out;
    const Poly& d = f.den();
    int k = d.degree();
    for (int i = 0; i < k; ++i)
        if (d.coeff(i) != 0)
            throw NotPolynomial("rational function has a pole away from 0");
    // denominator is monic, so it equals var^k exactly
    for (int i = 0; i <= f.num().degree(); ++i)
        out.add_term(i - k, f.num().coeff(i));
    return out;
}

inline std::string format_ratfunc(const RatFunc& f) {
    auto poly_str = [](const Poly& p, Var fallback) {
        if (p.is_zero()) return std::string("0");
        const char* v = var_name(p.var() == Var::none ? fallback : p.var());
        std::string out;
        for (int i = p.degree(); i >= 0; --i) {
            Rational c = p.coeff(i);
            if (c == 0) continue;
            if (!out.empty()) {
                out += c < 0 ? " - " : " + ";
                if (c < 0) c = -c;
            }
            if (i == 0 || c != 1) out += format_rational(c);
            if (i >= 1) {
                if (c != 1) out += "*";
                out += v;
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    };
    Var v = f.var() == Var::none ? Var::lam : f.var();
    if (f.den().degree() == 0) return poly_str(f.num(), v);
    return "(" + poly_str(f.num(), v) + ") / (" + poly_str(f.den(), v) + ")";
}

}  // namespace genus
