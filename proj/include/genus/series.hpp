#pragma once

#include <algorithm>
#include <climits>
#include <type_traits>
#include <stdexcept>
#include <string>
#include <vector>

#include "genus/rational.hpp"

namespace genus {

// Formal variables used throughout.  Var::none marks scalar constants,
// which are compatible with any variable.
enum class Var { none, u, x, q, lam, mu };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::u: return "u";
        case Var::x: return "x";
        case Var::q: return "q";
        case Var::lam: return "λ";
        case Var::mu: return "μ";
        default: return "?";
    }
}

struct VariableMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

// Truncated power series over an exact coefficient ring R.
//
// order() is the number of known coefficients: exponents < order() are
// stored (trailing zeros may be implicit), everything above is unknown.
// Arithmetic propagates precision pessimistically, order = min of the
// operand orders.  Exact scalars and polynomial-like values carry
// order() == kExactOrder and never lose precision on their own.
template <class R>
class Series {
  public:
    static constexpr int kExactOrder = INT_MAX;

    Series() = default;  // exact zero
    Series(long n) { set_constant(R(n)); }
    Series(const Rational& r) { set_constant(R(r)); }
    template <class S = R, class = std::enable_if_t<!std::is_same_v<S, Rational>>>
    explicit Series(const R& c) { set_constant(c); }

    Series(Var v, int order) : var_(v), order_(order) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }
    Series(Var v, int order, std::vector<R> coeffs)
        : var_(v), order_(order), c_(std::move(coeffs)) {
        if (order != kExactOrder && static_cast<int>(c_.size()) > order)
            throw std::invalid_argument("more coefficients than series order");
        trim();
    }

    // Exact polynomial (no truncation implied).
    static Series poly(Var v, std::vector<R> coeffs) {
        return Series(v, kExactOrder, std::move(coeffs));
    }
    static Series monomial(Var v, int exp, const R& c = R(1)) {
        std::vector<R> cs(exp + 1);
        cs[exp] = c;
        return poly(v, std::move(cs));
    }

    Var var() const { return var_; }
    int order() const { return order_; }
    bool exact() const { return order_ == kExactOrder; }
    int terms() const { return static_cast<int>(c_.size()); }

    const R& coeff(int i) const {
        static const R zero{};
        if (i < 0) throw std::out_of_range("negative exponent");
        if (order_ != kExactOrder && i >= order_)
            throw std::out_of_range("coefficient beyond series precision");
        return i < terms() ? c_[i] : zero;
    }

    void set_coeff(int i, const R& v) {
        if (order_ != kExactOrder && i >= order_)
            throw std::out_of_range("coefficient beyond series precision");
        if (i >= terms()) c_.resize(i + 1);
        c_[i] = v;
        trim();
    }

    bool is_zero() const {
        for (const R& c : c_)
            if (!(c == R{})) return false;
        return true;
    }

    Series retagged(Var v) const {
        Series r(*this);
        r.var_ = v;
        return r;
    }

    Series truncated(int new_order) const {
        Series r(*this);
        r.order_ = std::min(r.order_, new_order);
        if (r.terms() > r.order_) r.c_.resize(r.order_);
        r.trim();
        return r;
    }

    // Divides by var^k; every lower term must vanish.
    Series shifted_down(int k) const {
        for (int i = 0; i < std::min(k, terms()); ++i)
            if (!(c_[i] == R{}))
                throw std::domain_error("shifted_down: nonzero low-order term");
        Series r(var_, order_ == kExactOrder ? kExactOrder : order_ - k);
        for (int i = k; i < terms(); ++i) r.c_.push_back(c_[i]);
        r.trim();
        return r;
    }

    Series shifted_up(int k) const {
        Series r(var_, order_ == kExactOrder ? kExactOrder
                                            : (order_ > INT_MAX - k ? kExactOrder : order_ + k));
        r.c_.assign(k, R{});
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        r.trim();
        return r;
    }

    Series derivative() const {
        Series r(var_, order_ == kExactOrder ? kExactOrder : std::max(order_ - 1, 0));
        for (int i = 1; i < terms(); ++i)
            r.c_.push_back(c_[i] * R(Rational(i)));
        r.trim();
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Var v = joint_var(a, b);
        int n = std::min(a.order_, b.order_);
        Series r(v, n);
        int m = std::max(a.terms(), b.terms());
        if (n != kExactOrder) m = std::min(m, n);
        r.c_.resize(m);
        for (int i = 0; i < m; ++i) {
            if (i < a.terms()) r.c_[i] = r.c_[i] + a.c_[i];
            if (i < b.terms()) r.c_[i] = r.c_[i] + b.c_[i];
        }
        r.trim();
        return r;
    }

    friend Series operator-(const Series& a) {
        Series r(a);
        for (R& c : r.c_) c = R{} - c;
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        Var v = joint_var(a, b);
        int n = std::min(a.order_, b.order_);
        Series r(v, n);
        if (a.terms() == 0 || b.terms() == 0) return r;
        int m = a.terms() + b.terms() - 1;
        if (n != kExactOrder) m = std::min(m, n);
        r.c_.resize(m);
        for (int i = 0; i < a.terms(); ++i) {
            if (a.c_[i] == R{}) continue;
            for (int j = 0; j < b.terms() && i + j < m; ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    // Long division; the divisor needs an invertible constant term.
    friend Series operator/(const Series& a, const Series& b) {
        Var v = joint_var(a, b);
        if (b.terms() == 0)
            throw std::domain_error("series division by zero");
        if (b.coeff0() == R{})
            throw std::domain_error("series division by non-unit (zero constant term)");
        if (b.terms() == 1) {  // scalar divisor keeps exactness
            Series r(v, std::min(a.order_, b.order_));
            r.c_ = a.c_;
            if (r.order_ != kExactOrder && r.terms() > r.order_) r.c_.resize(r.order_);
            for (R& c : r.c_) c = c / b.c_[0];
            r.trim();
            return r;
        }
        int n = std::min(a.order_, b.order_);
        if (n == kExactOrder)
            throw std::domain_error("series division of exact values needs a truncation order");
        Series r(v, n);
        r.c_.resize(n);
        for (int k = 0; k < n; ++k) {
            R acc = k < a.terms() ? a.c_[k] : R{};
            for (int j = 1; j <= k && j < b.terms(); ++j)
                acc = acc - b.c_[j] * r.c_[k - j];
            r.c_[k] = acc / b.c_[0];
        }
        r.trim();
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) {
        if (a.var_ != Var::none && b.var_ != Var::none && a.var_ != b.var_) return false;
        if (a.order_ != b.order_ && a.order_ != kExactOrder && b.order_ != kExactOrder)
            return false;
        int m = std::max(a.terms(), b.terms());
        for (int i = 0; i < m; ++i) {
            const R& ca = i < a.terms() ? a.c_[i] : R{};
            const R& cb = i < b.terms() ? b.c_[i] : R{};
            if (!(ca == cb)) return false;
        }
        return true;
    }

    const R& coeff0() const {
        static const R zero{};
        return terms() > 0 ? c_[0] : zero;
    }

  private:
    void set_constant(const R& c) {
        if (!(c == R{})) c_.assign(1, c);
    }
    void trim() {
        while (!c_.empty() && c_.back() == R{}) c_.pop_back();
    }
    static Var joint_var(const Series& a, const Series& b) {
        if (a.var_ == Var::none) return b.var_;
        if (b.var_ == Var::none) return a.var_;
        if (a.var_ != b.var_)
            throw VariableMismatch(std::string("series variable mismatch: ") +
                                   var_name(a.var_) + " vs " + var_name(b.var_));
        return a.var_;
    }

    Var var_ = Var::none;
    int order_ = kExactOrder;
    std::vector<R> c_;
};

using QSeries = Series<Rational>;

// a^e for rational e; requires constant term 1.  Coefficient recurrence
// from the differential equation a*b' = e*a'*b.
template <class R>
Series<R> series_pow_rational(const Series<R>& a, const Rational& e) {
    if (!(a.coeff0() == R(1)))
        throw std::domain_error("series_pow_rational: constant term must be 1");
    int n = a.order();
    if (n == Series<R>::kExactOrder)
        throw std::domain_error("series_pow_rational needs a truncated operand");
    Series<R> b(a.var(), n);
    if (n == 0) return b;
    b.set_coeff(0, R(1));
    for (int k = 1; k < n; ++k) {
        R acc{};
        for (int j = 1; j <= k; ++j) {
            Rational w = (e + 1) * j - k;  // times 1/k below
            if (w == 0) continue;
            acc = acc + R(w / k) * a.coeff(j) * b.coeff(k - j);
        }
        b.set_coeff(k, acc);
    }
    return b;
}

// a(b) for b with zero constant term.
template <class R>
Series<R> series_compose(const Series<R>& a, const Series<R>& b) {
    if (!(b.coeff0() == R{}))
        throw std::domain_error("series_compose: inner series needs zero constant term");
    int n = std::min(a.order(), b.order());
    Series<R> r(b.var(), n);
    int top = a.terms() - 1;
    if (n != Series<R>::kExactOrder) top = std::min(top, n - 1);
    for (int i = top; i >= 0; --i) {
        r = (r * b).truncated(n);
        r = r + Series<R>(a.coeff(i));
    }
    return r.truncated(n);
}

// Compositional inverse: returns b with a(b(x)) = x to the order of a.
// Term-by-term solve; requires a(0) = 0 and invertible linear coefficient.
template <class R>
Series<R> series_reversion(const Series<R>& a) {
    if (!(a.coeff0() == R{}))
        throw std::domain_error("series_reversion: constant term must vanish");
    if (a.order() < 2 || a.order() == Series<R>::kExactOrder)
        throw std::domain_error("series_reversion needs a truncated series of order >= 2");
    if (a.coeff(1) == R{})
        throw std::domain_error("series_reversion: linear coefficient must be invertible");
    int n = a.order();
    Series<R> b(a.var(), n);
    b.set_coeff(1, R(1) / a.coeff(1));
    for (int m = 2; m < n; ++m) {
        // with b known below m, [x^m] a(b) = a_1 b_m + (already determined)
        R overshoot = series_compose(a, b).coeff(m);
        b.set_coeff(m, R{} - overshoot / a.coeff(1));
    }
    if (!(series_compose(a, b) == Series<R>::monomial(a.var(), 1).truncated(n)))
        throw std::logic_error("series_reversion: composition check failed");
    return b;
}

// "c0 + c1*q + ... + O(q^N)"
inline std::string format_series(const QSeries& s) {
    std::string out;
    const char* v = var_name(s.var() == Var::none ? Var::q : s.var());
    int n = s.exact() ? s.terms() : s.order();
    bool any = false;
    for (int i = 0; i < n; ++i) {
        Rational c = i < s.terms() ? s.coeff(i) : Rational(0);
        if (c == 0 && !(i == 0 && n <= 1)) continue;
        if (any) {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        out += format_rational(c);
        if (i >= 1) out += std::string("*") + v;
        if (i >= 2) out += "^" + std::to_string(i);
        any = true;
    }
    if (!any) out = "0";
    if (!s.exact()) out += " + O(" + std::string(v) + "^" + std::to_string(n) + ")";
    return out;
}

}  // namespace genus
