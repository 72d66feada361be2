#pragma once

#include <stdexcept>

#include "genus/genus_spec.hpp"
#include "genus/multiplicative.hpp"
#include "genus/series.hpp"

namespace genus {

namespace detail {

// exp(c*x) as an x-series over R, truncated at x_order.
template <class R>
Series<R> exp_series(const Rational& c, int x_order) {
    Series<R> e(Var::x, x_order);
    Rational term(1);
    for (int i = 0; i < x_order; ++i) {
        e.set_coeff(i, R(term));
        term = term * c / (i + 1);
    }
    return e;
}

}  // namespace detail

inline QSeries q_power(int n, int q_order) {
    QSeries s(Var::q, q_order);
    if (n < q_order) s.set_coeff(n, Rational(1));
    return s;
}

// Per-plane normalization N(q) = prod_n ((1-q^n)/(1+q^n))^2.
inline QSeries elliptic_normalization(int q_order) {
    QSeries one(Var::q, q_order);
    one.set_coeff(0, Rational(1));
    QSeries acc = one;
    for (int n = 1; n < q_order; ++n) {
        QSeries f = (one - q_power(n, q_order)) / (one + q_power(n, q_order));
        acc = acc * f * f;
    }
    return acc;
}

// Characteristic series of the universal elliptic genus in its
// twisted-signature normalization, with y = e^{2x}:
//
//   Q(x,q) = x (y+1)/(y-1) * prod_{n>=1}
//            [(1+q^n y)(1+q^n y^{-1})(1-q^n)^2] /
//            [(1-q^n y)(1-q^n y^{-1})(1+q^n)^2]
//
// so Q(0,q) = 1 and the q^0 part is the signature series x/tanh(x).
inline Series<QSeries> elliptic_characteristic_series(int q_order, int x_order) {
    if (q_order < 1) throw std::invalid_argument("q_order must be >= 1");
    if (x_order < 1) throw std::invalid_argument("x_order must be >= 1");

    // one extra x-term so dividing out the x in (y-1) keeps x_order
    Series<QSeries> y = detail::exp_series<QSeries>(Rational(2), x_order + 1);
    Series<QSeries> yinv = detail::exp_series<QSeries>(Rational(-2), x_order + 1);
    Series<QSeries> one(1);

    // x(y+1)/(y-1) = (y+1) / ((y-1)/x)
    Series<QSeries> acc = (y + one) / (y - one).shifted_down(1);

    for (int n = 1; n < q_order; ++n) {
        Series<QSeries> qn(q_power(n, q_order));
        Series<QSeries> numer = (one + qn * y) * (one + qn * yinv);
        Series<QSeries> denom = (one - qn * y) * (one - qn * yinv);
        QSeries scalar = (QSeries(1) - q_power(n, q_order)) /
                         (QSeries(1) + q_power(n, q_order));
        acc = acc * (numer / denom) * Series<QSeries>(scalar * scalar);
    }

    if (!(acc.coeff0() == QSeries(1)))
        throw std::logic_error("elliptic characteristic series: Q(0,q) != 1");
    return acc;
}

inline QSeries elliptic_cp_value(const Series<QSeries>& q_series, int k, int q_order) {
    QSeries one(Var::q, q_order);
    one.set_coeff(0, Rational(1));
    return (cp_value_from_series(q_series, k) * one).truncated(q_order);
}

// Parameters (delta(q), eps(q)) of the universal elliptic genus, pinned by
// phi[CP^2] = delta and phi[CP^4] = (3 delta^2 - eps)/2, with the q = 0
// specialization being the signature.
inline GenusSpec<QSeries> universal_elliptic_spec(int q_order, int x_order = 6) {
    if (x_order < 6)
        throw std::invalid_argument("x_order must be >= 6 to read phi[CP^2] and phi[CP^4]");
    Series<QSeries> q = elliptic_characteristic_series(q_order, x_order);

    Series<Rational> sig = characteristic_series(signature_spec(), x_order);
    for (int i = 0; i < x_order; ++i)
        if (!(q.coeff(i).coeff0() == sig.coeff(i)))
            throw std::logic_error(
                "elliptic characteristic series: q^0 part is not the signature series");

    QSeries delta = elliptic_cp_value(q, 1, q_order);
    QSeries eps = delta * delta * Rational(3) - elliptic_cp_value(q, 2, q_order) * Rational(2);
    return {delta.truncated(q_order), eps.truncated(q_order)};
}

}  // namespace genus
