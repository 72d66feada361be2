#pragma once

#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "genus/elliptic.hpp"
#include "genus/fixed_points.hpp"
#include "genus/poly.hpp"
#include "genus/series.hpp"

namespace genus {

// Lefschetz fixed-point character: one reduced rational function in lambda
// (or mu) per q-degree.  polynomial_form is filled once every entry has
// passed the Laurent-polynomial test.
struct EquivariantCharacter {
    Var var = Var::lam;
    int q_order = 1;
    std::vector<RatFunc> per_q;
    std::optional<std::vector<LaurentPoly>> polynomial_form;
};

namespace detail {

// (t^m + 1)/(t^m - 1), valid for negative m via clearing t^{|m|}.
inline RatFunc coth_factor(Var v, int m) {
    int a = m > 0 ? m : -m;
    Poly ta = Poly::monomial(v, a);
    RatFunc f(ta + Poly(1), ta - Poly(1));
    return m > 0 ? f : -f;
}

// 1/(t^m - t^{-m}) = t^{|m|} / (t^{2|m|} - 1), negated for m < 0.
inline RatFunc csch_factor(Var v, int m) {
    int a = m > 0 ? m : -m;
    RatFunc f(Poly::monomial(v, a), Poly::monomial(v, 2 * a) - Poly(1));
    return m > 0 ? f : -f;
}

inline RatFunc power(Var v, int m) {
    int a = m > 0 ? m : -m;
    Poly ta = Poly::monomial(v, a);
    return m > 0 ? RatFunc(ta) : RatFunc(Poly(1), ta);
}

}  // namespace detail

// Signature character: sum_p sign_p prod_j (l^{m_j}+1)/(l^{m_j}-1).
inline EquivariantCharacter signature_character(const FixedPointData& data) {
    data.validate();
    RatFunc acc;
    for (const FixedPointDatum& p : data.points) {
        RatFunc term(Rational(p.sign));
        for (int m : p.weights) term = term * detail::coth_factor(Var::lam, m);
        acc = acc + term;
    }
    EquivariantCharacter ch;
    ch.var = Var::lam;
    ch.q_order = 1;
    ch.per_q.push_back(acc);
    return ch;
}

// A-hat character in mu (lambda = mu^2):
// sum_p sign_p prod_j 1/(mu^{m_j} - mu^{-m_j}).
// No polynomiality is implied; the formal sum exists for any data.
inline EquivariantCharacter ahat_character(const FixedPointData& data) {
    data.validate();
    RatFunc acc;
    for (const FixedPointDatum& p : data.points) {
        RatFunc term(Rational(p.sign));
        for (int m : p.weights) term = term * detail::csch_factor(Var::mu, m);
        acc = acc + term;
    }
    EquivariantCharacter ch;
    ch.var = Var::mu;
    ch.q_order = 1;
    ch.per_q.push_back(acc);
    return ch;
}

// Equivariant elliptic genus character.  Local factor per weight, with
// y = l^{m_j}:
//   F(y,q) = (y+1)/(y-1) * prod_n [(1+q^n y)(1+q^n y^{-1})] /
//                                 [(1-q^n y)(1-q^n y^{-1})]
// and the global normalization N(q)^{dim/2}; q^0 part is the signature
// character.
inline EquivariantCharacter elliptic_character(const FixedPointData& data, int q_order) {
    data.validate();
    if (q_order < 1) throw std::invalid_argument("q_order must be >= 1");

    using RSeries = Series<RatFunc>;
    RSeries one(1);
    RSeries acc(Var::q, q_order);

    for (const FixedPointDatum& p : data.points) {
        RSeries term(RatFunc(Rational(p.sign)));
        for (int m : p.weights) {
            RatFunc y = detail::power(Var::lam, m);
            RatFunc yinv = detail::power(Var::lam, -m);
            RSeries f(detail::coth_factor(Var::lam, m));
            for (int n = 1; n < q_order; ++n) {
                RSeries qny = RSeries::monomial(Var::q, n, y).truncated(q_order);
                RSeries qnyi = RSeries::monomial(Var::q, n, yinv).truncated(q_order);
                f = f * ((one + qny) * (one + qnyi)) / ((one - qny) * (one - qnyi));
            }
            term = (term * f).truncated(q_order);
        }
        acc = acc + term;
    }

    QSeries norm = elliptic_normalization(q_order);
    RSeries norm_pow(1);
    {
        RSeries norm_lift(Var::q, q_order);
        for (int i = 0; i < q_order; ++i) norm_lift.set_coeff(i, RatFunc(norm.coeff(i)));
        for (int j = 0; j < data.dim / 2; ++j) norm_pow = (norm_pow * norm_lift).truncated(q_order);
    }
    acc = (acc * norm_pow).truncated(q_order);

    EquivariantCharacter ch;
    ch.var = Var::lam;
    ch.q_order = q_order;
    for (int i = 0; i < q_order; ++i) ch.per_q.push_back(acc.coeff(i));
    return ch;
}

struct PolynomialityReport {
    bool pass = true;
    std::vector<int> failed_q;  // q-degrees with a genuine pole
};

// Character test: each q-coefficient of a closed-manifold character must be
// a Laurent polynomial.  Fills polynomial_form on success.
inline PolynomialityReport polynomiality_check(EquivariantCharacter& ch) {
    PolynomialityReport rep;
    std::vector<LaurentPoly> polys;
    for (int i = 0; i < ch.q_order; ++i) {
        try {
            polys.push_back(ratfunc_to_laurent(ch.per_q[i]));
        } catch (const NotPolynomial&) {
            rep.pass = false;
            rep.failed_q.push_back(i);
        }
    }
    if (rep.pass) ch.polynomial_form = std::move(polys);
    return rep;
}

struct RigidityReport {
    bool is_character = false;  // polynomiality
    bool is_rigid = false;
    std::vector<std::tuple<int, int, Rational>> offenders;  // (n, k, a_nk), k != 0
};

inline RigidityReport rigidity_check(EquivariantCharacter& ch) {
    RigidityReport rep;
    if (!ch.polynomial_form) {
        if (!polynomiality_check(ch).pass) return rep;
    }
    rep.is_character = true;
    for (int n = 0; n < ch.q_order; ++n)
        for (const auto& [k, c] : (*ch.polynomial_form)[n].terms())
            if (k != 0) rep.offenders.emplace_back(n, k, c);
    rep.is_rigid = rep.offenders.empty();
    return rep;
}

// Non-equivariant limit: evaluation at lambda = 1 (mu = 1) per q-degree.
// Equals the underlying genus for closed-manifold data.
inline QSeries evaluate_at_one(const EquivariantCharacter& ch) {
    QSeries out(Var::q, ch.q_order);
    for (int i = 0; i < ch.q_order; ++i) {
        if (ch.polynomial_form)
            out.set_coeff(i, (*ch.polynomial_form)[i].eval(Rational(1)));
        else
            out.set_coeff(i, ch.per_q[i].eval(Rational(1)));  // throws on a pole
    }
    return out;
}

}  // namespace genus
