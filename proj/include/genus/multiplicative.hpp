#pragma once

#include <map>
#include <stdexcept>

#include "genus/partitions.hpp"
#include "genus/series.hpp"

namespace genus {

// Truncated ring Q[p_1..p_k] graded by weight(p_i) = i, coefficients in R.
// Monomials are keyed by the partition collecting the p-indices.
template <class R>
using SymPoly = std::map<Partition, R>;

template <class R>
void sym_add_term(SymPoly<R>& a, const Partition& key, const R& c) {
    if (c == R{}) return;
    R& slot = a[key];
    slot = slot + c;
    if (slot == R{}) a.erase(key);
}

template <class R>
SymPoly<R> sym_add(const SymPoly<R>& a, const SymPoly<R>& b) {
    SymPoly<R> r = a;
    for (const auto& [k, c] : b) sym_add_term(r, k, c);
    return r;
}

template <class R>
SymPoly<R> sym_mul(const SymPoly<R>& a, const SymPoly<R>& b, int max_weight) {
    SymPoly<R> r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            if (partition_weight(ka) + partition_weight(kb) > max_weight) continue;
            sym_add_term(r, partition_merge(ka, kb), R(ca * cb));
        }
    return r;
}

template <class R>
SymPoly<R> sym_scale(const SymPoly<R>& a, const R& s) {
    SymPoly<R> r;
    for (const auto& [k, c] : a) sym_add_term(r, k, R(c * s));
    return r;
}

// Power sums of the formal Pontryagin roots in terms of p_i = e_i,
// via the Newton identities.
template <class R>
std::vector<SymPoly<R>> newton_power_sums(int k) {
    std::vector<SymPoly<R>> s(k + 1);
    for (int i = 1; i <= k; ++i) {
        SymPoly<R> acc;
        sym_add_term(acc, Partition{i}, R(Rational(i % 2 == 1 ? i : -i)));
        for (int j = 1; j < i; ++j) {
            SymPoly<R> ej;
            sym_add_term(ej, Partition{j}, R(Rational(j % 2 == 1 ? 1 : -1)));
            acc = sym_add(acc, sym_mul(ej, s[i - j], k));
        }
        s[i] = std::move(acc);
    }
    return s;
}

// Multiplicative sequence of a characteristic series Q(x) with Q(0) = 1:
// the coefficients K_pi (pi a partition of k) with
// genus[M^{4k}] = sum_pi K_pi p_pi[M].
//
// Computed through Pi_j Q(x_j) = exp(sum_i l_i s_i) where l_i are the
// coefficients of log Q in y = x^2 and s_i are power sums of the x_j^2.
template <class R>
std::map<Partition, R> multiplicative_sequence(const Series<R>& q_series, int k) {
    if (!(q_series.coeff0() == R(1)))
        throw std::domain_error("characteristic series must have constant term 1");
    if (!q_series.exact() && q_series.order() < 2 * k + 1)
        throw std::domain_error("characteristic series truncated below x^(2k)");

    // re-grade in y = x^2; odd coefficients must vanish
    Series<R> qy(q_series.var(), k + 1);
    for (int i = 0; i <= k; ++i) qy.set_coeff(i, q_series.coeff(2 * i));
    for (int i = 1; i <= 2 * k && (q_series.exact() || i < q_series.order()); i += 2)
        if (!(q_series.coeff(i) == R{}))
            throw std::domain_error("characteristic series has odd-degree terms");

    // log Q(y) = sum_{m>=1} (-1)^{m+1} h^m / m, h = Q - 1
    Series<R> h = qy - Series<R>(1);
    Series<R> logq(q_series.var(), k + 1);
    Series<R> hp = h;
    for (int m = 1; m <= k; ++m) {
        Rational w = (m % 2 == 1 ? Rational(1) : Rational(-1)) / m;
        logq = logq + hp * Series<R>(w);
        hp = (hp * h).truncated(k + 1);
    }

    std::vector<SymPoly<R>> s = newton_power_sums<R>(k);
    SymPoly<R> t;
    for (int i = 1; i <= k; ++i)
        t = sym_add(t, sym_scale(s[i], logq.coeff(i)));

    // exp(t): t has positive weight, so the sum stops at k
    SymPoly<R> e;
    sym_add_term(e, Partition{}, R(1));
    SymPoly<R> tp = e;
    Rational fact(1);
    for (int m = 1; m <= k; ++m) {
        tp = sym_mul(tp, t, k);
        fact *= m;
        e = sym_add(e, sym_scale(tp, R(Rational(1) / fact)));
    }

    std::map<Partition, R> out;
    for (const Partition& pi : partitions_of(k)) {
        auto it = e.find(pi);
        out[pi] = it == e.end() ? R{} : it->second;
    }
    return out;
}

}  // namespace genus
