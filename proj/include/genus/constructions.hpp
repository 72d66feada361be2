#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "genus/fixed_points.hpp"
#include "genus/rational.hpp"

namespace genus {

struct NonIsolatedFixedSet : std::domain_error {
    using std::domain_error::domain_error;
};

struct GluingMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

// Linear S^1-action on CP^n with rotation numbers a_0..a_n: fixed point i
// carries weights (a_j - a_i), j != i, complex orientation sign +1.
inline FixedPointData linear_cpn(const std::vector<int>& a) {
    if (a.size() < 2)
        throw std::invalid_argument("linear_cpn needs at least two rotation numbers");
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j])
                throw NonIsolatedFixedSet("equal rotation numbers fix a positive-dimensional set");
    FixedPointData d;
    d.dim = 2 * (static_cast<int>(a.size()) - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        FixedPointDatum p;
        p.sign = 1;
        for (size_t j = 0; j < a.size(); ++j)
            if (j != i) p.weights.push_back(a[j] - a[i]);
        d.points.push_back(std::move(p));
    }
    d.validate();
    return d;
}

// Unit sphere S(V_{a_1} + ... + V_{a_k} + R): the two poles, with
// opposite orientation signs and identical weights.
inline FixedPointData sphere_of_representation(const std::vector<int>& a) {
    if (a.empty())
        throw std::invalid_argument("sphere_of_representation needs at least one weight");
    for (int w : a)
        if (w == 0) throw std::invalid_argument("representation weights must be nonzero");
    FixedPointData d;
    d.dim = 2 * static_cast<int>(a.size());
    d.points.push_back({1, a});
    d.points.push_back({-1, a});
    return d;
}

// Product action: pairs of fixed points, concatenated weights,
// multiplied signs.
inline FixedPointData product(const FixedPointData& d1, const FixedPointData& d2) {
    d1.validate();
    d2.validate();
    FixedPointData d;
    d.dim = d1.dim + d2.dim;
    for (const FixedPointDatum& p : d1.points)
        for (const FixedPointDatum& q : d2.points) {
            FixedPointDatum r;
            r.sign = p.sign * q.sign;
            r.weights = p.weights;
            r.weights.insert(r.weights.end(), q.weights.begin(), q.weights.end());
            d.points.push_back(std::move(r));
        }
    return d;
}

inline FixedPointData orientation_reverse(const FixedPointData& d) {
    FixedPointData r = d;
    for (FixedPointDatum& p : r.points) p.sign = -p.sign;
    return r;
}

namespace detail {

inline std::map<int, int> abs_weight_multiset(const std::vector<int>& w) {
    std::map<int, int> m;
    for (int x : w) ++m[x > 0 ? x : -x];
    return m;
}

inline int positive_count(const std::vector<int>& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x > 0; }));
}

}  // namespace detail

// Equivariant connected sum at fixed points i of d1 and j of d2.  The
// glued tangent representations must agree as real representations and be
// identified reversing orientation: the parity of weight-sign
// disagreements (well defined once the |weight| multisets match) must be
// odd when the orientation signs agree and even when they differ.
inline FixedPointData equivariant_connected_sum(const FixedPointData& d1, int i,
                                                const FixedPointData& d2, int j) {
    d1.validate();
    d2.validate();
    if (d1.dim != d2.dim)
        throw GluingMismatch("connected sum of manifolds of different dimensions");
    if (i < 0 || i >= static_cast<int>(d1.points.size()) || j < 0 ||
        j >= static_cast<int>(d2.points.size()))
        throw std::out_of_range("fixed point index out of range");

    const FixedPointDatum& p = d1.points[i];
    const FixedPointDatum& q = d2.points[j];
    if (detail::abs_weight_multiset(p.weights) != detail::abs_weight_multiset(q.weights))
        throw GluingMismatch("tangent weights do not match up to sign");
    int disagree_parity = (detail::positive_count(p.weights) + detail::positive_count(q.weights)) % 2;
    int need_odd = p.sign == q.sign;
    if (disagree_parity != need_odd)
        throw GluingMismatch("tangent representations cannot be identified orientation-reversingly");

    FixedPointData d;
    d.dim = d1.dim;
    for (int n = 0; n < static_cast<int>(d1.points.size()); ++n)
        if (n != i) d.points.push_back(d1.points[n]);
    for (int n = 0; n < static_cast<int>(d2.points.size()); ++n)
        if (n != j) d.points.push_back(d2.points[n]);
    return d;
}

// First Chern number of an equivariant bundle over a rotation sphere with
// principal isotropy Z_k: k * c1(E)[S^2] = m_N - m_S.
struct ChernWeightReport {
    long k = 1;
    long m_north = 0;
    long m_south = 0;
    Rational c1;
    bool integral = false;  // false flags data inconsistent with such a bundle
};

inline ChernWeightReport chern_weight_relation(long k, long m_north, long m_south) {
    if (k < 1) throw std::invalid_argument("isotropy order k must be >= 1");
    ChernWeightReport rep;
    rep.k = k;
    rep.m_north = m_north;
    rep.m_south = m_south;
    rep.c1 = rat(m_north - m_south, k);
    rep.integral = (m_north - m_south) % k == 0;
    return rep;
}

}  // namespace genus
