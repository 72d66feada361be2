#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genus/characters.hpp"
#include "genus/constructions.hpp"
#include "genus/genus_spec.hpp"
#include "oracles.hpp"
#include "random_data.hpp"

using namespace genus;
using testutil::random_data;

namespace {

Series<RatFunc> as_series(const EquivariantCharacter& ch) {
    Series<RatFunc> s(Var::q, ch.q_order);
    for (int i = 0; i < ch.q_order; ++i) s.set_coeff(i, ch.per_q[i]);
    return s;
}

bool same_character(const EquivariantCharacter& a, const EquivariantCharacter& b) {
    if (a.q_order != b.q_order) return false;
    for (int i = 0; i < a.q_order; ++i)
        if (!(a.per_q[i] == b.per_q[i])) return false;
    return true;
}

bool is_zero_character(const EquivariantCharacter& ch) {
    for (const RatFunc& f : ch.per_q)
        if (!f.is_zero()) return false;
    return true;
}

EquivariantCharacter negated(EquivariantCharacter ch) {
    for (RatFunc& f : ch.per_q) f = -f;
    ch.polynomial_form.reset();
    return ch;
}

std::vector<std::pair<int, std::vector<int>>> oracle_points(const FixedPointData& d) {
    std::vector<std::pair<int, std::vector<int>>> pts;
    for (const FixedPointDatum& p : d.points) pts.emplace_back(p.sign, p.weights);
    return pts;
}

// Flip the signs of a random subset of weights of one point, then pick the
// partner's orientation sign so the connected-sum gluing rule is satisfied.
FixedPointData glueable_partner(const FixedPointDatum& p, std::mt19937& rng, int dim) {
    std::uniform_int_distribution<int> coin(0, 1);
    FixedPointDatum q;
    q.weights = p.weights;
    for (int& w : q.weights)
        if (coin(rng)) w = -w;
    int parity = (detail::positive_count(p.weights) + detail::positive_count(q.weights)) % 2;
    q.sign = parity == 1 ? p.sign : -p.sign;

    FixedPointData d = random_data(rng);
    d.dim = dim;
    for (FixedPointDatum& r : d.points) {
        r.weights.resize(dim / 2);
        for (int& w : r.weights)
            if (w == 0) w = testutil::random_weight(rng);
    }
    d.points.push_back(std::move(q));
    return d;
}

}  // namespace

TEST_CASE("signature characters of linear projective spaces") {
    EquivariantCharacter cp1 = signature_character(linear_cpn({0, 1}));
    CHECK(cp1.per_q[0].is_zero());

    EquivariantCharacter cp2 = signature_character(linear_cpn({0, 1, 2}));
    CHECK(cp2.per_q[0] == RatFunc(1));

    EquivariantCharacter cp4 = signature_character(linear_cpn({0, 1, 2, 3, 4}));
    CHECK(cp4.per_q[0] == RatFunc(1));

    // independent of the rotation numbers
    EquivariantCharacter skew = signature_character(linear_cpn({0, 2, 5}));
    CHECK(skew.per_q[0] == RatFunc(1));

    auto rep = rigidity_check(cp4);
    CHECK(rep.is_character);
    CHECK(rep.is_rigid);
    CHECK(evaluate_at_one(cp4) == QSeries(1).truncated(1));
}

TEST_CASE("A-hat character of CP^2: not a genuine character, value -1/8") {
    EquivariantCharacter ch = ahat_character(linear_cpn({0, 1, 2}));
    // closed form -mu^2 / ((mu+1)^2 (mu^2+1))
    RatFunc expect(Poly::monomial(Var::mu, 2, Rational(-1)),
                   Poly(Var::mu, {1, 2, 2, 2, 1}));
    CHECK(ch.per_q[0] == expect);

    auto rep = polynomiality_check(ch);
    CHECK(!rep.pass);
    CHECK(rep.failed_q == std::vector<int>{0});
    CHECK(!rigidity_check(ch).is_character);

    CHECK(ch.per_q[0].eval(Rational(1)) == rat(-1, 8));
}

TEST_CASE("A-hat character of spin examples vanishes") {
    EquivariantCharacter cp3 = ahat_character(linear_cpn({0, 1, 2, 3}));
    CHECK(is_zero_character(cp3));

    EquivariantCharacter s4 = ahat_character(sphere_of_representation({1, 2}));
    CHECK(is_zero_character(s4));
    CHECK(is_zero_character(signature_character(sphere_of_representation({1, 2}))));
}

TEST_CASE("cross-module: CP^4 genera from fixed points and Pontryagin numbers") {
    FixedPointData cp4 = linear_cpn({0, 1, 2, 3, 4});
    PontryaginData pdata = pontryagin_of_projective_product({4});

    EquivariantCharacter sig = signature_character(cp4);
    CHECK(sig.per_q[0].eval(Rational(1)) == evaluate_genus(pdata, signature_spec()));

    EquivariantCharacter ah = ahat_character(cp4);
    CHECK(ah.per_q[0].eval(Rational(1)) == rat(3, 128));
    CHECK(ah.per_q[0].eval(Rational(1)) == evaluate_genus(pdata, ahat_spec()));
}

TEST_CASE("elliptic character of CP^1 vanishes") {
    EquivariantCharacter ch = elliptic_character(linear_cpn({0, 1}), 4);
    CHECK(is_zero_character(ch));
}

TEST_CASE("elliptic character of CP^2: polynomial but not rigid") {
    int q_order = 4;
    FixedPointData cp2 = linear_cpn({0, 1, 2});
    EquivariantCharacter ch = elliptic_character(cp2, q_order);

    // q^0 part is the signature character
    CHECK(ch.per_q[0] == RatFunc(1));

    auto poly = polynomiality_check(ch);
    CHECK(poly.pass);
    auto rig = rigidity_check(ch);
    CHECK(rig.is_character);
    CHECK(!rig.is_rigid);
    CHECK(!rig.offenders.empty());

    // lambda = 1 specialization is the (non-equivariant) elliptic genus,
    // phi[CP^2] = delta(q)
    GenusSpec<QSeries> spec = universal_elliptic_spec(q_order);
    CHECK(evaluate_at_one(ch) == spec.delta);

    // numeric samples against the independent convolution oracle
    for (const Rational& lam : {Rational(2), rat(3, 2)}) {
        oracle::QPoly expect = oracle::elliptic_character_at(lam, oracle_points(cp2), q_order);
        for (int n = 0; n < q_order; ++n)
            CHECK(ch.per_q[n].eval(lam) == expect[n]);
    }
}

TEST_CASE("elliptic character rigidity on spin examples") {
    int q_order = 4;

    FixedPointData cp3 = linear_cpn({0, 1, 2, 3});
    EquivariantCharacter ch3 = elliptic_character(cp3, q_order);
    auto rep3 = rigidity_check(ch3);
    CHECK(rep3.is_character);
    CHECK(rep3.is_rigid);
    // rigid: the same value at every lambda, matching the oracle
    oracle::QPoly expect = oracle::elliptic_character_at(Rational(2), oracle_points(cp3), q_order);
    for (int n = 0; n < q_order; ++n)
        CHECK(ch3.per_q[n].eval(Rational(2)) == expect[n]);

    FixedPointData s2 = sphere_of_representation({1});
    EquivariantCharacter chs = elliptic_character(product(s2, s2), q_order);
    CHECK(is_zero_character(chs));
    auto reps = rigidity_check(chs);
    CHECK(reps.is_rigid);
}

TEST_CASE("property: flipping a weight and the orientation sign is invisible") {
    std::mt19937 rng(20240823);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int it = 0; it < 50; ++it) {
        FixedPointData d = random_data(rng);
        FixedPointData f = d;
        std::uniform_int_distribution<int> pick_p(0, static_cast<int>(d.points.size()) - 1);
        std::uniform_int_distribution<int> pick_w(0, d.dim / 2 - 1);
        int i = pick_p(rng), j = pick_w(rng);
        f.points[i].weights[j] = -f.points[i].weights[j];
        f.points[i].sign = -f.points[i].sign;

        CHECK(same_character(signature_character(d), signature_character(f)));
        CHECK(same_character(ahat_character(d), ahat_character(f)));
        CHECK(same_character(elliptic_character(d, 3), elliptic_character(f, 3)));
    }
}

TEST_CASE("property: lambda -> 1/lambda acts by (-1)^{dim/2}") {
    std::mt19937 rng(7151);
    for (int it = 0; it < 50; ++it) {
        FixedPointData d = random_data(rng);
        Rational s(d.dim / 2 % 2 == 0 ? 1 : -1);
        for (EquivariantCharacter ch : {signature_character(d), ahat_character(d),
                                        elliptic_character(d, 3)})
            for (const RatFunc& f : ch.per_q)
                CHECK(f.subst_inverse() == f * RatFunc(s));
    }
}

TEST_CASE("property: disjoint unions add, orientation reversal negates") {
    std::mt19937 rng(40961);
    for (int it = 0; it < 50; ++it) {
        FixedPointData d1 = random_data(rng);
        FixedPointData d2 = random_data(rng);
        d2.dim = d1.dim;
        for (FixedPointDatum& p : d2.points) {
            p.weights.resize(d1.dim / 2);
            for (int& w : p.weights)
                if (w == 0) w = testutil::random_weight(rng);
        }
        FixedPointData both = d1;
        both.points.insert(both.points.end(), d2.points.begin(), d2.points.end());

        CHECK(as_series(signature_character(both)) ==
              as_series(signature_character(d1)) + as_series(signature_character(d2)));
        CHECK(as_series(ahat_character(both)) ==
              as_series(ahat_character(d1)) + as_series(ahat_character(d2)));
        CHECK(as_series(elliptic_character(both, 3)) ==
              as_series(elliptic_character(d1, 3)) + as_series(elliptic_character(d2, 3)));

        FixedPointData rev = orientation_reverse(d1);
        CHECK(same_character(signature_character(rev), negated(signature_character(d1))));
        CHECK(same_character(ahat_character(rev), negated(ahat_character(d1))));
        CHECK(same_character(elliptic_character(rev, 3), negated(elliptic_character(d1, 3))));
    }
}

TEST_CASE("property: products multiply characters") {
    std::mt19937 rng(90210);
    for (int it = 0; it < 50; ++it) {
        FixedPointData d1 = random_data(rng);
        FixedPointData d2 = random_data(rng);
        FixedPointData pr = product(d1, d2);
        CHECK(signature_character(pr).per_q[0] ==
              signature_character(d1).per_q[0] * signature_character(d2).per_q[0]);
        CHECK(ahat_character(pr).per_q[0] ==
              ahat_character(d1).per_q[0] * ahat_character(d2).per_q[0]);
        if (it < 12)
            CHECK(as_series(elliptic_character(pr, 3)) ==
                  (as_series(elliptic_character(d1, 3)) *
                   as_series(elliptic_character(d2, 3))).truncated(3));
    }
}

TEST_CASE("property: connected sums add characters") {
    std::mt19937 rng(55501);
    for (int it = 0; it < 50; ++it) {
        FixedPointData d1 = random_data(rng);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(d1.points.size()) - 1);
        int i = pick(rng);
        FixedPointData d2 = glueable_partner(d1.points[i], rng, d1.dim);
        int j = static_cast<int>(d2.points.size()) - 1;

        FixedPointData sum = equivariant_connected_sum(d1, i, d2, j);
        CHECK(as_series(signature_character(sum)) ==
              as_series(signature_character(d1)) + as_series(signature_character(d2)));
        CHECK(as_series(ahat_character(sum)) ==
              as_series(ahat_character(d1)) + as_series(ahat_character(d2)));
        if (it < 12)
            CHECK(as_series(elliptic_character(sum, 3)) ==
                  as_series(elliptic_character(d1, 3)) + as_series(elliptic_character(d2, 3)));
    }
}
