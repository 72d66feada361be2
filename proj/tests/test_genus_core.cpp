#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genus/genus_spec.hpp"
#include "oracles.hpp"

using namespace genus;

namespace {

// binomial-series oracle for (1 + c u^2)^e: coefficient of u^{2k}
Rational binomial_coeff(const Rational& e, const Rational& c, int k) {
    Rational acc(1);
    for (int j = 0; j < k; ++j) acc *= (e - j) / (j + 1);
    return acc * oracle::rational_pow(c, k);
}

}  // namespace

TEST_CASE("log_derivative presets") {
    // delta = eps = 1: (1-u^2)^{-1}
    Series<Rational> sig = log_derivative(signature_spec(), 7);
    for (int i = 0; i < 7; ++i) CHECK(sig.coeff(i) == Rational(i % 2 == 0 ? 1 : 0));

    // delta = eps = 0: g(u) = u
    GenusSpec<Rational> zero{Rational(0), Rational(0)};
    CHECK(log_derivative(zero, 6) == QSeries(1).truncated(6).retagged(Var::u));

    // delta = -1/8, eps = 0: binomial expansion of (1 + u^2/4)^{-1/2}
    Series<Rational> ah = log_derivative(ahat_spec(), 9);
    for (int k = 0; 2 * k < 9; ++k)
        CHECK(ah.coeff(2 * k) == binomial_coeff(rat(-1, 2), rat(1, 4), k));
    CHECK(ah.coeff(2) == rat(-1, 8));
    CHECK(ah.coeff(4) == rat(3, 128));
}

TEST_CASE("cp_coefficients") {
    auto sig = cp_coefficients(signature_spec(), 3);
    for (const Rational& v : sig) CHECK(v == 1);

    GenusSpec<Rational> zero{Rational(0), Rational(0)};
    auto z = cp_coefficients(zero, 2);
    CHECK(z == std::vector<Rational>{1, 0, 0});

    auto ah = cp_coefficients(ahat_spec(), 2);
    CHECK(ah[1] == rat(-1, 8));
    // phi[CP^4] = (3 delta^2 - eps)/2
    CHECK(ah[2] == (3 * ah[1] * ah[1] - Rational(0)) / 2);
    CHECK(ah[2] == rat(3, 128));
}

TEST_CASE("characteristic_series vs Bernoulli oracles") {
    Series<Rational> sig = characteristic_series(signature_spec(), 11);
    auto l = oracle::x_coth_x_coeffs(5);
    for (int i = 0; 2 * i < 11; ++i) {
        CHECK(sig.coeff(2 * i) == l[i]);
        if (2 * i + 1 < 11) CHECK(sig.coeff(2 * i + 1) == 0);
    }
    CHECK(sig.coeff(2) == rat(1, 3));
    CHECK(sig.coeff(4) == rat(-1, 45));

    Series<Rational> ah = characteristic_series(ahat_spec(), 11);
    auto a = oracle::xhalf_over_sinh_coeffs(5);
    for (int i = 0; 2 * i < 11; ++i) CHECK(ah.coeff(2 * i) == a[i]);
    CHECK(ah.coeff(2) == rat(-1, 24));
    CHECK(ah.coeff(4) == rat(7, 5760));

    GenusSpec<Rational> zero{Rational(0), Rational(0)};
    CHECK(characteristic_series(zero, 6) == QSeries(1).truncated(6).retagged(Var::x));
}

TEST_CASE("multiplicative sequences: classical L and A-hat coefficients") {
    auto l1 = multiplicative_sequence(characteristic_series(signature_spec(), 3), 1);
    CHECK(l1[{1}] == rat(1, 3));
    auto l2 = multiplicative_sequence(characteristic_series(signature_spec(), 5), 2);
    CHECK(l2[{2}] == rat(7, 45));
    CHECK(l2[{1, 1}] == rat(-1, 45));

    auto a1 = multiplicative_sequence(characteristic_series(ahat_spec(), 3), 1);
    CHECK(a1[{1}] == rat(-1, 24));
    auto a2 = multiplicative_sequence(characteristic_series(ahat_spec(), 5), 2);
    CHECK(a2[{2}] == rat(-4, 5760));
    CHECK(a2[{1, 1}] == rat(7, 5760));

    auto trivial = multiplicative_sequence(QSeries(1).truncated(5), 2);
    CHECK(trivial[{2}] == 0);
    CHECK(trivial[{1, 1}] == 0);
}

TEST_CASE("pontryagin_of_projective_product") {
    PontryaginData cp2 = pontryagin_of_projective_product({2});
    CHECK(cp2.dim == 4);
    CHECK(cp2.number({1}) == 3);

    PontryaginData cp4 = pontryagin_of_projective_product({4});
    CHECK(cp4.dim == 8);
    CHECK(cp4.number({1, 1}) == 25);
    CHECK(cp4.number({2}) == 10);

    PontryaginData cp2xcp2 = pontryagin_of_projective_product({2, 2});
    CHECK(cp2xcp2.number({1, 1}) == 18);
    CHECK(cp2xcp2.number({2}) == 9);

    CHECK_THROWS_AS(pontryagin_of_projective_product({1}), std::invalid_argument);
}

TEST_CASE("connected_sum_pontryagin") {
    PontryaginData cp2 = pontryagin_of_projective_product({2});
    PontryaginData sum = connected_sum_pontryagin(cp2, cp2);
    CHECK(sum.number({1}) == 6);

    PontryaginData zero;
    zero.dim = 4;
    CHECK(connected_sum_pontryagin(cp2, zero).numbers == cp2.numbers);

    PontryaginData cp4 = pontryagin_of_projective_product({4});
    PontryaginData sum4 = connected_sum_pontryagin(cp4, cp4);
    CHECK(sum4.number({1, 1}) == 50);
    CHECK(sum4.number({2}) == 20);

    CHECK_THROWS_AS(connected_sum_pontryagin(cp2, cp4), std::invalid_argument);
}

TEST_CASE("evaluate_genus") {
    PontryaginData cp2 = pontryagin_of_projective_product({2});
    CHECK(evaluate_genus(cp2, ahat_spec()) == rat(-1, 8));
    CHECK(evaluate_genus(connected_sum_pontryagin(cp2, cp2), ahat_spec()) == rat(-1, 4));

    PontryaginData cp4 = pontryagin_of_projective_product({4});
    CHECK(evaluate_genus(cp4, signature_spec()) == 1);

    PontryaginData bad;
    bad.dim = 4;
    bad.numbers[{2}] = 1;
    CHECK_THROWS_AS(evaluate_genus(bad, signature_spec()), std::invalid_argument);
}

TEST_CASE("genus multiplicativity and additivity") {
    PontryaginData cp2 = pontryagin_of_projective_product({2});
    PontryaginData cp2xcp2 = pontryagin_of_projective_product({2, 2});
    PontryaginData sum = connected_sum_pontryagin(cp2, cp2);
    for (const GenusSpec<Rational>& spec : {signature_spec(), ahat_spec(),
                                            GenusSpec<Rational>{rat(1, 2), rat(-3, 7)}}) {
        Rational g2 = evaluate_genus(cp2, spec);
        CHECK(evaluate_genus(cp2xcp2, spec) == g2 * g2);
        CHECK(evaluate_genus(sum, spec) == g2 + g2);
    }
}

TEST_CASE("ellipticity_check") {
    CHECK(ellipticity_check(signature_spec(), 3).pass);

    auto ah = ellipticity_check(ahat_spec(), 2);
    CHECK(ah.pass);
    CHECK(ah.via_log == std::vector<Rational>{1, rat(-1, 8), rat(3, 128)});

    // tampering with eps breaks the defining property at CP^4
    auto rep = ellipticity_check(characteristic_series(ahat_spec(), 5), rat(-1, 8),
                                 rat(1, 5), 2);
    CHECK(!rep.pass);
    CHECK(rep.mismatches == std::vector<int>{2});
}
