#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "permstat/bigint.hpp"
#include "permstat/json_io.hpp"
#include "permstat/multipoly.hpp"
#include "permstat/rational.hpp"
#include "permstat/series.hpp"

using namespace permstat;

TEST_CASE("BigInt construction and decimal round trip") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(123456789012345678LL).to_string() == "123456789012345678");
    CHECK(BigInt::from_string("-987654321098765432109876543210").to_string() ==
          "-987654321098765432109876543210");
    CHECK(BigInt::from_string("0") == BigInt(0));
    CHECK(BigInt::from_string("-0") == BigInt(0));
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12x"), std::invalid_argument);
}

TEST_CASE("BigInt arithmetic agrees with native integers") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int t = 0; t < 2000; ++t) {
        long long a = dist(rng), b = dist(rng);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("BigInt stays exact far beyond 64 bits") {
    BigInt two_pow_200(1);
    for (int i = 0; i < 200; ++i) two_pow_200 *= BigInt(2);
    CHECK(two_pow_200.to_string() ==
          "1606938044258990275541962092341162602522202993782792835301376");
    BigInt big = BigInt::from_string("123456789123456789123456789");
    auto [q, r] = BigInt::divmod(big * big + BigInt(17), big);
    CHECK(q == big);
    CHECK(r == BigInt(17));
    CHECK(gcd(big * BigInt(6), big * BigInt(4)) == big * BigInt(2));
}

TEST_CASE("BigInt divmod sign conventions (truncation toward zero)") {
    CHECK(BigInt(-7) / BigInt(2) == BigInt(-3));
    CHECK(BigInt(-7) % BigInt(2) == BigInt(-1));
    CHECK(BigInt(7) / BigInt(-2) == BigInt(-3));
    CHECK(BigInt(7) % BigInt(-2) == BigInt(1));
    CHECK_THROWS_AS(BigInt::divmod(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("Rational reduction, parsing, arithmetic") {
    CHECK(Rational(BigInt(2), BigInt(4)).to_string() == "1/2");
    CHECK(Rational(BigInt(2), BigInt(-4)).to_string() == "-1/2");
    CHECK(Rational(BigInt(0), BigInt(5)).to_string() == "0");
    CHECK(Rational::parse("2/5") + Rational::parse("3/5") == Rational(1));
    CHECK(Rational::parse("1/3") * Rational(3) == Rational(1));
    CHECK(Rational::parse("1/2") - Rational::parse("1/3") == Rational(BigInt(1), BigInt(6)));
    CHECK(Rational::parse("-7").to_string() == "-7");
    CHECK(Rational::parse("1/2") < Rational::parse("2/3"));
    CHECK(Rational::parse("3/4").reciprocal() == Rational::parse("4/3"));
    CHECK(Rational(BigInt(2), BigInt(5)).to_fraction_string() == "2/5");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("pq_bracket values") {
    CHECK(pq_bracket(0).is_zero());
    CHECK(pq_bracket(1) == MultiPoly::one());
    MultiPoly expect = MultiPoly::monomial(BigInt(1), 0, 2, 0) +
                       MultiPoly::monomial(BigInt(1), 1, 1, 0) +
                       MultiPoly::monomial(BigInt(1), 2, 0, 0);
    CHECK(pq_bracket(3) == expect);  // p^2 + pq + q^2
    CHECK_THROWS_AS(pq_bracket(-1), std::invalid_argument);
}

TEST_CASE("bracket specializations: p=1 gives the q-integer, p=q=1 gives n") {
    for (int n = 0; n <= 9; ++n) {
        CHECK(pq_bracket(n).subst_p_one() == q_bracket(n));
        CHECK(q_bracket(n).eval_q(1) == BigInt(n));
    }
}

namespace {

MultiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 6), exp(0, 4), lexp(-3, 4);
    std::uniform_int_distribution<long long> coef(-1000000000LL, 1000000000LL);
    // large factor so products overflow any machine word
    BigInt big = BigInt::from_string("340282366920938463463374607431768211456");
    MultiPoly r;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t)
        r += MultiPoly::monomial(BigInt(coef(rng)) * big, lexp(rng), exp(rng), exp(rng));
    return r;
}

}  // namespace

TEST_CASE("MultiPoly ring axioms on randomized Laurent inputs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly());
        CHECK(a * MultiPoly::one() == a);
        CHECK((a * MultiPoly()).is_zero());
    }
}

TEST_CASE("MultiPoly canonical form and exponent rules") {
    MultiPoly a = MultiPoly::monomial(BigInt(3), 2, 1, 0);
    MultiPoly b = MultiPoly::monomial(BigInt(-3), 2, 1, 0);
    CHECK((a + b).is_zero());
    CHECK((a + b).term_count() == 0);
    CHECK_NOTHROW(MultiPoly::monomial(BigInt(1), -5, 0, 0));  // Laurent in q
    CHECK_THROWS_AS(MultiPoly::monomial(BigInt(1), 0, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::monomial(BigInt(1), 0, 0, -1), std::invalid_argument);
    MultiPoly lau = MultiPoly::monomial(BigInt(2), -2, 0, 0);
    CHECK(lau.min_q_exp() == -2);
    CHECK(lau.shifted_q(2) == MultiPoly::constant(BigInt(2)));
}

TEST_CASE("MultiPoly substitution and evaluation") {
    // 2 q^2 p + y
    MultiPoly f = MultiPoly::monomial(BigInt(2), 2, 1, 0) + MultiPoly::var_y();
    CHECK(f.subst_p_one() == MultiPoly::monomial(BigInt(2), 2, 0, 0) + MultiPoly::var_y());
    CHECK(f.swap_pq() == MultiPoly::monomial(BigInt(2), 1, 2, 0) + MultiPoly::var_y());
    CHECK(f.coeff_of_y(1) == MultiPoly::one());
    CHECK(f.coeff_of_y(0) == MultiPoly::monomial(BigInt(2), 2, 1, 0));

    MultiPoly g = q_bracket(3);  // 1 + q + q^2
    CHECK(g.eval_q(1) == BigInt(3));
    CHECK(g.eval_q(0) == BigInt(1));
    CHECK(g.eval_q(-1) == BigInt(1));
    MultiPoly laurent = MultiPoly::monomial(BigInt(1), -2, 0, 0);
    CHECK(laurent.eval_q(1) == BigInt(1));
    CHECK(laurent.eval_q(-1) == BigInt(1));
    CHECK_THROWS_AS(laurent.eval_q(0), std::domain_error);
    CHECK_THROWS_AS(f.eval_q(1), std::domain_error);  // has p and y terms
}

TEST_CASE("MultiPoly JSON shape") {
    MultiPoly f = MultiPoly::monomial(BigInt(2), -1, 0, 1) + MultiPoly::one();
    CHECK(to_json(f).dump() ==
          R"({"terms":[{"q":-1,"p":0,"y":1,"coef":"2"},{"q":0,"p":0,"y":0,"coef":"1"}]})");
}

TEST_CASE("MotzkinPath validation, parsing, heights") {
    CHECK(MotzkinPath::parse("NeNESS").to_string() == "NeNESS");
    CHECK(MotzkinPath::parse("").length() == 0);
    CHECK_THROWS_AS(MotzkinPath::parse("SN"), std::invalid_argument);   // below zero
    CHECK_THROWS_AS(MotzkinPath::parse("NE"), std::invalid_argument);   // open at the end
    CHECK_THROWS_AS(MotzkinPath::parse("NX"), std::invalid_argument);   // bad letter
    std::vector<int> h = MotzkinPath::parse("NeNESS").heights();
    CHECK(h == std::vector<int>{0, 1, 1, 2, 2, 1, 0});
}

namespace {

CFSpec f_spec_local() {
    return CFSpec{
        [](int h) { return pq_bracket(h + 1) * MultiPoly::var_y() + pq_bracket(h); },
        [](int h) { return pq_bracket(h).pow(2) * MultiPoly::var_y(); },
    };
}

}  // namespace

TEST_CASE("cf_expand basics") {
    CFSpec spec = f_spec_local();
    XSeries s0 = cf_expand(spec, 0);
    CHECK(s0.coeff(0) == MultiPoly::one());

    XSeries s1 = cf_expand(spec, 1);
    CHECK(s1.coeff(1) == MultiPoly::var_y());  // b_0 = y[1] + [0] = y

    // x^3 coefficient: y + y^2 (2 + p + q) + y^3, from b0^3 + 2 b0 l1 + l1 b1
    XSeries s3 = cf_expand(spec, 3);
    MultiPoly expect = MultiPoly::var_y() + MultiPoly::monomial(BigInt(2), 0, 0, 2) +
                       MultiPoly::monomial(BigInt(1), 0, 1, 2) +
                       MultiPoly::monomial(BigInt(1), 1, 0, 2) +
                       MultiPoly::monomial(BigInt(1), 0, 0, 3);
    CHECK(s3.coeff(3) == expect);
}

TEST_CASE("cf_expand truncation stability") {
    CFSpec spec = f_spec_local();
    for (int order = 1; order <= 7; ++order) {
        CHECK(cf_expand(spec, order).truncated(order - 1) == cf_expand(spec, order - 1));
    }
}

TEST_CASE("XSeries reciprocal inverts") {
    XSeries s = cf_expand(f_spec_local(), 6);
    XSeries p = s * s.reciprocal();
    CHECK(p == XSeries::one(6));
    XSeries bad(3);
    bad.set_coeff(0, MultiPoly::var_q());
    CHECK_THROWS_AS(bad.reciprocal(), std::domain_error);
}

TEST_CASE("motzkin_transfer equals the continued fraction coefficientwise") {
    auto weights = [](Step s, int h) {
        switch (s) {
            case Step::N:
            case Step::E: return pq_bracket(h + 1) * MultiPoly::var_y();
            default: return pq_bracket(h);
        }
    };
    CHECK(motzkin_transfer(weights, 0) == MultiPoly::one());
    // length 1: only the two level steps at height 0
    CHECK(motzkin_transfer(weights, 1) == pq_bracket(1) * MultiPoly::var_y() + pq_bracket(0));
    XSeries f = cf_expand(f_spec_local(), 6);
    for (int n = 0; n <= 6; ++n) CHECK(motzkin_transfer(weights, n) == f.coeff(n));
}

TEST_CASE("motzkin_transfer agrees with explicit path enumeration") {
    auto weights = [](Step s, int h) {
        switch (s) {
            case Step::N: return pq_bracket(h + 1) * MultiPoly::var_y();
            case Step::E: return q_bracket(h + 1);
            case Step::EBar: return MultiPoly::constant(BigInt(2));
            case Step::S: return pq_bracket(h);
        }
        return MultiPoly();
    };
    for (int n = 0; n <= 5; ++n) {
        MultiPoly direct;
        for_each_motzkin_path(n, [&](const MotzkinPath& path) {
            MultiPoly prod = MultiPoly::one();
            std::vector<int> h = path.heights();
            for (int i = 1; i <= n; ++i)
                prod *= weights(path.step(i), h[static_cast<std::size_t>(i) - 1]);
            direct += prod;
        });
        CHECK(motzkin_transfer(weights, n) == direct);
    }
}
