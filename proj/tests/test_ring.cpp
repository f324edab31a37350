#include <doctest.h>

#include "generators.hpp"
#include "pochhammer/errors.hpp"
#include "pochhammer/modp.hpp"
#include "pochhammer/ring.hpp"

using namespace pochhammer;

namespace {

FieldElement F(std::string_view s, std::size_t n) { return parse_field_element(s, n); }

}  // namespace

TEST_CASE("polynomial products and identities") {
    CHECK(F("(z1 + 1)*(z1 - 1)", 1) == F("z1^2 - 1", 1));
    CHECK(to_string(F("(z1 + 1)*(z1 - 1)", 1)) == "z1^2 - 1");
    CHECK(is_zero(F("(z1 - 1) - (z1 - 1)", 1)));
    CHECK(is_zero(F("z1*z2 - z2*z1", 2)));
    CHECK_FALSE(is_zero(F("1 - z1", 1)));

    const FieldElement x = F("(1 - z2)/(z1 - 1)", 2);
    CHECK(x.inverse() * x == FieldElement::one(2));
    CHECK(x + FieldElement::zero(2) == x);
    CHECK_THROWS_AS(FieldElement::zero(2).inverse(), DivisionByZero);
    CHECK_THROWS_AS(FieldElement(LaurentPoly::constant(1, 1), LaurentPoly(1)), DivisionByZero);
}

TEST_CASE("canonical representatives") {
    // Monomial content and scalar factors move out of the denominator.
    const FieldElement a = F("(z1^2 - z1)/(2*z1^3 - 2*z1^2)", 1);
    CHECK(a == F("1/(2*z1)", 1));
    CHECK(a.denominator().leading_term().coeff == 1);
    CHECK(a.denominator().monomial_content().is_zero());
    CHECK(a.is_polynomial());
    CHECK(F("(z1^2 - 1)/(z1 - 1)", 1).numerator() == F("z1 + 1", 1).numerator());
    CHECK(F("(z1^2 - 1)/(z1 - 1)", 1).is_polynomial());
    // Without a gcd the representative may keep a common factor; equality still holds.
    CHECK(F("((z1 - 1)*(z2 - 1))/((z1 - 1)*(z2 + 1))", 2) == F("(z2 - 1)/(z2 + 1)", 2));
}

TEST_CASE("field axioms on random elements") {
    gen::Rng rng(1);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
        const FieldElement x = gen::element(rng, n), y = gen::element(rng, n), z = gen::element(rng, n);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(is_zero(x - x));
        CHECK(x + FieldElement::zero(n) == x);
        CHECK(-(-x) == x);
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == FieldElement::one(n));
            CHECK(x.pow(-2) * x.pow(3) == x);
        }
    }
}

TEST_CASE("exact division in the Laurent ring") {
    gen::Rng rng(2);
    for (int i = 0; i < 60; ++i) {
        const LaurentPoly a = gen::poly(rng, 2), d = gen::nonzero_poly(rng, 2);
        const auto q = (a * d).divide_exact(d);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    const LaurentPoly z1 = LaurentPoly::variable(1, 0), one = LaurentPoly::constant(1, 1);
    CHECK_FALSE((z1 + one).divide_exact(z1 - one).has_value());
    // (z1^2 - 1) / (z1^-1 - z1^-2) = z1^2 (z1 + 1)
    const LaurentPoly d = one.shifted(ExponentVector{-1}) - one.shifted(ExponentVector{-2});
    CHECK(*(z1 * z1 - one).divide_exact(d) == (z1 + one).shifted(ExponentVector{2}));
}

TEST_CASE("evaluation") {
    const std::vector<Rational> p23{2, 3};
    CHECK(evaluate(F("(1 - z2)/(z1 - 1)", 2), p23) == -2);
    CHECK(evaluate(F("z1^-1", 1), std::vector<Rational>{2}) == Rational(1, 2));
    CHECK_THROWS_AS(evaluate(F("1/(z1 - 1)", 1), std::vector<Rational>{1}), EvaluationPole);

    gen::Rng rng(3);
    for (int i = 0; i < 60; ++i) {
        const FieldElement x = gen::element(rng, 2), y = gen::element(rng, 2);
        const std::vector<Rational> pt{Rational(gen::uniform(rng, 2, 40), 7), Rational(-gen::uniform(rng, 2, 40), 5)};
        try {
            const Rational ex = evaluate(x, pt), ey = evaluate(y, pt);
            CHECK(evaluate(x * y, pt) == ex * ey);
            CHECK(evaluate(x + y, pt) == ex + ey);
        } catch (const EvaluationPole&) {
        }
    }
}

TEST_CASE("evaluation modulo p agrees with rational evaluation") {
    gen::Rng rng(4);
    for (int i = 0; i < 60; ++i) {
        const FieldElement x = gen::element(rng, 2);
        const std::vector<Rational> q{Rational(gen::uniform(rng, 2, 50)), Rational(-gen::uniform(rng, 2, 50))};
        const std::vector<std::uint64_t> p{*modp::from_rational(q[0]), *modp::from_rational(q[1])};
        try {
            const Rational v = evaluate(x, q);
            const auto m = modp::evaluate(x, p);
            REQUIRE(m.has_value());
            CHECK(*m == *modp::from_rational(v));
        } catch (const EvaluationPole&) {
        }
    }
    CHECK(modp::from_rational(Rational(-1)) == modp::kPrime - 1);
    CHECK(modp::mul(modp::inv(12345), 12345) == 1);
    CHECK_FALSE(modp::from_rational(Rational(1, 1) / Rational(mpz_class(modp::kPrime))).has_value());
}

TEST_CASE("text form round-trips") {
    for (const char* s : {"(-z2 + 1)/(z1 - 1)", "z1^-1", "3/2*z1*z2^-1", "-z2 + 1", "0", "1", "(z1^2 - 1)/(z2 + 3)",
                          "z1/(z1 + z2)"}) {
        const FieldElement x = parse_field_element(s);
        CHECK(parse_field_element(to_string(x), x.nvars()) == x);
    }
    CHECK(to_string(F("z1^-1", 1)) == "z1^-1");
    CHECK(to_string(F("(1 - z2)/(z1 - 1)", 2)) == "(-z2 + 1)/(z1 - 1)");
    CHECK(F("2 z1 z2^(-1)", 2) == F("2*z1/z2", 2));
    CHECK(parse_field_element("z3").nvars() == 3);

    gen::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const FieldElement x = gen::element(rng, 3);
        CHECK(parse_field_element(to_string(x), 3) == x);
        CHECK(to_string(parse_field_element(to_string(x), 3)) == to_string(x));
    }

    CHECK_THROWS_AS(parse_field_element("z1 +", 1), ParseError);
    CHECK_THROWS_AS(parse_field_element("z4", 3), ParseError);
    CHECK_THROWS_AS(parse_field_element("(z1", 1), ParseError);
    CHECK_THROWS_AS(parse_field_element("z1 # 2", 1), ParseError);
    CHECK_THROWS_AS(parse_field_element("1/(z1 - z1)", 1), DivisionByZero);
}
