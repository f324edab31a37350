#include <doctest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "pochhammer/errors.hpp"
#include "pochhammer/words.hpp"

using namespace pochhammer;

namespace {

AlphaHom one_var(const Presentation& p, std::vector<std::int64_t> images) {
    return AlphaHom(p, IntMatrix::from_rows({images}, images.size()));
}

}  // namespace

TEST_CASE("word parsing") {
    const Presentation g2 = surface_presentation(2, 0);
    CHECK(parse_word("a1 a1^-1", 4).empty());
    CHECK(parse_word("[a1,b1]", 4) ==
          Word({Letter{0, 1}, Letter{1, 1}, Letter{0, -1}, Letter{1, -1}}));
    CHECK_THROWS_AS(parse_word("a9", 4), ParseError);
    CHECK_THROWS_AS(parse_word("a1 ^", 4), ParseError);
    CHECK_THROWS_AS(parse_word("[a1 b1]", 4), ParseError);
    CHECK(parse_word("1", g2).empty());
    CHECK(parse_word("", g2).empty());
    CHECK(parse_word("a1^3", g2) == Word::generator(0).pow(3));
    CHECK(parse_word("(a1 b2)^-2", g2) == (Word::generator(0) * Word::generator(3)).pow(-2).reduced());
    CHECK(parse_word("[a1,b1][a2,b2]", g2) == g2.relators[0].reduced());
    CHECK(to_string(parse_word("b1 a2^-1", g2), g2) == "b1 a2^-1");

    gen::Rng rng(20);
    for (int i = 0; i < 50; ++i) {
        const Word w = gen::word(rng, 4, 12).reduced();
        CHECK(parse_word(to_string(w, g2), g2) == w);
    }
}

TEST_CASE("free reduction") {
    gen::Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const Word w = gen::word(rng, 3, 15);
        const Word r = w.reduced();
        for (std::size_t k = 1; k < r.length(); ++k) {
            const Letter a = r.letters()[k - 1], b = r.letters()[k];
            CHECK_FALSE((a.generator == b.generator && a.exponent == -b.exponent));
        }
        CHECK((w * w.inverse()).reduced().empty());
        CHECK(r.reduced() == r);
    }
}

TEST_CASE("surface presentations") {
    const Presentation g2 = surface_presentation(2, 0);
    CHECK(g2.num_generators() == 4);
    REQUIRE(g2.relators.size() == 1);
    CHECK(g2.relators[0] == commutator(Word::generator(0), Word::generator(1)) *
                                commutator(Word::generator(2), Word::generator(3)));
    CHECK(g2.generator_names == std::vector<std::string>{"a1", "b1", "a2", "b2"});
    CHECK(g2.euler_characteristic() == -2);

    const Presentation t1 = surface_presentation(1, 1);
    CHECK(t1.num_generators() == 2);
    CHECK(t1.relators.empty());
    const Presentation pants = surface_presentation(0, 3);
    CHECK(pants.num_generators() == 2);
    CHECK(pants.relators.empty());
    CHECK(pants.euler_characteristic() == -1);
    CHECK(surface_presentation(2, 3).generator_names ==
          std::vector<std::string>{"a1", "b1", "a2", "b2", "c1", "c2"});

    CHECK_THROWS_AS(surface_presentation(0, 0), DomainError);
    CHECK_THROWS_AS(surface_presentation(0, 1), DomainError);
    CHECK_THROWS_AS(surface_presentation(-1, 2), DomainError);
    CHECK(circle_presentation().num_generators() == 1);
    CHECK(wedge_presentation().num_generators() == 2);
}

TEST_CASE("abelianization") {
    const Presentation g2 = surface_presentation(2, 0);
    const AlphaHom h = AlphaHom::hurewicz(g2);
    CHECK(h.matrix() == IntMatrix::identity(4));
    CHECK(abelianize(h, parse_word("a1", g2)) == IntVector{1, 0, 0, 0});
    CHECK(abelianize(h, parse_word("[a1,b1]", g2)) == IntVector{0, 0, 0, 0});

    gen::Rng rng(22);
    for (int i = 0; i < 50; ++i) {
        const AlphaHom a = gen::alpha(rng, g2, 3);
        CHECK(abelianize(a, g2.relators[0]) == IntVector{0, 0, 0});
        const Word u = gen::word(rng, 4, 8), v = gen::word(rng, 4, 8);
        IntVector sum = abelianize(a, u);
        const IntVector av = abelianize(a, v);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += av[k];
        CHECK(abelianize(a, u * v) == sum);
        IntVector neg = abelianize(a, u);
        for (auto& x : neg) x = -x;
        CHECK(abelianize(a, u.inverse()) == neg);
    }
}

TEST_CASE("homomorphism checks") {
    const Presentation g2 = surface_presentation(2, 0);
    CHECK_THROWS_AS(AlphaHom(g2, IntMatrix(2, 3)), InvalidHom);
    Presentation bad = circle_presentation();
    bad.relators.push_back(Word::generator(0));
    CHECK_THROWS_AS(one_var(bad, {1}), InvalidHom);
    CHECK_NOTHROW(one_var(bad, {0}));
    CHECK(one_var(bad, {0}).is_trivial());

    const AlphaHom inner = AlphaHom::hurewicz(circle_presentation());
    const AlphaHom outer = AlphaHom::compose(IntMatrix::from_rows({{1}, {0}}, 1), inner, circle_presentation());
    CHECK(outer.target_rank() == 2);
    CHECK(outer.matrix() == IntMatrix::from_rows({{1}, {0}}, 1));
    CHECK_THROWS_AS(AlphaHom::compose(IntMatrix::from_rows({{1, 2}, {2, 4}}, 2),
                                      AlphaHom::hurewicz(wedge_presentation()), wedge_presentation()),
                    InvalidInclusion);
    CHECK_THROWS_AS(AlphaHom::compose(IntMatrix::identity(3), inner, circle_presentation()), InvalidInclusion);
}

TEST_CASE("Fox derivatives") {
    const Presentation w = wedge_presentation();
    const AlphaHom h = AlphaHom::hurewicz(w);
    const FieldElement one = FieldElement::one(2);
    CHECK(fox_derivative(parse_word("x1 x2", w), 0, h) == one);
    CHECK(fox_derivative(parse_word("x1 x2", w), 1, h) == parse_field_element("z1", 2));
    CHECK(fox_derivative(parse_word("x1^-1", w), 0, h) == parse_field_element("-z1^-1", 2));
    CHECK(fox_derivative(Word(), 0, h).is_zero());

    const Presentation g2 = surface_presentation(2, 0);
    const AlphaHom hg = AlphaHom::hurewicz(g2);
    const Word c = parse_word("[a1,b1]", g2);
    CHECK(fox_derivative(c, 0, hg) == parse_field_element("1 - z2", 4));
    CHECK(fox_derivative(c, 1, hg) == parse_field_element("z1 - 1", 4));
    CHECK(fox_derivative(c, 2, hg).is_zero());
    for (int j = 0; j < 4; ++j) CHECK(fox_derivative_poly(c, j, hg) == oracle::fox_derivative(c, j, hg));
}

TEST_CASE("Fox derivatives match the divide-and-conquer oracle") {
    gen::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        const Presentation p = surface_presentation(gen::uniform(rng, 1, 3), 0);
        const AlphaHom a = gen::alpha(rng, p, static_cast<std::size_t>(gen::uniform(rng, 1, 3)));
        const Word w = gen::word(rng, p.num_generators(), 14);
        for (int j = 0; j < p.num_generators(); ++j) {
            CHECK(fox_derivative_poly(w, j, a) == oracle::fox_derivative(w, j, a));
            CHECK(fox_derivative_poly(w.reduced(), j, a) == fox_derivative_poly(w, j, a));
        }
    }
}

TEST_CASE("fundamental Fox identity") {
    gen::Rng rng(24);
    for (int i = 0; i < 200; ++i) {
        const Presentation p = surface_presentation(gen::uniform(rng, 1, 3), gen::uniform(rng, 0, 2));
        const AlphaHom a = gen::alpha(rng, p, static_cast<std::size_t>(gen::uniform(rng, 1, 4)));
        const Word w = gen::word(rng, p.num_generators(), 16);
        const LaurentPoly one = LaurentPoly::constant(a.target_rank(), 1);
        LaurentPoly lhs(a.target_rank());
        for (int j = 0; j < p.num_generators(); ++j) {
            lhs += fox_derivative_poly(w, j, a) * (a.generator_monomial(j) - one);
        }
        CHECK(lhs == monomial_of(a, w) - one);
    }
}

TEST_CASE("integer matrices") {
    const IntMatrix m = IntMatrix::from_rows({{1, 2}, {2, 4}, {0, 1}}, 2);
    CHECK(m.rank() == 2);
    CHECK(IntMatrix::from_rows({{1, 2}, {2, 4}}, 2).rank() == 1);
    CHECK(m.column(1) == IntVector{2, 4, 1});
    CHECK(IntMatrix::identity(3) * m == m);
}
