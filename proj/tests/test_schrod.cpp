#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jordeform/schrod.hpp"

using namespace jordeform;

namespace {

void check_all(const Report& rep) {
    for (const auto& rec : rep) {
        INFO(rec.identity);
        INFO(rec.residual);
        CHECK(rec.pass);
    }
}

} // namespace

TEST_CASE("generator identification round trips") {
    IsoMap T(3);
    const Presentation& p = T.source();
    const Presentation& s = T.target();
    for (int slot = 0; slot < 6; ++slot) {
        INFO("slot ", slot);
        CHECK(T.inverse(T.forward(p.gen(slot))) == p.gen(slot));
        CHECK(T.forward(T.inverse(s.gen(slot))) == s.gen(slot));
    }
    // C picks up the factor pair 2 and 1/2
    CHECK(T.forward(p.gen("B-")) == s.gen("C").scaled(ZSeries(3, 2)));
    CHECK(T.forward(p.gen("A+")) == s.gen("P"));
    CHECK(T.forward(p.gen("M")) == s.gen("M"));
    // N lands on a mixture, so the image has two monomials
    CHECK(T.forward(p.gen("N")).term_count() == 2);
}

TEST_CASE("identification is multiplicative") {
    IsoMap T(3);
    const Presentation& p = T.source();
    const Presentation& s = T.target();
    Element a = p.multiply(p.gen(2), p.gen(4));             // N A+
    Element b = p.multiply(p.gen(4), p.gen(1));             // A+ A-
    Element prod = p.multiply(a, b);
    CHECK(T.forward(prod) == s.multiply(T.forward(a), T.forward(b)));
    // and linear over series coefficients
    Element c = a.scaled(ZSeries::monomial(3, 1, Rational(1, 2))) + b;
    CHECK(T.forward(c) == T.forward(a).scaled(ZSeries::monomial(3, 1, Rational(1, 2))) +
                              T.forward(b));
}

TEST_CASE("full Hopf transport") {
    check_all(check_iso_is_hopf_morphism(3));
}

TEST_CASE("subalgebra survey") {
    check_all(subalgebra_survey(3));
    // the non-closure statements live at z^1, so an order 0 request is
    // bumped to order 1 instead of reporting inverted expectations
    check_all(subalgebra_survey(0));
}

TEST_CASE("tensor transport matches slotwise transport") {
    IsoMap T(3);
    const HopfStructure& h = HopfStructure::get(AlgebraId::h6_jordanian, 3);
    const Presentation& s = T.target();
    Tensor2 moved = T.forward(h.coproduct_gen(2)); // Delta(N) carried over
    // counit annihilates every generator, so both legs of the transported
    // coproduct evaluated against it collapse to the transported generator
    Element left(3), right(3);
    for (const auto& [k, c] : moved.terms()) {
        if (k[0].is_unit()) left += Element(3, k[1], ZSeries::one(3)).scaled(c);
        if (k[1].is_unit()) right += Element(3, k[0], ZSeries::one(3)).scaled(c);
    }
    Element n_image = T.forward(T.source().gen(2));
    CHECK(s.normal_order(monomial_word(Monomial::unit())) == s.unit());
    CHECK(left == n_image);
    CHECK(right == n_image);
}
