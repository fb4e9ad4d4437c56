#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jordeform/ncalg.hpp"

#include <random>

using namespace jordeform;

namespace {

const AlgebraId kIds[3] = {AlgebraId::h6_jordanian, AlgebraId::h6_jordanian_dual,
                           AlgebraId::schrodinger_jordanian};

std::string bra(const Presentation& p, int i, int j) {
    return p.element_str(p.bracket(i, j));
}

} // namespace

TEST_CASE("registry hands out one instance per (algebra, order)") {
    const Presentation& a = Presentation::get(AlgebraId::h6_jordanian, 3);
    const Presentation& b = Presentation::get(AlgebraId::h6_jordanian, 3);
    const Presentation& c = Presentation::get(AlgebraId::h6_jordanian, 4);
    CHECK(&a == &b);
    CHECK(&a != &c);
    CHECK(a.order() == 3);
    CHECK_THROWS_AS(Presentation::get(AlgebraId::h6_jordanian, -1), std::invalid_argument);
    CHECK_THROWS_AS(algebra_from_name("so(5)"), std::invalid_argument);
}

TEST_CASE("pinned table entries render exactly") {
    const Presentation& h6 = Presentation::get(AlgebraId::h6_jordanian, 2);
    const int Bm = 0, Am = 1, N = 2, M = 3, Ap = 4, Bp = 5;
    CHECK(bra(h6, Am, Bm) == "-z*A-^2");
    CHECK(bra(h6, N, Bm) == "-z*A-*N - 2*B-");
    CHECK(bra(h6, N, Am) == "-A-");
    CHECK(bra(h6, Ap, Am) == "-M - z*M*A+ - (z^2/2)*M*A+^2");
    CHECK(bra(h6, Ap, N) == "-A+ - (z/2)*A+^2 - (z^2/6)*A+^3");
    CHECK(bra(h6, Bp, N) == "-2*B+");
    CHECK(bra(h6, Bp, Am) == "-2*A+ + z*A+^2 - (z^2/3)*A+^3");
    CHECK(bra(h6, M, Bm) == "0");

    const Presentation& dual = Presentation::get(AlgebraId::h6_jordanian_dual, 2);
    CHECK(bra(dual, Bp, Ap) == "-z*A+^2");
    CHECK(bra(dual, Am, Bm) == "0");
    CHECK(bra(dual, N, Bm) == "-2*B-");

    const Presentation& s = Presentation::get(AlgebraId::schrodinger_jordanian, 2);
    const int C = 0, K = 1, D = 2, P = 4, H = 5;
    CHECK(bra(s, K, C) == "-(z/2)*K^2");
    CHECK(bra(s, D, K) == "K");
    CHECK(bra(s, H, D) == "2*H");
    CHECK(bra(s, P, D) == "P + (z/2)*P^2 + (z^2/6)*P^3");
    CHECK(bra(s, H, K) == "-P + (z/2)*P^2 - (z^2/6)*P^3");
}

TEST_CASE("antisymmetry of the stored table") {
    for (AlgebraId id : kIds) {
        const Presentation& p = Presentation::get(id, 3);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                CHECK(p.bracket(i, j) + p.bracket(j, i) == Element::zero(3));
    }
}

TEST_CASE("stored table equals engine commutators") {
    for (AlgebraId id : kIds) {
        const Presentation& p = Presentation::get(id, 3);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                CHECK(p.bracket(i, j) == p.commutator(p.gen(i), p.gen(j)));
    }
}

TEST_CASE("M is central") {
    for (AlgebraId id : kIds) {
        const Presentation& p = Presentation::get(id, 3);
        for (int g = 0; g < 6; ++g) CHECK(p.commutator(p.gen(3), p.gen(g)).is_zero());
    }
}

TEST_CASE("Jacobi identity through the rewrite engine") {
    for (AlgebraId id : kIds) {
        const Presentation& p = Presentation::get(id, 3);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int k = j + 1; k < 6; ++k) {
                    Element x = p.gen(i), y = p.gen(j), w = p.gen(k);
                    Element sum = p.commutator(p.commutator(x, y), w) +
                                  p.commutator(p.commutator(y, w), x) +
                                  p.commutator(p.commutator(w, x), y);
                    CHECK(sum.is_zero());
                }
    }
}

TEST_CASE("leftmost and rightmost reduction agree") {
    // every fully reversed word, plus a batch of random ones; reversed words
    // force the maximal number of swaps through both reduction strategies
    for (AlgebraId id : kIds) {
        const Presentation& p = Presentation::get(id, 2);
        Word all{5, 4, 3, 2, 1, 0};
        CHECK(p.normal_order(all) == p.normal_order_rightmost(all));
    }
    std::mt19937 rng(424243);
    std::uniform_int_distribution<int> slot(0, 5), len(0, 5);
    for (AlgebraId id : kIds) {
        const Presentation& p = Presentation::get(id, 2);
        for (int trial = 0; trial < 40; ++trial) {
            Word w;
            int n = len(rng);
            for (int t = 0; t < n; ++t) w.push_back(static_cast<uint8_t>(slot(rng)));
            CHECK(p.normal_order(w) == p.normal_order_rightmost(w));
        }
    }
}

TEST_CASE("multiplication is associative") {
    std::mt19937 rng(99991);
    std::uniform_int_distribution<int> slot(0, 5), len(1, 3);
    for (AlgebraId id : kIds) {
        const Presentation& p = Presentation::get(id, 2);
        auto rand_elem = [&] {
            Word w;
            int n = len(rng);
            for (int t = 0; t < n; ++t) w.push_back(static_cast<uint8_t>(slot(rng)));
            return p.normal_order(w);
        };
        for (int trial = 0; trial < 12; ++trial) {
            Element a = rand_elem(), b = rand_elem(), c = rand_elem();
            CHECK(p.multiply(p.multiply(a, b), c) == p.multiply(a, p.multiply(b, c)));
        }
    }
}

TEST_CASE("normal ordering already-ordered words is the identity") {
    const Presentation& p = Presentation::get(AlgebraId::h6_jordanian, 3);
    Word w{0, 1, 1, 2, 3, 4, 5};
    Element e = p.normal_order(w);
    CHECK(e.term_count() == 1);
    Monomial m;
    m.e = {1, 2, 1, 1, 1, 1};
    CHECK(e.coeff(m) == ZSeries::one(3));
}

TEST_CASE("exponentials of a slot invert") {
    for (AlgebraId id : kIds) {
        const Presentation& p = Presentation::get(id, 4);
        for (int g : {1, 4}) {
            Element e = p.multiply(p.exp_z_gen(g, Rational(1, 2)), p.exp_z_gen(g, Rational(-1, 2)));
            CHECK(e == p.unit());
        }
    }
}

TEST_CASE("classical limit drops every z term") {
    for (AlgebraId id : kIds) {
        const Presentation& p4 = Presentation::get(id, 4);
        const Presentation& p0 = Presentation::get(id, 0);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                Element lim = p4.bracket(i, j).classical_limit();
                Element flat = p0.bracket(i, j);
                Element want(4);
                for (const auto& [m, c] : flat.terms())
                    want.add(m, ZSeries(4, c.constant_term()));
                CHECK(lim == want);
            }
    }
}

TEST_CASE("element rendering corner cases") {
    const Presentation& p = Presentation::get(AlgebraId::h6_jordanian, 2);
    CHECK(p.element_str(p.unit()) == "1");
    CHECK(p.element_str(Element::zero(2)) == "0");
    CHECK(p.element_str(-p.unit()) == "-1");
    CHECK(p.element_str(p.gen(4).scaled(Rational(-1, 2))) == "-(1/2)*A+");
}
