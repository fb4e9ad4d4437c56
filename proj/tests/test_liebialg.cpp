#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jordeform/liebialg.hpp"

using namespace jordeform;

namespace {

const AlgebraId kIds[3] = {AlgebraId::h6_jordanian, AlgebraId::h6_jordanian_dual,
                           AlgebraId::schrodinger_jordanian};

void check_all(const Report& rep) {
    for (const auto& rec : rep) {
        INFO(rec.identity);
        INFO(rec.residual);
        CHECK(rec.pass);
    }
}

} // namespace

TEST_CASE("wedge bookkeeping") {
    Wedge2 w;
    w.add(4, 2, Rational(3));
    CHECK(w.terms().at({2, 4}) == Rational(-3)); // reordering flips the sign
    w.add(2, 4, Rational(3));
    CHECK(w.is_zero());
    CHECK_THROWS_AS(w.add(1, 1, Rational(1)), std::logic_error);

    Wedge2 v;
    v.add(0, 1, Rational(1, 2));
    auto m = v.matrix();
    CHECK(m[0][1] == Rational(1, 2));
    CHECK(m[1][0] == Rational(-1, 2));
    CHECK(v.scaled(Rational(4)).terms().at({0, 1}) == Rational(2));
}

TEST_CASE("classical brackets satisfy Jacobi") {
    check_all(jacobi_check(LieAlgebra::h6()));
    check_all(jacobi_check(LieAlgebra::schrodinger()));
}

TEST_CASE("a corrupted structure constant breaks Jacobi") {
    const LieAlgebra& L = LieAlgebra::h6();
    // same table except [N,A+] = 2A+ instead of A+
    auto bad_bracket = [&](const LinComb& x, const LinComb& y) {
        LinComb v = L.bracket(x, y);
        Rational extra = x[2] * y[4] - x[4] * y[2]; // the N^A+ component of (x,y)
        v[4] += extra; // doubles the A+ coefficient coming from [N,A+]
        return v;
    };
    int violations = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                LinComb a = lincomb_gen(i), b = lincomb_gen(j), c = lincomb_gen(k);
                LinComb s1 = bad_bracket(bad_bracket(a, b), c);
                LinComb s2 = bad_bracket(bad_bracket(b, c), a);
                LinComb s3 = bad_bracket(bad_bracket(c, a), b);
                for (size_t t = 0; t < 6; ++t)
                    if (s1[t] + s2[t] + s3[t] != 0) ++violations;
            }
    CHECK(violations > 0);
}

TEST_CASE("the three classical r-matrices") {
    Wedge2 r6 = classical_r(AlgebraId::h6_jordanian);
    CHECK(r6.str(LieAlgebra::h6().names()) == "1*(N^A+)");
    Wedge2 rd = classical_r(AlgebraId::h6_jordanian_dual);
    CHECK(rd.str(LieAlgebra::h6().names()) == "1*(A-^N)");
    Wedge2 rs = classical_r(AlgebraId::schrodinger_jordanian);
    CHECK(rs.terms().at({2, 4}) == Rational(-1));  // P^D component
    CHECK(rs.terms().at({3, 4}) == Rational(-1, 2)); // P^M component
}

TEST_CASE("Schouten bracket vanishes for the real r-matrices") {
    for (AlgebraId id : kIds) {
        const LieAlgebra& L = LieAlgebra::get(id);
        CHECK(schouten(L, classical_r(id)).empty());
        check_all(cybe_check(L, classical_r(id), algebra_name(id)));
    }
}

TEST_CASE("negative control: a wrong r fails the classical Yang-Baxter equation") {
    Wedge2 bad;
    bad.add(1, 4, 1); // A- ^ A+
    Cubic s = schouten(LieAlgebra::h6(), bad);
    CHECK(!s.empty());
    Report rep = cybe_check(LieAlgebra::h6(), bad, "corrupted");
    CHECK(rep.size() == 1);
    CHECK_FALSE(rep[0].pass);
    CHECK(rep[0].residual_terms > 0);
}

TEST_CASE("cocommutators regenerate from r") {
    for (AlgebraId id : kIds) check_all(cocommutator_table_check(id));
}

TEST_CASE("co-Jacobi and the cocycle condition") {
    for (AlgebraId id : kIds)
        check_all(cojacobi_and_cocycle_check(LieAlgebra::get(id), classical_r(id),
                                             algebra_name(id)));
}

TEST_CASE("cocommutator examples by hand") {
    // delta(B-) = 2 B-^A+ + 2 N^A- on the primary side
    Wedge2 d = cocommutator_from_r(LieAlgebra::h6(), classical_r(AlgebraId::h6_jordanian), 0);
    Wedge2 want;
    want.add(0, 4, 2);
    want.add(2, 1, 2);
    CHECK(d == want);
    // primitive generators stay primitive
    CHECK(cocommutator_from_r(LieAlgebra::h6(), classical_r(AlgebraId::h6_jordanian), 4)
              .is_zero());
    CHECK(cocommutator_from_r(LieAlgebra::h6(), classical_r(AlgebraId::h6_jordanian), 3)
              .is_zero());
}

TEST_CASE("involution and generator identification at first order") {
    check_all(automorphism_cocommutator_check());
    check_all(iso_cocommutator_check());
}

TEST_CASE("the involution map squares to the identity") {
    GenMap f = h6_automorphism_map();
    for (int s = 0; s < 6; ++s) {
        LinComb twice = transport(f, transport(f, lincomb_gen(s)));
        CHECK(twice == lincomb_gen(s));
    }
}

TEST_CASE("Lie closure of spans") {
    const LieAlgebra& h6 = LieAlgebra::h6();
    CHECK(lie_closed(h6, {4, 1, 3}));    // A+, A-, M
    CHECK(lie_closed(h6, {1, 2, 3, 4})); // A-, N, M, A+
    CHECK_FALSE(lie_closed(h6, {0, 4})); // [A+,B-] = -2A- escapes
    const LieAlgebra& s = LieAlgebra::schrodinger();
    CHECK(lie_closed(s, {5, 4, 1, 3})); // H, P, K, M
    CHECK(lie_closed(s, {2, 0, 5}));    // D, C, H
    CHECK_FALSE(lie_closed(s, {0, 4})); // [P,C] = -K escapes
}

TEST_CASE("both deformations sit over the same classical algebra") {
    CHECK(&LieAlgebra::get(AlgebraId::h6_jordanian) ==
          &LieAlgebra::get(AlgebraId::h6_jordanian_dual));
    CHECK(&LieAlgebra::get(AlgebraId::h6_jordanian) !=
          &LieAlgebra::get(AlgebraId::schrodinger_jordanian));
}
