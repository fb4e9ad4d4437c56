import fractions

import pytest

import jordeform


def test_full_run_is_green():
    recs = jordeform.run_checks(order=1)
    assert recs
    assert all(r["passed"] for r in recs)
    assert {r["suite"] for r in recs} == set(jordeform.suite_names())
    for r in recs:
        assert r["residual_terms"] == 0
        assert r["residual"] == ""


def test_suite_and_algebra_filters():
    recs = jordeform.run_checks(order=1, suites=["hopf"], algebra="schrodinger")
    assert recs
    assert all(r["suite"] == "hopf" for r in recs)
    assert all("h6" not in r["identity"] for r in recs)


def test_bad_config_raises():
    with pytest.raises(ValueError):
        jordeform.run_checks(order=-1)
    with pytest.raises(ValueError):
        jordeform.run_checks(algebra="su2")
    with pytest.raises(ValueError):
        jordeform.run_checks(suites=["nope"])


def test_tables_render_exactly():
    t = jordeform.commutator_table("h6", order=2)
    assert t["[A-,B-]"] == "-z*A-^2"
    s = jordeform.commutator_table("schrodinger", order=2)
    assert s["[K,C]"] == "-(z/2)*K^2"
    cop = jordeform.coproducts("h6", order=1)
    assert cop["M"] == "(1 ox M) + (M ox 1)"
    assert jordeform.antipodes("h6", order=1)["M"] == "-M"
    assert jordeform.generator_names("schrodinger") == ["C", "K", "D", "M", "P", "H"]


def test_matrix_entries_are_exact():
    m = {(e["row"], e["col"]): e["z"] for e in jordeform.matrix("B+", order=2, dim=5)}
    assert m[(3, 0)][1] == (fractions.Fraction(-1), 6)
    assert m[(4, 0)][2] == (fractions.Fraction(7, 6), 6)
    u = {
        (e["row"], e["col"]): e["z"]
        for e in jordeform.matrix("A-", order=2, dim=5, basis="unnormalized")
    }
    assert u[(2, 1)][2] == fractions.Fraction(1, 2)
    with pytest.raises(ValueError):
        jordeform.matrix("Q", order=1, dim=4)


def test_universal_r_leading_terms():
    assert jordeform.universal_r("h6", order=1) == "(1 ox 1) - z*(A+ ox N) + z*(N ox A+)"
