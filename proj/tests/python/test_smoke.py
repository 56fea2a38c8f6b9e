import pytest

import unexpected as u


def test_degrees():
    assert u.degree_of_F(2, 14, 13) == 182
    assert u.square_size(3, 3, 3) == 10


def test_catalog_roundtrip():
    rec = u.record("d4")
    assert rec["name"] == "d4"
    assert u.weak_table("d4") == {6: 12}
    assert u.record(__import__("json").dumps(rec))["name"] == "d4"


def test_certificates():
    c = u.square_certificate({3: 10, 4: 3, 5: 2}, 13, 2, 6, 5)
    assert (c["total"], c["verdict"]) == (31, "Proven")
    p = u.plus_one_certificate(u.weak_table("a30_3"), 30, 14)
    assert p["total"] == 184
    f = u.family_certificate(7)
    assert f["total"] - f["deg_F"] == 1
    assert u.verify_certificate(c)["total"] == 31


def test_forged_certificate_rejected():
    c = u.square_certificate({3: 10, 4: 3, 5: 2}, 13, 2, 6, 5)
    c["total"] = 40
    with pytest.raises(u.UnexpectedError):
        u.verify_certificate(c)


def test_quartic_and_locus():
    rep = u.unexpectedness("a4k1_k2", 4, 3)
    assert (rep["actual_dim"], rep["expected_dim"]) == (1, 0)
    assert u.zero_locus_test("a4k1_k2", 4, 3)["result"] == "ProbablyZero"
    F = u.symbolic_locus("dk_seven", 3, 2)
    assert F["degree"] == 6 and F["terms"]


def test_penrose_and_errors():
    a = u.penrose_audit()
    assert a["subsets"] == 15504 and a["all_six"] == 0
    with pytest.raises(u.UnexpectedError):
        u.record("nosuch")
