import locred
import pytest


def test_factor_and_resultant():
    content, factors = locred.factor([-4, 0, 0, 0, 1])
    assert content == 1
    assert sorted(f for f, _ in factors) == [[-2, 0, 1], [2, 0, 1]]
    assert locred.resultant([-2, 0, 1], [-3, 0, 1]) == 1
    assert locred.discriminant([1, 0, 0, 0, 1]) == 256
    assert locred.is_irreducible([1, 0, 0, 0, 1])


def test_big_integers_survive():
    big = 2**100 + 1
    content, _ = locred.factor([big * 3, big * 3])
    assert content == 3 * big


def test_mod_p_and_local():
    assert locred.factor_mod_p([1, 0, 0, 0, 1], 5) == [([2, 0, 1], 1), ([3, 0, 1], 1)]
    cert = locred.local_certificate([1, 0, 0, 0, 1], 2)
    assert cert["status"] == "ProvedIrreducible"
    assert locred.scan([1, 0, 0, 0, 1], 100)["irreducible_reductions"] == []


def test_periods():
    assert locred.period_minpoly(5, 2) == [-1, 1, 1]
    assert locred.find_r(5, 2) == 11


def test_construct_verify_round_trip():
    cert = locred.construct(4, "padic")
    assert cert["polynomial"] == "20,10,9,4,1"
    assert locred.verify(cert)["verdict"] == "Verified"
    cert["polynomial"] = "-4,0,0,0,1"
    assert locred.verify(cert)["verdict"] == "Falsified"


def test_groups_and_function_field():
    g = locred.group_check("semidirect:q=2,m=3")
    assert g["order"] == 12 and g["lemma1"] and g["lemma3"]
    r = locred.function_field_case(2, 1, 3)
    assert r["pass"]


def test_errors_and_cli():
    with pytest.raises(locred.LocredError):
        locred.construct(7)
    code, out, _ = locred.run_cli(["construct", "--degree", "15"])
    assert code == 2
    assert '"certificate_only": true' in out
