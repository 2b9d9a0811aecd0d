import json
from fractions import Fraction

import pytest

import redchern


def coeffs(poly):
    return {tuple(t["exps"]): Fraction(t["coeff"]) for t in poly["terms"]}


def test_cbar2_rank3():
    p = redchern.formula(3, 2)
    assert [v["name"] for v in p["vars"]] == ["c1", "c2", "c3"]
    assert coeffs(p) == {(0, 1, 0): 1, (2, 0, 0): Fraction(-1, 3)}
    assert redchern.formula_text(3, 2, latex=True) == r"c_2 - \frac{1}{3} c_1^2"


def test_cbar1_vanishes():
    for n in range(2, 7):
        assert redchern.formula(n, 1)["terms"] == []


def test_universal_rank2():
    u = redchern.universal(2)
    assert u["N"] == 3
    assert coeffs(u["phi"][0]) == {(1,): Fraction(1, 4)}


def test_table_matches_cli():
    code, out, _ = redchern.run_cli(["table", "--max-rank", "3"])
    assert code == 0
    assert out == redchern.table(3)
    assert json.loads(out)["max_rank"] == 3


def test_verify_and_fault():
    reports = redchern.verify("c1-zero", max_rank=3)
    assert reports and all(r["status"] == "pass" for r in reports)
    bad = redchern.verify("phi-roundtrip", max_rank=3, fault="phi")
    assert any(r["status"] == "fail" and r["witness"] for r in bad)


def test_errors_become_value_errors():
    with pytest.raises(ValueError):
        redchern.formula(3, 5)
    with pytest.raises(ValueError):
        redchern.verify("nope")
    assert redchern.run_cli(["formula", "-n", "9", "-r", "1"])[0] == 2
