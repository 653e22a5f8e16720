import json
import math
from fractions import Fraction
from pathlib import Path

import pytest

import taucert

DATA = Path(__file__).resolve().parents[1] / "data"


def bell_triangle(n):
    row, out = [1], [1]
    while len(out) < n:
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
        out.append(row[0])
    return out


def test_bell_terms_match_triangle():
    terms = taucert.catalog_terms("bell-touchard", x=1, n=40)
    assert [int(v) for v in terms] == bell_triangle(40)


def test_bernoulli_numbers():
    terms = taucert.catalog_terms("bernoulli-numbers", n=5)
    assert [Fraction(v) for v in terms] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]


def test_symbolic_terms_are_polynomials_in_x():
    terms = taucert.catalog_terms("bernoulli", n=3)
    assert terms[2] == ["1/6", "-1", "1"]


def test_catalog_list_and_verify():
    names = {e["name"] for e in taucert.catalog_list()}
    assert {"bell-touchard", "springer", "graph"} <= names
    assert taucert.catalog_verify("springer", order=32)["report"]["exact"]


def test_derive_bell():
    egf = json.loads((DATA / "bell-egf.json").read_text())
    eq = taucert.derive(egf, verify_order=32)
    assert eq["text"].startswith("tau(y) + (-t)*y = 1")
    assert eq["verification"]["exact"]


def test_certify_file_path_matches_entry():
    eq = json.loads((DATA / "bell.json").read_text())
    series = json.loads((DATA / "bell-series.json").read_text())
    cert = taucert.certify(eq, series, order=64)
    assert cert["verdict"] == "strongly-d-transcendental"
    assert cert["series_prefix"][:7] == ["1", "1", "2", "5", "15", "52", "203"]
    assert taucert.certify_entry("bell-touchard", x=1)["series_prefix_hash"] == cert["series_prefix_hash"]


def test_rational_witness():
    out = taucert.ratsolve("2", json.loads((DATA / "f-witness-t.json").read_text()))
    assert out["result"] == "witness"
    assert out["g"]["num"] == [["0", "0"], ["1", "0"]]


def test_telescoper_and_summable():
    assert taucert.telescope(json.loads((DATA / "f-t.json").read_text()), n_max=5) == {
        "result": "none",
        "checked_n": 5,
    }
    assert taucert.summable("1")["result"] == "witness"


def test_trigamma():
    assert math.isclose(taucert.trigamma(1.0), math.pi**2 / 6, rel_tol=1e-14)
    r = taucert.check_bernoulli_solution(2.0, [0.1, 0.05, 0.02])
    assert r["max_residual"] < 1e-10
    assert taucert.check_asymptotic(3)["pass"]


def test_errors_carry_codes():
    with pytest.raises(taucert.TaucertError) as err:
        taucert.catalog_terms("no-such-entry")
    assert err.value.code == "unknown-entry"
    with pytest.raises(taucert.TaucertError) as err:
        taucert.catalog_terms("fubini", x=-1, n=3)
    assert err.value.code == "singular-parameter"
    with pytest.raises(taucert.TaucertError) as err:
        taucert.telescope("{not json")
    assert err.value.code == "parse-error"


def test_accept_filter():
    results = taucert.accept("catalog-terms")
    assert len(results) == 1 and results[0]["pass"]
