"""Interchange formats and the command-line front end."""

import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from tatek.cyclotomic import Cyclotomic, root_of_unity
from tatek.devoto import DevotoElement, random_devoto_element
from tatek.groups import cyclic_group, symmetric_group
from tatek.characters import RepCharacter
from tatek.powerops import p_str
from tatek.serialize import (FormatError, bivariate_from_json, bivariate_to_json,
                             coeffs_from_json, coeffs_to_json, cyclotomic_from_json,
                             cyclotomic_to_json, devoto_from_json, devoto_to_json,
                             dumps, element_from_json, element_to_json, group_from_json,
                             group_to_json, repchar_from_json, repchar_to_json,
                             series_from_json, series_to_json)
from tatek.series import BivariateSeries, PuiseuxSeries
from tatek.wreath import wreath


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "tatek", *args],
                          capture_output=True, text=True)


def test_cyclotomic_roundtrip():
    x = Cyclotomic(12, {1: Fraction(3, 7), 5: -2})
    assert cyclotomic_from_json(cyclotomic_to_json(x)) == x


def test_series_roundtrip():
    s = PuiseuxSeries({Fraction(-1, 2): root_of_unity(3, 1), 2: Fraction(5, 3)}, 4)
    back = series_from_json(series_to_json(s))
    assert back == s
    exact = PuiseuxSeries({0: 1})
    assert series_from_json(series_to_json(exact)) == exact


def test_bivariate_roundtrip():
    b = BivariateSeries({0: PuiseuxSeries.one(3), 2: PuiseuxSeries.monomial(1, Fraction(1, 2), 3)}, 4)
    assert bivariate_from_json(bivariate_to_json(b)) == b


def test_group_roundtrip_plain_and_wreath():
    S3 = symmetric_group(3)
    back = group_from_json(group_to_json(S3))
    assert back.elements == S3.elements
    W = wreath(cyclic_group(2), 2)
    backW = group_from_json(group_to_json(W))
    assert backW.elements == W.elements


def test_element_roundtrip():
    S3 = symmetric_group(3)
    g = (1, 2, 0)
    assert element_from_json(element_to_json(g), S3) == g
    W = wreath(cyclic_group(2), 2)
    w = W.elements[5]
    assert element_from_json(element_to_json(w), W) == w
    with pytest.raises(FormatError):
        element_from_json([1, 2, 3, 4], S3)


def test_devoto_roundtrip_including_wreath_target():
    Z2 = cyclic_group(2)
    x = random_devoto_element(Z2, random.Random(3), truncation=2)
    back = devoto_from_json(devoto_to_json(x))
    assert back.level == x.level and back.table == x.table
    y = p_str(x, 2)
    round_tripped = devoto_from_json(devoto_to_json(y))
    assert round_tripped.table == y.table


def test_devoto_loader_rejects_bad_entries():
    S3 = symmetric_group(3)
    x = DevotoElement.constant(S3, 1)
    data = devoto_to_json(x)
    dup = json.loads(dumps(data))
    dup["entries"].append(dup["entries"][0])
    with pytest.raises(FormatError):
        devoto_from_json(dup)
    bad = json.loads(dumps(data))
    bad["entries"][0]["g"] = [2, 1, 3]
    bad["entries"][0]["h"] = [1, 3, 2]
    with pytest.raises(FormatError):
        devoto_from_json(bad)


def test_repchar_roundtrip():
    Z3 = cyclic_group(3)
    g = next(x for x in Z3.elements if x != Z3.identity)
    chi = RepCharacter(Z3, {Z3.identity: 1, g: root_of_unity(3, 1),
                            Z3.mul(g, g): root_of_unity(3, 2)})
    back = repchar_from_json(repchar_to_json(chi))
    assert back.values == chi.values


def test_coeffs_roundtrip():
    c = {0: 1, 3: -2, 6: 5}
    assert coeffs_from_json(coeffs_to_json(c)) == c
    with pytest.raises(FormatError):
        coeffs_from_json({"coeffs": [{"i": 1, "c": 1}, {"i": 1, "c": 2}]})


# -- CLI ------------------------------------------------------------------


def test_cli_jseries_coefficient(tmp_path):
    out = run_cli("jseries", "--order", "2")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    terms = {(t["num"], t["den"]): t["coeff"]["terms"] for t in data["terms"]}
    assert terms[(1, 1)] == [[0, "196884"]]


def test_cli_hecke_degree_one_echoes(tmp_path):
    series = series_to_json(PuiseuxSeries({-1: 1, 1: 3}, 6))
    path = tmp_path / "x.json"
    path.write_text(dumps(series))
    out = run_cli("hecke", "--n", "1", "--input", str(path))
    assert out.returncode == 0
    assert series_from_json(json.loads(out.stdout)) == series_from_json(series)


def test_cli_determinism_and_roundtrip(tmp_path):
    Z2 = cyclic_group(2)
    x = random_devoto_element(Z2, random.Random(8), truncation=2)
    path = tmp_path / "x.json"
    path.write_text(dumps(devoto_to_json(x)))
    a = run_cli("sym", "--n", "2", "--input", str(path))
    b = run_cli("sym", "--n", "2", "--input", str(path))
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    devoto_from_json(json.loads(a.stdout))  # parses back


def test_cli_verify_suite_deterministic():
    a = run_cli("verify", "--suite", "devoto", "--seed", "7")
    b = run_cli("verify", "--suite", "devoto", "--seed", "7")
    assert a.returncode == 0 and a.stdout == b.stdout
    assert json.loads(a.stdout)["ok"] is True


def test_cli_exit_codes(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    assert run_cli("epsilon", "--input", str(bad)).returncode == 2
    assert run_cli("nonsense").returncode == 2
    assert run_cli("hecke", "--n", "1", "--input", str(tmp_path / "missing.json")).returncode == 2
    # a genuinely failing verification exits 1
    f = tmp_path / "F.json"
    f.write_text(dumps(series_to_json(PuiseuxSeries({-1: 1, 1: 1, 2: 1}, 20))))
    out = run_cli("replicable", "--nmax", "2", "--order", "4", "--input", str(f))
    assert out.returncode == 1


def test_cli_dmvv_and_denominator(tmp_path):
    c = tmp_path / "c.json"
    c.write_text(dumps(coeffs_to_json({1: 1, 2: -1})))
    out = run_cli("dmvv", "--coeffs", str(c), "--t-order", "3", "--q-order", "4")
    assert out.returncode == 0 and json.loads(out.stdout)["ok"] is True
    out = run_cli("denominator", "--order", "2")
    assert out.returncode == 0 and json.loads(out.stdout)["ok"] is True


def test_cli_output_text_mode(tmp_path):
    out = run_cli("--output", "text", "faber", "--n", "2", "--j")
    assert out.returncode == 0 and "Phi_2" in out.stdout
    out = run_cli("faber", "--n", "2", "--j", "--output", "text")
    assert out.returncode == 0 and "Phi_2" in out.stdout


def test_cli_powerop_epsilon_pipeline(tmp_path):
    # orbifold sum of a power operation output, fed back through files
    series = series_to_json(PuiseuxSeries({1: 1}, 6))
    xpath = tmp_path / "x.json"
    xpath.write_text(dumps(series))
    out = run_cli("powerop", "--n", "2", "--input", str(xpath))
    assert out.returncode == 0
    ypath = tmp_path / "y.json"
    ypath.write_text(out.stdout)
    eps = run_cli("epsilon", "--input", str(ypath))
    assert eps.returncode == 0
    value = series_from_json(json.loads(eps.stdout))
    # equals the degree-2 symmetric power of q: q^2
    assert value.terms == PuiseuxSeries({2: 1}).terms
