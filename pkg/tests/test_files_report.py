import json
from fractions import Fraction

import pytest

from conftest import EXAMPLE_SIGMA, EXAMPLE_W
from simplex_economy import GenSpec, generate_economy, solve_equilibrium, validate_economy
from simplex_economy.files import FileFormatError, dump_economy, parse_economy
from simplex_economy.model import value
from simplex_economy.report import decimal_string, result_report, to_json


def example_json(entries=EXAMPLE_W):
    return json.dumps({"n": 4, "m": 5, "W": entries, "sigma": EXAMPLE_SIGMA})


def test_parse_json_strings():
    doc = parse_economy(example_json())
    assert doc.W[0][0] == Fraction(1, 5) and doc.sigma == (1, 1, 3, 4, 4)


def test_parse_json_bare_numbers_are_exact():
    text = '{"W": [[0.2, 1], [0.8, 0]], "sigma": [1, 2]}'
    doc = parse_economy(text)
    assert doc.W == ((Fraction(1, 5), 1), (Fraction(4, 5), 0))


def test_parse_csv():
    text = "# reference economy\n" + "\n".join(", ".join(r) for r in EXAMPLE_W) + "\nsigma: 1, 1, 3, 4, 4\n"
    assert parse_economy(text) == parse_economy(example_json())


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        '{"W": [["1"]]}',
        '{"W": [["x"]], "sigma": [1]}',
        '{"W": [["1"]], "sigma": [1.5]}',
        '{"W": [["1"]], "sigma": [1], "m": 2}',
        '{"W": [["1"]], "sigma": [1], "n": 2}',
        "1, 0\n0, 1\n",
        "[1, 2]",
    ],
)
def test_parse_errors(text):
    with pytest.raises(FileFormatError):
        parse_economy(text)


def test_dump_round_trip():
    econ = generate_economy(GenSpec(4, 3, seed=5, force_minimal=True))
    doc = parse_economy(dump_economy(econ))
    assert validate_economy(doc.W, doc.sigma) == econ


def test_decimal_rendering():
    assert decimal_string(Fraction(1, 4)) == "0.25"
    assert decimal_string(Fraction(0)) == "0"
    assert decimal_string(Fraction(1)) == "1"
    assert decimal_string(Fraction(1, 3)) == "~0.333333333333"


def test_report_budget_round_trip(example):
    report = json.loads(to_json(result_report(solve_equilibrium(example))))
    p = [Fraction(x) for x in report["p_star"]]
    F = [[Fraction(a) for a in row] for row in report["f_star"]]
    for b, f, w in zip(report["budgets"], F, example.W.rows):
        assert Fraction(b["endowment_value"]) == value(w, p) == value(f, p) == Fraction(b["allocation_value"])
    assert report["p_star_decimal"] == ["0.25", "0", "0.25", "0.5"]


def test_report_is_lossless_for_generated(tmp_path):
    for seed in range(10):
        econ = generate_economy(GenSpec(5, 4, seed=seed, denominator_bound=50, force_minimal=True))
        report = json.loads(to_json(result_report(solve_equilibrium(econ))))
        p = [Fraction(x) for x in report["p_star"]]
        for b, row in zip(report["budgets"], report["f_star"]):
            assert value([Fraction(a) for a in row], p) == Fraction(b["endowment_value"])
