import csv
import io
import json
import os
from contextlib import redirect_stderr, redirect_stdout
from importlib import resources
from pathlib import Path

import pytest
from jsonschema import validate

from altchar.characters import QuadValue
from altchar.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden"

with (resources.files("altchar") / "schema" / "output.schema.json").open() as fh:
    SCHEMA = json.load(fh)


def run_cli(*argv: str):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


# every subcommand appears at least once
GOLDEN_CASES = {
    "bias_15_9_3_i9.json": ["--format", "json", "bias", "--mu", "15,9,3", "--i", "9"],
    "eigmult_an_21p_3p.json": ["--format", "json", "eigmult", "--group", "an", "--irrep", "2,1:+", "--class", "3:+"],
    "eigmult_sn_43_52.csv": ["--format", "csv", "eigmult", "--group", "sn", "--irrep", "4,3", "--class", "5,2"],
    "invariant_44_53.json": ["--format", "json", "invariant", "--group", "an", "--irrep", "4,4", "--class", "5,3"],
    "unisingular_sign4.json": ["--format", "json", "unisingular", "--group", "sn", "--irrep", "1,1,1,1"],
    "swanson_n6.json": ["--format", "json", "swanson", "--n", "6"],
    "powerconj_73_i2.json": ["--format", "json", "power-conj", "--mu", "7,3", "--i", "2"],
    "global_3311_verify.json": ["--format", "json", "global", "--mu", "3,3,1,1", "--verify"],
    "global_44.json": ["--format", "json", "global", "--mu", "4,4"],
    "chartable_n5.json": ["--format", "json", "chartable", "--n", "5"],
    "chartable_n5.txt": ["chartable", "--n", "5"],
    "selftest_c1.json": ["--format", "json", "selftest", "--criteria", "1"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name):
    code, out, err = run_cli(*GOLDEN_CASES[name])
    assert code == 0, err
    path = GOLDEN_DIR / name
    if os.environ.get("UPDATE_GOLDEN"):
        path.parent.mkdir(exist_ok=True)
        path.write_text(out)
    assert out == path.read_text()
    if name.endswith(".json"):
        validate(json.loads(out), SCHEMA)


def test_json_is_deterministic():
    first = run_cli("--format", "json", "chartable", "--n", "6")
    second = run_cli("--format", "json", "chartable", "--n", "6")
    assert first == second


def test_timing_flag_keeps_the_schema():
    code, out, _ = run_cli("--format", "json", "--timing", "bias", "--mu", "5,3")
    assert code == 0
    record = json.loads(out)
    validate(record, SCHEMA)
    assert record["timing_seconds"] >= 0


def _csv_rows(text: str):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_eigmult_formats_agree():
    _, jout, _ = run_cli("--format", "json", "eigmult", "--group", "sn", "--irrep", "4,3", "--class", "5,2")
    _, cout, _ = run_cli("--format", "csv", "eigmult", "--group", "sn", "--irrep", "4,3", "--class", "5,2")
    entries = json.loads(jout)["results"]["entries"]
    header, rows = _csv_rows(cout)
    assert header == ["index", "multiplicity"]
    assert [int(r[1]) for r in rows] == entries


def test_bias_formats_agree():
    _, jout, _ = run_cli("--format", "json", "bias", "--mu", "5,3,1")
    _, cout, _ = run_cli("--format", "csv", "bias", "--mu", "5,3,1")
    values = json.loads(jout)["results"]["values"]
    header, rows = _csv_rows(cout)
    assert header == ["index", "value", "abs"]
    assert [(int(r[0]), int(r[1]), int(r[2])) for r in rows] == [
        (v["i"], v["value"], v["abs"]) for v in values
    ]


def test_chartable_formats_agree():
    _, jout, _ = run_cli("--format", "json", "chartable", "--n", "5")
    _, cout, _ = run_cli("--format", "csv", "chartable", "--n", "5")
    results = json.loads(jout)["results"]
    header, rows = _csv_rows(cout)
    assert header == ["irrep"] + results["classes"]
    assert [r[0] for r in rows] == results["irreps"]
    for row, jrow in zip(rows, results["values"]):
        assert row[1:] == [str(QuadValue(v["a"], v["b"], v["D"])) for v in jrow]


def test_selftest_formats_agree():
    _, jout, _ = run_cli("--format", "json", "selftest", "--criteria", "1,6")
    _, cout, _ = run_cli("--format", "csv", "selftest", "--criteria", "1,6")
    checks = json.loads(jout)["results"]["checks"]
    _, rows = _csv_rows(cout)
    assert [(int(r[0]), r[3]) for r in rows] == [(c["criterion"], c["detail"]) for c in checks]


# --- errors and guards ------------------------------------------------------


def test_missing_tag_is_an_error():
    code, _, err = run_cli("eigmult", "--group", "an", "--irrep", "2,1", "--class", "3:+")
    assert code == 2
    assert "tag" in err or "self-conjugate" in err


def test_tag_on_a_whole_shape_is_an_error():
    code, _, err = run_cli("eigmult", "--group", "an", "--irrep", "3,1:+", "--class", "2,2")
    assert code == 2


def test_untagged_split_inputs_are_fine_for_invariant():
    code, out, _ = run_cli("--format", "json", "invariant", "--group", "an", "--irrep", "2,1:+", "--class", "3")
    assert code == 0
    assert json.loads(out)["results"]["has_invariant"] is False


def test_bad_partition_is_a_parse_error():
    code, _, err = run_cli("bias", "--mu", "3,a")
    assert code == 2
    assert "error:" in err


def test_non_coprime_power_is_a_parse_error():
    code, _, err = run_cli("power-conj", "--mu", "5,3", "--i", "3")
    assert code == 2


def test_size_guard_and_override():
    over = ("eigmult", "--group", "sn", "--irrep", "31", "--class", "31")
    code, _, err = run_cli(*over)
    assert code == 2 and "--unsafe-bounds" in err
    code, out, _ = run_cli("--format", "json", "--unsafe-bounds", *over)
    assert code == 0
    entries = json.loads(out)["results"]["entries"]
    assert entries[0] == 1 and sum(entries) == 1


def test_table_guard():
    code, _, err = run_cli("chartable", "--n", "15")
    assert code == 2


def test_brute_force_guard():
    code, _, err = run_cli("global", "--mu", "13,9,3", "--verify")
    assert code == 2 and "brute force" in err


def test_unknown_subcommand_exits_2():
    code, _, _ = run_cli("frobnicate")
    assert code == 2


def test_global_out_of_scope_attaches_brute_force():
    code, out, _ = run_cli("--format", "json", "global", "--mu", "2,2")
    assert code == 0
    record = json.loads(out)
    assert record["results"]["closed_form"]["is_global"] is None
    assert record["results"]["brute_force"]["is_global"] is False
    assert record["results"]["brute_force"]["witness"]["multiplicity"] == 0
