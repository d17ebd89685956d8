import io
import json
import subprocess
import sys

import jsonschema
import pytest

from cellblock import cli

PCS = {"type": "array", "items": {"type": "integer", "minimum": 0, "maximum": 11}}
ENTRY = {
    "type": "object",
    "required": ["name", "family", "canonical", "canonical_mask", "rooted", "transposition_count"],
    "properties": {"name": {"type": "string"}, "canonical": PCS, "rooted": PCS,
                   "transposition_count": {"type": "integer", "minimum": 1, "maximum": 12}},
}
COUNT = {
    "type": "object",
    "required": ["raw_subsets", "transposition_classes", "published", "convention", "matches_published"],
    "properties": {"convention": {"type": ["string", "null"]}, "matches_published": {"type": "boolean"}},
}
SCHEMAS = {
    ("classify", "--family", "harmony"): {
        "type": "object", "required": ["entries", "distinct_scales", "backend"],
        "properties": {"entries": {"type": "array", "items": ENTRY, "minItems": 7, "maxItems": 7},
                       "distinct_scales": {"const": 57}}},
    ("classify", "--family", "packing"): {
        "type": "object", "required": ["blockfree", "irreducible", "count"],
        "properties": {"irreducible": {"type": "array", "items": ENTRY}, "count": COUNT}},
    ("classify", "--family", "chord"): {
        "type": "object", "required": ["irreducible", "count", "one_block_residue", "one_cell_residue"],
        "properties": {"irreducible": {"type": "array", "items": ENTRY, "minItems": 11, "maxItems": 11},
                       "count": COUNT,
                       "one_block_residue": {"type": "array", "items": PCS, "minItems": 4, "maxItems": 4}}},
    ("duality",): {
        "type": "object", "required": ["pairs", "auxiliary_result"],
        "properties": {"auxiliary_result": {"const": True}}},
    ("parse", "Cmin7(b5)"): {
        "type": "object", "required": ["symbol", "tones", "root", "quality", "input"],
        "properties": {"tones": {"const": [0, 3, 6, 10]}, "quality": {"const": "half_dim"}}},
    ("voice", "C7(b9)"): {
        "type": "object", "required": ["covered", "voicing", "mode"],
        "properties": {"covered": {"const": True}}},
    ("tuning", "--convergents", "6"): {
        "type": "object", "required": ["convergents"],
        "properties": {"convergents": {"const": ["1/1", "1/2", "3/5", "7/12", "24/41", "31/53"]}}},
    ("tuning", "--stopping", "100"): {
        "type": "object", "required": ["stopping_points", "stopping_reading"],
        "properties": {"stopping_reading": {"const": "adjacent-gap"}}},
    ("census",): {
        "type": "object", "required": ["census", "total", "irreducible"],
        "properties": {"total": {"const": 59}, "irreducible": {"const": 11}}},
    ("tables", "--table", "1"): {
        "type": "object", "required": ["tables"],
        "properties": {"tables": {"type": "array", "minItems": 1}}},
    ("modes", "--harmony", "DIM"): {
        "type": "object", "required": ["modes", "distinct_modes"],
        "properties": {"distinct_modes": {"const": 2}}},
    ("dominants",): {
        "type": "object", "required": ["rows"],
        "properties": {"rows": {"type": "array", "minItems": 9, "maxItems": 9}}},
    ("embed", "--family", "chord", "--harmony", "WTONE"): {
        "type": "object", "required": ["WTONE"]},
    ("blue-notes",): {"type": "object", "required": ["creates_cell", "unique_projection"]},
    ("packing-for", "Dmin7"): {"type": "object", "required": ["packings"]},
    ("tritone-sub", "G7"): {"type": "object", "properties": {"substitute": {"const": "Db7"}}},
    ("project", "C", "F", "B", "--harmony", "MAJ", "--packing", "penta"): {
        "type": "object", "properties": {"projected": {"const": [0, 4, 0]}}},
}


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv", list(SCHEMAS), ids=[" ".join(a) for a in SCHEMAS])
def test_json_output_validates(argv):
    code, out, _ = run(*argv, "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, SCHEMAS[argv])
    # keys are emitted sorted so diffs stay stable
    assert out == json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@pytest.mark.parametrize("argv", list(SCHEMAS), ids=[" ".join(a) for a in SCHEMAS])
def test_text_output_succeeds(argv):
    code, out, err = run(*argv)
    assert code == 0 and out and not err


@pytest.mark.parametrize("argv, expected", [
    ((), 2),
    (("bogus",), 2),
    (("classify", "--family", "nope"), 2),
    (("classify", "--unknown-flag"), 2),
    (("tuning", "--convergents", "x"), 2),
    (("tables", "--table", "9"), 2),
    (("parse", "Cxyz"), 1),
    (("parse", "H7"), 1),
    (("voice", "C7(b9"), 1),
    (("tritone-sub", "Cmaj7"), 1),
    (("modes", "--harmony", "FOO"), 1),
    (("modes", "--root", "Q"), 1),
    (("embed", "--family", "scale"), 1),
    (("project", "C#", "--harmony", "MAJ", "--packing", "penta"), 1),
    (("project", "C", "--harmony", "MEL", "--packing", "penta"), 1),
    (("packing-for", "Caug"), 1),
    (("tuning", "--convergents", "0"), 1),
    (("tuning", "--stopping", "1"), 1),
    (("parse", "C7"), 0),
    (("--help",), 0),
])
def test_exit_codes(argv, expected):
    code, _, err = run(*argv)
    assert code == expected
    if expected == 1:
        assert err.startswith("error:")


def test_parse_batch_from_stdin():
    code, out, err = run("parse", "--format", "json", stdin="C7\n# comment\n\nBb-7\nCxyz\n")
    assert code == 1
    data = json.loads(out)
    assert [d["input"] for d in data] == ["C7", "Bb-7", "Cxyz"]
    assert data[1]["tones"] == [1, 5, 8, 10]
    assert "error" in data[2]
    assert "Cxyz" in err


def test_classify_reports_the_count_discrepancy():
    _, out, _ = run("classify", "--family", "chord")
    assert "264 classes" in out and "published 265" in out


def test_tuning_defaults_to_the_constants():
    code, out, _ = run("tuning")
    assert code == 0 and out.startswith("comma 1.0136")


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cellblock.cli", "tuning", "--convergents", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1/1 1/2 3/5 7/12 24/41 31/53"
