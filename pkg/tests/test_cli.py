"""Command-line interface: subcommands, formats, exit codes."""

import io
import json

import pytest

from spinsum.cli import run_command

MODEL = {
    "algebras": {
        "M2C": {"kind": "matrix", "n": 2, "ring": "C"},
        "M3R": {"kind": "matrix", "n": 3, "ring": "R"},
        "Z2": {"kind": "group", "group": {"type": "cyclic", "n": 2}},
    },
    "frobenius": {
        "F": {"algebra": "M2C", "family": "fhk", "R": "1"},
        "G": {"algebra": "Z2", "family": "group", "R": "1"},
    },
    "involutions": {
        "I": {"frobenius": "F", "kind": "transpose"},
    },
    "crossings": {
        "Xs": {"frobenius": "G", "kind": "bicharacter", "values": [["-1"]]},
        "Xc": {"frobenius": "F", "kind": "canonical"},
    },
    "bimodules": {
        "V": {"frobenius": "G", "kind": "regular", "sign": "-1"},
    },
}


@pytest.fixture
def model_path(tmp_path):
    path = tmp_path / "model.json"
    path.write_text(json.dumps(MODEL))
    return str(path)


def run(argv):
    out = io.StringIO()
    code = run_command(argv, out=out)
    return code, out.getvalue()


def csv_rows(text):
    lines = [l for l in text.strip().split("\n") if l]
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


def test_closed_table(model_path):
    code, out = run(["closed", "--model", model_path, "--frobenius", "F",
                     "--genus", "0..3"])
    assert code == 0
    rows = csv_rows(out)
    assert [r["value"] for r in rows] == ["4", "1", "1/4", "1/16"]
    assert rows[0]["structure"] == "oriented"
    assert rows[0]["model"] == "F"


def test_closed_single_genus(model_path):
    code, out = run(["closed", "--model", model_path, "--frobenius", "F",
                     "--genus", "2"])
    assert code == 0
    rows = csv_rows(out)
    assert len(rows) == 1
    assert rows[0]["value"] == "1/4"
    assert rows[0]["decimal"] == "0.25"


def test_closed_json_format(model_path):
    code, out = run(["closed", "--model", model_path, "--frobenius", "F",
                     "--genus", "0..1", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert [r["value"] for r in data["rows"]] == ["4", "1"]


def test_evaluate_matches_closed(model_path):
    code, out = run(["evaluate", "--model", model_path, "--frobenius", "F",
                     "--genus", "0..2"])
    assert code == 0
    assert [r["value"] for r in csv_rows(out)] == ["4", "1", "1/4"]


def test_evaluate_unoriented(model_path):
    code, out = run(["evaluate", "--model", model_path, "--frobenius", "F",
                     "--involution", "I", "--crosscaps", "1..2"])
    assert code == 0
    assert [r["value"] for r in csv_rows(out)] == ["2", "1"]


def test_evaluate_cap_exceeded(model_path):
    code, _ = run(["evaluate", "--model", model_path, "--frobenius", "F",
                   "--genus", "2", "--cap", "5"])
    assert code == 3


def test_km_table(model_path):
    code, out = run(["km", "--model", model_path, "--involution", "I",
                     "--crosscaps", "1..3"])
    assert code == 0
    rows = csv_rows(out)
    assert [r["value"] for r in rows] == ["2", "1", "1/2"]
    assert rows[0]["structure"] == "unoriented"


def test_spin_invariant(model_path):
    code, out = run(["spin", "invariant", "--model", model_path, "--crossing", "Xs",
                     "--genus", "1..3", "--parity", "both"])
    assert code == 0
    rows = csv_rows(out)
    values = {(r["surface"], r["structure"]): r["value"] for r in rows}
    assert values[("genus 1", "even")] == "1"
    assert values[("genus 1", "odd")] == "-1"
    assert values[("genus 3", "even")] == "1/4"
    assert values[("genus 3", "odd")] == "-1/4"


def test_spin_verify_passes(model_path):
    code, out = run(["spin", "verify", "--model", model_path, "--crossing", "Xs"])
    assert code == 0
    assert "B1: pass" in out
    assert "B5: pass" in out
    assert "curl map trivial: no" in out
    assert "all crossing axioms hold" in out


def test_spin_verify_canonical_curl_free(model_path):
    code, out = run(["spin", "verify", "--model", model_path, "--crossing", "Xc"])
    assert code == 0
    assert "curl map trivial: yes" in out


def test_spin_search_text():
    code, out = run(["spin", "search", "--cyclic", "2"])
    assert code == 0
    assert "2 families" in out
    assert "distinguishes parity: yes" in out
    assert "distinguishes parity: no" in out


def test_spin_search_csv():
    code, out = run(["spin", "search", "--cyclic", "2", "--format", "csv"])
    assert code == 0
    rows = csv_rows(out)
    labels = {r["model"] for r in rows}
    assert any("parity-distinguishing" in l for l in labels)
    assert len(rows) == 2 * 3 * 2  # two families, three genera, two parities


def test_arf_parities():
    for qvals, parity in (("0,0", "even"), ("1,1", "odd"), ("0,1", "even"),
                          ("1,1,1,1", "even")):
        genus = str(len(qvals.split(",")) // 2)
        code, out = run(["arf", "--genus", genus, "--q", qvals])
        assert code == 0
        assert out.strip() == parity


def test_defect_invariant(model_path):
    code, out = run(["defect", "invariant", "--model", model_path,
                     "--crossing", "Xs", "--bimodule", "V",
                     "--genus", "1..2", "--curls", "1"])
    assert code == 0
    rows = csv_rows(out)
    values = {(r["surface"], r["structure"]): r["value"] for r in rows}
    assert values[("genus 1", "even curls=1")] == "-1"
    assert values[("genus 2", "odd curls=1")] == "1/2"


def test_defect_invariant_skips_impossible_combo(model_path):
    # (g=1, odd, no curl) is skipped in a sweep but errors when alone
    code, out = run(["defect", "invariant", "--model", model_path,
                     "--crossing", "Xs", "--bimodule", "V",
                     "--genus", "1..2", "--curls", "0"])
    assert code == 0
    rows = csv_rows(out)
    seen = {(r["surface"], r["structure"]) for r in rows}
    assert ("genus 1", "odd curls=0") not in seen
    assert ("genus 2", "odd curls=0") in seen
    code, _ = run(["defect", "invariant", "--model", model_path,
                   "--crossing", "Xs", "--bimodule", "V",
                   "--genus", "1", "--parity", "odd", "--curls", "0"])
    assert code == 2


def test_defect_sign_shortcut(model_path):
    code_a, out_a = run(["defect", "invariant", "--model", model_path,
                         "--crossing", "Xs", "--sign", "-1",
                         "--genus", "1..2", "--curls", "1"])
    code_b, out_b = run(["defect", "invariant", "--model", model_path,
                         "--crossing", "Xs", "--bimodule", "V",
                         "--genus", "1..2", "--curls", "1"])
    assert code_a == code_b == 0
    assert [r["value"] for r in csv_rows(out_a)] == [r["value"] for r in csv_rows(out_b)]
    code, _ = run(["defect", "invariant", "--model", model_path,
                   "--crossing", "Xs", "--sign", "-1", "--bimodule", "V",
                   "--genus", "1"])
    assert code == 2


def test_verify_command(model_path):
    code, out = run(["verify", "--model", model_path])
    assert code == 0
    assert "all entities verified" in out
    for name in ("M2C", "F", "I", "Xs", "V"):
        assert "'%s': ok" % name in out


def test_verify_reports_failures(tmp_path):
    bad = {
        "algebras": {"A": {"kind": "matrix", "n": 1, "ring": "R"},
                     "G": {"kind": "group", "group": {"type": "cyclic", "n": 3}}},
        "frobenius": {"F": {"algebra": "A", "family": "fhk", "R": "1"},
                      "FG": {"algebra": "G", "family": "group", "R": "1"}},
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out = run(["verify", "--model", str(path)])
    assert code == 0  # all these entities are actually fine
    assert "'FG': ok" in out


def test_missing_entry_is_input_error(model_path):
    code, _ = run(["closed", "--model", model_path, "--frobenius", "nope",
                   "--genus", "0..1"])
    assert code == 2


def test_ambiguous_entry_needs_name(model_path):
    # two frobenius entries: omitting the name is an input error
    code, _ = run(["closed", "--model", model_path, "--genus", "0..1"])
    assert code == 2


def test_bad_range_is_input_error(model_path):
    code, _ = run(["closed", "--model", model_path, "--frobenius", "F",
                   "--genus", "3..0"])
    assert code == 2


def test_unknown_command_exits_two():
    code, _ = run(["frobnicate"])
    assert code == 2


def test_missing_model_file():
    code, _ = run(["closed", "--model", "/nonexistent.json", "--frobenius", "F",
                   "--genus", "0"])
    assert code == 2
